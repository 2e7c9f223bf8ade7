#include "spingate/spin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spingate {

namespace {

void require_bit(int b, const char* name) {
    if (b != 0 && b != 1)
        throw std::invalid_argument(std::string(name) + " must be 0 or 1, got " + std::to_string(b));
}

}  // namespace

Axis3::Axis3(double x, double y, double z) : Axis3(Vec3{x, y, z}) {}

Axis3::Axis3(const Vec3& v) {
    if (!v.finite()) throw std::invalid_argument("Axis3: non-finite components");
    const double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("Axis3: zero vector has no direction");
    v_ = v * (1.0 / n);
}

Spin3::Spin3(double x, double y, double z) : Spin3(Vec3{x, y, z}) {}

Spin3::Spin3(const Vec3& v) {
    if (!v.finite()) throw std::invalid_argument("Spin3: non-finite components");
    const double n = v.norm();
    if (std::abs(n - 1.0) > 1e-6)
        throw std::invalid_argument("Spin3: |s| = " + std::to_string(n) +
                                    " is not within 1e-6 of unit modulus");
    v_ = v * (1.0 / n);
}

Spin3 Spin3::renormalized(const Vec3& v) {
    if (!v.finite()) throw std::invalid_argument("Spin3: non-finite components");
    const double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("Spin3: zero vector cannot be normalized");
    return Spin3(v * (1.0 / n), unchecked_tag{});
}

Spin3 encode_bit(int bit, const Axis3& axis) {
    require_bit(bit, "bit");
    const Vec3 v = bit == 1 ? axis.vec() : -axis.vec();
    return Spin3::renormalized(v);
}

BitValue decode_bit(const Spin3& s, const Axis3& axis, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw std::invalid_argument("decode_bit: threshold must lie in (0, 1]");
    const double p = s.dot(axis);
    if (p >= threshold) return BitValue::One;
    if (p <= -threshold) return BitValue::Zero;
    return BitValue::Undecided;
}

int toffoli_expected(int c1, int c2, int t) {
    require_bit(c1, "c1");
    require_bit(c2, "c2");
    require_bit(t, "t");
    return t ^ (c1 & c2);
}

std::pair<int, int> control_bits(ControlConfig config) {
    switch (config) {
        case ControlConfig::C00: return {0, 0};
        case ControlConfig::C01: return {0, 1};
        case ControlConfig::C10: return {1, 0};
        case ControlConfig::C11: return {1, 1};
    }
    throw std::invalid_argument("control_bits: bad ControlConfig");
}

ControlConfig config_from_bits(int c1, int c2) {
    require_bit(c1, "c1");
    require_bit(c2, "c2");
    if (c1 == 0 && c2 == 0) return ControlConfig::C00;
    if (c1 == 0 && c2 == 1) return ControlConfig::C01;
    if (c1 == 1 && c2 == 0) return ControlConfig::C10;
    return ControlConfig::C11;
}

std::pair<double, double> control_sz(ControlConfig config) {
    const auto [c1, c2] = control_bits(config);
    return {c1 ? 1.0 : -1.0, c2 ? 1.0 : -1.0};
}

const char* config_label(ControlConfig config) {
    switch (config) {
        case ControlConfig::C00: return "00";
        case ControlConfig::C01: return "01";
        case ControlConfig::C10: return "10";
        case ControlConfig::C11: return "11";
    }
    return "??";
}

}  // namespace spingate
