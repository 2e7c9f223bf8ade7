#pragma once

#include <utility>

#include "spingate/vec3.hpp"

namespace spingate {

/// Decoded logical value of a spin projection. Undecided means the
/// projection modulus fell below the decode threshold.
enum class BitValue { Zero, One, Undecided };

/// The four logical control configurations [c1 c2].
enum class ControlConfig { C00, C01, C10, C11 };

/// Unit vector defining a local easy/encoding axis (z for the target,
/// e1/e2 for non-collinear controls). Normalizes any nonzero input;
/// unit modulus holds to well below 1e-12 afterwards.
class Axis3 {
  public:
    Axis3(double x, double y, double z);
    explicit Axis3(const Vec3& v);

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

    static Axis3 z_axis() { return Axis3(0.0, 0.0, 1.0); }

  private:
    Vec3 v_;
};

/// Unit 3-vector carrying the target-spin state. Construction accepts input
/// within 1e-6 of unit modulus (and renormalizes); anything farther off is
/// rejected as a genuine mistake rather than accumulated float error.
class Spin3 {
  public:
    Spin3(double x, double y, double z);
    explicit Spin3(const Vec3& v);

    /// Normalize an arbitrary finite nonzero vector onto the sphere.
    /// This is the integrator's per-step renormalization path.
    static Spin3 renormalized(const Vec3& v);

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }
    double dot(const Axis3& axis) const { return v_.dot(axis.vec()); }

  private:
    struct unchecked_tag {};
    Spin3(const Vec3& v, unchecked_tag) : v_(v) {}
    Vec3 v_;
};

/// +axis for bit 1, -axis for bit 0.
Spin3 encode_bit(int bit, const Axis3& axis);

/// One if s.axis >= threshold, Zero if s.axis <= -threshold, else Undecided.
/// threshold must lie in (0, 1].
BitValue decode_bit(const Spin3& s, const Axis3& axis, double threshold);

/// Toffoli truth table: t XOR (c1 AND c2).
int toffoli_expected(int c1, int c2, int t);

std::pair<int, int> control_bits(ControlConfig config);
ControlConfig config_from_bits(int c1, int c2);

/// (s1^z, s2^z) in {-1,+1}^2 for the collinear encoding.
std::pair<double, double> control_sz(ControlConfig config);

/// "00", "01", "10" or "11".
const char* config_label(ControlConfig config);

}  // namespace spingate
