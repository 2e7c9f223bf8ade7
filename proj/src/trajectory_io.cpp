#include "spingate/trajectory_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace spingate {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_file(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    return out;
}

}  // namespace

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
    out << "t,sx,sy,sz,energy\n";
    for (const auto& s : traj.samples) {
        out << g17(s.t) << ',' << g17(s.s.x()) << ',' << g17(s.s.y()) << ',' << g17(s.s.z())
            << ',' << g17(s.energy) << '\n';
    }
}

void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path) {
    auto out = open_file(path);
    write_trajectory_csv(traj, out);
}

void write_trajectory_svg(const Trajectory& traj, std::ostream& out) {
    constexpr double r = 180.0;
    constexpr double cy = 220.0;
    const double cx[2] = {220.0, 620.0};
    const char* titles[2] = {"(x, z)", "(y, z)"};

    auto f2 = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };

    // Keep files bounded: at most ~2000 polyline points per panel.
    std::size_t stride = traj.samples.size() > 2000 ? traj.samples.size() / 2000 + 1 : 1;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"840\" height=\"440\" viewBox=\"0 0 840 440\">\n";
    out << "<rect width=\"840\" height=\"440\" fill=\"white\"/>\n";
    for (int panel = 0; panel < 2; ++panel) {
        out << "<circle cx=\"" << f2(cx[panel]) << "\" cy=\"" << f2(cy) << "\" r=\"" << f2(r)
            << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
        out << "<line x1=\"" << f2(cx[panel] - r) << "\" y1=\"" << f2(cy) << "\" x2=\""
            << f2(cx[panel] + r) << "\" y2=\"" << f2(cy)
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<line x1=\"" << f2(cx[panel]) << "\" y1=\"" << f2(cy - r) << "\" x2=\""
            << f2(cx[panel]) << "\" y2=\"" << f2(cy + r) << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << f2(cx[panel]) << "\" y=\"425\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"14\">"
            << titles[panel] << " projection, config [" << config_label(traj.config)
            << "]</text>\n";
        out << "<polyline fill=\"none\" stroke=\"" << (panel == 0 ? "#1f77b4" : "#d62728")
            << "\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < traj.samples.size(); i += stride) {
            const auto& s = traj.samples[i];
            const double u = panel == 0 ? s.s.x() : s.s.y();
            out << f2(cx[panel] + r * u) << ',' << f2(cy - r * s.s.z()) << ' ';
        }
        // Always include the final point.
        const auto& last = traj.samples.back();
        const double u = panel == 0 ? last.s.x() : last.s.y();
        out << f2(cx[panel] + r * u) << ',' << f2(cy - r * last.s.z());
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

void write_trajectory_svg(const Trajectory& traj, const std::filesystem::path& path) {
    auto out = open_file(path);
    write_trajectory_svg(traj, out);
}

}  // namespace spingate
