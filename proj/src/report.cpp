#include "rkconvex/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace rkconvex::report {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string certificate_json(const convexity::ConvexityCertificate& cert) {
    std::ostringstream os;
    os << "{\"c\":" << fmt17(cert.c) << ",\"samples\":" << cert.samples
       << ",\"seed\":" << cert.seed << ",\"sigma\":" << cert.sigma
       << ",\"min_det\":" << fmt17(cert.min_det) << ",\"min_eig\":" << fmt17(cert.min_eig)
       << ",\"argmin\":[" << fmt17(cert.argmin[0]) << "," << fmt17(cert.argmin[1]) << ","
       << fmt17(cert.argmin[2]) << "," << fmt17(cert.argmin[3]) << "]"
       << ",\"factor_minima\":{\"f1\":" << fmt17(cert.factor_minima.f1)
       << ",\"f2\":" << fmt17(cert.factor_minima.f2) << ",\"f3\":" << fmt17(cert.factor_minima.f3)
       << ",\"f4\":" << fmt17(cert.factor_minima.f4) << "}"
       << ",\"violations\":[";
    for (std::size_t i = 0; i < cert.violations.size(); ++i) {
        const auto& v = cert.violations[i];
        if (i) os << ",";
        os << "{\"point\":[" << fmt17(v.point[0]) << "," << fmt17(v.point[1]) << ","
           << fmt17(v.point[2]) << "," << fmt17(v.point[3]) << "],\"eigenvalues\":["
           << fmt17(v.eigenvalues[0]) << "," << fmt17(v.eigenvalues[1]) << ","
           << fmt17(v.eigenvalues[2]) << "]}";
    }
    os << "],\"pass\":" << bool_str(cert.pass) << "}";
    return os.str();
}

std::string scan_csv(const r3bp::ScanTable& table) {
    std::ostringstream os;
    os << "mu,c_crit,energy,fraction,samples,skipped,min_eig,min_det,pass\n";
    for (const auto& r : table.rows)
        os << fmt17(r.mu) << "," << fmt17(r.c_crit) << "," << fmt17(r.c) << ","
           << fmt17(r.fraction) << "," << r.samples << "," << r.skipped << ","
           << fmt17(r.min_eig) << "," << fmt17(r.min_det) << "," << bool_str(r.pass) << "\n";
    return os.str();
}

std::string control_csv(const r3bp::ControlReport& report) {
    std::ostringstream os;
    os << "energy,samples,skipped,min_eig,min_det,convex,ls_min_eig,ls_pass\n";
    for (const auto& r : report.rows)
        os << fmt17(r.c) << "," << r.samples << "," << r.skipped << "," << fmt17(r.min_eig) << ","
           << fmt17(r.min_det) << "," << bool_str(r.convex) << "," << fmt17(r.ls_min_eig) << ","
           << bool_str(r.ls_pass) << "\n";
    return os.str();
}

std::string f3_table_csv(const std::vector<convexity::F3Trace>& cells) {
    std::ostringstream os;
    os << "a,c,case,N,f3,bound,pass\n";
    for (const auto& t : cells)
        os << fmt17(t.a) << "," << fmt17(t.c) << "," << (t.axis_case ? "axis" : "boundary") << ","
           << fmt17(t.numerator) << "," << fmt17(t.f3) << "," << fmt17(t.lower_bound) << ","
           << bool_str(t.pass) << "\n";
    return os.str();
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rkconvex::report
