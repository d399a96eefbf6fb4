#pragma once

#include <string>
#include <vector>

#include "rkconvex/pcr3bp.hpp"
#include "rkconvex/surface.hpp"

namespace rkconvex::report {

/// Shortest text with 17 significant digits; reports are byte-reproducible
/// for identical inputs.
std::string fmt17(double x);

/// Certificate JSON, fixed field order:
/// {"c":..,"samples":..,"seed":..,"sigma":..,"min_det":..,"min_eig":..,
///  "argmin":[..],"factor_minima":{"f1":..,...},"violations":[..],"pass":..}
std::string certificate_json(const convexity::ConvexityCertificate& cert);

/// Scan CSV: header mu,c_crit,energy,fraction,samples,skipped,min_eig,min_det,pass
std::string scan_csv(const r3bp::ScanTable& table);

/// Control CSV: header
/// energy,samples,skipped,min_eig,min_det,convex,ls_min_eig,ls_pass
std::string control_csv(const r3bp::ControlReport& report);

/// f3 case-analysis table CSV: header a,c,case,N,f3,bound,pass
struct F3Cell {
    convexity::F3Trace trace;
};
std::string f3_table_csv(const std::vector<convexity::F3Trace>& cells);

/// Writes text to path ("-" = stdout). Throws std::runtime_error on I/O failure.
void write_text(const std::string& text, const std::string& path);

}  // namespace rkconvex::report
