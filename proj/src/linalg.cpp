#include "rkconvex/linalg.hpp"

#include <algorithm>

namespace rkconvex {

Vec3 jacobi_eigenvalues(Mat3 m, double tol, int max_sweeps) {
    double scale = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) scale = std::max(scale, std::abs(m[i][j]));
    if (scale == 0) return {0, 0, 0};

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = std::max({std::abs(m[0][1]), std::abs(m[0][2]), std::abs(m[1][2])});
        if (off <= tol * scale) break;
        for (int p = 0; p < 2; ++p)
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(m[p][q]) <= tol * scale * 1e-3) continue;
                const double theta = (m[q][q] - m[p][p]) / (2 * m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                Mat3 r = m;
                for (int k = 0; k < 3; ++k) {
                    r[p][k] = c * m[p][k] - s * m[q][k];
                    r[q][k] = s * m[p][k] + c * m[q][k];
                }
                Mat3 n = r;
                for (int k = 0; k < 3; ++k) {
                    n[k][p] = c * r[k][p] - s * r[k][q];
                    n[k][q] = s * r[k][p] + c * r[k][q];
                }
                m = n;
            }
    }
    Vec3 ev{m[0][0], m[1][1], m[2][2]};
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace rkconvex
