#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace rkconvex::poly {

/// Number of variables of the polynomial ring. The canonical variable
/// order is (z1, z2, w1, w2, c).
inline constexpr int kNumVars = 5;

/// Exponent vector of a single power product. Exponents are small
/// non-negative integers (the largest degree reached in this project is 30).
struct Monomial {
    std::array<std::uint16_t, kNumVars> e{};

    int total_degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
        return r;
    }

    bool operator==(const Monomial& o) const = default;

    /// 12 bits per exponent, packed into one key. Used for hashing during
    /// multiplication; exponents stay far below 4096 here.
    std::uint64_t pack() const {
        std::uint64_t k = 0;
        for (int i = 0; i < kNumVars; ++i) k = (k << 12) | (e[i] & 0xFFFu);
        return k;
    }

    static Monomial unpack(std::uint64_t k) {
        Monomial m;
        for (int i = kNumVars - 1; i >= 0; --i) {
            m.e[i] = static_cast<std::uint16_t>(k & 0xFFFu);
            k >>= 12;
        }
        return m;
    }
};

/// Graded lexicographic order on the fixed variable order: compare total
/// degree first, then exponents of z1, z2, w1, w2, c in turn.
inline bool grlex_less(const Monomial& l, const Monomial& r) {
    int dl = l.total_degree(), dr = r.total_degree();
    if (dl != dr) return dl < dr;
    for (int i = 0; i < kNumVars; ++i)
        if (l.e[i] != r.e[i]) return l.e[i] < r.e[i];
    return false;
}

}  // namespace rkconvex::poly
