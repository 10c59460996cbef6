#pragma once

// Test-only brute-force evaluators, kept independent of the library's
// MultTable/Mat code paths: raw nested vectors, plain index loops.

#include <random>
#include <vector>

#include "ppforge/rational.hpp"

namespace oracle {

using ppforge::Rat;
using Raw3 = std::vector<std::vector<std::vector<Rat>>>;
using RawVec = std::vector<Rat>;

inline Raw3 raw3(int n) {
    return Raw3(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n)));
}

// z = x * y evaluated coefficientwise from the raw structure constants.
inline RawVec mul(const Raw3& c, const RawVec& x, const RawVec& y) {
    int n = static_cast<int>(c.size());
    RawVec z(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) z[k] += x[i] * y[j] * c[i][j][k];
    return z;
}

inline RawVec add(const RawVec& a, const RawVec& b) {
    RawVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline RawVec sub(const RawVec& a, const RawVec& b) {
    RawVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline bool is_zero(const RawVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// x*(y*z) - (x*y + y*x)*z
inline RawVec zinbiel_defect(const Raw3& c, const RawVec& x, const RawVec& y, const RawVec& z) {
    return sub(mul(c, x, mul(c, y, z)), mul(c, add(mul(c, x, y), mul(c, y, x)), z));
}

// (x o y) o z - x o (y o z) minus the same with x and y swapped
inline RawVec pre_lie_defect(const Raw3& c, const RawVec& x, const RawVec& y, const RawVec& z) {
    RawVec a1 = sub(mul(c, mul(c, x, y), z), mul(c, x, mul(c, y, z)));
    RawVec a2 = sub(mul(c, mul(c, y, x), z), mul(c, y, mul(c, x, z)));
    return sub(a1, a2);
}

inline RawVec assoc_defect(const Raw3& c, const RawVec& x, const RawVec& y, const RawVec& z) {
    return sub(mul(c, mul(c, x, y), z), mul(c, x, mul(c, y, z)));
}

// Quantifies Zinbiel over every basis triple plus a few random rational
// vectors (bilinearity makes the basis check sufficient; the vectors guard
// the evaluator itself).
inline bool check_zinbiel(const Raw3& c, std::mt19937& rng) {
    int n = static_cast<int>(c.size());
    auto basis = [n](int i) {
        RawVec v(n);
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!is_zero(zinbiel_defect(c, basis(i), basis(j), basis(k)))) return false;
    for (int t = 0; t < 5; ++t) {
        RawVec x(n), y(n), z(n);
        for (int i = 0; i < n; ++i) {
            x[i] = Rat(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
            y[i] = Rat(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
            z[i] = Rat(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
        }
        if (!is_zero(zinbiel_defect(c, x, y, z))) return false;
    }
    return true;
}

} // namespace oracle
