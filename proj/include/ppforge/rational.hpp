#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "ppforge/errors.hpp"

namespace ppforge {

// Exact scalar over Q. cpp_rational keeps values in lowest terms with a
// positive denominator, so equality is literal and arithmetic never rounds.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

using Vec = std::vector<Rat>;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// Canonical form: "p" for integers, "p/q" otherwise, q > 0, gcd(p,q) = 1.
inline std::string rat_to_string(const Rat& x) {
    if (rat_den(x) == 1) return rat_num(x).str();
    return rat_num(x).str() + "/" + rat_den(x).str();
}

namespace detail {
inline bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}
} // namespace detail

// Accepts "p" or "p/q" with optional leading minus on p. Rejects q = 0.
inline Rat rat_from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!detail::is_integer_token(s))
            throw NonRationalScalar("not a rational literal: '" + std::string(s) + "'");
        return Rat(Int(std::string(s)));
    }
    std::string_view p = s.substr(0, slash);
    std::string_view q = s.substr(slash + 1);
    if (!detail::is_integer_token(p) || !detail::is_integer_token(q) || (!q.empty() && q[0] == '-'))
        throw NonRationalScalar("not a rational literal: '" + std::string(s) + "'");
    Int den{std::string(q)};
    if (den == 0)
        throw NonRationalScalar("zero denominator in '" + std::string(s) + "'");
    return Rat(Int(std::string(p)), den);
}

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

inline Vec basis_vec(int n, int i) {
    Vec v = zero_vec(n);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec vec_scale(const Rat& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

} // namespace ppforge
