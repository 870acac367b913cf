#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ptf {

// Exact rational scalar. GMP keeps values canonical (gcd-reduced,
// positive denominator), which the kernel relies on for equality tests.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Accepts "p", "-p", "p/q".
inline Rat rat_parse(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace ptf
