// Exact arithmetic primitives shared by the whole library.
//
// Every quantity in this library (edge weights, entropy entries, inequality
// coefficients, LP tableaus) is an exact rational; there is no floating point
// anywhere.  Rationals are GMP mpq values kept canonical (lowest terms,
// positive denominator).  Integer vectors normalized to coprime entries are
// the storage form for cone rows.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hec {

using Rat = mpq_class;
using Int = mpz_class;

using IVec = std::vector<Int>;  // integer row/ray, usually content-normalized
using QVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a", "a/b" or "-a/b".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos) {
        r = Rat(Int(s));
    } else {
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
        r = Rat(num, den);
    }
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// gcd of all entries, i.e. the content of an integer vector. 0 for the zero vector.
inline Int content(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divides out the content so entries are coprime integers.  Sign is kept:
// a ray and its negative are different directions.
inline void normalize_content(IVec& v) {
    Int g = content(v);
    if (g > 1)
        for (Int& x : v) x /= g;
}

// Scales a rational vector to the unique coprime-integer representative.
inline IVec to_coprime_integers(const QVec& q) {
    Int l = 1;
    for (const Rat& x : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    IVec v(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        Rat s = q[i] * l;
        v[i] = s.get_num();  // denominator is 1 after scaling by the lcm
    }
    normalize_content(v);
    return v;
}

inline QVec to_rational(const IVec& v) {
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return q;
}

inline int lex_cmp(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lex_cmp: length mismatch");
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

inline bool is_zero(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hec
