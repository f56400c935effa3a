#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "metaplectic/errors.hpp"

namespace metaplectic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// p-adic valuation of a nonzero rational.
inline long val_p(const Rat& a, long p) {
    if (a == 0) throw ZeroInput("val_p: zero input");
    long v = 0;
    Int n = rat_num(a);
    Int d = rat_den(a);
    const Int P = p;
    while (n % P == 0) { n /= P; ++v; }
    while (d % P == 0) { d /= P; --v; }
    return v;
}

// The p-free part a / p^{val_p(a)}.
inline Rat unit_part(const Rat& a, long p) {
    long v = val_p(a, p);
    Rat u = a;
    const Rat P = p;
    for (; v > 0; --v) u /= P;
    for (; v < 0; ++v) u *= P;
    return u;
}

// u mod p^k for a p-integral *unit* rational u (num and den both prime to p).
// Denominator handled by modular inverse.
inline std::uint64_t unit_mod_pk(const Rat& u, std::uint64_t pk) {
    Int n = rat_num(u) % static_cast<Int>(pk);
    Int d = rat_den(u) % static_cast<Int>(pk);
    if (n < 0) n += pk;
    if (d < 0) d += pk;
    std::uint64_t nn = static_cast<std::uint64_t>(n);
    std::uint64_t dd = static_cast<std::uint64_t>(d);
    // inverse of dd mod pk by extended Euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(pk), newr = static_cast<std::int64_t>(dd);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw std::logic_error("unit_mod_pk: denominator not invertible");
    if (t < 0) t += static_cast<std::int64_t>(pk);
    return (nn * static_cast<std::uint64_t>(t)) % pk;
}

// Legendre symbol (a|p) for p an odd prime and a prime to p; a given mod p.
inline int legendre(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw ZeroInput("legendre: a divisible by p");
    std::uint64_t r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// Parse "num", "num/den", or a plain integer string into a rational.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw ZeroInput("parse_rat: zero denominator");
    return Rat(n, d);
}

inline std::string rat_str(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

} // namespace metaplectic
