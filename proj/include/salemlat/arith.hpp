#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "salemlat/errors.hpp"

namespace salemlat {

// Exact scalars. Rat is kept in lowest terms with positive denominator by
// the backend, which is exactly the invariant the rest of the library needs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline int sgn(const Int& x) { return x.sign(); }
inline int sgn(const Rat& x) { return x.sign(); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

std::string int_str(const Int& x);
std::string rat_str(const Rat& x); // "p" or "p/q"

Int parse_int(std::string_view s);
Rat parse_rat(std::string_view s); // accepts "p" and "p/q"

// Largest r with r*r <= n (n >= 0).
Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);

// Exact rational square root; returns false when x is not a square.
bool rational_sqrt(const Rat& x, Rat& out);
inline bool is_rational_square(const Rat& x) {
    Rat r;
    return rational_sqrt(x, r);
}

// Miller-Rabin with a fixed witness set (deterministic for n < 3.3e24).
bool is_probable_prime(const Int& n);

// Factorization of |n| into prime powers, ascending primes.
// Trial division + Pollard rho; deterministic.
std::vector<std::pair<Int, int>> factor_integer(Int n);

// Canonical squarefree representative of the square class of x in Q*/Q*^2:
// sign(x) * product of primes dividing num(x)*den(x) to odd order.
Int squarefree_class(const Rat& x);

// p-adic valuation of a nonzero rational.
long padic_valuation(const Rat& x, const Int& p);

// Unit part of x at p reduced modulo p^k (x nonzero, k >= 1):
// returns (num(x)/p^a) * inverse(den(x)/p^b) mod p^k as an integer in [0, p^k).
Int unit_part_mod(const Rat& x, const Int& p, unsigned k);

Int mod_pow(Int base, Int exp, const Int& mod);
Int mod_inverse(const Int& a, const Int& mod); // throws DegenerateInput if not invertible

// Legendre symbol (a|p) for odd prime p, a not divisible by p -> +1/-1,
// 0 when p | a.
int legendre(const Int& a, const Int& p);

} // namespace salemlat
