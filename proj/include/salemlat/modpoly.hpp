#pragma once

// Internal: dense polynomial arithmetic over F_p (word-size p) and over
// Z/p^k, plus distinct/equal-degree factorization and Hensel lifting.
// Consumed by polyalg (factorization over Z) and places (splitting tests).

#include <cstdint>
#include <vector>

#include "salemlat/arith.hpp"

namespace salemlat::detail {

// Coefficients ascending in [0, p), no trailing zeros.
using FpPoly = std::vector<std::int64_t>;

FpPoly fp_trim(FpPoly f);
FpPoly fp_from_int_coeffs(const std::vector<Int>& c, std::int64_t p);
bool fp_is_zero(const FpPoly& f);
int fp_deg(const FpPoly& f); // -1 for zero
FpPoly fp_add(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p); // monic
FpPoly fp_monic(const FpPoly& a, std::int64_t p);
FpPoly fp_powmod(const FpPoly& base, Int e, const FpPoly& mod, std::int64_t p);
// Bezout: s a + t b = 1 for coprime a, b.
void fp_bezout(const FpPoly& a, const FpPoly& b, std::int64_t p, FpPoly& s, FpPoly& t);
FpPoly fp_derivative(const FpPoly& a, std::int64_t p);

// Squarefree decomposition in char p (handles p-th powers).
std::vector<std::pair<FpPoly, int>> fp_squarefree(const FpPoly& f, std::int64_t p);

// Complete factorization of monic f into monic irreducibles with multiplicity.
// Deterministic (fixed-seed equal-degree splitting).
std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, std::int64_t p);

// ---- arithmetic modulo p^k with big coefficients ----

// Coefficients ascending in [0, M).
using ZmPoly = std::vector<Int>;

ZmPoly zm_from_int_coeffs(const std::vector<Int>& c, const Int& M);
ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& M);
ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& M);
ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& M);
// divisor monic
std::pair<ZmPoly, ZmPoly> zm_divmod(const ZmPoly& a, const ZmPoly& b, const Int& M);
// symmetric representative coefficients in (-M/2, M/2]
std::vector<Int> zm_symmetric(const ZmPoly& a, const Int& M);

// Hensel lift: F integer monic, squarefree mod p, factors = its monic
// irreducible factors mod p. Returns monic factors mod p^k with
// F = prod(factors) mod p^k.
std::vector<ZmPoly> hensel_lift_factors(const std::vector<Int>& F,
                                        const std::vector<FpPoly>& factors,
                                        std::int64_t p, int k);

} // namespace salemlat::detail
