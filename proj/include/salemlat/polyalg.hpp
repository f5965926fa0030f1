#pragma once

#include <optional>
#include <string>
#include <vector>

#include "salemlat/poly.hpp"

namespace salemlat {

// Reciprocal-symmetry data of a monic polynomial with F(0) != 0.
// F* is the monic reciprocal x^deg(F) F(1/x) / F(0); epsilon is set when
// F = eps * x^deg(F) F(1/x) holds identically.
struct SymmetryReport {
    std::optional<int> epsilon; // +1 / -1 / unset
    UniPoly star;
};

SymmetryReport symmetry_check(const UniPoly& F);

// f self-reciprocal of even degree 2m -> g of degree m with f = x^m g(x + 1/x).
UniPoly trace_substitute(const UniPoly& f);

// Factorization of F over F_p into monic irreducibles with multiplicity,
// ordered by (degree, coefficient list). Requires p prime, p not dividing lc(F).
std::vector<std::pair<UniPoly, int>> factor_mod_p(const UniPoly& F, const Int& p);

// Complete factorization over Q of an integer polynomial (Zassenhaus).
// Factors are primitive integer polynomials with positive leading
// coefficient (monic when F is monic), ordered by (degree, coefficients).
struct ZFactorization {
    Rat content; // F = content * prod(factors^mult)
    std::vector<std::pair<UniPoly, int>> factors;
};
ZFactorization factor_over_Z(const UniPoly& F);
bool is_irreducible_over_Q(const UniPoly& F);

// Type decomposition of a monic eps-symmetric polynomial:
// type 0 factors are x-1 / x+1 powers, type 1 are irreducible symmetric of
// even degree, type 2 come in g, g* pairs with g != g* (one representative
// of each pair is stored together with its partner).
struct TypeDecomposition {
    std::vector<std::pair<UniPoly, int>> type0;
    std::vector<std::pair<UniPoly, int>> type1;
    struct Pair {
        UniPoly g;
        UniPoly partner; // g*
        int multiplicity;
    };
    std::vector<Pair> type2;
};
TypeDecomposition symmetric_decompose(const UniPoly& F);

// Salem verification verdict.
struct SalemVerdict {
    bool salem = false;
    std::string reason;           // set when not salem
    UniPoly trace_poly;           // g, set when the trace substitution exists
    int real_trace_roots = 0;     // distinct real roots of g
    int roots_above_2 = 0;        // roots of g in (2, inf)
    int roots_below_minus2 = 0;   // roots of g in (-inf, -2]
    Rat lambda_lo, lambda_hi;     // bracket for the Salem root when salem
};
SalemVerdict classify_salem(const UniPoly& F);

// Verified Salem polynomial with the derived quadratic-form data for
// dimension n: D = f(1) f(-1), delta = (-1)^{n(n+1)/2} D (square class),
// deficiency = n + 1 - deg f.
struct SalemContext {
    UniPoly f;           // minimal polynomial of lambda, degree 2m
    UniPoly g;           // trace polynomial, degree m
    int n = 0;
    Rat D;
    Rat delta;           // exact value; use delta_class for the square class
    Int delta_class;     // canonical squarefree representative
    int deficiency = 0;
    Rat lambda_lo, lambda_hi;
    Int disc_f, disc_g;  // numerators of the discriminants (integer for monic integer input)
    int m() const { return f.degree() / 2; }
};
SalemContext salem_context(const UniPoly& F, int n);

} // namespace salemlat
