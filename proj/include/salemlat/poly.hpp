#pragma once

#include <optional>
#include <string>
#include <vector>

#include "salemlat/arith.hpp"

namespace salemlat {

// Univariate polynomial over Q, coefficients ascending, no stored leading zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rat& v) { return UniPoly({v}); }
    static UniPoly x() { return UniPoly({Rat(0), Rat(1)}); }
    // x^k
    static UniPoly monomial(int k, const Rat& lead = Rat(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Rat(0); }
    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_integer() const;

    Rat eval(const Rat& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Euclidean division; divisor nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    // Substitute x -> x*s (scale roots by 1/s) and x -> -x.
    UniPoly compose_neg_x() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b); // monic gcd
// Squarefree decomposition (Yun): returns list of (factor, multiplicity),
// factors monic squarefree pairwise coprime, product^mult = input/lc.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);
UniPoly squarefree_part(const UniPoly& f);

Rat resultant(const UniPoly& a, const UniPoly& b);
Rat poly_discriminant(const UniPoly& f);

// Number of distinct real roots in (lo, hi]; nullopt bounds mean -inf / +inf.
// The polynomial is squarefree-reduced internally, so the count is always
// the count of distinct roots.
int sturm_count(const UniPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);

// Cauchy bound: every real root lies in (-B, B).
Rat root_bound(const UniPoly& p);

// Parse "1,-3,1" (ascending, rationals allowed as p/q).
UniPoly parse_poly(std::string_view s);
std::string poly_csv(const UniPoly& p); // inverse of parse_poly

// Coefficients as integers; throws if not an integer polynomial.
std::vector<Int> integer_coeffs(const UniPoly& p);
UniPoly poly_from_int_coeffs(const std::vector<Int>& c);

} // namespace salemlat
