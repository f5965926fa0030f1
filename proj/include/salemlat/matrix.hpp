#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "salemlat/arith.hpp"
#include "salemlat/poly.hpp"

namespace salemlat {

// Dense rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rat(0)) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<Rat>& entries() const { return e_; }

    bool is_square() const { return rows_ == cols_; }
    bool is_integer() const;
    bool is_symmetric() const;
    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& s) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator-() const { return *this * Rat(-1); }
    RatMatrix transpose() const;

    Rat det() const;            // square
    RatMatrix inverse() const;  // square invertible, throws SingularFormError
    Rat trace() const;

    // Least common multiple of entry denominators.
    Int denominator_lcm() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// Block-diagonal assembly.
RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);
RatMatrix diagonal_matrix(const std::vector<Rat>& d);

// Monic characteristic polynomial det(xI - m), exact (Faddeev-LeVerrier).
UniPoly char_poly(const RatMatrix& m);

// Congruence diagonalization: returns (diag, m) with m^T s m = diag(diag...),
// m invertible. Throws SingularFormError when s is degenerate, ShapeError
// when s is not symmetric.
std::pair<std::vector<Rat>, RatMatrix> congruence_diagonalize(const RatMatrix& s);

// Hermite normal form of the row lattice of an integer matrix.
// generators: m x n integer matrix of full column rank n (rows generate).
// basis: n x n upper-triangular HNF whose rows generate the same lattice,
// positive pivots, entries above each pivot reduced into [0, pivot).
// transform: m x m unimodular with transform * generators = [basis; 0].
struct HnfResult {
    RatMatrix basis;
    RatMatrix transform;
};
HnfResult hnf_basis(const RatMatrix& generators);

// Solve a x = b over Q for square invertible a.
std::vector<Rat> solve(const RatMatrix& a, const std::vector<Rat>& b);

} // namespace salemlat
