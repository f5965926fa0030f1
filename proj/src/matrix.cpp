#include "salemlat/matrix.hpp"

#include <algorithm>

namespace salemlat {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw ShapeError("entry count does not match matrix shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_integer() const {
    for (const auto& v : e_)
        if (den(v) != 1) return false;
    return true;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
    RatMatrix r = *this;
    for (auto& v : r.e_) v *= s;
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    RatMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix diff shape mismatch");
    RatMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rat RatMatrix::det() const {
    if (!is_square()) throw ShapeError("determinant of non-square matrix");
    RatMatrix a = *this;
    std::size_t n = rows_;
    Rat d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            Rat f = a.at(i, col) / a.at(col, col);
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

RatMatrix RatMatrix::inverse() const {
    if (!is_square()) throw ShapeError("inverse of non-square matrix");
    std::size_t n = rows_;
    RatMatrix a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) throw SingularFormError("matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rat p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Rat RatMatrix::trace() const {
    if (!is_square()) throw ShapeError("trace of non-square matrix");
    Rat t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Int RatMatrix::denominator_lcm() const {
    Int l = 1;
    for (const auto& v : e_) l = boost::multiprecision::lcm(l, den(v));
    return l;
}

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

RatMatrix diagonal_matrix(const std::vector<Rat>& d) {
    RatMatrix r(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) r.at(i, i) = d[i];
    return r;
}

UniPoly char_poly(const RatMatrix& m) {
    if (!m.is_square()) throw ShapeError("characteristic polynomial of non-square matrix");
    std::size_t n = m.rows();
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1),
    // M_{k+1} = A (M_k + c_{n-k} I), c_{n-k-1} = -tr(M_{k+1})/(k+1).
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat ck = -mk.trace() / Rat(Int(k));
        c[n - k] = ck;
        if (k < n) {
            RatMatrix adj = mk;
            for (std::size_t i = 0; i < n; ++i) adj.at(i, i) += ck;
            mk = m * adj;
        }
    }
    return UniPoly(std::move(c));
}

std::pair<std::vector<Rat>, RatMatrix> congruence_diagonalize(const RatMatrix& s) {
    if (!s.is_square() || !s.is_symmetric()) throw ShapeError("form matrix must be symmetric");
    std::size_t n = s.rows();
    RatMatrix a = s, m = RatMatrix::identity(n);
    // Apply column operation C and the mirrored row operation C^T, tracking m.
    auto add_col = [&](std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t i = 0; i < n; ++i) a.at(i, dst) += f * a.at(i, src);
        for (std::size_t j = 0; j < n; ++j) a.at(dst, j) += f * a.at(src, j);
        for (std::size_t i = 0; i < n; ++i) m.at(i, dst) += f * m.at(i, src);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, x), a.at(i, y));
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(x, j), a.at(y, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, x), m.at(i, y));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a.at(i, i) != 0) { piv = i; break; }
            if (piv < n) {
                swap_cols(k, piv);
            } else {
                // all remaining diagonal entries vanish: pick a nonzero
                // off-diagonal entry and fold it onto the diagonal
                std::size_t bi = n, bj = n;
                for (std::size_t i = k; i < n && bi == n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if (a.at(i, j) != 0) { bi = i; bj = j; break; }
                if (bi == n) throw SingularFormError("quadratic form is degenerate");
                add_col(bi, bj, 1); // a(bi,bi) becomes 2*a(bi,bj) != 0
                if (bi != k) swap_cols(k, bi);
            }
        }
        Rat piv = a.at(k, k);
        for (std::size_t j = k + 1; j < n; ++j) {
            if (a.at(k, j) == 0) continue;
            add_col(j, k, -a.at(k, j) / piv);
        }
    }
    std::vector<Rat> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = a.at(i, i);
        if (d[i] == 0) throw SingularFormError("quadratic form is degenerate");
    }
    return {d, m};
}

HnfResult hnf_basis(const RatMatrix& generators) {
    if (!generators.is_integer()) throw ShapeError("hnf_basis requires integer entries");
    std::size_t m = generators.rows(), n = generators.cols();
    RatMatrix a = generators, u = RatMatrix::identity(m);
    auto row_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(x, j), a.at(y, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(u.at(x, j), u.at(y, j));
    };
    auto row_addmul = [&](std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t j = 0; j < n; ++j) a.at(dst, j) += f * a.at(src, j);
        for (std::size_t j = 0; j < m; ++j) u.at(dst, j) += f * u.at(src, j);
    };
    auto row_negate = [&](std::size_t x) {
        for (std::size_t j = 0; j < n; ++j) a.at(x, j) = -a.at(x, j);
        for (std::size_t j = 0; j < m; ++j) u.at(x, j) = -u.at(x, j);
    };
    std::size_t r = 0; // current pivot row
    for (std::size_t col = 0; col < n && r < m; ++col) {
        // Euclidean elimination below row r in this column.
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (a.at(i, col) == 0) continue;
                if (best == m ||
                    abs_int(num(a.at(i, col))) < abs_int(num(a.at(best, col))))
                    best = i;
            }
            if (best == m) break; // column all zero below
            if (best != r) row_swap(r, best);
            bool cleared = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a.at(i, col) == 0) continue;
                Int q = num(a.at(i, col)) / num(a.at(r, col)); // truncated division
                row_addmul(i, r, Rat(-q));
                if (a.at(i, col) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a.at(r, col) == 0) {
            // rank deficiency in this column: acceptable only if the whole
            // column below is zero and no pivot is needed; full column rank
            // inputs never hit this.
            throw RankError("generators do not have full column rank");
        }
        if (a.at(r, col) < 0) row_negate(r);
        // Reduce entries above the pivot into [0, pivot).
        Int piv = num(a.at(r, col));
        for (std::size_t i = 0; i < r; ++i) {
            Int v = num(a.at(i, col));
            Int q = v / piv;
            Int rem = v - q * piv;
            if (rem < 0) q -= 1;
            if (q != 0) row_addmul(i, r, Rat(-q));
        }
        ++r;
    }
    if (r < n) throw RankError("generators do not have full column rank");
    RatMatrix basis(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) basis.at(i, j) = a.at(i, j);
    return {basis, u};
}

std::vector<Rat> solve(const RatMatrix& a, const std::vector<Rat>& b) {
    if (!a.is_square() || a.rows() != b.size()) throw ShapeError("solve shape mismatch");
    RatMatrix inv = a.inverse();
    std::vector<Rat> x(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) x[i] += inv.at(i, j) * b[j];
    return x;
}

} // namespace salemlat
