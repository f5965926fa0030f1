#include "salemlat/polyalg.hpp"

#include <algorithm>

#include "salemlat/modpoly.hpp"

namespace salemlat {

SymmetryReport symmetry_check(const UniPoly& F) {
    if (F.is_zero() || F.eval(0) == 0)
        throw ZeroConstantTerm("symmetry_check requires F(0) != 0");
    if (!F.is_monic()) throw DegenerateInput("symmetry_check requires a monic polynomial");
    int d = F.degree();
    Rat f0 = F.coeff(0);
    // star coefficients: reversed list divided by F(0)
    std::vector<Rat> rc(d + 1);
    for (int i = 0; i <= d; ++i) rc[i] = F.coeff(d - i) / f0;
    SymmetryReport rep;
    rep.star = UniPoly(std::move(rc));
    bool plus = true, minus = true;
    for (int i = 0; i <= d; ++i) {
        if (F.coeff(i) != F.coeff(d - i)) plus = false;
        if (F.coeff(i) != -F.coeff(d - i)) minus = false;
    }
    if (plus) rep.epsilon = 1;
    else if (minus) rep.epsilon = -1;
    return rep;
}

UniPoly trace_substitute(const UniPoly& f) {
    if (f.degree() < 0 || f.degree() % 2 != 0 || !f.is_monic())
        throw NotReciprocal("trace substitution requires a monic polynomial of even degree");
    int m = f.degree() / 2;
    // peel off leading terms against x^{m-j} (x^2+1)^j
    UniPoly residual = f;
    UniPoly x2p1({Rat(1), Rat(0), Rat(1)});
    std::vector<Rat> g(m + 1, Rat(0));
    for (int j = m; j >= 0; --j) {
        Rat a = residual.coeff(m + j);
        g[j] = a;
        if (a != 0) {
            UniPoly term = UniPoly::monomial(m - j, a);
            UniPoly pw = UniPoly::constant(1);
            for (int i = 0; i < j; ++i) pw = pw * x2p1;
            residual = residual - term * pw;
        }
    }
    if (!residual.is_zero())
        throw NotReciprocal("polynomial is not of the form x^m g(x + 1/x)");
    return UniPoly(std::move(g));
}

std::vector<std::pair<UniPoly, int>> factor_mod_p(const UniPoly& F, const Int& p) {
    if (!is_probable_prime(p)) throw NotPrime("modulus is not prime: " + p.str());
    if (p > Int("4611686018427387903")) throw DegenerateInput("prime too large");
    if (!F.is_integer()) throw DegenerateInput("factor_mod_p requires integer coefficients");
    auto coeffs = integer_coeffs(F);
    std::int64_t pp = static_cast<std::int64_t>(p);
    if (coeffs.empty() || coeffs.back() % p == 0)
        throw DegenerateInput("leading coefficient vanishes mod p");
    auto fac = detail::fp_factor(detail::fp_from_int_coeffs(coeffs, pp), pp);
    std::vector<std::pair<UniPoly, int>> out;
    for (auto& [g, m] : fac) {
        std::vector<Rat> c(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) c[i] = Rat(Int(g[i]));
        out.emplace_back(UniPoly(std::move(c)), m);
    }
    return out;
}

namespace {

// primitive part and content of an integer polynomial (lc made positive)
std::pair<Rat, std::vector<Int>> content_primitive(const UniPoly& F) {
    Int dlcm = 1;
    for (int i = 0; i <= F.degree(); ++i)
        dlcm = boost::multiprecision::lcm(dlcm, den(F.coeff(i)));
    std::vector<Int> c(F.degree() + 1);
    Int g = 0;
    for (int i = 0; i <= F.degree(); ++i) {
        c[i] = num(F.coeff(i) * Rat(dlcm));
        g = boost::multiprecision::gcd(g, c[i]);
    }
    if (g == 0) throw DegenerateInput("zero polynomial");
    if (sgn(c.back()) < 0) g = -g;
    for (auto& v : c) v /= g;
    return {Rat(g, dlcm), c};
}

Int max_abs_coeff(const std::vector<Int>& c) {
    Int m = 0;
    for (const auto& v : c) m = std::max(m, abs_int(v));
    return m;
}

bool try_divide(const std::vector<Int>& F, const std::vector<Int>& G,
                std::vector<Int>& quotient) {
    // exact division of integer polynomials, G primitive with positive lc
    UniPoly f = poly_from_int_coeffs(F), g = poly_from_int_coeffs(G);
    auto [q, r] = f.divmod(g);
    if (!r.is_zero() || !q.is_integer()) return false;
    quotient = integer_coeffs(q);
    return true;
}

// factor a primitive squarefree integer polynomial (deg >= 1)
std::vector<std::vector<Int>> zassenhaus_squarefree(std::vector<Int> F) {
    std::vector<std::vector<Int>> out;
    int deg = static_cast<int>(F.size()) - 1;
    if (deg == 1) {
        out.push_back(F);
        return out;
    }
    // choose a prime keeping F squarefree with unit leading coefficient
    std::int64_t p = 0;
    UniPoly Fq = poly_from_int_coeffs(F);
    for (std::int64_t cand = 3;; cand += 2) {
        if (!is_probable_prime(Int(cand))) continue;
        if (F.back() % cand == 0) continue;
        auto fp = detail::fp_from_int_coeffs(F, cand);
        auto dp = detail::fp_derivative(fp, cand);
        if (detail::fp_is_zero(dp)) continue;
        if (detail::fp_deg(detail::fp_gcd(fp, dp, cand)) == 0) {
            p = cand;
            break;
        }
    }
    auto fmodp = detail::fp_monic(detail::fp_from_int_coeffs(F, p), p);
    auto fac = detail::fp_factor(fmodp, p);
    std::vector<detail::FpPoly> irr;
    for (auto& [g, m] : fac) {
        if (m != 1) throw DegenerateInput("prime selection failed squarefreeness");
        irr.push_back(g);
    }
    if (irr.size() == 1) {
        out.push_back(F);
        return out;
    }
    // Landau-Mignotte style bound on factor coefficients
    Int norm2 = 0;
    for (const auto& v : F) norm2 += v * v;
    Int bound = (isqrt(norm2) + 1) * abs_int(F.back());
    bound <<= static_cast<unsigned>(deg + 1);
    int k = 1;
    Int pk = p;
    while (pk <= 2 * bound) { pk *= p; ++k; }

    // lift lc(F) * monic factors of the monic reduction: standard trick is to
    // lift factors of F directly when monic; for general lc work with
    // F_star = lc^{deg-1} F(x / lc) which is monic.
    bool monic = (F.back() == 1);
    std::vector<Int> Fw = F;
    Int lc = F.back();
    if (!monic) {
        // Fw(x) = lc^{deg-1} F(x/lc) is monic with integer coefficients
        Fw.resize(F.size());
        Int scale = 1;
        for (int i = deg; i >= 0; --i) {
            Fw[i] = F[i] * scale;
            if (i > 0) scale *= lc;
        }
        auto fw = detail::fp_monic(detail::fp_from_int_coeffs(Fw, p), p);
        fac = detail::fp_factor(fw, p);
        irr.clear();
        for (auto& [g, m] : fac) {
            if (m != 1) throw DegenerateInput("prime selection failed squarefreeness");
            irr.push_back(g);
        }
        Int norm2w = 0;
        for (const auto& v : Fw) norm2w += v * v;
        bound = (isqrt(norm2w) + 1);
        bound <<= static_cast<unsigned>(deg + 1);
        k = 1;
        pk = p;
        while (pk <= 2 * bound) { pk *= p; ++k; }
    }
    auto lifted = detail::hensel_lift_factors(Fw, irr, p, k);

    // subset recombination
    std::vector<bool> used(lifted.size(), false);
    std::vector<Int> rem = Fw;
    auto remaining_count = [&]() {
        std::size_t c = 0;
        for (bool u : used) c += !u;
        return c;
    };
    for (std::size_t size = 1; size <= lifted.size(); ++size) {
        if (size > remaining_count() / 2) break;
        std::vector<std::size_t> avail;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) avail.push_back(i);
        std::vector<std::size_t> idx(size);
        // iterate over size-subsets of avail in lexicographic order
        std::vector<std::size_t> pos(size);
        for (std::size_t i = 0; i < size; ++i) pos[i] = i;
        bool more = avail.size() >= size;
        while (more) {
            for (std::size_t i = 0; i < size; ++i) idx[i] = avail[pos[i]];
            detail::ZmPoly prod{Int(1)};
            for (auto i : idx) prod = detail::zm_mul(prod, lifted[i], pk);
            auto cand = detail::zm_symmetric(prod, pk);
            std::vector<Int> q;
            // make candidate primitive
            Int g = 0;
            for (auto& v : cand) g = boost::multiprecision::gcd(g, v);
            if (g != 0) {
                if (sgn(cand.back()) < 0) g = -g;
                for (auto& v : cand) v /= g;
            }
            if (try_divide(rem, cand, q)) {
                out.push_back(cand);
                rem = q;
                for (auto i : idx) used[i] = true;
                // restart at same size with updated availability
                avail.clear();
                for (std::size_t i2 = 0; i2 < lifted.size(); ++i2)
                    if (!used[i2]) avail.push_back(i2);
                if (avail.size() < size || size > remaining_count() / 2) break;
                for (std::size_t i2 = 0; i2 < size; ++i2) pos[i2] = i2;
                continue;
            }
            // next subset
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && pos[i] == avail.size() - size + i) --i;
            if (i < 0) {
                more = false;
            } else {
                ++pos[i];
                for (std::size_t j = i + 1; j < size; ++j) pos[j] = pos[j - 1] + 1;
            }
        }
    }
    if (static_cast<int>(rem.size()) - 1 > 0) out.push_back(rem);

    if (!monic) {
        // undo the x -> x/lc substitution: factor(x) -> primitive(factor(lc x))
        for (auto& f : out) {
            Int scale = 1;
            for (std::size_t i = 0; i < f.size(); ++i) {
                f[i] *= scale;
                scale *= lc;
            }
            Int g = 0;
            for (auto& v : f) g = boost::multiprecision::gcd(g, v);
            if (sgn(f.back()) < 0) g = -g;
            for (auto& v : f) v /= g;
        }
    }
    return out;
}

} // namespace

ZFactorization factor_over_Z(const UniPoly& F) {
    if (F.is_zero()) throw DegenerateInput("factorization of zero polynomial");
    auto [content, prim] = content_primitive(F);
    ZFactorization out;
    out.content = content;
    if (prim.size() == 1) {
        out.content *= Rat(prim[0]);
        return out;
    }
    UniPoly P = poly_from_int_coeffs(prim);
    for (auto& [sq, mult] : squarefree_decomposition(P)) {
        // sq is monic with rational coefficients; recover its primitive form
        auto [c2, prim2] = content_primitive(sq);
        (void)c2;
        for (auto& fac : zassenhaus_squarefree(prim2))
            out.factors.emplace_back(poly_from_int_coeffs(fac), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
        return false;
    });
    return out;
}

bool is_irreducible_over_Q(const UniPoly& F) {
    if (F.degree() < 1) return false;
    auto z = factor_over_Z(F);
    return z.factors.size() == 1 && z.factors[0].second == 1;
}

TypeDecomposition symmetric_decompose(const UniPoly& F) {
    auto rep = symmetry_check(F);
    if (!rep.epsilon) throw NotSymmetric("polynomial is not eps-symmetric");
    TypeDecomposition dec;
    auto z = factor_over_Z(F * (Rat(1) / F.lc()));
    // collect monic rational irreducible factors
    std::vector<std::pair<UniPoly, int>> monics;
    for (auto& [g, m] : z.factors) monics.emplace_back(g.monic(), m);
    std::vector<bool> used(monics.size(), false);
    for (std::size_t i = 0; i < monics.size(); ++i) {
        if (used[i]) continue;
        const auto& [g, m] = monics[i];
        UniPoly xm1({Rat(-1), Rat(1)}), xp1({Rat(1), Rat(1)});
        if (g == xm1 || g == xp1) {
            dec.type0.emplace_back(g, m);
            used[i] = true;
            continue;
        }
        UniPoly star = symmetry_check(g).star;
        if (star == g) {
            dec.type1.emplace_back(g, m);
            used[i] = true;
            continue;
        }
        // find the partner g*
        bool found = false;
        for (std::size_t j = 0; j < monics.size(); ++j) {
            if (j == i || used[j]) continue;
            if (monics[j].first == star) {
                if (monics[j].second != m)
                    throw NotSymmetric("type-2 partner multiplicities differ");
                dec.type2.push_back({g, star, m});
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) throw NotSymmetric("type-2 factor lacks its reciprocal partner");
    }
    return dec;
}

namespace {

// bisect a strictly bracketing sign change of f on (lo, hi) to width <= tol
void bisect(const UniPoly& f, Rat lo, Rat hi, const Rat& tol, Rat& out_lo, Rat& out_hi) {
    int slo = sgn(f.eval(lo));
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        int sm = sgn(f.eval(mid));
        if (sm == 0) {
            // exact rational root; nudge the bracket around it
            out_lo = mid - tol / 2;
            out_hi = mid + tol / 2;
            return;
        }
        if (sm == slo) lo = mid;
        else hi = mid;
    }
    out_lo = lo;
    out_hi = hi;
}

} // namespace

SalemVerdict classify_salem(const UniPoly& F) {
    SalemVerdict v;
    auto fail = [&](const std::string& why) {
        v.salem = false;
        v.reason = why;
        return v;
    };
    if (F.degree() < 2) return fail("degree must be at least 2");
    if (!F.is_monic()) return fail("not monic");
    if (!F.is_integer()) return fail("coefficients are not integers");
    if (F.degree() % 2 != 0) return fail("odd degree");
    bool selfrec = true;
    for (int i = 0; i <= F.degree(); ++i)
        if (F.coeff(i) != F.coeff(F.degree() - i)) selfrec = false;
    if (!selfrec) return fail("not self-reciprocal");
    if (F.eval(2) == 0 || F.eval(-2) == 0 || F.eval(1) == 0 || F.eval(-1) == 0)
        return fail("root at +-1 or trace root at +-2 contradicts irreducibility");
    if (!is_irreducible_over_Q(F)) return fail("reducible over Q");
    UniPoly g = trace_substitute(F);
    v.trace_poly = g;
    int m = F.degree() / 2;
    v.real_trace_roots = sturm_count(g, std::nullopt, std::nullopt);
    if (v.real_trace_roots != m)
        return fail("trace polynomial has non-real roots (conjugates off the unit circle)");
    Rat B = root_bound(g);
    v.roots_above_2 = sturm_count(g, Rat(2), B);
    v.roots_below_minus2 = sturm_count(g, -B, Rat(-2));
    if (v.roots_below_minus2 != 0)
        return fail("trace root below -2: a conjugate pair is real negative");
    if (v.roots_above_2 != 1)
        return fail(v.roots_above_2 == 0 ? "all conjugates on the unit circle"
                                         : "more than one conjugate pair off the unit circle");
    // bracket lambda: the unique root of F in (1, B_F)
    Rat BF = root_bound(F);
    Rat tol(Int(1), boost::multiprecision::pow(Int(10), 16));
    bisect(F, Rat(1), BF, tol, v.lambda_lo, v.lambda_hi);
    v.salem = true;
    return v;
}

SalemContext salem_context(const UniPoly& F, int n) {
    auto v = classify_salem(F);
    if (!v.salem) throw DegenerateInput("not a Salem polynomial: " + v.reason);
    if (F.degree() > n + 1)
        throw DimensionTooSmall("deg(f) exceeds n + 1");
    SalemContext ctx;
    ctx.f = F;
    ctx.g = v.trace_poly;
    ctx.n = n;
    ctx.D = F.eval(1) * F.eval(-1);
    if (!(ctx.D < 0)) throw DegenerateInput("D = f(1) f(-1) must be negative");
    Int e = Int(n) * (n + 1) / 2;
    ctx.delta = (e % 2 != 0) ? -ctx.D : ctx.D;
    ctx.delta_class = squarefree_class(ctx.delta);
    ctx.deficiency = n + 1 - F.degree();
    // deficiency parity is forced: deg f is even
    if ((ctx.deficiency % 2 == 0) != (n % 2 == 1))
        throw DegenerateInput("deficiency parity inconsistent");
    ctx.lambda_lo = v.lambda_lo;
    ctx.lambda_hi = v.lambda_hi;
    ctx.disc_f = num(poly_discriminant(F));
    ctx.disc_g = num(poly_discriminant(ctx.g));
    return ctx;
}

} // namespace salemlat
