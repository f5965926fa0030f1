#include "salemlat/modpoly.hpp"

#include <algorithm>
#include <random>

namespace salemlat::detail {

namespace {

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t pow_mod64(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

std::int64_t inv_mod64(std::int64_t a, std::int64_t p) { return pow_mod64(a, p - 2, p); }

} // namespace

FpPoly fp_trim(FpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

FpPoly fp_from_int_coeffs(const std::vector<Int>& c, std::int64_t p) {
    FpPoly f(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int r = c[i] % p;
        if (r < 0) r += p;
        f[i] = static_cast<std::int64_t>(r);
    }
    return fp_trim(std::move(f));
}

bool fp_is_zero(const FpPoly& f) { return f.empty(); }
int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_add(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    return fp_trim(std::move(r));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
    return fp_trim(std::move(r));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<__int128>(a[i]) * b[j]) % p;
    }
    return fp_trim(std::move(r));
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    if (b.empty()) throw DegenerateInput("mod-p division by zero");
    FpPoly rem = a;
    int db = fp_deg(b);
    if (fp_deg(a) < db) return {{}, rem};
    FpPoly quot(fp_deg(a) - db + 1, 0);
    std::int64_t inv = inv_mod64(b.back(), p);
    for (int i = fp_deg(a); i >= db; --i) {
        if (rem.size() <= static_cast<std::size_t>(i) || rem[i] == 0) continue;
        std::int64_t q = mulmod(rem[i], inv, p);
        quot[i - db] = q;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = (rem[i - db + j] - mulmod(q, b[j], p) % p + p) % p;
    }
    return {fp_trim(std::move(quot)), fp_trim(std::move(rem))};
}

FpPoly fp_monic(const FpPoly& a, std::int64_t p) {
    if (a.empty()) return a;
    FpPoly r = a;
    std::int64_t inv = inv_mod64(r.back(), p);
    for (auto& v : r) v = mulmod(v, inv, p);
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
    while (!b.empty()) {
        FpPoly r = fp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

FpPoly fp_powmod(const FpPoly& base, Int e, const FpPoly& mod, std::int64_t p) {
    FpPoly r{1};
    FpPoly b = fp_divmod(base, mod, p).second;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0))
            r = fp_divmod(fp_mul(r, b, p), mod, p).second;
        b = fp_divmod(fp_mul(b, b, p), mod, p).second;
        e >>= 1;
    }
    return r;
}

void fp_bezout(const FpPoly& a, const FpPoly& b, std::int64_t p, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = fp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly ns = fp_sub(s0, fp_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(ns);
        FpPoly nt = fp_sub(t0, fp_mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (fp_deg(r0) != 0) throw DegenerateInput("fp_bezout: inputs not coprime");
    std::int64_t inv = inv_mod64(r0[0], p);
    s = s0;
    t = t0;
    for (auto& v : s) v = mulmod(v, inv, p);
    for (auto& v : t) v = mulmod(v, inv, p);
}

FpPoly fp_derivative(const FpPoly& a, std::int64_t p) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = mulmod(a[i], static_cast<std::int64_t>(i % p), p);
    return fp_trim(std::move(r));
}

namespace {

// p-th root of f when f = g(x)^p (equivalently f = g0(x^p)); valid in F_p[x].
FpPoly fp_pth_root(const FpPoly& f, std::int64_t p) {
    FpPoly g;
    for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(p))
        g.push_back(f[i]); // a^(1/p) = a in F_p
    return fp_trim(std::move(g));
}

} // namespace

std::vector<std::pair<FpPoly, int>> fp_squarefree(const FpPoly& f0, std::int64_t p) {
    FpPoly f = fp_monic(f0, p);
    std::vector<std::pair<FpPoly, int>> out;
    if (fp_deg(f) <= 0) return out;
    FpPoly d = fp_derivative(f, p);
    if (fp_is_zero(d)) {
        for (auto& [g, m] : fp_squarefree(fp_pth_root(f, p), p))
            out.emplace_back(g, m * static_cast<int>(p));
        return out;
    }
    FpPoly c = fp_gcd(f, d, p);
    FpPoly w = fp_divmod(f, c, p).first;
    int i = 1;
    while (fp_deg(w) > 0) {
        FpPoly y = fp_gcd(w, c, p);
        FpPoly z = fp_divmod(w, y, p).first;
        if (fp_deg(z) > 0) out.emplace_back(fp_monic(z, p), i);
        w = std::move(y);
        c = fp_divmod(c, w, p).first;
        ++i;
    }
    if (fp_deg(c) > 0) {
        for (auto& [g, m] : fp_squarefree(fp_pth_root(c, p), p))
            out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
}

namespace {

// Distinct-degree: list of (product-of-irreducibles, degree).
std::vector<std::pair<FpPoly, int>> fp_ddf(const FpPoly& f, std::int64_t p) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly rem = f;
    FpPoly h{0, 1}; // x
    int d = 0;
    while (fp_deg(rem) >= 2 * (d + 1)) {
        ++d;
        h = fp_powmod(h, Int(p), rem, p);
        FpPoly hx = fp_sub(h, FpPoly{0, 1}, p);
        FpPoly g = fp_gcd(hx, rem, p);
        if (fp_deg(g) > 0) {
            out.emplace_back(g, d);
            rem = fp_divmod(rem, g, p).first;
            h = fp_divmod(h, rem, p).second;
        }
    }
    if (fp_deg(rem) > 0) out.emplace_back(rem, fp_deg(rem));
    return out;
}

// Equal-degree splitting of f (product of irreducibles of degree d).
void fp_edf(const FpPoly& f, int d, std::int64_t p, std::mt19937_64& rng,
            std::vector<FpPoly>& out) {
    if (fp_deg(f) == d) {
        out.push_back(fp_monic(f, p));
        return;
    }
    int n = fp_deg(f);
    FpPoly split;
    while (split.empty()) {
        FpPoly a(n);
        for (int i = 0; i < n; ++i) a[i] = static_cast<std::int64_t>(rng() % p);
        a = fp_trim(std::move(a));
        if (fp_deg(a) < 1) continue;
        FpPoly g = fp_gcd(a, f, p);
        if (fp_deg(g) > 0 && fp_deg(g) < n) {
            split = g;
            break;
        }
        FpPoly b;
        if (p == 2) {
            // trace map over F_{2^d}
            b = a;
            FpPoly t = a;
            for (int i = 1; i < d; ++i) {
                t = fp_powmod(t, Int(2), f, p);
                b = fp_add(b, t, p);
            }
        } else {
            Int e = (boost::multiprecision::pow(Int(p), d) - 1) / 2;
            b = fp_powmod(a, e, f, p);
            b = fp_sub(b, FpPoly{1}, p);
        }
        FpPoly g2 = fp_gcd(b, f, p);
        if (fp_deg(g2) > 0 && fp_deg(g2) < n) split = g2;
    }
    fp_edf(split, d, p, rng, out);
    fp_edf(fp_divmod(f, split, p).first, d, p, rng, out);
}

} // namespace

std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, std::int64_t p) {
    std::vector<std::pair<FpPoly, int>> out;
    // deterministic seed from the input
    std::uint64_t seed = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(p);
    for (auto v : f) seed = seed * 1099511628211ull + static_cast<std::uint64_t>(v + 3);
    std::mt19937_64 rng(seed);
    for (auto& [sq, mult] : fp_squarefree(f, p)) {
        for (auto& [prod, d] : fp_ddf(sq, p)) {
            std::vector<FpPoly> irr;
            fp_edf(prod, d, p, rng, irr);
            for (auto& g : irr) out.emplace_back(g, mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (fp_deg(a.first) != fp_deg(b.first)) return fp_deg(a.first) < fp_deg(b.first);
        return a.first < b.first;
    });
    return out;
}

// ---- Z/p^k ----

ZmPoly zm_from_int_coeffs(const std::vector<Int>& c, const Int& M) {
    ZmPoly f(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        f[i] = c[i] % M;
        if (f[i] < 0) f[i] += M;
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& M) {
    if (a.empty() || b.empty()) return {};
    ZmPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % M;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& M) {
    ZmPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % M;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& M) {
    ZmPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] = (r[i] - b[i]) % M;
        if (r[i] < 0) r[i] += M;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::pair<ZmPoly, ZmPoly> zm_divmod(const ZmPoly& a, const ZmPoly& b, const Int& M) {
    if (b.empty() || b.back() != 1)
        throw DegenerateInput("zm_divmod requires a monic divisor");
    ZmPoly rem = a;
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    if (da < db) return {{}, rem};
    ZmPoly quot(da - db + 1, Int(0));
    for (int i = da; i >= db; --i) {
        if (rem.size() <= static_cast<std::size_t>(i) || rem[i] == 0) continue;
        Int q = rem[i];
        quot[i - db] = q;
        for (int j = 0; j <= db; ++j) {
            rem[i - db + j] = (rem[i - db + j] - q * b[j]) % M;
            if (rem[i - db + j] < 0) rem[i - db + j] += M;
        }
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    return {quot, rem};
}

std::vector<Int> zm_symmetric(const ZmPoly& a, const Int& M) {
    std::vector<Int> r(a.size());
    Int half = M / 2;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > half ? Int(a[i] - M) : a[i];
    return r;
}

namespace {

struct PairLift {
    ZmPoly g, h, s, t; // f = g h, s g + t h = 1 (mod current modulus)
};

// One quadratic step: modulus m -> m2 (m2 | m^2).
void hensel_step(const std::vector<Int>& F, PairLift& L, const Int& m2) {
    ZmPoly f = zm_from_int_coeffs(F, m2);
    ZmPoly g = L.g, h = L.h, s = L.s, t = L.t;
    ZmPoly e = zm_sub(f, zm_mul(g, h, m2), m2);
    auto [q, r] = zm_divmod(zm_mul(s, e, m2), h, m2);
    ZmPoly g1 = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
    ZmPoly h1 = zm_add(h, r, m2);
    ZmPoly b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), ZmPoly{Int(1)}, m2);
    auto [c, d] = zm_divmod(zm_mul(s, b, m2), h1, m2);
    ZmPoly s1 = zm_sub(s, d, m2);
    ZmPoly t1 = zm_sub(t, zm_add(zm_mul(t, b, m2), zm_mul(c, g1, m2), m2), m2);
    L = {g1, h1, s1, t1};
}

void lift_tree(const std::vector<Int>& F, const std::vector<FpPoly>& factors,
               std::size_t lo, std::size_t hi, std::int64_t p, const Int& pk,
               std::vector<ZmPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(zm_from_int_coeffs(F, pk));
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    FpPoly g0{1}, h0{1};
    for (std::size_t i = lo; i < mid; ++i) g0 = fp_mul(g0, factors[i], p);
    for (std::size_t i = mid; i < hi; ++i) h0 = fp_mul(h0, factors[i], p);
    FpPoly s0, t0;
    fp_bezout(g0, h0, p, s0, t0);
    auto up = [&](const FpPoly& a) {
        ZmPoly r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        return r;
    };
    PairLift L{up(g0), up(h0), up(s0), up(t0)};
    Int m = p;
    while (m < pk) {
        Int m2 = m * m;
        if (m2 > pk) m2 = pk;
        hensel_step(F, L, m2);
        m = m2;
    }
    // recurse on each half with its lifted product as the new "F"
    std::vector<Int> G(L.g.begin(), L.g.end()), H(L.h.begin(), L.h.end());
    lift_tree(G, factors, lo, mid, p, pk, out);
    lift_tree(H, factors, mid, hi, p, pk, out);
}

} // namespace

std::vector<ZmPoly> hensel_lift_factors(const std::vector<Int>& F,
                                        const std::vector<FpPoly>& factors,
                                        std::int64_t p, int k) {
    Int pk = boost::multiprecision::pow(Int(p), static_cast<unsigned>(k));
    std::vector<ZmPoly> out;
    lift_tree(F, factors, 0, factors.size(), p, pk, out);
    return out;
}

} // namespace salemlat::detail
