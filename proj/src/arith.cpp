#include "salemlat/arith.hpp"

#include <algorithm>
#include <map>

namespace salemlat {

std::string int_str(const Int& x) { return x.str(); }

std::string rat_str(const Rat& x) {
    if (den(x) == 1) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

Int parse_int(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad integer literal: " + std::string(s));
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') throw ParseError("bad integer literal: " + std::string(s));
    return Int(std::string(s));
}

Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int n = parse_int(s.substr(0, slash));
    Int d = parse_int(s.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator: " + std::string(s));
    return Rat(n, d);
}

Int isqrt(const Int& n) {
    if (n < 0) throw DegenerateInput("isqrt of negative");
    if (n == 0) return 0;
    Int x = Int(1) << (unsigned)((boost::multiprecision::msb(n) / 2) + 1);
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

bool rational_sqrt(const Rat& x, Rat& out) {
    if (x < 0) return false;
    Int rn = isqrt(num(x)), rd = isqrt(den(x));
    if (rn * rn != num(x) || rd * rd != den(x)) return false;
    out = Rat(rn, rd);
    return true;
}

Int mod_pow(Int base, Int exp, const Int& mod) {
    base %= mod;
    if (base < 0) base += mod;
    Int r = 1;
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0)) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

Int mod_inverse(const Int& a, const Int& mod) {
    Int old_r = a % mod, r = mod;
    if (old_r < 0) old_r += mod;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw DegenerateInput("element not invertible modulo " + mod.str());
    old_s %= mod;
    if (old_s < 0) old_s += mod;
    return old_s;
}

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) { d >>= 1; ++s; }
    // Witnesses covering n < 3.3e24 deterministically.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        Int x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

Int pollard_rho(const Int& n) {
    // n odd composite, not a prime power of a small prime.
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = boost::multiprecision::gcd(abs_int(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_rec(const Int& n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) { out[n] += 1; return; }
    if (is_perfect_square(n)) {
        Int r = isqrt(n);
        std::map<Int, int> sub;
        factor_rec(r, sub);
        for (auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<Int, int>> factor_integer(Int n) {
    if (n == 0) throw DegenerateInput("factor_integer(0)");
    if (n < 0) n = -n;
    std::map<Int, int> acc;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        while (n % p == 0) { acc[Int(p)] += 1; n /= p; }
    }
    Int t = 53;
    while (t * t <= n && t < 100000) {
        while (n % t == 0) { acc[t] += 1; n /= t; }
        t += 2;
    }
    if (n > 1) factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

Int squarefree_class(const Rat& x) {
    if (x == 0) throw DegenerateInput("square class of 0");
    Int v = num(x) * den(x);
    Int out = v < 0 ? -1 : 1;
    for (auto& [p, e] : factor_integer(v))
        if (e % 2 != 0) out *= p;
    return out;
}

long padic_valuation(const Rat& x, const Int& p) {
    if (x == 0) throw DegenerateInput("valuation of 0");
    long v = 0;
    Int n = num(x);
    while (n % p == 0) { n /= p; ++v; }
    Int d = den(x);
    while (d % p == 0) { d /= p; --v; }
    return v;
}

Int unit_part_mod(const Rat& x, const Int& p, unsigned k) {
    if (x == 0) throw DegenerateInput("unit part of 0");
    Int pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    Int n = num(x), d = den(x);
    while (n % p == 0) n /= p;
    while (d % p == 0) d /= p;
    Int r = n % pk;
    if (r < 0) r += pk;
    return r * mod_inverse(d, pk) % pk;
}

int legendre(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Int e = mod_pow(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

} // namespace salemlat
