#include "salemlat/poly.hpp"

#include <algorithm>
#include <sstream>

namespace salemlat {

UniPoly UniPoly::monomial(int k, const Rat& lead) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = lead;
    return UniPoly(std::move(c));
}

bool UniPoly::is_integer() const {
    for (const auto& v : c_)
        if (den(v) != 1) return false;
    return true;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rat> r = c_;
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const { return *this * Rat(-1); }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DegenerateInput("division by zero polynomial");
    std::vector<Rat> rem = c_;
    int dd = d.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<Rat> quot(degree() - dd + 1, Rat(0));
    for (int i = degree(); i >= dd; --i) {
        Rat q = rem[i] / d.c_[dd];
        if (q == 0) continue;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.c_[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::derivative() const {
    if (degree() < 1) return UniPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(Int(i));
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lc());
}

UniPoly UniPoly::compose_neg_x() const {
    std::vector<Rat> r = c_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return UniPoly(std::move(r));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& v = c_[i];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Rat a = v > 0 ? v : Rat(-v);
        if (a != 1 || i == 0) os << rat_str(a);
        if (i >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw DegenerateInput("squarefree decomposition of 0");
    UniPoly g = f.monic();
    std::vector<std::pair<UniPoly, int>> out;
    if (g.degree() == 0) return out;
    // Yun's algorithm.
    UniPoly u = poly_gcd(g, g.derivative());
    UniPoly v = g.divmod(u).first;
    UniPoly w = g.derivative().divmod(u).first;
    int m = 1;
    while (v.degree() > 0) {
        UniPoly z = w - v.derivative();
        UniPoly h = poly_gcd(v, z);
        if (h.degree() > 0) out.emplace_back(h, m);
        v = v.divmod(h).first;
        w = z.divmod(h).first;
        ++m;
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& f) {
    UniPoly out = UniPoly::constant(1);
    for (auto& [p, m] : squarefree_decomposition(f)) out = out * p;
    return out;
}

Rat resultant(const UniPoly& a, const UniPoly& b) {
    // Euclidean resultant with the standard transformation rules.
    if (a.is_zero() || b.is_zero()) return Rat(0);
    UniPoly p = a, q = b;
    Rat res = 1;
    while (true) {
        if (q.degree() == 0) {
            Rat l = q.lc();
            Rat acc = 1;
            for (int i = 0; i < p.degree(); ++i) acc *= l;
            return res * acc;
        }
        UniPoly r = p.divmod(q).second;
        if (r.is_zero()) return Rat(0);
        // res(p, q) = (-1)^{deg p * deg q} res(q, p)
        //           and res(q, r') adjusting lc(q)^{deg p - deg r}
        int dp = p.degree(), dq = q.degree(), dr = r.degree();
        Rat l = q.lc();
        Rat acc = 1;
        for (int i = 0; i < dp - dr; ++i) acc *= l;
        Rat sign = ((dp % 2) && (dq % 2)) ? Rat(-1) : Rat(1);
        res *= sign * acc;
        p = q;
        q = r;
    }
}

Rat poly_discriminant(const UniPoly& f) {
    if (f.degree() < 1) throw DegenerateInput("discriminant of constant");
    int d = f.degree();
    Rat r = resultant(f, f.derivative());
    Rat sign = ((Int(d) * (d - 1) / 2) % 2 != 0) ? Rat(-1) : Rat(1);
    return sign * r / f.lc();
}

namespace {

int sign_at(const UniPoly& p, const std::optional<Rat>& x, bool minus_inf) {
    if (p.is_zero()) return 0;
    if (!x) {
        int s = sgn(p.lc());
        if (minus_inf && p.degree() % 2 != 0) s = -s;
        return s;
    }
    return sgn(p.eval(*x));
}

int sign_changes(const std::vector<UniPoly>& chain, const std::optional<Rat>& x, bool minus_inf) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x, minus_inf);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

int sturm_count(const UniPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (p.is_zero()) throw DegenerateInput("sturm_count of zero polynomial");
    UniPoly f = squarefree_part(p);
    if (f.degree() == 0) return 0;
    std::vector<UniPoly> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return sign_changes(chain, lo, true) - sign_changes(chain, hi, false);
}

Rat root_bound(const UniPoly& p) {
    if (p.degree() < 1) return Rat(1);
    Rat m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rat a = p.coeff(i) / p.lc();
        if (a < 0) a = -a;
        if (a > m) m = a;
    }
    return m + 1;
}

UniPoly parse_poly(std::string_view s) {
    std::vector<Rat> c;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        auto piece = s.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
        // trim spaces
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        if (piece.empty()) throw ParseError("empty coefficient in polynomial literal");
        c.push_back(parse_rat(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return UniPoly(std::move(c));
}

std::string poly_csv(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) out += ",";
        out += rat_str(p.coeff(i));
    }
    return out;
}

std::vector<Int> integer_coeffs(const UniPoly& p) {
    if (!p.is_integer()) throw DegenerateInput("polynomial is not integral: " + p.str());
    std::vector<Int> out;
    out.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) out.push_back(num(p.coeff(i)));
    return out;
}

UniPoly poly_from_int_coeffs(const std::vector<Int>& c) {
    std::vector<Rat> r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = Rat(c[i]);
    return UniPoly(std::move(r));
}

} // namespace salemlat
