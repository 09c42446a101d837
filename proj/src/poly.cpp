#include "rtp/poly.hpp"

#include <algorithm>
#include <sstream>

namespace rtp {

MultiPoly MultiPoly::constant(const Rat& c, int nvars) {
    MultiPoly p(nvars);
    p.add_term(Mono{}, c);
    return p;
}

MultiPoly MultiPoly::variable(int var, int nvars) {
    Mono m;
    m[var] = 1;
    return monomial(m, 1, nvars);
}

MultiPoly MultiPoly::monomial(const Mono& m, const Rat& c, int nvars) {
    MultiPoly p(nvars);
    p.add_term(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

Rat MultiPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Mono> MultiPoly::support() const {
    std::vector<Mono> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
}

const Mono& MultiPoly::leading_mono() const {
    if (terms_.empty()) throw ZeroPolynomial("leading_mono");
    return terms_.rbegin()->first;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw ZeroPolynomial("leading_coeff");
    return terms_.rbegin()->second;
}

int MultiPoly::total_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

MultiPoly MultiPoly::coeff_in(int var, int d) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == d) {
            Mono m2 = m;
            m2[var] = 0;
            r.add_term(m2, c);
        }
    }
    return r;
}

void MultiPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
    return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly r(nvars_);
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return terms_.size() == o.terms_.size() &&
           std::equal(terms_.begin(), terms_.end(), o.terms_.begin());
}

MultiPoly MultiPoly::pow(int n) const {
    MultiPoly r = constant(1, nvars_);
    MultiPoly base = *this;
    for (int k = n; k > 0; k >>= 1) {
        if (k & 1) r = r * base;
        if (k > 1) base = base * base;
    }
    return r;
}

MultiPoly partial(const MultiPoly& p, int var) {
    MultiPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Mono m2 = m;
        m2[var] -= 1;
        r.add_term(m2, c * m[var]);
    }
    return r;
}

MultiPoly substitute(const MultiPoly& p, const std::map<int, MultiPoly>& repl) {
    int nv = p.nvars();
    for (const auto& [v, q] : repl) nv = std::max(nv, q.nvars());
    // Cache powers of each substituted variable.
    std::map<int, std::vector<MultiPoly>> powers;
    MultiPoly result(nv);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(c, nv);
        for (int v = 0; v < kMaxVars; ++v) {
            if (m[v] == 0) continue;
            auto it = repl.find(v);
            if (it == repl.end()) {
                Mono mv;
                mv[v] = m[v];
                term = term * MultiPoly::monomial(mv, 1, nv);
            } else {
                auto& pw = powers[v];
                if (pw.empty()) pw.push_back(MultiPoly::constant(1, nv));
                while (static_cast<int>(pw.size()) <= m[v]) pw.push_back(pw.back() * it->second);
                term = term * pw[static_cast<std::size_t>(m[v])];
            }
        }
        result = result + term;
    }
    return result;
}

Rat evaluate(const MultiPoly& p, const std::vector<Rat>& point) {
    Rat sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Rat t = c;
        for (int v = 0; v < static_cast<int>(point.size()); ++v)
            for (int k = 0; k < m[v]; ++k) t *= point[static_cast<std::size_t>(v)];
        sum += t;
    }
    return sum;
}

std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) return std::nullopt;
    MultiPoly q(p.nvars());
    MultiPoly r = p;
    const Mono& dl = d.leading_mono();
    while (!r.is_zero()) {
        const Mono& rl = r.leading_mono();
        Mono diff;
        for (int i = 0; i < kMaxVars; ++i) {
            diff[i] = rl[i] - dl[i];
            if (diff[i] < 0) return std::nullopt;
        }
        Rat c = r.leading_coeff() / d.leading_coeff();
        MultiPoly t = MultiPoly::monomial(diff, c, p.nvars());
        q = q + t;
        r = r - t * d;
    }
    return q;
}

MultiPoly prem(const MultiPoly& a, const MultiPoly& b, int var) {
    int db = b.degree_in(var);
    if (db < 0) throw ZeroPolynomial("prem divisor");
    MultiPoly lb = b.coeff_in(var, db);
    MultiPoly r = a;
    int da = r.degree_in(var);
    if (da < db) return r;
    int steps = da - db + 1;
    while (!r.is_zero() && (da = r.degree_in(var)) >= db) {
        MultiPoly lr = r.coeff_in(var, da);
        Mono shift;
        shift[var] = da - db;
        r = r * lb - b * (lr * MultiPoly::monomial(shift, 1, a.nvars()));
        --steps;
    }
    // Keep the pseudo-remainder normalization lc(b)^(da-db+1) exact.
    for (; steps > 0; --steps) r = r * lb;
    return r;
}

namespace {

// Exact division that must succeed; failure indicates an internal error.
MultiPoly must_divide(const MultiPoly& p, const MultiPoly& d) {
    auto q = try_divide(p, d);
    if (!q) throw Error("internal: exact division failed");
    return *q;
}

// Rational content: every coefficient divided by it is a primitive integer.
Rat rational_content(const MultiPoly& p) {
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(c)));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    if (num_gcd == 0) return Rat(1);
    return Rat(num_gcd, den_lcm);
}

// Highest variable index occurring in p, or -1.
int top_var(const MultiPoly& p) {
    int v = -1;
    for (const auto& [m, c] : p.terms())
        for (int i = kMaxVars - 1; i > v; --i)
            if (m[i] > 0) v = i;
    return v;
}

// Content of p with respect to `var`: gcd of the coefficient polynomials.
MultiPoly content_in(const MultiPoly& p, int var) {
    MultiPoly c(p.nvars());
    for (int d = 0; d <= p.degree_in(var); ++d) {
        MultiPoly cd = p.coeff_in(var, d);
        if (!cd.is_zero()) c = gcd_poly(c, cd);
    }
    return c;
}

}  // namespace

MultiPoly normalize_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    Rat c = rational_content(p);
    if (p.leading_coeff() < 0) c = -c;
    return p * (Rat(1) / c);
}

MultiPoly gcd_poly(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero()) return normalize_primitive(q);
    if (q.is_zero()) return normalize_primitive(p);
    if (p.is_constant() || q.is_constant())
        return MultiPoly::constant(1, std::max(p.nvars(), q.nvars()));
    int var = std::max(top_var(p), top_var(q));
    MultiPoly cp = content_in(p, var);
    MultiPoly cq = content_in(q, var);
    MultiPoly cg = gcd_poly(cp, cq);
    MultiPoly a = must_divide(p, cp);
    MultiPoly b = must_divide(q, cq);
    if (a.degree_in(var) < 1 || b.degree_in(var) < 1) {
        // A primitive polynomial of degree 0 in the main variable is a unit.
        return normalize_primitive(cg);
    }
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    // Primitive PRS.
    while (true) {
        MultiPoly r = prem(a, b, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) < 1) return normalize_primitive(cg);
        r = must_divide(r, content_in(r, var));
        a = b;
        b = normalize_primitive(r);
    }
    return normalize_primitive(cg * must_divide(b, content_in(b, var)));
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
    if (p.is_zero() || q.is_zero()) throw ZeroPolynomial("resultant");
    int m = p.degree_in(var), n = q.degree_in(var);
    const int nv = std::max(p.nvars(), q.nvars());
    if (m == 0 && n == 0) return MultiPoly::constant(1, nv);
    if (m == 0) return p.pow(n);
    if (n == 0) return q.pow(m);
    if (m < n) {
        MultiPoly r = resultant(q, p, var);
        return ((m * n) % 2 != 0) ? -r : r;
    }
    // Subresultant PRS (Brown); tracks the exact Sylvester determinant sign.
    MultiPoly a = p, b = q;
    bool negate = false;
    MultiPoly g = MultiPoly::constant(1, nv);
    MultiPoly h = MultiPoly::constant(1, nv);
    while (true) {
        int da = a.degree_in(var), db = b.degree_in(var);
        int d = da - db;
        if ((da % 2 != 0) && (db % 2 != 0)) negate = !negate;
        MultiPoly r = prem(a, b, var);
        a = b;
        MultiPoly divisor = g * h.pow(d);
        b = must_divide(r, divisor);
        g = a.coeff_in(var, a.degree_in(var));
        // h = g^d * h^(1-d)
        if (d == 0) {
            // h unchanged
        } else if (d == 1) {
            h = g;
        } else {
            h = must_divide(g.pow(d), h.pow(d - 1));
        }
        if (b.is_zero()) return MultiPoly(nv);
        if (b.degree_in(var) == 0) {
            int s = a.degree_in(var);
            MultiPoly res;
            if (s == 1) {
                res = b;
            } else {
                res = must_divide(b.pow(s), h.pow(s - 1));
            }
            return negate ? -res : res;
        }
    }
}

std::array<MultiPoly, 3> minors2x2(const PolyMatrix2x3& m) {
    auto det = [&](int c1, int c2) {
        return m.at(0, c1) * m.at(1, c2) - m.at(0, c2) * m.at(1, c1);
    };
    return {det(0, 1), det(0, 2), det(1, 2)};
}

std::string render(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending graded lex.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Mono& m = it->first;
        Rat c = it->second;
        if (c < 0) {
            os << "-";
            c = -c;
        } else if (!first) {
            os << "+";
        }
        first = false;
        bool constant_mono = (m == Mono{});
        bool coeff_shown = (c != 1 || constant_mono);
        if (coeff_shown) {
            os << numerator(c);
            if (denominator(c) != 1) os << "/" << denominator(c);
        }
        bool any_var = false;
        for (int v = 0; v < kMaxVars; ++v) {
            if (m[v] == 0) continue;
            if (any_var) os << "*";
            any_var = true;
            os << kVarNames[v];
            if (m[v] > 1) os << "^" << m[v];
        }
        (void)coeff_shown;
    }
    return os.str();
}

}  // namespace rtp
