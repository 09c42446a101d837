#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rtp/errors.hpp"

namespace rtp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline constexpr int kMaxVars = 4;
inline constexpr char kVarNames[kMaxVars] = {'x', 'y', 'z', 'w'};

// Exponent vector over the fixed variable order (x, y, z, w).  Entries past
// the ambient variable count of the containing polynomial stay zero.
struct Mono {
    std::array<int, kMaxVars> e{0, 0, 0, 0};

    Mono() = default;
    Mono(int a, int b, int c) : e{a, b, c, 0} {}
    Mono(int a, int b, int c, int d) : e{a, b, c, d} {}

    int total_degree() const { return e[0] + e[1] + e[2] + e[3]; }

    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return e[static_cast<std::size_t>(i)]; }

    Mono operator+(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }

    bool operator==(const Mono& o) const { return e == o.e; }
};

// Graded lexicographic order with x < y < z < w: total degree first, then
// exponents compared from w down to x.
struct GradedLexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        for (int i = kMaxVars - 1; i >= 0; --i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

// Exact multivariate polynomial over the rationals.  Immutable by
// convention: every operation returns a fresh value.
class MultiPoly {
public:
    using TermMap = std::map<Mono, Rat, GradedLexLess>;

    explicit MultiPoly(int nvars = 3) : nvars_(nvars) {}

    static MultiPoly constant(const Rat& c, int nvars);
    static MultiPoly variable(int var, int nvars);
    static MultiPoly monomial(const Mono& m, const Rat& c, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    Rat coeff(const Mono& m) const;

    std::vector<Mono> support() const;

    // Leading term under graded lex; poly must be nonzero.
    const Mono& leading_mono() const;
    const Rat& leading_coeff() const;

    int total_degree() const;
    int degree_in(int var) const;  // -1 for the zero polynomial
    // Coefficient of var^d, as a polynomial with the same ambient variables.
    MultiPoly coeff_in(int var, int d) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    bool operator==(const MultiPoly& o) const;

    MultiPoly pow(int n) const;

    void add_term(const Mono& m, const Rat& c);

private:
    int nvars_;
    TermMap terms_;
};

// Formal partial derivative with respect to variable `var`.
MultiPoly partial(const MultiPoly& p, int var);

// Simultaneous substitution; variables absent from the map stay themselves.
MultiPoly substitute(const MultiPoly& p, const std::map<int, MultiPoly>& repl);

// Evaluation at a rational point.
Rat evaluate(const MultiPoly& p, const std::vector<Rat>& point);

// Exact division: q with p == q*d, if it exists.
std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& d);

// Pseudo-remainder of a by b viewed univariately in `var`:
// lc(b)^(da-db+1) * a = q*b + prem.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, int var);

// Primitive gcd with positive graded-lex leading coefficient; rational
// content stripped.  gcd(0, q) is q normalized the same way.
MultiPoly gcd_poly(const MultiPoly& p, const MultiPoly& q);

// Integer-primitive form of p with positive leading coefficient.
MultiPoly normalize_primitive(const MultiPoly& p);

// Classical resultant eliminating `var`; sign matches the Sylvester matrix
// with p's coefficient rows on top.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

struct PolyMatrix2x3 {
    std::array<std::array<MultiPoly, 3>, 2> entry;

    PolyMatrix2x3() : entry{{{MultiPoly(3), MultiPoly(3), MultiPoly(3)},
                             {MultiPoly(3), MultiPoly(3), MultiPoly(3)}}} {}

    const MultiPoly& at(int r, int c) const { return entry[r][c]; }
    MultiPoly& at(int r, int c) { return entry[r][c]; }
};

// The three 2x2 minors in column order (12, 13, 23), each
// top-left*bottom-right - top-right*bottom-left.
std::array<MultiPoly, 3> minors2x2(const PolyMatrix2x3& m);

// Canonical renderer: terms in descending graded lex, integer coefficients
// rendered per the input grammar, rational ones as a/b.
std::string render(const MultiPoly& p);

// Recursive-descent parser for the polynomial grammar; see render().
MultiPoly parse_poly(const std::string& text, int nvars);

}  // namespace rtp
