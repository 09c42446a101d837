#include "rtp/nondeg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rtp {

namespace {

// Extended gcd: returns g = gcd(a, b) >= 0 with p*a + q*b = g.
std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& p, std::int64_t& q) {
    if (b == 0) {
        p = (a < 0) ? -1 : 1;
        q = 0;
        return std::abs(a);
    }
    std::int64_t p1, q1;
    std::int64_t g = egcd(b, a % b, p1, q1);
    p = q1;
    q = p1 - (a / b) * q1;
    return g;
}

// Integer k with v == k * n, for v parallel to primitive n.
std::int64_t parallel_ratio(const LatVec& v, const LatVec& n) {
    for (int i = 0; i < 3; ++i)
        if (n[i] != 0) {
            if (v[i] % n[i] != 0 || n * (v[i] / n[i]) != v)
                throw Error("parallel_ratio: not an integral multiple");
            return v[i] / n[i];
        }
    throw ZeroVector();
}

Rat rat_pow(const Rat& base, std::int64_t e) {
    Rat r = 1;
    Rat b = e >= 0 ? base : Rat(1) / base;
    for (std::int64_t i = 0; i < std::abs(e); ++i) r *= b;
    return r;
}

bool is_monomial(const MultiPoly& p) { return p.terms().size() == 1; }

// Divide out the monomial content (per-variable minimum exponent).
MultiPoly strip_monomial(const MultiPoly& p) {
    if (p.is_zero()) return p;
    std::array<int, kMaxVars> mins;
    mins.fill(-1);
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < kMaxVars; ++i)
            mins[static_cast<std::size_t>(i)] =
                (mins[static_cast<std::size_t>(i)] < 0)
                    ? m[i]
                    : std::min(mins[static_cast<std::size_t>(i)], m[i]);
    MultiPoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r[i] = m[i] - mins[static_cast<std::size_t>(i)];
        out.add_term(r, c);
    }
    return out;
}

FaceFunction face_function_of(const MultiPoly& p, const Face& face) {
    if (!face.compact) throw NonCompactFace();
    FaceFunction ff;
    ff.face = face;
    ff.poly = MultiPoly(3);
    for (const auto& [m, c] : p.terms()) {
        LatVec v{m[0], m[1], m[2]};
        if (std::binary_search(face.points.begin(), face.points.end(), v))
            ff.poly.add_term(m, c);
    }
    if (ff.poly.is_zero()) throw ZeroPolynomial("face function");
    return ff;
}

}  // namespace

FaceFunction face_function(const MultiPoly& p, const LatVec& u) {
    NewtonPolyhedron np = newton_polyhedron(p);
    return face_function_of(p, face_of(np, u));
}

FaceFunction reduce_to_essential(FaceFunction ff) {
    const std::vector<LatVec>& pts = ff.face.points;
    const LatVec v0 = pts.front();
    std::vector<LatVec> dirs;
    for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(pts[i] - v0);

    LatVec dir1{0, 0, 0};
    for (const LatVec& d : dirs)
        if (!d.is_zero()) {
            dir1 = d;
            break;
        }
    LatVec normal{0, 0, 0};
    if (!dir1.is_zero())
        for (const LatVec& d : dirs) {
            LatVec c = cross(dir1, d);
            if (!c.is_zero()) {
                normal = primitive(c);
                break;
            }
        }

    if (dir1.is_zero()) {
        ff.essential_dim = 0;
        ff.reduced = MultiPoly::constant(ff.poly.terms().begin()->second, 2);
        ff.base = v0;
        return ff;
    }
    if (normal.is_zero()) {
        ff.essential_dim = 1;
        ff.b1 = primitive(dir1);
        std::int64_t lmin = 0;
        for (const LatVec& p : pts) lmin = std::min(lmin, parallel_ratio(p - v0, ff.b1));
        ff.reduced = MultiPoly(2);
        for (const auto& [m, c] : ff.poly.terms()) {
            LatVec v{m[0], m[1], m[2]};
            std::int64_t lam = parallel_ratio(v - v0, ff.b1);
            ff.reduced.add_term(Mono(static_cast<int>(lam - lmin), 0, 0), c);
        }
        ff.base = v0 + ff.b1 * lmin;
        return ff;
    }

    ff.essential_dim = 2;
    auto [b1, b2] = plane_basis(normal);
    ff.b1 = b1;
    ff.b2 = b2;
    std::int64_t lmin = 0, mmin = 0;
    for (const LatVec& p : pts) {
        LatVec d = p - v0;
        lmin = std::min(lmin, parallel_ratio(cross(d, b2), normal));
        mmin = std::min(mmin, parallel_ratio(cross(b1, d), normal));
    }
    ff.reduced = MultiPoly(2);
    for (const auto& [m, c] : ff.poly.terms()) {
        LatVec d = LatVec{m[0], m[1], m[2]} - v0;
        std::int64_t lam = parallel_ratio(cross(d, b2), normal);
        std::int64_t mu = parallel_ratio(cross(b1, d), normal);
        ff.reduced.add_term(Mono(static_cast<int>(lam - lmin),
                                 static_cast<int>(mu - mmin), 0), c);
    }
    ff.base = v0 + ff.b1 * lmin + ff.b2 * mmin;
    return ff;
}

namespace {

// Exact check that a torus point is a singular point of In_u.
bool verify_witness(const MultiPoly& in_u, const std::array<Rat, 3>& pt) {
    for (const Rat& c : pt)
        if (c == 0) return false;
    std::vector<Rat> v{pt[0], pt[1], pt[2]};
    if (evaluate(in_u, v) != 0) return false;
    for (int i = 0; i < 3; ++i)
        if (evaluate(partial(in_u, i), v) != 0) return false;
    return true;
}

const std::array<Rat, 6> kWitnessValues = {Rat(1), Rat(-1), Rat(2), Rat(-2),
                                           Rat(1, 2), Rat(-1, 2)};

std::optional<std::array<Rat, 3>> lift_witness(const FaceFunction& ff, const Rat& s0,
                                               const Rat& t0) {
    LatVec n = cross(ff.b1, ff.b2);  // primitive by construction
    // Complete (b1, b2) to a unimodular basis: b3 with <n, b3> = 1.
    std::int64_t p0, q0, p1, r1;
    std::int64_t g1 = egcd(n[0], n[1], p0, q0);
    std::int64_t g = egcd(g1, n[2], p1, r1);
    if (g != 1) return std::nullopt;
    LatVec b3{p1 * p0, p1 * q0, r1};
    if (dot(n, b3) != 1) return std::nullopt;
    LatVec alpha = cross(ff.b2, b3);
    LatVec beta = cross(b3, ff.b1);
    std::array<Rat, 3> w;
    for (int i = 0; i < 3; ++i) w[static_cast<std::size_t>(i)] = rat_pow(s0, alpha[i]) * rat_pow(t0, beta[i]);
    if (!verify_witness(ff.poly, w)) return std::nullopt;
    return w;
}

// Coefficients of p reduced mod a prime; nullopt when a denominator vanishes.
std::optional<std::vector<std::pair<Mono, std::int64_t>>> reduce_mod(const MultiPoly& p,
                                                                     std::int64_t pr) {
    auto inv_mod = [&](std::int64_t a) {
        std::int64_t x, y;
        egcd(((a % pr) + pr) % pr, pr, x, y);
        return ((x % pr) + pr) % pr;
    };
    std::vector<std::pair<Mono, std::int64_t>> out;
    for (const auto& [m, c] : p.terms()) {
        Int num = boost::multiprecision::numerator(c);
        Int den = boost::multiprecision::denominator(c);
        Int dm = den % pr;
        if (dm == 0) return std::nullopt;
        Int nm = ((num % pr) + pr) % pr;
        std::int64_t v = (nm * inv_mod(dm.convert_to<std::int64_t>())).convert_to<std::int64_t>() % pr;
        out.emplace_back(m, v);
    }
    return out;
}

std::int64_t eval_mod(const std::vector<std::pair<Mono, std::int64_t>>& terms,
                      std::int64_t s, std::int64_t t, std::int64_t pr) {
    auto pw = [&](std::int64_t b, int e) {
        std::int64_t r = 1;
        for (int i = 0; i < e; ++i) r = r * b % pr;
        return r;
    };
    std::int64_t acc = 0;
    for (const auto& [m, c] : terms) acc = (acc + c * pw(s, m[0]) % pr * pw(t, m[1])) % pr;
    return acc;
}

NondegVerdict check_two_face(const FaceFunction& ff) {
    const MultiPoly& h = ff.reduced;
    // Monomial factors never vanish on the torus; dropping them keeps the
    // resultants nonzero when the partials share only a monomial.
    MultiPoly hs = strip_monomial(partial(h, 0)), ht = strip_monomial(partial(h, 1));

    MultiPoly g3 = gcd_poly(gcd_poly(h, hs), ht);
    if (!g3.is_constant() && !is_monomial(g3))
        return {Verdict::Degenerate, "common factor " + render(g3), std::nullopt};

    // Eliminate t pairwise; a constant gcd of the stripped resultants rules
    // out any common torus zero.
    std::vector<MultiPoly> res;
    bool elimination_ok = true;
    const std::array<std::pair<const MultiPoly*, const MultiPoly*>, 3> pairs = {
        std::pair{&h, &hs}, {&h, &ht}, {&hs, &ht}};
    for (auto [a, b] : pairs) {
        if (a->is_zero() || b->is_zero()) continue;
        MultiPoly r = resultant(*a, *b, 1);
        if (r.is_zero()) {
            elimination_ok = false;
            break;
        }
        res.push_back(strip_monomial(r));
    }
    if (elimination_ok && !res.empty()) {
        MultiPoly g = res.front();
        for (std::size_t i = 1; i < res.size(); ++i) g = gcd_poly(g, res[i]);
        if (g.is_constant() && !g.is_zero()) {
            std::ostringstream os;
            os << "resultant certificate: gcd of eliminants = " << render(g);
            return {Verdict::Nondegenerate, os.str(), std::nullopt};
        }
    }

    for (const Rat& s0 : kWitnessValues)
        for (const Rat& t0 : kWitnessValues) {
            std::vector<Rat> pt{s0, t0};
            if (evaluate(h, pt) != 0 || evaluate(hs, pt) != 0 || evaluate(ht, pt) != 0)
                continue;
            if (auto w = lift_witness(ff, s0, t0))
                return {Verdict::Degenerate, "singular torus point", *w};
        }

    // Mod-p evidence only; never a certificate.
    bool all_primes_hit = true;
    std::ostringstream ev;
    for (std::int64_t pr : {std::int64_t{11}, std::int64_t{31}, std::int64_t{101}}) {
        auto mh = reduce_mod(h, pr), mhs = reduce_mod(hs, pr), mht = reduce_mod(ht, pr);
        if (!mh || !mhs || !mht) continue;
        bool hit = false;
        for (std::int64_t s = 1; s < pr && !hit; ++s)
            for (std::int64_t t = 1; t < pr && !hit; ++t)
                if (eval_mod(*mh, s, t, pr) == 0 && eval_mod(*mhs, s, t, pr) == 0 &&
                    eval_mod(*mht, s, t, pr) == 0) {
                    hit = true;
                    ev << " p=" << pr << ":(" << s << "," << t << ")";
                }
        if (!hit) all_primes_hit = false;
    }
    if (all_primes_hit && !ev.str().empty())
        return {Verdict::Unknown, "mod-p singular points:" + ev.str(), std::nullopt};
    return {Verdict::Unknown, "inconclusive", std::nullopt};
}

}  // namespace

NondegVerdict check_face(const FaceFunction& in) {
    FaceFunction ff = (in.essential_dim < 0) ? reduce_to_essential(in) : in;
    switch (ff.essential_dim) {
        case 0:
            return {Verdict::Nondegenerate, "vertex monomial", std::nullopt};
        case 1: {
            MultiPoly g = gcd_poly(ff.reduced, partial(ff.reduced, 0));
            if (g.is_constant())
                return {Verdict::Nondegenerate, "squarefree edge polynomial", std::nullopt};
            return {Verdict::Degenerate, "common factor " + render(g), std::nullopt};
        }
        default:
            return check_two_face(ff);
    }
}

NondegVerdict check_newton_nondegenerate(const MultiPoly& p) {
    NewtonPolyhedron np = newton_polyhedron(p);
    bool any_unknown = false;
    NondegVerdict unknown_verdict;
    for (const Face* f : np.compact_faces()) {
        NondegVerdict v = check_face(face_function_of(p, *f));
        if (v.kind == Verdict::Degenerate) return v;
        if (v.kind == Verdict::Unknown && !any_unknown) {
            any_unknown = true;
            unknown_verdict = v;
        }
    }
    if (any_unknown) return unknown_verdict;
    return {Verdict::Nondegenerate, "all compact faces certified", std::nullopt};
}

std::string verdict_to_json(const NondegVerdict& v) {
    nlohmann::json j;
    switch (v.kind) {
        case Verdict::Nondegenerate: j["verdict"] = "Nondegenerate"; break;
        case Verdict::Degenerate: j["verdict"] = "Degenerate"; break;
        case Verdict::Unknown: j["verdict"] = "Unknown"; break;
    }
    j["detail"] = v.detail;
    if (v.witness) {
        j["witness"] = nlohmann::json::array();
        for (const Rat& c : *v.witness) {
            std::ostringstream os;
            os << c;
            j["witness"].push_back(os.str());
        }
    }
    return j.dump(2);
}

}  // namespace rtp
