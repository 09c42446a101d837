#include "rtp/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "rtp/nondeg.hpp"
#include "rtp/okagraph.hpp"

namespace rtp {

namespace {

MultiPoly var3(int i) { return MultiPoly::variable(i, 3); }
MultiPoly con3(std::int64_t c) { return MultiPoly::constant(Rat(c), 3); }
MultiPoly xpow(std::int64_t e) {
    return MultiPoly::monomial(Mono(static_cast<int>(e), 0, 0), 1, 3);
}
MultiPoly ypow(std::int64_t e) {
    return MultiPoly::monomial(Mono(0, static_cast<int>(e), 0), 1, 3);
}

MultiPoly var4(int i) { return MultiPoly::variable(i, 4); }
MultiPoly mono4(std::int64_t ex, std::int64_t ey, const Rat& c = 1) {
    return MultiPoly::monomial(Mono(static_cast<int>(ex), static_cast<int>(ey), 0, 0), c, 4);
}

// m = 2l or 2l-1.
std::int64_t b_ell(const RtpFamily& fam) { return (fam.m + 1) / 2; }

void validate(const RtpFamily& fam) {
    using K = RtpFamily::Kind;
    auto range = [&](bool ok, const std::string& what) {
        if (!ok) throw ParameterOutOfRange(fam.name() + ": " + what);
    };
    switch (fam.kind) {
        case K::A:
            range(fam.k >= 2 && fam.l >= 2 && fam.m >= 2, "k, l, m must be >= 2");
            if (!(fam.k >= fam.l && fam.l >= fam.m) && !(fam.k == fam.l && fam.l < fam.m))
                throw AmbiguousBranch(fam.name() +
                                      ": parameters fit neither k >= l >= m nor k = l < m");
            break;
        case K::B:
            range(fam.k >= 2 && fam.m >= 2, "k, m must be >= 2");
            range(b_ell(fam) <= fam.k + 1, "requires l <= k+1");
            break;
        case K::C:
            range(fam.k >= 2 && fam.l >= 2, "k, l must be >= 2");
            break;
        case K::D:
        case K::F:
            range(fam.k >= 2, "k must be >= 2");
            break;
        case K::H:
            // The three branches n = 3k-1, 3k, 3k+1 all need k >= 1.
            range(fam.n >= 2, "n must be >= 2");
            break;
        default:
            break;
    }
}

}  // namespace

std::string RtpFamily::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::A: os << "A(" << k << "," << l << "," << m << ")"; break;
        case Kind::B: os << "B(" << k << "," << m << ")"; break;
        case Kind::C: os << "C(" << k << "," << l << ")"; break;
        case Kind::D: os << "D(" << k << ")"; break;
        case Kind::E60: os << "E60"; break;
        case Kind::E07: os << "E07"; break;
        case Kind::E70: os << "E70"; break;
        case Kind::F: os << "F(" << k << ")"; break;
        case Kind::H: os << "H(" << n << ")"; break;
    }
    return os.str();
}

RtpFamily parse_family(const std::string& selector) {
    std::string head = selector, args;
    if (auto colon = selector.find(':'); colon != std::string::npos) {
        head = selector.substr(0, colon);
        args = selector.substr(colon + 1);
    }
    std::vector<std::int64_t> params;
    std::istringstream is(args);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            params.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw ParameterOutOfRange("bad parameter '" + tok + "' in '" + selector + "'");
        }
    }
    RtpFamily fam{};
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw ParameterOutOfRange("selector '" + selector + "' expects " +
                                      std::to_string(n) + " parameter(s)");
    };
    using K = RtpFamily::Kind;
    if (head == "A") {
        fam.kind = K::A;
        need(3);
        fam.k = params[0];
        fam.l = params[1];
        fam.m = params[2];
    } else if (head == "B") {
        fam.kind = K::B;
        need(2);
        fam.k = params[0];
        fam.m = params[1];
    } else if (head == "C") {
        fam.kind = K::C;
        need(2);
        fam.k = params[0];
        fam.l = params[1];
    } else if (head == "D") {
        fam.kind = K::D;
        need(1);
        fam.k = params[0];
    } else if (head == "E60") {
        fam.kind = K::E60;
        need(0);
    } else if (head == "E07") {
        fam.kind = K::E07;
        need(0);
    } else if (head == "E70") {
        fam.kind = K::E70;
        need(0);
    } else if (head == "F") {
        fam.kind = K::F;
        need(1);
        fam.k = params[0];
    } else if (head == "H") {
        fam.kind = K::H;
        need(1);
        fam.n = params[0];
    } else {
        throw ParameterOutOfRange("unknown family '" + head + "'");
    }
    validate(fam);
    return fam;
}

MultiPoly nonisolated_form(const RtpFamily& fam) {
    validate(fam);
    using K = RtpFamily::Kind;
    const MultiPoly x = var3(0), y = var3(1), z = var3(2);
    const MultiPoly z2 = z * z, z3 = z * z * z;
    switch (fam.kind) {
        case K::A: {
            std::int64_t k = fam.k, l = fam.l, m = fam.m;
            if (k >= l && l >= m)
                return z3 + x * z2 - (x + ypow(k) + ypow(l) + ypow(m)) * ypow(k) * z +
                       ypow(2 * k + l);
            return z3 + (x - ypow(k)) * z2 - (x + ypow(k) + ypow(m)) * ypow(k) * z +
                   ypow(2 * k + m);
        }
        case K::B: {
            std::int64_t k = fam.k, l = b_ell(fam);
            if (fam.m % 2 == 0)
                return z3 + x * z2 - (ypow(k + 1) + ypow(l)) * ypow(k) * z - x * ypow(2 * k + 1);
            return z3 + (x - ypow(l - 1)) * z2 - ypow(2 * k + 1) * z - x * ypow(2 * k + 1);
        }
        case K::C: {
            std::int64_t k = fam.k, l = fam.l;
            return z3 + x * z2 - con3(l) * xpow(l - 1) * ypow(2 * k) * z -
                   (xpow(l) + y * y) * ypow(2 * k);
        }
        case K::D: {
            std::int64_t k = fam.k;
            return z3 + (x + ypow(2 * k)) * z2 + (con3(2) * x * ypow(k) - y * y) * ypow(k) * z +
                   x * x * ypow(2 * k);
        }
        case K::E60:
            return z3 + y * y * y * z + x * x * y * y;
        case K::E07:
            return z3 + ypow(5) + x * x * y * y;
        case K::E70:
            return z3 + x * x * y * z + ypow(4);
        case K::F: {
            std::int64_t k = fam.k;
            return z3 + (x + ypow(2 * k)) * z2 + con3(2) * x * ypow(2 * k) * z +
                   (x * x + ypow(3)) * ypow(2 * k);
        }
        case K::H: {
            std::int64_t n = fam.n;
            if (n % 3 == 2) {  // n = 3k-1
                std::int64_t k = (n + 1) / 3;
                return z3 + x * x * y * (x + ypow(k - 1));
            }
            if (n % 3 == 0) {  // n = 3k
                std::int64_t k = n / 3;
                return z3 + x * ypow(k) * z + x * x * x * y;
            }
            std::int64_t k = (n - 1) / 3;  // n = 3k+1
            return z3 + x * ypow(k + 1) * z + x * x * x * y * y;
        }
    }
    throw Error("unreachable");
}

std::array<MultiPoly, 3> miranda_minors(const MirandaData& md) {
    auto lift = [](const MultiPoly& p) {
        MultiPoly q(4);
        for (const auto& [m, c] : p.terms()) q.add_term(m, c);
        return q;
    };
    MultiPoly a = lift(md.a), b = lift(md.b), c = lift(md.c), d = lift(md.d);
    if (b.is_zero() || c.is_zero()) throw ZeroBorC();
    const MultiPoly z = var4(2), w = var4(3);
    const MultiPoly two = MultiPoly::constant(2, 4);
    MultiPoly F = z * z - two * (a * a - b * d) - a * z - b * w;
    MultiPoly G = z * w + (a * d - b * c) + d * z + a * w;
    MultiPoly H = w * w - two * (d * d - a * c) - c * z - d * w;
    return {F, G, H};
}

namespace {

PolyMatrix2x3 make_matrix(std::array<MultiPoly, 6> rows) {
    PolyMatrix2x3 m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) m.at(r, c) = rows[static_cast<std::size_t>(3 * r + c)];
    return m;
}

// Matrix (5) shape: (1,1) = z, (2,3) = w + f(x,y), (2,2) = z + f(x,y),
// (1,2) = w + f(x,y), corners in (x,y) only with b, c nonzero.
void check_miranda_shape(const PolyMatrix2x3& m) {
    auto xy_only = [](const MultiPoly& p) {
        for (const auto& [mo, c] : p.terms())
            if (mo[2] != 0 || mo[3] != 0) return false;
        return true;
    };
    const MultiPoly z = var4(2), w = var4(3);
    if (!(m.at(0, 0) == z) || !xy_only(m.at(0, 1) - w) || !xy_only(m.at(1, 1) - z) ||
        !xy_only(m.at(1, 2) - w) || !xy_only(m.at(0, 2)) || !xy_only(m.at(1, 0)))
        throw Error("matrix is not in Miranda form");
    if (m.at(1, 0).is_zero() || m.at(0, 2).is_zero()) throw ZeroBorC();
}

}  // namespace

FamilyMatrices family_matrices(const RtpFamily& fam) {
    validate(fam);
    using K = RtpFamily::Kind;
    const MultiPoly x = var4(0), y = var4(1), z = var4(2), w = var4(3);
    FamilyMatrices out;
    switch (fam.kind) {
        case K::A: {
            std::int64_t k = fam.k, l = fam.l, m = fam.m;
            // The corner exponent is the one showing up in the constant term
            // of the nonisolated form: l on the k >= l >= m branch, m on the
            // k = l < m branch.
            std::int64_t c = (k >= l && l >= m) ? l : m;
            std::int64_t d = (c == l) ? m : l;
            out.tjurina = make_matrix({z, w, mono4(0, c), mono4(0, k), w + mono4(0, d), x});
            out.miranda = make_matrix({z, w - (x + mono4(0, l) + mono4(0, m)), mono4(0, c),
                                       mono4(0, k, -1), z - x + mono4(0, k), w});
            break;
        }
        case K::B: {
            std::int64_t k = fam.k, l = b_ell(fam);
            if (fam.m % 2 == 0) {
                out.tjurina = make_matrix({z, w + mono4(0, l), x * y, mono4(0, k), x, w});
                out.miranda = make_matrix({z, w + mono4(0, l), x * y, mono4(0, k), z + x,
                                           w - mono4(0, k + 1)});
            } else {
                out.tjurina = make_matrix({z, w, x * y + mono4(0, l), mono4(0, k), x, w});
                out.miranda = make_matrix({z, w, x * y, mono4(0, k), z + x - mono4(0, l - 1),
                                           w - mono4(0, k + 1)});
            }
            break;
        }
        case K::C: {
            std::int64_t k = fam.k, l = fam.l;
            MultiPoly xl = mono4(l, 0) + y * y;
            out.tjurina = make_matrix({z, w, xl, mono4(0, k), x, w});
            std::int64_t binom = l * (l - 1) * (l - 2) / 6;
            MultiPoly unit = mono4(0, k);
            if (binom != 0 && l >= 3) unit = unit - mono4(l - 3, 3 * k, binom);
            out.miranda = make_matrix(
                {z, w + mono4(l - 1, k, l), xl, unit, z + x, w});
            break;
        }
        case K::D: {
            std::int64_t k = fam.k;
            out.tjurina = make_matrix({z, w + y * y, x * x, mono4(0, k), x, w});
            out.miranda = make_matrix({z, w + y * y + mono4(1, k, 2), x * x, mono4(0, k),
                                       z + x - mono4(0, 2 * k), w});
            break;
        }
        case K::E60:
            out.tjurina = make_matrix({z, w, x * x, y, z, w + y * y});
            out.miranda = make_matrix({z, w - y * y, x * x, y, z, w});
            break;
        case K::E07:
            out.tjurina = make_matrix({z, w, x * x + y * y * y, y, z, w});
            out.miranda = out.tjurina;
            break;
        case K::E70:
            out.tjurina = make_matrix({z, w, y * y, y, z, w + x * x});
            out.miranda = make_matrix({z, w - x * x, y * y, y, z, w});
            break;
        case K::F: {
            std::int64_t k = fam.k;
            MultiPoly c = x * x + y * y * y;
            out.tjurina = make_matrix({z, w, c, mono4(0, k), x, w});
            out.miranda = make_matrix({z, w + mono4(1, k, 2), c, mono4(0, k),
                                       z + x - mono4(0, 2 * k), w});
            break;
        }
        case K::H: {
            std::int64_t n = fam.n;
            if (n % 3 == 2) {  // n = 3k-1
                std::int64_t k = (n + 1) / 3;
                out.tjurina = make_matrix({z, w, x * y + mono4(0, k), x, z, w});
                out.miranda = out.tjurina;
            } else if (n % 3 == 0) {  // n = 3k
                std::int64_t k = n / 3;
                out.tjurina = make_matrix({z, w, x * y, x, z, w + mono4(0, k)});
                out.miranda = make_matrix({z, w - mono4(0, k), x * y, x, z, w});
            } else {  // n = 3k+1
                std::int64_t k = (n - 1) / 3;
                out.tjurina = make_matrix({z, w + mono4(0, k), x, x * y, z, w});
                out.miranda = out.tjurina;
            }
            break;
        }
    }
    check_miranda_shape(out.miranda);
    return out;
}

namespace {

MultiPoly strip_monomial_content(const MultiPoly& p) {
    if (p.is_zero()) return p;
    std::array<int, kMaxVars> mins;
    mins.fill(-1);
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < kMaxVars; ++i) {
            int& mn = mins[static_cast<std::size_t>(i)];
            mn = (mn < 0) ? m[i] : std::min(mn, m[i]);
        }
    MultiPoly out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Mono r;
        for (int i = 0; i < kMaxVars; ++i) r[i] = m[i] - mins[static_cast<std::size_t>(i)];
        out.add_term(r, c);
    }
    return out;
}

}  // namespace

ProjectionVerdict verify_projection(const RtpFamily& fam) {
    PolyMatrix2x3 m = family_matrices(fam).miranda;
    if (fam.kind == RtpFamily::Kind::A && fam.k >= fam.l && fam.l >= fam.m) {
        // The A-family form needs an extra shift of x by y^k before
        // projecting (x -> x - y^k in the sign-normalized coordinates).
        std::map<int, MultiPoly> repl{{0, var4(0) + mono4(0, fam.k)}};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = substitute(m.at(r, c), repl);
    }
    auto minors = minors2x2(m);
    MultiPoly r1 = resultant(minors[0], minors[1], 3);
    MultiPoly r2 = resultant(minors[0], minors[2], 3);
    MultiPoly g = normalize_primitive(strip_monomial_content(gcd_poly(r1, r2)));

    MultiPoly target(4);
    for (const auto& [mo, c] : nonisolated_form(fam).terms()) target.add_term(mo, c);
    target = normalize_primitive(target);

    ProjectionVerdict verdict;
    verdict.eliminated = render(g);
    verdict.target = render(target);
    // The projection is generic only up to a linear change of the target
    // coordinates; signs of x, y, z are not pinned down.
    for (int signs = 0; signs < 8 && !verdict.match; ++signs) {
        std::map<int, MultiPoly> flip;
        for (int i = 0; i < 3; ++i)
            if (signs & (1 << i)) flip[i] = -var4(i);
        MultiPoly p = flip.empty() ? g : substitute(g, flip);
        int divisions = 0;
        while (true) {
            auto q = try_divide(p, target);
            if (!q) break;
            p = strip_monomial_content(*q);
            ++divisions;
        }
        verdict.match = divisions >= 1 && p.is_constant();
    }
    return verdict;
}

int expected_blowdowns(const RtpFamily& fam) {
    validate(fam);
    using K = RtpFamily::Kind;
    switch (fam.kind) {
        case K::A:
            if (fam.k >= fam.l && fam.l >= fam.m) return (fam.k - fam.m) % 2 != 0 ? 1 : 0;
            return 0;
        case K::B:
            // Even m: one contraction exactly when k and l have opposite
            // parity.  Odd m: a cascade of k-l+1 contractions.
            if (fam.m % 2 == 0)
                return b_ell(fam) <= fam.k && (fam.k + b_ell(fam)) % 2 != 0 ? 1 : 0;
            return static_cast<int>(fam.k - b_ell(fam) + 1);
        case K::C:
            return fam.k % 3 == 2 ? 0 : 2;
        case K::D:
            return fam.k % 2 != 0 ? 1 : 0;
        case K::F:
            // k = 2 contracts once; larger k not divisible by 3 cascades to
            // a second contraction.
            if (fam.k % 3 == 0) return 0;
            return fam.k == 2 ? 1 : 2;
        default:
            return 0;
    }
}

FamilyReport verify_family(const RtpFamily& fam) {
    FamilyReport rep;
    try {
        MultiPoly f = nonisolated_form(fam);
        ResolutionGraph resolved = oka_resolve(f);
        BlowDownResult bd = blow_down(resolved);
        rep.blowdowns = bd.contractions;
        rep.rational = is_rational(bd.graph);
        rep.mult = rep.rational ? multiplicity(bd.graph) : Int(0);
        rep.nondegenerate = check_newton_nondegenerate(f).kind == Verdict::Nondegenerate;
        rep.graph_match = tree_isomorphic(bd.graph, expected_graph(fam));
        bool count_ok = rep.blowdowns == expected_blowdowns(fam);
        rep.passed = rep.rational && rep.mult == 3 && rep.nondegenerate && rep.graph_match &&
                     count_ok;
        std::ostringstream os;
        os << fam.name() << ": " << (rep.passed ? "pass" : "FAIL") << " (blowdowns "
           << rep.blowdowns << ", mult " << rep.mult << ")";
        if (!count_ok) os << " [expected " << expected_blowdowns(fam) << " blowdowns]";
        rep.message = os.str();
    } catch (const Error& e) {
        rep.passed = false;
        rep.message = fam.name() + ": error: " + e.what();
    }
    return rep;
}

std::vector<RtpFamily> family_sweep(std::int64_t max_param) {
    using K = RtpFamily::Kind;
    std::vector<RtpFamily> out;
    for (std::int64_t k = 2; k <= max_param; ++k)
        for (std::int64_t l = 2; l <= k; ++l)
            for (std::int64_t m = 2; m <= l; ++m)
                out.push_back({K::A, k, l, m, 0});
    for (std::int64_t k = 2; k <= max_param; ++k)
        for (std::int64_t m = k + 1; m <= max_param; ++m)
            out.push_back({K::A, k, k, m, 0});
    for (std::int64_t k = 2; k <= max_param; ++k)
        for (std::int64_t m = 2; m <= max_param; ++m)
            if ((m + 1) / 2 <= k + 1) out.push_back({K::B, k, 0, m, 0});
    for (std::int64_t k = 2; k <= max_param; ++k)
        for (std::int64_t l = 2; l <= max_param; ++l)
            out.push_back({K::C, k, l, 0, 0});
    for (std::int64_t k = 2; k <= max_param; ++k) out.push_back({K::D, k, 0, 0, 0});
    out.push_back({K::E60, 0, 0, 0, 0});
    out.push_back({K::E07, 0, 0, 0, 0});
    out.push_back({K::E70, 0, 0, 0, 0});
    for (std::int64_t k = 2; k <= max_param; ++k) out.push_back({K::F, k, 0, 0, 0});
    for (std::int64_t n = 2; n <= 2 * max_param - 2; ++n) out.push_back({K::H, 0, 0, 0, n});
    return out;
}

}  // namespace rtp
