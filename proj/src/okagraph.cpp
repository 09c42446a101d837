#include "rtp/okagraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include <nlohmann/json.hpp>

namespace rtp {

namespace {

// Does sum lie in Z*u?  Returns the integer multiple if so.
std::optional<std::int64_t> multiple_of(const LatVec& sum, const LatVec& u) {
    int i = 0;
    while (i < 3 && u[i] == 0) ++i;
    if (i == 3) return std::nullopt;
    if (sum[i] % u[i] != 0) return std::nullopt;
    std::int64_t k = sum[i] / u[i];
    if (u * k == sum) return k;
    return std::nullopt;
}

std::int64_t solve_weight(const LatVec& u, const LatVec& sum) {
    auto w = multiple_of(sum, u);
    if (!w || *w < 1)
        throw NoIntegralWeight("no integral central weight at generator " + to_string(u) +
                               ": arm sum " + to_string(sum) + " is not a positive multiple");
    return *w;
}

}  // namespace

std::int64_t central_weight(const OkaVertexData& data) {
    LatVec sum{0, 0, 0};
    for (const OkaArm& arm : data.arms) sum = sum + arm.first * arm.copies;
    return solve_weight(data.u, sum);
}

std::vector<std::int64_t> multiplicity_coeffs(const LatVec& u,
                                              const std::vector<LatVec>& neighbors) {
    if (!u.strictly_positive()) throw Error("multiplicity_coeffs: u must be strictly positive");
    // Primitive images of the neighbors in the rank-2 quotient lattice Z^3/Zu,
    // coordinatized by a basis of the forms vanishing on u.
    auto [f1, f2] = plane_basis(u);
    std::size_t n = neighbors.size();
    std::vector<std::pair<std::int64_t, std::int64_t>> proj;
    for (const LatVec& v : neighbors) {
        std::int64_t a = dot(f1, v), b = dot(f2, v);
        if (a == 0 && b == 0) throw ParallelVectors();
        std::int64_t g = std::gcd(std::abs(a), std::abs(b));
        proj.emplace_back(a / g, b / g);
    }
    constexpr std::int64_t kMaxCoeff = 20;
    for (std::int64_t bound = 1; bound <= kMaxCoeff; ++bound) {
        std::vector<std::vector<std::int64_t>> sols;
        std::vector<std::int64_t> c(n, 1);
        while (true) {
            std::int64_t sa = 0, sb = 0;
            for (std::size_t j = 0; j < n; ++j) {
                sa += proj[j].first * c[j];
                sb += proj[j].second * c[j];
            }
            if (sa == 0 && sb == 0) sols.push_back(c);
            std::size_t k = 0;
            while (k < n && c[k] == bound) c[k++] = 1;
            if (k == n) break;
            ++c[k];
        }
        if (sols.empty()) continue;
        std::vector<std::int64_t> meet = sols.front();
        for (const auto& s : sols)
            for (std::size_t j = 0; j < n; ++j) meet[j] = std::min(meet[j], s[j]);
        for (const auto& s : sols)
            if (s == meet) return meet;
        // No componentwise minimum among the found relations; return the
        // smallest by total then lexicographic order.
        auto total = [](const std::vector<std::int64_t>& v) {
            std::int64_t t = 0;
            for (auto x : v) t += x;
            return t;
        };
        std::sort(sols.begin(), sols.end(),
                  [&](const auto& a, const auto& b) {
                      return std::pair(total(a), a) < std::pair(total(b), b);
                  });
        return sols.front();
    }
    throw NoPositiveRelation("no positive relation among the neighbors of " + to_string(u));
}

namespace {

// Shared fan-to-graph core.  cone_r supplies r-values per 2-cone when the
// fan came from a polynomial; without them, copy counts fall back to the
// minimal-relation coefficients (all ones when no relation exists, in which
// case the weight equation itself reports the obstruction).
ResolutionGraph build_graph(const std::vector<LatVec>& gens,
                            const std::vector<std::pair<int, int>>& cones,
                            const std::vector<std::int64_t>* cone_r,
                            const std::vector<std::int64_t>* gen_genus,
                            const std::function<std::int64_t(const LatVec&)>* vec_genus) {
    ResolutionGraph g;
    std::map<int, int> central;  // generator index -> vertex id
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].strictly_positive()) {
            std::int64_t genus = gen_genus ? (*gen_genus)[i] : 0;
            central[static_cast<int>(i)] = g.add_vertex(0, genus, to_string(gens[i]));
        }

    // A cone whose two generators are both on the boundary of the positive
    // octant may still have strictly positive subdivision vectors (this is
    // the case when the compact part of the polyhedron is one-dimensional).
    // Those vectors keep their subdivision weights and form a path; the
    // non-positive ends are dropped.
    bool degenerate_vertices = false;
    if (central.empty()) {
        for (const auto& [i, j] : cones) {
            const LatVec &a = gens[static_cast<std::size_t>(i)],
                         &b = gens[static_cast<std::size_t>(j)];
            if (a.strictly_positive() || b.strictly_positive()) continue;
            if (!(a + b).strictly_positive()) continue;
            SubdivisionChain chain = a < b ? regular_subdivide(a, b) : regular_subdivide(b, a);
            int prev = -1;
            for (std::size_t t = 1; t + 1 < chain.vectors.size(); ++t) {
                std::int64_t genus = vec_genus ? (*vec_genus)(chain.vectors[t]) : 0;
                int v = g.add_vertex(chain.weights[t - 1], genus, to_string(chain.vectors[t]));
                if (prev >= 0) g.add_edge(prev, v);
                prev = v;
                degenerate_vertices = true;
            }
        }
    }
    if (central.empty() && !degenerate_vertices) throw NoStrictlyPositiveGenerator();

    struct OrientedCone {
        int a, b;  // a strictly positive; lex-smaller when both are
        SubdivisionChain chain;
        std::int64_t copies = 1;
        bool b_positive = false;
    };
    std::vector<OrientedCone> oriented;
    std::vector<std::size_t> cone_of;  // original cone index per oriented entry
    for (std::size_t k = 0; k < cones.size(); ++k) {
        auto [i, j] = cones[k];
        bool pi = gens[static_cast<std::size_t>(i)].strictly_positive();
        bool pj = gens[static_cast<std::size_t>(j)].strictly_positive();
        if (!pi && !pj) continue;
        int a = i, b = j;
        if (pi && pj) {
            if (gens[static_cast<std::size_t>(j)] < gens[static_cast<std::size_t>(i)])
                std::swap(a, b);
        } else if (!pi) {
            std::swap(a, b);
        }
        OrientedCone oc;
        oc.a = a;
        oc.b = b;
        oc.chain = regular_subdivide(gens[static_cast<std::size_t>(a)],
                                     gens[static_cast<std::size_t>(b)]);
        oc.b_positive = gens[static_cast<std::size_t>(b)].strictly_positive();
        if (cone_r) oc.copies = (*cone_r)[k] + 1;
        oriented.push_back(std::move(oc));
        cone_of.push_back(k);
    }

    // Per-central arm data: the chain vector adjacent to u and the copy count.
    struct ArmRef {
        std::size_t cone;  // index into `oriented`
        LatVec first;
    };
    std::map<int, std::vector<ArmRef>> arms;
    for (std::size_t k = 0; k < oriented.size(); ++k) {
        const OrientedCone& oc = oriented[k];
        const auto& vecs = oc.chain.vectors;
        arms[oc.a].push_back({k, vecs[1]});
        if (oc.b_positive) arms[oc.b].push_back({k, vecs[vecs.size() - 2]});
    }

    // Without r-values, copy counts come from the minimal relation at each
    // strictly positive generator (falling back to ones).
    if (!cone_r) {
        for (auto& [gi, refs] : arms) {
            std::vector<LatVec> neighbors;
            for (const ArmRef& ar : refs) {
                const OrientedCone& oc = oriented[ar.cone];
                int other = (oc.a == gi) ? oc.b : oc.a;
                neighbors.push_back(gens[static_cast<std::size_t>(other)]);
            }
            std::vector<std::int64_t> c(refs.size(), 1);
            try {
                c = multiplicity_coeffs(gens[static_cast<std::size_t>(gi)], neighbors);
            } catch (const NoPositiveRelation&) {
            }
            for (std::size_t j = 0; j < refs.size(); ++j) {
                const OrientedCone& oc = oriented[refs[j].cone];
                if (oc.a == gi) oriented[refs[j].cone].copies = c[j];
            }
        }
    }

    // Central weights from the corrected weight equation.
    for (const auto& [gi, refs] : arms) {
        LatVec sum{0, 0, 0};
        for (const ArmRef& ar : refs) sum = sum + ar.first * oriented[ar.cone].copies;
        g.vertices[static_cast<std::size_t>(central.at(gi))].weight =
            solve_weight(gens[static_cast<std::size_t>(gi)], sum);
    }

    // Glue the arms: interior chain vertices per copy, far ends kept only
    // when strictly positive.
    for (const OrientedCone& oc : oriented) {
        const auto& vecs = oc.chain.vectors;
        for (std::int64_t copy = 0; copy < oc.copies; ++copy) {
            int prev = central.at(oc.a);
            for (std::size_t i = 1; i + 1 < vecs.size(); ++i) {
                int v = g.add_vertex(oc.chain.weights[i - 1], 0, to_string(vecs[i]));
                g.add_edge(prev, v);
                prev = v;
            }
            if (oc.b_positive) g.add_edge(prev, central.at(oc.b));
        }
    }

    if (!g.connected()) throw DisconnectedResult();
    return g;
}

}  // namespace

ResolutionGraph graph_from_fan(const AbstractFan& fan) {
    return build_graph(fan.generators, fan.two_cones, nullptr, nullptr, nullptr);
}

ResolutionGraph oka_resolve(const MultiPoly& p) {
    NewtonPolyhedron np = newton_polyhedron(p);
    DualFan fan = dual_fan(np);
    std::vector<std::int64_t> genus(fan.rays.size(), 0);
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        if (fan.rays[i].strictly_positive())
            genus[i] = interior_points(np.faces[fan.ray_face[i]]);
    std::vector<std::int64_t> r(fan.two_cones.size(), 0);
    for (std::size_t k = 0; k < fan.two_cones.size(); ++k) {
        auto [i, j] = fan.two_cones[k];
        if (fan.rays[static_cast<std::size_t>(i)].strictly_positive() ||
            fan.rays[static_cast<std::size_t>(j)].strictly_positive())
            r[k] = interior_points(np.faces[fan.cone_face[k]]);
    }
    std::function<std::int64_t(const LatVec&)> vec_genus = [&](const LatVec& u) {
        Face f = face_of(np, u);
        return f.compact ? interior_points(f) : 0;
    };
    return build_graph(fan.rays, fan.two_cones, &r, &genus, &vec_genus);
}

AbstractFan fan_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    AbstractFan fan;
    for (const auto& g : j.at("generators"))
        fan.generators.push_back(primitive({g.at(0).get<std::int64_t>(),
                                            g.at(1).get<std::int64_t>(),
                                            g.at(2).get<std::int64_t>()}));
    for (const auto& c : j.at("two_cones"))
        fan.two_cones.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    return fan;
}

}  // namespace rtp
