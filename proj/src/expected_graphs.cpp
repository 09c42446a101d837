#include "rtp/catalog.hpp"

#include <algorithm>

namespace rtp {

namespace {

using Arm = std::vector<std::int64_t>;

Arm twos(std::int64_t n) { return Arm(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)), 2); }

Arm join(Arm a, const Arm& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Central vertex with chains hanging off it; empty chains are skipped.
ResolutionGraph star(std::int64_t center, const std::vector<Arm>& arms) {
    ResolutionGraph g;
    int c = g.add_vertex(center);
    for (const Arm& arm : arms) {
        int prev = c;
        for (std::int64_t w : arm) {
            int v = g.add_vertex(w);
            g.add_edge(prev, v);
            prev = v;
        }
    }
    return g;
}

}  // namespace

// Minimal resolution graphs of the nine families: trees of rational curves,
// all self-intersections -2 except a single -3.
ResolutionGraph expected_graph(const RtpFamily& fam) {
    using K = RtpFamily::Kind;
    std::int64_t k = fam.k, l = fam.l, m = fam.m, n = fam.n;
    switch (fam.kind) {
        case K::A:
            return star(3, {twos(k - 1), twos(l - 1), twos(m - 1)});
        case K::B:
            return star(2, {{2}, twos(m - 2), join({3}, twos(k - 1))});
        case K::C:
            return star(2, {{2}, {2}, join(twos(l - 2), join({3}, twos(k - 1)))});
        case K::D:
            return star(2, {{2}, {2, 2}, join({2, 3}, twos(k - 1))});
        case K::E60:
            return star(2, {{2}, {2, 3}, {2, 2, 2}});
        case K::E07:
            return star(2, {{2}, {2, 2}, {2, 2, 2, 3}});
        case K::E70:
            return star(2, {{2}, {2, 3}, {2, 2, 2, 2}});
        case K::F:
            return star(2, {{2}, {2, 2}, join({2, 2, 3}, twos(k - 1))});
        case K::H:
            if (n == 2) return star(3, {});
            return star(2, {{3}, {2, 2}, twos(n - 3)});
    }
    throw Error("unreachable");
}

}  // namespace rtp
