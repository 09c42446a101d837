#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rtp/lattice.hpp"
#include "rtp/newton.hpp"
#include "rtp/resgraph.hpp"

namespace rtp {

// Fan in the closed positive octant, given combinatorially.
struct AbstractFan {
    std::vector<LatVec> generators;               // primitive, >= 0
    std::vector<std::pair<int, int>> two_cones;   // indices into generators
};

AbstractFan fan_from_json(const std::string& text);

// One arm of a central vertex: the subdivision chain of an adjacent 2-cone,
// oriented away from u, with its r-value and copy count c = r + 1.
struct OkaArm {
    SubdivisionChain chain;
    LatVec first;            // vector adjacent to u on the chain
    std::int64_t r = 0;
    std::int64_t copies = 1;
    bool far_end_kept = false;
};

struct OkaVertexData {
    LatVec u;
    std::int64_t w_u = 0;
    std::int64_t g_u = 0;
    std::vector<OkaArm> arms;
};

// The unique positive integer w with w*u = sum_j c_j * first_j.
std::int64_t central_weight(const OkaVertexData& data);

// Componentwise-minimal positive integral relation sum c_j v_j = 0 in the
// quotient lattice Z^3 / Z u.
std::vector<std::int64_t> multiplicity_coeffs(const LatVec& u,
                                              const std::vector<LatVec>& neighbors);

// Fan-to-graph construction: one central vertex per strictly positive
// generator, chain arms from regular subdivisions, non-positive far ends
// deleted.  Copy counts come from multiplicity_coeffs when a relation exists.
ResolutionGraph graph_from_fan(const AbstractFan& fan);

// Full resolution process for the dual fan of NP(p): r-values and genera from
// face lattice data, r+1 copies per arm, central weights from the corrected
// weight equation.
ResolutionGraph oka_resolve(const MultiPoly& p);

}  // namespace rtp
