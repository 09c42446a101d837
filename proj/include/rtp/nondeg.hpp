#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rtp/lattice.hpp"
#include "rtp/newton.hpp"
#include "rtp/poly.hpp"

namespace rtp {

// Initial form of f along a compact face, together with its torus-equivariant
// reduction to the face's essential variables.
struct FaceFunction {
    Face face;
    MultiPoly poly{3};     // In_u(f), three ambient variables
    int essential_dim = -1;
    MultiPoly reduced{2};  // in essential variables (x = s, y = t)
    LatVec base{0, 0, 0};  // stripped monomial exponent
    LatVec b1{0, 0, 0};    // lattice basis of the face direction lattice
    LatVec b2{0, 0, 0};
};

enum class Verdict { Nondegenerate, Degenerate, Unknown };

struct NondegVerdict {
    Verdict kind = Verdict::Unknown;
    std::string detail;  // certificate, common factor, or mod-p evidence
    std::optional<std::array<Rat, 3>> witness;  // exact torus singular point
};

std::string verdict_to_json(const NondegVerdict& v);

// In_u(f): the terms of p supported on the (compact) face minimizing <u, .>.
FaceFunction face_function(const MultiPoly& p, const LatVec& u);

// Rewrite In_u as monomial * h(s, t) along a saturated basis of the face
// lattice, so torus zeros lift back to exact 3-variable witnesses.
FaceFunction reduce_to_essential(FaceFunction ff);

NondegVerdict check_face(const FaceFunction& ff);

// Conjunction over every compact face: first Degenerate wins; any Unknown
// downgrades a would-be Nondegenerate.
NondegVerdict check_newton_nondegenerate(const MultiPoly& p);

}  // namespace rtp
