#pragma once

#include <array>
#include <string>
#include <vector>

#include "rtp/poly.hpp"
#include "rtp/resgraph.hpp"

namespace rtp {

// The nine RTP families with their printed parameter domains.
struct RtpFamily {
    enum class Kind { A, B, C, D, E60, E07, E70, F, H };
    Kind kind;
    std::int64_t k = 0, l = 0, m = 0, n = 0;

    std::string name() const;
};

// Selector strings: "A:k,l,m", "B:k,m", "C:k,l", "D:k", "E60", "E07",
// "E70", "F:k", "H:n".
RtpFamily parse_family(const std::string& selector);

// Coefficient functions of Miranda's normal form (Eq. 3 data).
struct MirandaData {
    MultiPoly a{2}, b{2}, c{2}, d{2};
};

// F = z^2 - 2(a^2-bd) - az - bw, G = zw + (ad-bc) + dz + aw,
// H = w^2 - 2(d^2-ac) - cz - dw; equal to the 2x2 minors of
// [[z+a, w-2d, c], [b, z-2a, w+d]].
std::array<MultiPoly, 3> miranda_minors(const MirandaData& md);

struct FamilyMatrices {
    PolyMatrix2x3 tjurina;
    PolyMatrix2x3 miranda;
};

FamilyMatrices family_matrices(const RtpFamily& fam);

// The printed cubic in (x, y, z) whose normalisation is the family member.
MultiPoly nonisolated_form(const RtpFamily& fam);

// The Artin minimal resolution graph for the family at these parameters.
ResolutionGraph expected_graph(const RtpFamily& fam);

// Number of blow-downs the resolution process needs to reach the minimal
// graph, per the printed branch list.
int expected_blowdowns(const RtpFamily& fam);

struct ProjectionVerdict {
    bool match = false;
    std::string eliminated;  // the stripped elimination result
    std::string target;      // the nonisolated form
};

// Eliminate w from the Miranda-matrix minors and compare with the
// nonisolated form up to constants, monomials, and repeated factors.
ProjectionVerdict verify_projection(const RtpFamily& fam);

struct FamilyReport {
    bool passed = false;
    int blowdowns = 0;
    bool rational = false;
    Int mult = 0;
    bool nondegenerate = false;
    bool graph_match = false;
    std::string message;
};

// Full pipeline: nonisolated_form -> oka_resolve -> blow_down, checked
// against the expected graph, rationality, multiplicity 3, non-degeneracy,
// and the expected blow-down count.
FamilyReport verify_family(const RtpFamily& fam);

// All in-domain instances with parameters bounded by max_param (H: n up to
// 2*max_param - 2).
std::vector<RtpFamily> family_sweep(std::int64_t max_param);

}  // namespace rtp
