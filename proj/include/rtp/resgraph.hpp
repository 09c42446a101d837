#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rtp/errors.hpp"
#include "rtp/poly.hpp"

namespace rtp {

// Weighted, genus-labeled multigraph of exceptional curves; weight w_i
// records -E_i^2.
struct GraphVertex {
    std::int64_t weight = 2;
    std::int64_t genus = 0;
    std::string label;
};

struct ResolutionGraph {
    std::vector<GraphVertex> vertices;
    std::vector<std::pair<int, int>> edges;  // unordered pairs; multiset

    int add_vertex(std::int64_t weight, std::int64_t genus = 0, std::string label = {});
    void add_edge(int a, int b);
    std::size_t size() const { return vertices.size(); }
    std::vector<int> valences() const;
    bool connected() const;
    bool is_tree() const;
};

// Integer cycle Y = sum a_i E_i.
struct Divisor {
    std::vector<Int> coeffs;
};

// M_ii = -w_i, M_ij = number of edges between i and j.
std::vector<std::vector<Int>> intersection_matrix(const ResolutionGraph& g);

// Exact Sylvester leading-principal-minor test.
bool is_negative_definite(const ResolutionGraph& g);

// Laufer's algorithm for Artin's divisor: Z = sum E_i, then add E_j while
// some Z.E_j > 0 (lowest index first).
Divisor fundamental_cycle(const ResolutionGraph& g);

// Intersection number Y.E_j.
Int cycle_dot_vertex(const ResolutionGraph& g, const Divisor& y, int j);
Int self_intersection(const ResolutionGraph& g, const Divisor& y);

// p_a(Y) = 1 + (Y.Y + Y.K)/2 with Y.K = sum a_i (w_i - 2 + 2 g_i).
Int arithmetic_genus(const ResolutionGraph& g, const Divisor& y);

// Artin's criterion: p_a(Z) == 0.
bool is_rational(const ResolutionGraph& g);

// -Z^2 for rational graphs.
Int multiplicity(const ResolutionGraph& g);

struct BlowDownResult {
    ResolutionGraph graph;
    int contractions = 0;
    bool smooth = false;  // everything contracted away
};

// Contract w=1, g=0 vertices of valence <= 2 to a fixpoint.
BlowDownResult blow_down(const ResolutionGraph& g);

// Isomorphism of weighted genus-labeled trees via canonical forms.
bool tree_isomorphic(const ResolutionGraph& a, const ResolutionGraph& b);
std::string tree_canonical_form(const ResolutionGraph& g);

// Serialization.
std::string graph_to_json(const ResolutionGraph& g);
ResolutionGraph graph_from_json(const std::string& text);
std::string graph_to_dot(const ResolutionGraph& g);
std::string graph_to_ascii(const ResolutionGraph& g);

}  // namespace rtp
