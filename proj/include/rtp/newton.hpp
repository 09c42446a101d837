#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rtp/lattice.hpp"
#include "rtp/poly.hpp"

namespace rtp {

// A face of the Newton polyhedron: the support points lying on it, the facet
// normals containing it, and its unbounded axis directions.
struct Face {
    std::vector<LatVec> points;   // support points on the face, sorted
    std::vector<LatVec> normals;  // facet normals whose faces contain this one
    std::vector<int> open_dirs;   // axis indices of recession directions
    int dim = 0;
    bool compact = false;

    bool operator==(const Face& o) const {
        return points == o.points && open_dirs == o.open_dirs;
    }
};

struct Facet {
    LatVec normal;               // primitive inward normal, >= 0
    std::int64_t support_value;  // min <normal, support>
    bool compact;                // iff normal is strictly positive
    std::size_t face_index;      // into NewtonPolyhedron::faces
};

// conv(supp f) + R^3_{>=0} with its full face lattice.
struct NewtonPolyhedron {
    std::vector<LatVec> support;
    std::vector<Facet> facets;
    std::vector<Face> faces;  // dims 0, 1, 2

    std::vector<const Face*> faces_of_dim(int d) const;
    std::vector<const Face*> compact_faces() const;
};

NewtonPolyhedron newton_polyhedron(const MultiPoly& p);

// The face on which <u, .> attains its minimum over NP(f); u >= 0, u != 0.
Face face_of(const NewtonPolyhedron& np, const LatVec& u);

// Fan of normal cones: rays = facet normals, 2-cones = facet pairs sharing
// an edge of NP(f).
struct DualFan {
    std::vector<LatVec> rays;
    std::vector<std::pair<int, int>> two_cones;      // indices into rays
    std::vector<std::size_t> ray_face;               // ray -> facet face index
    std::vector<std::size_t> cone_face;              // 2-cone -> edge face index
};

DualFan dual_fan(const NewtonPolyhedron& np);

// Number of lattice points in the relative interior of a compact face.
std::int64_t interior_points(const Face& face);

}  // namespace rtp
