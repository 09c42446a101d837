#include "rtp/newton.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace rtp {

namespace {

const std::array<LatVec, 3> kAxes = {LatVec{1, 0, 0}, LatVec{0, 1, 0}, LatVec{0, 0, 1}};

// Rank of a set of integral 3-vectors.
int rank3(std::vector<LatVec> rows) {
    int rank = 0;
    for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<std::size_t>(r)][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        const LatVec p = rows[static_cast<std::size_t>(rank)];
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            LatVec& row = rows[static_cast<std::size_t>(r)];
            if (row[col] == 0) continue;
            row = row * p[col] - p * row[col];
        }
        ++rank;
    }
    return rank;
}

std::int64_t min_support_value(const std::vector<LatVec>& support, const LatVec& n) {
    std::int64_t m = dot(n, support.front());
    for (const LatVec& s : support) m = std::min(m, dot(n, s));
    return m;
}

std::vector<LatVec> points_on(const std::vector<LatVec>& support, const LatVec& n,
                              std::int64_t value) {
    std::vector<LatVec> pts;
    for (const LatVec& s : support)
        if (dot(n, s) == value) pts.push_back(s);
    return pts;
}

// Affine dimension of a face given its support points and open directions.
int face_dim(const std::vector<LatVec>& pts, const std::vector<int>& open_dirs) {
    std::vector<LatVec> span;
    for (std::size_t i = 1; i < pts.size(); ++i) span.push_back(pts[i] - pts[0]);
    for (int d : open_dirs) span.push_back(kAxes[static_cast<std::size_t>(d)]);
    return rank3(std::move(span));
}

Face make_face(const NewtonPolyhedron& np, std::vector<LatVec> pts, std::vector<int> open_dirs) {
    Face f;
    std::sort(pts.begin(), pts.end());
    f.points = std::move(pts);
    f.open_dirs = std::move(open_dirs);
    f.dim = face_dim(f.points, f.open_dirs);
    // Containing facets: every face point on the facet, every open direction
    // along it.
    for (const Facet& facet : np.facets) {
        bool contains = true;
        for (const LatVec& p : f.points)
            if (dot(facet.normal, p) != facet.support_value) {
                contains = false;
                break;
            }
        for (int d : f.open_dirs)
            if (contains && facet.normal[d] != 0) contains = false;
        if (contains) f.normals.push_back(facet.normal);
    }
    // Compact iff every coordinate is positive on some containing normal;
    // otherwise an axis direction recedes along the face.
    f.compact = true;
    for (int c = 0; c < 3 && f.compact; ++c) {
        bool covered = false;
        for (const LatVec& n : f.normals)
            if (n[c] > 0) covered = true;
        if (!covered) f.compact = false;
    }
    return f;
}

}  // namespace

std::vector<const Face*> NewtonPolyhedron::faces_of_dim(int d) const {
    std::vector<const Face*> out;
    for (const Face& f : faces)
        if (f.dim == d) out.push_back(&f);
    return out;
}

std::vector<const Face*> NewtonPolyhedron::compact_faces() const {
    std::vector<const Face*> out;
    for (const Face& f : faces)
        if (f.compact) out.push_back(&f);
    return out;
}

NewtonPolyhedron newton_polyhedron(const MultiPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("newton_polyhedron");
    NewtonPolyhedron np;
    for (const Mono& m : p.support()) np.support.push_back({m[0], m[1], m[2]});
    std::sort(np.support.begin(), np.support.end());

    // Candidate facet normals: cross products of pairs among support
    // differences and the axes, plus the axes themselves.
    std::vector<LatVec> dirs;
    for (std::size_t i = 0; i < np.support.size(); ++i)
        for (std::size_t j = i + 1; j < np.support.size(); ++j)
            dirs.push_back(np.support[j] - np.support[i]);
    for (const LatVec& e : kAxes) dirs.push_back(e);

    std::set<LatVec> candidates{kAxes.begin(), kAxes.end()};
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            LatVec c = cross(dirs[i], dirs[j]);
            if (c.is_zero()) continue;
            c = primitive(c);
            if (c.nonnegative())
                candidates.insert(c);
            else if (LatVec{-c[0], -c[1], -c[2]}.nonnegative())
                candidates.insert(LatVec{-c[0], -c[1], -c[2]});
        }

    for (const LatVec& n : candidates) {
        std::int64_t m = min_support_value(np.support, n);
        std::vector<LatVec> pts = points_on(np.support, n, m);
        std::vector<int> open_dirs;
        for (int d = 0; d < 3; ++d)
            if (n[d] == 0) open_dirs.push_back(d);
        if (face_dim(pts, open_dirs) != 2) continue;
        np.facets.push_back({n, m, n.strictly_positive(), 0});
    }

    // Face lattice.  Facet faces first.
    for (Facet& facet : np.facets) {
        std::vector<int> open_dirs;
        for (int d = 0; d < 3; ++d)
            if (facet.normal[d] == 0) open_dirs.push_back(d);
        facet.face_index = np.faces.size();
        np.faces.push_back(
            make_face(np, points_on(np.support, facet.normal, facet.support_value), open_dirs));
    }
    // Edges: pairwise facet intersections of dimension 1.
    std::vector<Face> edges;
    for (std::size_t i = 0; i < np.facets.size(); ++i)
        for (std::size_t j = i + 1; j < np.facets.size(); ++j) {
            const Facet &a = np.facets[i], &b = np.facets[j];
            std::vector<LatVec> common;
            for (const LatVec& s : np.support)
                if (dot(a.normal, s) == a.support_value && dot(b.normal, s) == b.support_value)
                    common.push_back(s);
            if (common.empty()) continue;
            std::vector<int> open_dirs;
            for (int d = 0; d < 3; ++d)
                if (a.normal[d] == 0 && b.normal[d] == 0) open_dirs.push_back(d);
            if (face_dim(common, open_dirs) != 1) continue;
            Face e = make_face(np, std::move(common), std::move(open_dirs));
            if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
        }
    for (Face& e : edges) np.faces.push_back(std::move(e));
    // Vertices: support points whose containing facet normals span rank 3.
    for (const LatVec& s : np.support) {
        std::vector<LatVec> normals;
        for (const Facet& facet : np.facets)
            if (dot(facet.normal, s) == facet.support_value) normals.push_back(facet.normal);
        if (rank3(normals) == 3) np.faces.push_back(make_face(np, {s}, {}));
    }
    return np;
}

Face face_of(const NewtonPolyhedron& np, const LatVec& u) {
    if (u.is_zero() || !u.nonnegative()) throw Error("face_of: u must be nonzero and >= 0");
    std::int64_t m = min_support_value(np.support, u);
    std::vector<int> open_dirs;
    for (int d = 0; d < 3; ++d)
        if (u[d] == 0) open_dirs.push_back(d);
    return make_face(np, points_on(np.support, u, m), std::move(open_dirs));
}

DualFan dual_fan(const NewtonPolyhedron& np) {
    DualFan fan;
    for (const Facet& f : np.facets) {
        fan.rays.push_back(f.normal);
        fan.ray_face.push_back(f.face_index);
    }
    for (std::size_t i = 0; i < np.facets.size(); ++i)
        for (std::size_t j = i + 1; j < np.facets.size(); ++j) {
            const Facet &a = np.facets[i], &b = np.facets[j];
            // Adjacent iff their faces intersect in an edge of NP(f).
            for (std::size_t k = 0; k < np.faces.size(); ++k) {
                const Face& e = np.faces[k];
                if (e.dim != 1) continue;
                bool in_a = std::find(e.normals.begin(), e.normals.end(), a.normal) != e.normals.end();
                bool in_b = std::find(e.normals.begin(), e.normals.end(), b.normal) != e.normals.end();
                if (in_a && in_b) {
                    fan.two_cones.emplace_back(static_cast<int>(i), static_cast<int>(j));
                    fan.cone_face.push_back(k);
                    break;
                }
            }
        }
    return fan;
}

std::int64_t interior_points(const Face& face) {
    if (!face.compact) throw NonCompactFace();
    if (face.dim == 0) return 0;
    if (face.dim == 1) {
        // Endpoints are extreme along the edge direction.
        LatVec d{0, 0, 0};
        for (std::size_t i = 1; i < face.points.size() && d.is_zero(); ++i)
            d = face.points[i] - face.points[0];
        auto param = [&](const LatVec& p) { return dot(d, p); };
        const LatVec* lo = &face.points[0];
        const LatVec* hi = &face.points[0];
        for (const LatVec& p : face.points) {
            if (param(p) < param(*lo)) lo = &p;
            if (param(p) > param(*hi)) hi = &p;
        }
        LatVec diff = *hi - *lo;
        return gcd3(std::abs(diff[0]), std::abs(diff[1]), std::abs(diff[2])) - 1;
    }
    // 2-face: bounding-box scan against the polygon in its supporting plane.
    const LatVec& n = face.normals.front();
    std::int64_t m = dot(n, face.points.front());
    // Project out a coordinate where the normal is nonzero.
    int drop = 0;
    for (int d = 0; d < 3; ++d)
        if (n[d] != 0) drop = d;
    int a = (drop + 1) % 3, b = (drop + 2) % 3;
    std::vector<std::pair<std::int64_t, std::int64_t>> proj;
    for (const LatVec& p : face.points) proj.emplace_back(p[a], p[b]);
    // Monotone-chain hull of the projected points.
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    auto cross2 = [](auto o, auto p, auto q) {
        return (p.first - o.first) * (q.second - o.second) -
               (p.second - o.second) * (q.first - o.first);
    };
    std::vector<std::pair<std::int64_t, std::int64_t>> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = hull.size();
        for (const auto& p : proj) {
            while (hull.size() >= start + 2 &&
                   cross2(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(proj.begin(), proj.end());
    }
    LatVec lo = face.points.front(), hi = face.points.front();
    for (const LatVec& p : face.points)
        for (int d = 0; d < 3; ++d) {
            lo[d] = std::min(lo[d], p[d]);
            hi[d] = std::max(hi[d], p[d]);
        }
    std::int64_t count = 0;
    for (std::int64_t x = lo[0]; x <= hi[0]; ++x)
        for (std::int64_t y = lo[1]; y <= hi[1]; ++y)
            for (std::int64_t z = lo[2]; z <= hi[2]; ++z) {
                LatVec p{x, y, z};
                if (dot(n, p) != m) continue;
                std::pair<std::int64_t, std::int64_t> q{p[a], p[b]};
                bool strict = true;
                for (std::size_t i = 0; i < hull.size() && strict; ++i) {
                    const auto& h0 = hull[i];
                    const auto& h1 = hull[(i + 1) % hull.size()];
                    if (cross2(h0, h1, q) <= 0) strict = false;
                }
                if (strict) ++count;
            }
    return count;
}

}  // namespace rtp
