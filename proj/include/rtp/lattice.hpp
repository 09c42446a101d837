#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rtp/errors.hpp"

namespace rtp {

// Integral 3-vector.
struct LatVec {
    std::array<std::int64_t, 3> v{0, 0, 0};

    LatVec() = default;
    LatVec(std::int64_t a, std::int64_t b, std::int64_t c) : v{a, b, c} {}

    std::int64_t operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return v[static_cast<std::size_t>(i)]; }

    LatVec operator+(const LatVec& o) const { return {v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2]}; }
    LatVec operator-(const LatVec& o) const { return {v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2]}; }
    LatVec operator*(std::int64_t k) const { return {v[0] * k, v[1] * k, v[2] * k}; }

    bool operator==(const LatVec& o) const = default;
    auto operator<=>(const LatVec& o) const = default;

    bool is_zero() const { return v[0] == 0 && v[1] == 0 && v[2] == 0; }
    bool strictly_positive() const { return v[0] > 0 && v[1] > 0 && v[2] > 0; }
    bool nonnegative() const { return v[0] >= 0 && v[1] >= 0 && v[2] >= 0; }
};

std::int64_t dot(const LatVec& a, const LatVec& b);
LatVec cross(const LatVec& a, const LatVec& b);
std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c);
std::string to_string(const LatVec& u);

// v divided by the gcd of its coordinates; direction preserved.
LatVec primitive(const LatVec& v);

// gcd of the three 2x2 minors of the 3x2 matrix [u v].
std::int64_t cone_det(const LatVec& u, const LatVec& v);

// Basis (b1, b2) of the saturated lattice {v : <n, v> = 0} with
// cross(b1, b2) = n, for primitive n.
std::pair<LatVec, LatVec> plane_basis(const LatVec& n);

// Hirzebruch-Jung subdivision chain of the 2-cone spanned by u and v.
// vectors = t_0 = u, t_1, ..., t_alpha, t_{alpha+1} = v; dets = s_0 > ... >
// s_alpha = 1; weights w_i >= 2 attached to t_1..t_alpha satisfy the mediant
// relation w_i * t_i = t_{i-1} + t_{i+1}.
struct SubdivisionChain {
    std::vector<LatVec> vectors;
    std::vector<std::int64_t> dets;
    std::vector<std::int64_t> weights;
};

SubdivisionChain regular_subdivide(const LatVec& u, const LatVec& v);

// Hirzebruch-Jung continued fraction expansion of s/s1: the unique list of
// integers >= 2 with [w_1 : ... : w_alpha] = s/s1.
std::vector<std::int64_t> hj_expand(std::int64_t s, std::int64_t s1);

}  // namespace rtp
