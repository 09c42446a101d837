#include "rtp/lattice.hpp"

#include <numeric>
#include <sstream>

namespace rtp {

std::int64_t dot(const LatVec& a, const LatVec& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

LatVec cross(const LatVec& a, const LatVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

std::string to_string(const LatVec& u) {
    std::ostringstream os;
    os << "(" << u[0] << "," << u[1] << "," << u[2] << ")";
    return os.str();
}

LatVec primitive(const LatVec& v) {
    if (v.is_zero()) throw ZeroVector();
    std::int64_t g = gcd3(std::abs(v[0]), std::abs(v[1]), std::abs(v[2]));
    return {v[0] / g, v[1] / g, v[2] / g};
}

std::int64_t cone_det(const LatVec& u, const LatVec& v) {
    LatVec c = cross(u, v);
    if (c.is_zero()) throw ParallelVectors();
    return gcd3(std::abs(c[0]), std::abs(c[1]), std::abs(c[2]));
}

namespace {

// Extended gcd: returns g = gcd(a, b) >= 0 with p*a + q*b = g.
std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& p, std::int64_t& q) {
    if (b == 0) {
        p = (a < 0) ? -1 : 1;
        q = 0;
        return std::abs(a);
    }
    std::int64_t p1, q1;
    std::int64_t g = egcd(b, a % b, p1, q1);
    p = q1;
    q = p1 - (a / b) * q1;
    return g;
}

}  // namespace

std::pair<LatVec, LatVec> plane_basis(const LatVec& n) {
    if (n[1] == 0 && n[2] == 0) {
        LatVec b1{0, 1, 0}, b2{0, 0, 1};
        if (cross(b1, b2) != n) std::swap(b1, b2);
        return {b1, b2};
    }
    std::int64_t p, q;
    std::int64_t g = egcd(n[1], n[2], p, q);
    LatVec b1{0, n[2] / g, -n[1] / g};
    LatVec b2{-g, p * n[0], q * n[0]};
    if (cross(b1, b2) != n) throw Error("plane_basis: construction failed");
    return {b1, b2};
}

std::vector<std::int64_t> hj_expand(std::int64_t s, std::int64_t s1) {
    if (!(1 <= s1 && s1 < s) || std::gcd(s, s1) != 1)
        throw InvalidFraction("hj_expand requires 1 <= s1 < s with gcd(s,s1)=1, got " +
                              std::to_string(s) + "/" + std::to_string(s1));
    std::vector<std::int64_t> w;
    std::int64_t a = s, b = s1;
    while (b > 0) {
        std::int64_t q = (a + b - 1) / b;  // ceil(a/b)
        w.push_back(q);
        std::int64_t next = q * b - a;
        a = b;
        b = next;
    }
    return w;
}

SubdivisionChain regular_subdivide(const LatVec& u, const LatVec& v) {
    SubdivisionChain chain;
    std::int64_t s = cone_det(u, v);
    chain.vectors.push_back(u);
    LatVec t = u;
    while (s > 1) {
        chain.dets.push_back(s);
        // t' = (v + s' * t) / s with 0 <= s' < s, integral, det(t, t') = 1.
        bool found = false;
        for (std::int64_t sn = 1; sn < s; ++sn) {
            LatVec num = v + t * sn;
            if (num[0] % s || num[1] % s || num[2] % s) continue;
            LatVec cand = {num[0] / s, num[1] / s, num[2] / s};
            if (cone_det(t, cand) != 1) continue;
            chain.vectors.push_back(cand);
            t = cand;
            s = cone_det(cand, v);
            found = true;
            break;
        }
        if (!found) throw Error("regular_subdivide: no admissible next vector from " + to_string(t));
        if (t == v) break;
    }
    if (chain.vectors.back() != v) {
        chain.dets.push_back(1);
        chain.vectors.push_back(v);
    }
    // Weights from the mediant relation w_i * t_i = t_{i-1} + t_{i+1}.
    for (std::size_t i = 1; i + 1 < chain.vectors.size(); ++i) {
        const LatVec& mid = chain.vectors[i];
        LatVec sum = chain.vectors[i - 1] + chain.vectors[i + 1];
        std::int64_t w = 0;
        for (int j = 0; j < 3; ++j) {
            if (mid[j] != 0) {
                w = sum[j] / mid[j];
                break;
            }
        }
        if (!(sum == mid * w) || w < 2)
            throw Error("regular_subdivide: mediant relation failed at " + to_string(mid));
        chain.weights.push_back(w);
    }
    return chain;
}

}  // namespace rtp
