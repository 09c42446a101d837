#include "rtp/resgraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rtp {

int ResolutionGraph::add_vertex(std::int64_t weight, std::int64_t genus, std::string label) {
    vertices.push_back({weight, genus, std::move(label)});
    return static_cast<int>(vertices.size()) - 1;
}

void ResolutionGraph::add_edge(int a, int b) {
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
}

std::vector<int> ResolutionGraph::valences() const {
    std::vector<int> val(vertices.size(), 0);
    for (auto [a, b] : edges) {
        ++val[static_cast<std::size_t>(a)];
        ++val[static_cast<std::size_t>(b)];
    }
    return val;
}

bool ResolutionGraph::connected() const {
    if (vertices.empty()) return true;
    std::vector<char> seen(vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
            int other = -1;
            if (a == v) other = b;
            if (b == v) other = a;
            if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
                seen[static_cast<std::size_t>(other)] = 1;
                ++visited;
                stack.push_back(other);
            }
        }
    }
    return visited == vertices.size();
}

bool ResolutionGraph::is_tree() const {
    return connected() && edges.size() + 1 == vertices.size();
}

std::vector<std::vector<Int>> intersection_matrix(const ResolutionGraph& g) {
    std::size_t n = g.vertices.size();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = -g.vertices[i].weight;
    for (auto [a, b] : g.edges) {
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += 1;
        m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += 1;
    }
    return m;
}

bool is_negative_definite(const ResolutionGraph& g) {
    // Gaussian elimination over Q; negative definite iff all pivots < 0.
    auto mi = intersection_matrix(g);
    std::size_t n = mi.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(mi[i][j]);
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] >= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return true;
}

Int cycle_dot_vertex(const ResolutionGraph& g, const Divisor& y, int j) {
    Int sum = -g.vertices[static_cast<std::size_t>(j)].weight * y.coeffs[static_cast<std::size_t>(j)];
    for (auto [a, b] : g.edges) {
        if (a == j) sum += y.coeffs[static_cast<std::size_t>(b)];
        if (b == j) sum += y.coeffs[static_cast<std::size_t>(a)];
    }
    return sum;
}

Int self_intersection(const ResolutionGraph& g, const Divisor& y) {
    Int sum = 0;
    for (std::size_t j = 0; j < g.vertices.size(); ++j)
        sum += y.coeffs[j] * cycle_dot_vertex(g, y, static_cast<int>(j));
    return sum;
}

Divisor fundamental_cycle(const ResolutionGraph& g) {
    if (!is_negative_definite(g)) throw NotNegativeDefinite();
    Divisor z;
    z.coeffs.assign(g.vertices.size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j < g.vertices.size(); ++j) {
            if (cycle_dot_vertex(g, z, static_cast<int>(j)) > 0) {
                z.coeffs[j] += 1;
                changed = true;
                break;
            }
        }
    }
    return z;
}

Int arithmetic_genus(const ResolutionGraph& g, const Divisor& y) {
    Int yk = 0;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        yk += y.coeffs[i] * (g.vertices[i].weight - 2 + 2 * g.vertices[i].genus);
    Int two_pa = 2 + self_intersection(g, y) + yk;
    return two_pa / 2;
}

bool is_rational(const ResolutionGraph& g) {
    return arithmetic_genus(g, fundamental_cycle(g)) == 0;
}

Int multiplicity(const ResolutionGraph& g) {
    if (!is_rational(g)) throw NotRational();
    return -self_intersection(g, fundamental_cycle(g));
}

BlowDownResult blow_down(const ResolutionGraph& g) {
    BlowDownResult res;
    res.graph = g;
    while (true) {
        auto val = res.graph.valences();
        int target = -1;
        for (std::size_t i = 0; i < res.graph.vertices.size(); ++i) {
            const GraphVertex& v = res.graph.vertices[i];
            if (v.weight == 1 && v.genus == 0) {
                if (val[i] >= 3) throw UnsupportedContraction();
                target = static_cast<int>(i);
                break;
            }
        }
        if (target < 0) break;
        // Collect neighbor slots with multiplicity.
        std::vector<int> nbrs;
        std::vector<std::pair<int, int>> kept;
        for (auto [a, b] : res.graph.edges) {
            if (a == target)
                nbrs.push_back(b);
            else if (b == target)
                nbrs.push_back(a);
            else
                kept.emplace_back(a, b);
        }
        res.graph.edges = std::move(kept);
        for (int n : nbrs) res.graph.vertices[static_cast<std::size_t>(n)].weight -= 1;
        if (nbrs.size() == 2) res.graph.edges.emplace_back(std::min(nbrs[0], nbrs[1]),
                                                          std::max(nbrs[0], nbrs[1]));
        // Remove the vertex, shifting indices above it.
        res.graph.vertices.erase(res.graph.vertices.begin() + target);
        for (auto& [a, b] : res.graph.edges) {
            if (a > target) --a;
            if (b > target) --b;
        }
        ++res.contractions;
    }
    res.smooth = res.graph.vertices.empty();
    // A surviving multi-edge or loop means the output is not simple normal
    // crossing at graph level.
    std::map<std::pair<int, int>, int> mult;
    for (auto e : res.graph.edges) {
        if (e.first == e.second) throw NonSNC();
        if (++mult[e] > 1) throw NonSNC();
    }
    return res;
}

namespace {

std::string encode_subtree(const ResolutionGraph& g, const std::vector<std::vector<int>>& adj,
                           int v, int parent) {
    std::vector<std::string> child_codes;
    for (int c : adj[static_cast<std::size_t>(v)])
        if (c != parent) child_codes.push_back(encode_subtree(g, adj, c, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::ostringstream os;
    os << "(" << g.vertices[static_cast<std::size_t>(v)].weight << ","
       << g.vertices[static_cast<std::size_t>(v)].genus;
    for (const auto& c : child_codes) os << c;
    os << ")";
    return os.str();
}

std::vector<int> tree_centers(const ResolutionGraph& g) {
    std::size_t n = g.vertices.size();
    if (n <= 2) {
        std::vector<int> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
        return all;
    }
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : g.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> degree(n);
    for (std::size_t i = 0; i < n; ++i) degree[i] = static_cast<int>(adj[i].size());
    std::vector<int> layer;
    for (std::size_t i = 0; i < n; ++i)
        if (degree[i] <= 1) layer.push_back(static_cast<int>(i));
    std::size_t removed = layer.size();
    while (removed < n) {
        std::vector<int> next;
        for (int v : layer)
            for (int u : adj[static_cast<std::size_t>(v)])
                if (--degree[static_cast<std::size_t>(u)] == 1) next.push_back(u);
        if (next.empty()) break;
        removed += next.size();
        layer = std::move(next);
    }
    return layer;
}

}  // namespace

std::string tree_canonical_form(const ResolutionGraph& g) {
    if (!g.is_tree()) throw NotATree();
    if (g.vertices.empty()) return "()";
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (auto [a, b] : g.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::string best;
    for (int c : tree_centers(g)) {
        std::string code = encode_subtree(g, adj, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

bool tree_isomorphic(const ResolutionGraph& a, const ResolutionGraph& b) {
    return tree_canonical_form(a) == tree_canonical_form(b);
}

std::string graph_to_json(const ResolutionGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        nlohmann::json v;
        v["id"] = i;
        v["weight"] = g.vertices[i].weight;
        v["genus"] = g.vertices[i].genus;
        if (!g.vertices[i].label.empty()) v["label"] = g.vertices[i].label;
        j["vertices"].push_back(v);
    }
    j["edges"] = nlohmann::json::array();
    for (auto [x, y] : g.edges) j["edges"].push_back({x, y});
    return j.dump(2);
}

ResolutionGraph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ResolutionGraph g;
    for (const auto& v : j.at("vertices"))
        g.add_vertex(v.at("weight").get<std::int64_t>(),
                     v.value("genus", std::int64_t{0}), v.value("label", std::string{}));
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

std::string graph_to_dot(const ResolutionGraph& g) {
    std::ostringstream os;
    os << "graph resolution {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        os << "  v" << i << " [label=\"w=" << g.vertices[i].weight << ",g="
           << g.vertices[i].genus << "\"];\n";
    }
    for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string graph_to_ascii(const ResolutionGraph& g) {
    if (g.vertices.empty()) return "(smooth point: empty graph)\n";
    std::ostringstream os;
    if (!g.is_tree()) {
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            os << "v" << i << " w=" << g.vertices[i].weight << " g=" << g.vertices[i].genus
               << (g.vertices[i].label.empty() ? "" : " " + g.vertices[i].label) << "\n";
        for (auto [a, b] : g.edges) os << "v" << a << " -- v" << b << "\n";
        return os.str();
    }
    // Indented tree rooted at the highest-weight vertex.
    int root = 0;
    for (std::size_t i = 1; i < g.vertices.size(); ++i)
        if (g.vertices[i].weight > g.vertices[static_cast<std::size_t>(root)].weight)
            root = static_cast<int>(i);
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (auto [a, b] : g.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    auto print = [&](auto&& self, int v, int parent, int depth) -> void {
        for (int i = 0; i < depth; ++i) os << "  ";
        const GraphVertex& gv = g.vertices[static_cast<std::size_t>(v)];
        os << "* w=" << gv.weight << " g=" << gv.genus;
        if (!gv.label.empty()) os << "  [" << gv.label << "]";
        os << "\n";
        for (int c : adj[static_cast<std::size_t>(v)])
            if (c != parent) self(self, c, v, depth + 1);
    };
    print(print, root, -1, 0);
    return os.str();
}

}  // namespace rtp
