#include "tropjac/metric_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace tropjac {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

MetricGraph::MetricGraph(std::vector<VertexData> vertices, std::vector<EdgeData> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::unordered_set<std::string> seen;
    for (const auto& v : vertices_) {
        if (v.weight < 0) throw Error(ErrorCode::E_DOMAIN, "negative vertex weight at " + v.id);
        if (!seen.insert(v.id).second)
            throw Error(ErrorCode::E_ID, "duplicate vertex id " + v.id);
    }
    seen.clear();
    int n = vertex_count();
    if (n > 63) throw Error(ErrorCode::E_CAP, "vertex count exceeds hard limit 63");
    for (const auto& e : edges_) {
        if (!seen.insert(e.id).second) throw Error(ErrorCode::E_ID, "duplicate edge id " + e.id);
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            throw Error(ErrorCode::E_ID, "edge " + e.id + " references unknown vertex");
        if (e.length <= 0)
            throw Error(ErrorCode::E_LENGTH, "edge " + e.id + " must have positive length");
    }
    if (edge_count() > 63) throw Error(ErrorCode::E_CAP, "edge count exceeds hard limit 63");

    component_.assign(n, -1);
    UnionFind uf(n);
    for (const auto& e : edges_) uf.unite(e.tail, e.head);
    std::unordered_map<int, int> root_to_comp;
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        auto it = root_to_comp.find(r);
        if (it == root_to_comp.end()) it = root_to_comp.emplace(r, component_count_++).first;
        component_[v] = it->second;
    }
}

int MetricGraph::vertex_index(const std::string& id) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[v].id == id) return v;
    throw Error(ErrorCode::E_ID, "unknown vertex id " + id);
}

int MetricGraph::edge_index(const std::string& id) const {
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].id == id) return e;
    throw Error(ErrorCode::E_ID, "unknown edge id " + id);
}

Int MetricGraph::weight_sum() const {
    Int s = 0;
    for (const auto& v : vertices_) s += v.weight;
    return s;
}

Int MetricGraph::genus() const {
    return weight_sum() + edge_count() - vertex_count() + component_count_;
}

Int Divisor::degree() const {
    Int s = 0;
    for (Int v : values_) s += v;
    return s;
}

Int Divisor::sum_over(VertexSet w) const {
    Int s = 0;
    for (int v = 0; v < size(); ++v)
        if (set_contains(w, v)) s += values_[v];
    return s;
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor r = *this;
    for (int v = 0; v < size(); ++v) r[v] += o[v];
    return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
    Divisor r = *this;
    for (int v = 0; v < size(); ++v) r[v] -= o[v];
    return r;
}

Divisor Divisor::operator*(Int k) const {
    Divisor r = *this;
    for (int v = 0; v < size(); ++v) r[v] *= k;
    return r;
}

VecQ Chain::boundary(const MetricGraph& g) const {
    VecQ b(g.vertex_count(), Rational(0));
    for (int e = 0; e < size(); ++e) {
        if (coeffs_[e] == 0) continue;
        b[g.edge(e).head] += coeffs_[e];
        b[g.edge(e).tail] -= coeffs_[e];
    }
    return b;
}

void TropicalDivisor::validate_location(const MetricGraph& g, const Location& loc) {
    if (loc.is_vertex()) {
        if (loc.vertex >= g.vertex_count())
            throw Error(ErrorCode::E_ID, "location vertex out of range");
        return;
    }
    if (loc.edge < 0 || loc.edge >= g.edge_count())
        throw Error(ErrorCode::E_ID, "location edge out of range");
    if (loc.offset <= 0 || loc.offset >= g.edge(loc.edge).length)
        throw Error(ErrorCode::E_DOMAIN, "edge point offset must be strictly interior");
}

void TropicalDivisor::add(const Location& loc, Int multiplicity) {
    if (multiplicity == 0) return;
    auto key = [](const Location& l) {
        return std::tuple<int, int, Rational>(l.is_vertex() ? 0 : 1,
                                              l.is_vertex() ? l.vertex : l.edge, l.offset);
    };
    auto it = std::lower_bound(points_.begin(), points_.end(), loc,
                               [&](const auto& p, const Location& l) { return key(p.first) < key(l); });
    if (it != points_.end() && it->first == loc) {
        it->second += multiplicity;
        if (it->second == 0) points_.erase(it);
    } else {
        points_.insert(it, {loc, multiplicity});
    }
}

Int TropicalDivisor::degree() const {
    Int s = 0;
    for (const auto& [loc, m] : points_) s += m;
    return s;
}

TropicalDivisor TropicalDivisor::from_divisor(const Divisor& d) {
    TropicalDivisor t;
    for (int v = 0; v < d.size(); ++v) t.add_vertex(v, d[v]);
    return t;
}

Int arithmetic_genus(const MetricGraph& g, VertexSet w) {
    if (w == 0) throw Error(ErrorCode::E_DOMAIN, "arithmetic_genus: empty subcurve");
    Int weights = 0, internal = 0, count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (set_contains(w, v)) {
            weights += g.vertex(v).weight;
            ++count;
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (set_contains(w, ed.tail) && set_contains(w, ed.head)) ++internal;
    }
    return weights + internal - count + 1;
}

Int normalized_genus(const MetricGraph& g, VertexSet w, EdgeSet s) {
    Int internal_s = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!((s >> e) & 1u)) continue;
        const auto& ed = g.edge(e);
        if (set_contains(w, ed.tail) && set_contains(w, ed.head)) ++internal_s;
    }
    return arithmetic_genus(g, w) - internal_s;
}

BoundaryCounts boundary_counts(const MetricGraph& g, VertexSet w, EdgeSet s) {
    BoundaryCounts c;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        bool in_s = (s >> e) & 1u;
        bool t = set_contains(w, ed.tail), h = set_contains(w, ed.head);
        if (t && h) {
            if (in_s) ++c.s_internal;
        } else if (t != h) {
            ++c.total;
            if (in_s)
                ++c.in_s;
            else
                ++c.not_in_s;
        }
    }
    return c;
}

std::vector<int> spanning_forest(const MetricGraph& g) {
    std::vector<int> forest;
    UnionFind uf(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (ed.is_loop()) continue;
        if (uf.unite(ed.tail, ed.head)) forest.push_back(e);
    }
    return forest;
}

namespace {

// Parent edge per vertex in the forest, rooted at each component's least vertex.
struct ForestIndex {
    std::vector<int> parent_edge;  // edge index towards the root, -1 at roots
    std::vector<int> parent_vertex;
    std::vector<int> depth;
    std::vector<int> root;
};

ForestIndex index_forest(const MetricGraph& g, const std::vector<int>& forest) {
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge)
    std::vector<bool> in_forest(g.edge_count(), false);
    for (int e : forest) {
        const auto& ed = g.edge(e);
        if (ed.is_loop() || in_forest[e])
            throw Error(ErrorCode::E_DOMAIN, "invalid spanning forest");
        in_forest[e] = true;
        adj[ed.tail].push_back({ed.head, e});
        adj[ed.head].push_back({ed.tail, e});
    }
    ForestIndex fi;
    fi.parent_edge.assign(n, -2);
    fi.parent_vertex.assign(n, -1);
    fi.depth.assign(n, 0);
    fi.root.assign(n, -1);
    for (int root = 0; root < n; ++root) {
        if (fi.parent_edge[root] != -2) continue;
        fi.parent_edge[root] = -1;
        fi.root[root] = root;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, e] : adj[v]) {
                if (fi.parent_edge[u] != -2) continue;
                fi.parent_edge[u] = e;
                fi.parent_vertex[u] = v;
                fi.depth[u] = fi.depth[v] + 1;
                fi.root[u] = root;
                stack.push_back(u);
            }
        }
    }
    // A spanning forest must reach every vertex and be acyclic.
    int reached_edges = 0;
    for (int v = 0; v < n; ++v)
        if (fi.parent_edge[v] >= 0) ++reached_edges;
    if (reached_edges != static_cast<int>(forest.size()))
        throw Error(ErrorCode::E_DOMAIN, "invalid spanning forest: contains a cycle");
    return fi;
}

}  // namespace

Chain tree_path(const MetricGraph& g, const std::vector<int>& forest, int from, int to) {
    ForestIndex fi = index_forest(g, forest);
    if (fi.root[from] != fi.root[to])
        throw Error(ErrorCode::E_DOMAIN, "tree_path: endpoints not connected in the forest");
    Chain path(g.edge_count());
    int a = from, b = to;
    // Walk both endpoints up to their common ancestor; the chain is oriented
    // from -> to, so edges climbed from `to` enter positively when they point
    // down towards it.
    auto step = [&](int v, Rational sign) {
        int e = fi.parent_edge[v];
        const auto& ed = g.edge(e);
        // Climbing from v to parent(v): traversal direction is v -> parent.
        Rational coeff = (ed.tail == v) ? Rational(1) : Rational(-1);
        path[e] += sign * coeff;
        return fi.parent_vertex[v];
    };
    while (fi.depth[a] > fi.depth[b]) a = step(a, Rational(1));
    while (fi.depth[b] > fi.depth[a]) b = step(b, Rational(-1));
    while (a != b) {
        a = step(a, Rational(1));
        b = step(b, Rational(-1));
    }
    return path;
}

std::vector<Chain> cycle_basis(const MetricGraph& g, const std::vector<int>& forest) {
    ForestIndex fi = index_forest(g, forest);  // validates
    std::vector<bool> in_forest(g.edge_count(), false);
    for (int e : forest) in_forest[e] = true;
    std::vector<Chain> basis;
    for (int f = 0; f < g.edge_count(); ++f) {
        if (in_forest[f]) continue;
        Chain gamma = tree_path(g, forest, g.edge(f).head, g.edge(f).tail);
        gamma[f] += 1;
        basis.push_back(std::move(gamma));
    }
    return basis;
}

Rational edge_pairing(const MetricGraph& g, const Chain& c1, const Chain& c2) {
    Rational r(0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (c1[e] == 0 || c2[e] == 0) continue;
        r += c1[e] * c2[e] * g.edge(e).length;
    }
    return r;
}

SubdivisionResult subdivide_type(const MetricGraph& g, EdgeSet s, const Divisor& d) {
    std::vector<VertexData> vertices = g.vertices();
    std::vector<EdgeData> edges;
    std::vector<Int> values(d.values());
    std::vector<int> exceptional;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (!((s >> e) & 1u)) {
            edges.push_back(ed);
            continue;
        }
        int mid = static_cast<int>(vertices.size());
        vertices.push_back({ed.id + ":mid", 0});
        values.push_back(1);
        exceptional.push_back(mid);
        Rational half = ed.length / 2;
        edges.push_back({ed.id + ":a", ed.tail, mid, half});
        edges.push_back({ed.id + ":b", mid, ed.head, half});
    }
    return SubdivisionResult{MetricGraph(std::move(vertices), std::move(edges)),
                             Divisor(std::move(values)), std::move(exceptional)};
}

std::vector<VertexSet> components_minus(const MetricGraph& g, EdgeSet s) {
    UnionFind uf(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if ((s >> e) & 1u) continue;
        uf.unite(g.edge(e).tail, g.edge(e).head);
    }
    std::vector<VertexSet> comps;
    std::unordered_map<int, std::size_t> root_to_idx;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int r = uf.find(v);
        auto it = root_to_idx.find(r);
        if (it == root_to_idx.end()) {
            it = root_to_idx.emplace(r, comps.size()).first;
            comps.push_back(0);
        }
        comps[it->second] |= VertexSet(1) << v;
    }
    return comps;
}

MetricGraph induced_subgraph(const MetricGraph& g, VertexSet w, EdgeSet s,
                             std::vector<int>& vertex_map) {
    vertex_map.assign(g.vertex_count(), -1);
    std::vector<VertexData> vertices;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (set_contains(w, v)) {
            vertex_map[v] = static_cast<int>(vertices.size());
            vertices.push_back(g.vertex(v));
        }
    }
    std::vector<EdgeData> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        if ((s >> e) & 1u) continue;
        const auto& ed = g.edge(e);
        if (set_contains(w, ed.tail) && set_contains(w, ed.head))
            edges.push_back({ed.id, vertex_map[ed.tail], vertex_map[ed.head], ed.length});
    }
    return MetricGraph(std::move(vertices), std::move(edges));
}

}  // namespace tropjac
