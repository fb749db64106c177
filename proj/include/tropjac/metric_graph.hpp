#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropjac/errors.hpp"
#include "tropjac/linalg.hpp"
#include "tropjac/rational.hpp"

namespace tropjac {

/// Subset of vertices encoded as a bitmask over vertex indices.
using VertexSet = std::uint64_t;

inline bool set_contains(VertexSet w, int v) { return (w >> v) & 1u; }
inline int set_size(VertexSet w) { return __builtin_popcountll(w); }
inline VertexSet full_set(int n) { return n == 64 ? ~VertexSet(0) : ((VertexSet(1) << n) - 1); }

/// Subset of edges encoded as a bitmask over edge indices.
using EdgeSet = std::uint64_t;

struct VertexData {
    std::string id;
    Int weight = 0;  // geometric genus carried by the vertex
};

struct EdgeData {
    std::string id;
    int tail = -1;
    int head = -1;
    Rational length;  // > 0
    bool is_loop() const { return tail == head; }
};

/// Vertex-weighted metric multigraph. Loops and parallel edges are allowed.
/// Immutable after construction.
class MetricGraph {
public:
    MetricGraph(std::vector<VertexData> vertices, std::vector<EdgeData> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const VertexData& vertex(int v) const { return vertices_[v]; }
    const EdgeData& edge(int e) const { return edges_[e]; }
    const std::vector<VertexData>& vertices() const { return vertices_; }
    const std::vector<EdgeData>& edges() const { return edges_; }

    int vertex_index(const std::string& id) const;  // throws E_ID when unknown
    int edge_index(const std::string& id) const;

    int component_count() const { return component_count_; }
    bool connected() const { return component_count_ == 1; }
    int component_of(int v) const { return component_[v]; }

    /// Total genus: sum of vertex weights plus first Betti number.
    Int genus() const;
    Int weight_sum() const;

private:
    std::vector<VertexData> vertices_;
    std::vector<EdgeData> edges_;
    std::vector<int> component_;
    int component_count_ = 0;
};

/// Integer vertex function with componentwise arithmetic.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(int n) : values_(n, 0) {}
    explicit Divisor(std::vector<Int> values) : values_(std::move(values)) {}

    int size() const { return static_cast<int>(values_.size()); }
    Int operator[](int v) const { return values_[v]; }
    Int& operator[](int v) { return values_[v]; }
    const std::vector<Int>& values() const { return values_; }

    Int degree() const;
    Int sum_over(VertexSet w) const;

    Divisor operator+(const Divisor& o) const;
    Divisor operator-(const Divisor& o) const;
    Divisor operator*(Int k) const;
    bool operator==(const Divisor& o) const = default;
    auto operator<=>(const Divisor& o) const = default;

private:
    std::vector<Int> values_;
};

/// 1-chain with rational coefficients, relative to the stored edge orientations.
class Chain {
public:
    Chain() = default;
    explicit Chain(int edge_count) : coeffs_(edge_count, Rational(0)) {}
    explicit Chain(VecQ coeffs) : coeffs_(std::move(coeffs)) {}

    int size() const { return static_cast<int>(coeffs_.size()); }
    const Rational& operator[](int e) const { return coeffs_[e]; }
    Rational& operator[](int e) { return coeffs_[e]; }
    const VecQ& coeffs() const { return coeffs_; }

    Chain operator+(const Chain& o) const { return Chain(vec_add(coeffs_, o.coeffs_)); }
    Chain operator-(const Chain& o) const { return Chain(vec_sub(coeffs_, o.coeffs_)); }
    Chain scaled(const Rational& s) const { return Chain(vec_scale(s, coeffs_)); }
    bool operator==(const Chain& o) const { return coeffs_ == o.coeffs_; }

    /// Boundary: value at head(e) gets +coeff, at tail(e) -coeff per edge.
    VecQ boundary(const MetricGraph& g) const;

private:
    VecQ coeffs_;
};

/// Point on the metric graph: a vertex, or an interior point of an edge
/// at rational distance `offset` from the tail (0 < offset < length).
struct Location {
    int vertex = -1;  // >= 0 for vertex locations
    int edge = -1;    // >= 0 for edge-interior locations
    Rational offset;

    static Location at_vertex(int v) { return Location{v, -1, Rational(0)}; }
    static Location on_edge(int e, Rational t) { return Location{-1, e, std::move(t)}; }
    bool is_vertex() const { return vertex >= 0; }
    bool operator==(const Location& o) const {
        return vertex == o.vertex && edge == o.edge && offset == o.offset;
    }
};

/// Divisor on the metric graph: finitely many located points with integer
/// multiplicities. Kept sorted and merged; zero multiplicities dropped.
class TropicalDivisor {
public:
    TropicalDivisor() = default;

    void add(const Location& loc, Int multiplicity);
    void add_vertex(int v, Int multiplicity) { add(Location::at_vertex(v), multiplicity); }

    const std::vector<std::pair<Location, Int>>& points() const { return points_; }
    Int degree() const;
    bool operator==(const TropicalDivisor& o) const { return points_ == o.points_; }

    /// Vertex-supported divisor as a TropicalDivisor.
    static TropicalDivisor from_divisor(const Divisor& d);

    static void validate_location(const MetricGraph& g, const Location& loc);

private:
    std::vector<std::pair<Location, Int>> points_;
};

// --- subcurve arithmetic -----------------------------------------------

/// Per-subcurve counts of non-loop boundary edges, split by S-membership,
/// plus the number of S-edges internal to W (loops included).
struct BoundaryCounts {
    Int total = 0;       // non-loop edges between W and its complement
    Int in_s = 0;        // of those, edges in S
    Int not_in_s = 0;    // of those, edges not in S
    Int s_internal = 0;  // S-edges with both endpoints in W (loops count)
};

/// Arithmetic genus of the subcurve induced on W: sum of weights plus
/// |E(W)| - |W| + 1, where E(W) are edges with both endpoints in W.
/// May be negative when the subcurve is disconnected.
Int arithmetic_genus(const MetricGraph& g, VertexSet w);

/// Genus after normalizing the S-nodes internal to W.
Int normalized_genus(const MetricGraph& g, VertexSet w, EdgeSet s);

BoundaryCounts boundary_counts(const MetricGraph& g, VertexSet w, EdgeSet s);

/// Deterministic spanning forest: edges taken in index order (Kruskal),
/// loops never included.
std::vector<int> spanning_forest(const MetricGraph& g);

/// Fundamental cycles for the given spanning forest, one per non-tree edge
/// in index order: gamma_i = f_i + tree path from head(f_i) to tail(f_i).
/// Each has zero boundary and f-coordinates equal to a standard unit vector.
std::vector<Chain> cycle_basis(const MetricGraph& g, const std::vector<int>& forest);

/// Edge-length inner product sum_e c1(e) c2(e) l(e).
Rational edge_pairing(const MetricGraph& g, const Chain& c1, const Chain& c2);

/// Tree path from `from` to `to` as a chain supported on the forest.
/// Both vertices must lie in the same component.
Chain tree_path(const MetricGraph& g, const std::vector<int>& forest, int from, int to);

/// Result of subdividing the S-edges at their midpoints: each e in S becomes
/// two half-length edges through a fresh weight-0 vertex carrying divisor
/// value 1.
struct SubdivisionResult {
    MetricGraph graph;
    Divisor divisor;
    std::vector<int> exceptional_vertices;  // one per S-edge, in index order
};

SubdivisionResult subdivide_type(const MetricGraph& g, EdgeSet s, const Divisor& d);

/// Connected components of G - S (S-edges deleted, vertices kept),
/// as vertex sets in increasing order of least vertex.
std::vector<VertexSet> components_minus(const MetricGraph& g, EdgeSet s);

/// Restriction of the graph to the vertices of `w`, keeping only non-S edges
/// with both endpoints inside. `vertex_map` sends old indices to new ones.
MetricGraph induced_subgraph(const MetricGraph& g, VertexSet w, EdgeSet s,
                             std::vector<int>& vertex_map);

}  // namespace tropjac
