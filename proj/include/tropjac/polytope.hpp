#pragma once

#include "tropjac/linalg.hpp"

namespace tropjac {

/// Affine image of a unit box: base + sum of t_i * gens[i], t in [0,1]^k.
/// Zero generators are legal (they add a free parameter, not a direction).
struct Zonotope {
    VecQ base;
    std::vector<VecQ> gens;

    int ambient_dim() const { return static_cast<int>(base.size()); }
};

int zonotope_rank(const Zonotope& z);

/// n-dimensional volume: sum over n-element generator subsets of |det|.
/// By convention the empty determinant is 1, so rank-0 cells in a rank-0
/// ambient space have volume 1; lower-dimensional cells get 0.
Rational zonotope_volume(const Zonotope& z, int n);

void zonotope_bbox(const Zonotope& z, VecQ& lo, VecQ& hi);

/// Exact halfspace description: affine hull equalities plus facet
/// inequalities (in_a . x <= in_b) with primitive integer facet normals.
struct HRep {
    MatQ eq_a;
    VecQ eq_b;
    MatQ in_a;
    VecQ in_b;
    int dim = 0;
};

HRep zonotope_hrep(const Zonotope& z);
HRep hrep_translate(const HRep& h, const VecQ& shift);

bool hrep_contains(const HRep& h, const VecQ& p);
bool hrep_contains_relint(const HRep& h, const VecQ& p);

/// Vertices of the zonotope (subset sums that are extreme points).
std::vector<VecQ> zonotope_vertices(const Zonotope& z, const HRep& h);

/// Vertices of the intersection of two H-polytopes in R^n (exact; intended
/// for n <= 3 where the constraint-subset enumeration stays small).
std::vector<VecQ> intersection_vertices(const HRep& a, const HRep& b, int n);

/// Whether the intersection of A and B is a common face of both. Vertex
/// lists must belong to the respective H-reps.
bool intersection_is_common_face(const HRep& a, const std::vector<VecQ>& verts_a,
                                 const HRep& b, const std::vector<VecQ>& verts_b, int n);

/// Least parameters for p = base + G t, t in [0,1]^k, in lexicographic
/// order; nullopt when p is outside the closed zonotope.
std::optional<VecQ> zonotope_lex_params(const Zonotope& z, const VecQ& p);

/// Canonical interior parameters for a relative-interior point: maximize
/// the margin min(t_i, 1 - t_i), then take the lexicographically least
/// optimum. Returns nullopt when no strictly interior parameters exist.
std::optional<VecQ> zonotope_interior_params(const Zonotope& z, const VecQ& p);

/// Per-coordinate [min, max] of t over the closed solution set; nullopt when
/// p is not in the zonotope. Used to detect parameter uniqueness.
std::optional<std::vector<std::pair<Rational, Rational>>> zonotope_param_ranges(
    const Zonotope& z, const VecQ& p);

}  // namespace tropjac
