#pragma once

#include <optional>
#include <vector>

#include "tropjac/metric_graph.hpp"

namespace tropjac {

/// Combinatorial type of a rank-1 torsion-free sheaf: the set S of nodes at
/// which it fails to be locally free, plus the multidegree d.
struct SheafType {
    EdgeSet s = 0;
    Divisor d;

    Int degree() const { return d.degree() + set_size(s); }
    bool operator==(const SheafType& o) const = default;
    auto operator<=>(const SheafType& o) const = default;
};

/// Strictly positive vertex divisor entering the slope denominators.
class Polarization {
public:
    explicit Polarization(Divisor multidegree);
    const Divisor& multidegree() const { return d_; }
    Int operator[](int v) const { return d_[v]; }
    Int total() const { return total_; }
    Int sum_over(VertexSet w) const { return d_.sum_over(w); }

private:
    Divisor d_;
    Int total_;
};

struct StabilityReport {
    bool semistable = false;
    bool stable = false;
    bool polystable = false;
    std::vector<int> quasistable_for;           // vertices v with (S,d) v-quasistable
    std::vector<VertexSet> equality_subcurves;  // subcurves achieving slope equality
};

/// Oda-Seshadri stability parameter: rational vertex weights, plus the
/// epsilon used to tilt towards a section vertex when applicable.
struct OSParameter {
    VecQ q;
    std::optional<Rational> epsilon;
};

/// Enumeration caps; `force` lifts the soft limits.
struct Limits {
    int max_vertices = 16;
    Int max_types = 1000000;
    bool force = false;
};

void check_vertex_cap(const MetricGraph& g, const Limits& limits);

/// Slope (deg F + 1 - g) / deg H of a sheaf of the given type.
Rational slope(const MetricGraph& g, const Polarization& h, const SheafType& t);

/// Degree of the subsheaf of sections supported on the subcurve w.
Int subsheaf_degree(const MetricGraph& g, const SheafType& t, VertexSet w);

/// Right-hand side of the basic inequality for the subcurve w.
Rational basic_rhs(const MetricGraph& g, const Polarization& h, const SheafType& t, VertexSet w);

/// All proper nonempty subcurves where the basic inequality is an equality.
/// Empty optional when the type is not semistable.
std::optional<std::vector<VertexSet>> equality_subcurves(const MetricGraph& g,
                                                         const Polarization& h,
                                                         const SheafType& t,
                                                         const Limits& limits = {});

bool is_semistable(const MetricGraph& g, const Polarization& h, const SheafType& t,
                   const Limits& limits = {});
bool is_stable(const MetricGraph& g, const Polarization& h, const SheafType& t,
               const Limits& limits = {});
bool is_polystable(const MetricGraph& g, const Polarization& h, const SheafType& t,
                   const Limits& limits = {});
bool is_quasistable(const MetricGraph& g, const Polarization& h, const SheafType& t, int v,
                    const Limits& limits = {});

StabilityReport classify(const MetricGraph& g, const Polarization& h, const SheafType& t,
                         const Limits& limits = {});

/// Jordan-Hoelder grading at the type level: peel slope-equality subcurves
/// until the type is polystable. Seeded variants pick randomly among the
/// admissible inclusion-minimal subcurves; the result is choice-independent.
SheafType grade(const MetricGraph& g, const Polarization& h, const SheafType& t,
                std::optional<std::uint64_t> seed = std::nullopt, const Limits& limits = {});

enum class TypeMode { Semistable, Stable, Polystable, Quasistable, BoxAll };

/// All types of the given total degree satisfying the mode predicate,
/// duplicate-free, ordered by (S, d). `section` is required for Quasistable.
/// BoxAll lists every type in the semistable bounding box padded by one,
/// which is the finite universe used for the brute-force cross-checks.
std::vector<SheafType> enumerate_types(const MetricGraph& g, const Polarization& h, Int degree,
                                       TypeMode mode, int section = -1,
                                       const Limits& limits = {});

SheafType twist(const SheafType& t, int v, Int k);

/// Oda-Seshadri parameter associated to (H, degree, basepoint), evaluated at
/// the type's S for the half-integral boundary term.
OSParameter os_parameter(const MetricGraph& g, const Polarization& h, Int degree, int basepoint,
                         const SheafType& t);

/// q-(semi)stability for degree-0 types.
bool os_is_semistable(const MetricGraph& g, const OSParameter& q, const SheafType& t,
                      const Limits& limits = {});
bool os_is_stable(const MetricGraph& g, const OSParameter& q, const SheafType& t,
                  const Limits& limits = {});

/// Deterministic epsilon: half the minimum positive slack of the
/// Oda-Seshadri inequality over all semistable types of the degree, clamped
/// to 1/2. Always in (0,1).
Rational epsilon_for_quasistability(const MetricGraph& g, const Polarization& h, Int degree,
                                    int section, const Limits& limits = {});

/// Parameter whose stable types correspond to v-quasistable ones. Equals
/// os_parameter when every quasistable type of the degree is already stable.
OSParameter os_parameter_v(const MetricGraph& g, const Polarization& h, Int degree,
                           int basepoint, int section, const SheafType& t,
                           const Limits& limits = {});

}  // namespace tropjac
