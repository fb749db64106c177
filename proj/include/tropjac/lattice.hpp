#pragma once

#include "tropjac/metric_graph.hpp"

namespace tropjac {

/// Cycle-space lattice data of a connected metric graph. Coordinates are
/// x_j(c) = <c, gamma_j>_l; in them the period lattice is generated by the
/// rows of the Gram matrix and its dual is the standard integer lattice.
struct LatticeData {
    std::vector<int> forest;   // spanning forest edge indices
    std::vector<int> nontree;  // non-forest edges, one per basis element
    std::vector<Chain> basis;  // fundamental cycles gamma_1..gamma_n
    MatQ gram;                 // <gamma_i, gamma_j>_l
    MatQ gram_inverse;         // empty when rank() == 0
    Rational gram_det;         // 1 for rank 0

    int rank() const { return static_cast<int>(basis.size()); }
};

LatticeData lattice_data(const MetricGraph& g);

/// Coordinates of a chain under the integration pairing against the basis.
VecQ chain_coords(const MetricGraph& g, const LatticeData& l, const Chain& c);

/// Membership of a coordinate vector in the period lattice; returns the
/// integer combination of Gram rows when it exists.
std::optional<std::vector<Int>> lattice_membership(const LatticeData& l, const VecQ& x);

/// Lattice vector from integer coefficients: sum a_i * row_i(gram).
VecQ lattice_vector(const LatticeData& l, const std::vector<Int>& a);

/// Abel-Jacobi coordinates of a divisor relative to the basepoint: a chain
/// xi with boundary D - deg(D) * basepoint is integrated against the basis.
/// Canonical paths follow the stored spanning forest; passing `alt_forest`
/// chooses paths in another forest (the result then differs by a lattice
/// vector, which callers may verify with lattice_membership).
VecQ abel_jacobi(const MetricGraph& g, const LatticeData& l, int basepoint,
                 const TropicalDivisor& d,
                 const std::vector<int>* alt_forest = nullptr);

/// The chain used by abel_jacobi (exposed for tests).
Chain abel_jacobi_chain(const MetricGraph& g, const std::vector<int>& forest, int basepoint,
                        const TropicalDivisor& d);

}  // namespace tropjac
