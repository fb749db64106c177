#include "tropjac/lattice.hpp"

namespace tropjac {

LatticeData lattice_data(const MetricGraph& g) {
    if (!g.connected())
        throw Error(ErrorCode::E_DOMAIN, "lattice_data: graph must be connected");
    LatticeData l;
    l.forest = spanning_forest(g);
    std::vector<bool> in_forest(g.edge_count(), false);
    for (int e : l.forest) in_forest[e] = true;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_forest[e]) l.nontree.push_back(e);
    l.basis = cycle_basis(g, l.forest);
    int n = l.rank();
    l.gram.assign(n, VecQ(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            Rational v = edge_pairing(g, l.basis[i], l.basis[j]);
            l.gram[i][j] = v;
            l.gram[j][i] = v;
        }
    l.gram_det = n == 0 ? Rational(1) : determinant(l.gram);
    if (n > 0) l.gram_inverse = inverse(l.gram);
    return l;
}

VecQ chain_coords(const MetricGraph& g, const LatticeData& l, const Chain& c) {
    VecQ x;
    x.reserve(l.rank());
    for (const auto& gamma : l.basis) x.push_back(edge_pairing(g, c, gamma));
    return x;
}

std::optional<std::vector<Int>> lattice_membership(const LatticeData& l, const VecQ& x) {
    int n = l.rank();
    std::vector<Int> a(n, 0);
    if (n == 0) return a;
    // x = a^T gram with gram symmetric, so solve gram * a = x.
    VecQ sol = mat_apply(l.gram_inverse, x);
    for (int i = 0; i < n; ++i) {
        if (!is_integer(sol[i])) return std::nullopt;
        a[i] = rat_floor(sol[i]);
    }
    return a;
}

VecQ lattice_vector(const LatticeData& l, const std::vector<Int>& a) {
    int n = l.rank();
    VecQ x(n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[j] += Rational(static_cast<long>(a[i])) * l.gram[i][j];
    return x;
}

Chain abel_jacobi_chain(const MetricGraph& g, const std::vector<int>& forest, int basepoint,
                        const TropicalDivisor& d) {
    Chain xi(g.edge_count());
    for (const auto& [loc, mult] : d.points()) {
        TropicalDivisor::validate_location(g, loc);
        Rational m(static_cast<long>(mult));
        if (loc.is_vertex()) {
            xi = xi + tree_path(g, forest, basepoint, loc.vertex).scaled(m);
        } else {
            const auto& ed = g.edge(loc.edge);
            Chain seg = tree_path(g, forest, basepoint, ed.tail);
            seg[loc.edge] += loc.offset / ed.length;
            xi = xi + seg.scaled(m);
        }
    }
    return xi;
}

VecQ abel_jacobi(const MetricGraph& g, const LatticeData& l, int basepoint,
                 const TropicalDivisor& d, const std::vector<int>* alt_forest) {
    if (basepoint < 0 || basepoint >= g.vertex_count())
        throw Error(ErrorCode::E_ID, "abel_jacobi: basepoint must be a vertex");
    const std::vector<int>& forest = alt_forest ? *alt_forest : l.forest;
    return chain_coords(g, l, abel_jacobi_chain(g, forest, basepoint, d));
}

}  // namespace tropjac
