#include "tropjac/simplex.hpp"

#include <stdexcept>

namespace tropjac {

namespace {

struct Tableau {
    MatQ t;                  // m rows x (cols + 1), last column = rhs
    VecQ z;                  // reduced-cost row, length cols + 1 (rhs = -objective)
    std::vector<int> basis;  // basic variable per row
    int cols = 0;

    void pivot(int row, int col) {
        Rational inv = 1 / t[row][col];
        for (int j = 0; j <= cols; ++j) t[row][j] *= inv;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (static_cast<int>(i) == row || t[i][col] == 0) continue;
            Rational f = t[i][col];
            for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[row][j];
        }
        if (z[col] != 0) {
            Rational f = z[col];
            for (int j = 0; j <= cols; ++j) z[j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    // Bland's rule; returns false at optimality, throws when unbounded.
    bool step() {
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) return false;
        int leave = -1;
        Rational best;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = static_cast<int>(i);
                best = ratio;
            }
        }
        if (leave < 0) throw std::domain_error("lp_minimize: unbounded objective");
        pivot(leave, enter);
        return true;
    }
};

}  // namespace

std::optional<LPSolution> lp_minimize(const MatQ& a, const VecQ& b, const VecQ& c) {
    int m = static_cast<int>(a.size());
    int n = m ? static_cast<int>(a[0].size()) : static_cast<int>(c.size());

    Tableau tab;
    tab.cols = n + m;  // real variables then artificials
    tab.t.assign(m, VecQ(tab.cols + 1, Rational(0)));
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        bool flip = b[i] < 0;
        for (int j = 0; j < n; ++j) tab.t[i][j] = flip ? -a[i][j] : a[i][j];
        tab.t[i][tab.cols] = flip ? -b[i] : b[i];
        tab.t[i][n + i] = 1;
        tab.basis[i] = n + i;
    }

    // Phase 1: minimize the sum of artificials.
    tab.z.assign(tab.cols + 1, Rational(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= tab.cols; ++j)
            if (j < n || j == tab.cols) tab.z[j] -= tab.t[i][j];
    while (tab.step()) {
    }
    if (tab.z[tab.cols] != 0) return std::nullopt;  // -objective != 0

    // Drive artificials out of the basis; drop redundant rows.
    for (int i = static_cast<int>(tab.t.size()) - 1; i >= 0; --i) {
        if (tab.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        if (col >= 0) {
            tab.pivot(i, col);
        } else {
            tab.t.erase(tab.t.begin() + i);
            tab.basis.erase(tab.basis.begin() + i);
        }
    }

    // Phase 2 on the real objective (artificial columns ignored via cost +inf
    // surrogate: simply forbid re-entry by leaving their reduced costs at 0
    // and zeroing their tableau columns).
    for (auto& row : tab.t)
        for (int j = n; j < tab.cols; ++j) row[j] = 0;
    tab.z.assign(tab.cols + 1, Rational(0));
    for (int j = 0; j < n; ++j) tab.z[j] = c[j];
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
        if (tab.z[tab.basis[i]] == 0) continue;
        Rational f = tab.z[tab.basis[i]];
        for (int j = 0; j <= tab.cols; ++j) tab.z[j] -= f * tab.t[i][j];
    }
    while (tab.step()) {
    }

    LPSolution sol;
    sol.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < tab.t.size(); ++i)
        if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.t[i][tab.cols];
    sol.value = -tab.z[tab.cols];
    return sol;
}

}  // namespace tropjac
