#include "tropjac/linalg.hpp"

#include <stdexcept>

namespace tropjac {

VecQ vec_zero(std::size_t n) { return VecQ(n, Rational(0)); }

VecQ vec_add(const VecQ& a, const VecQ& b) {
    VecQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

VecQ vec_sub(const VecQ& a, const VecQ& b) {
    VecQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

VecQ vec_scale(const Rational& s, const VecQ& a) {
    VecQ r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rational dot(const VecQ& a, const VecQ& b) {
    Rational r(0);
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

bool vec_is_zero(const VecQ& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

MatQ mat_identity(std::size_t n) {
    MatQ m(n, vec_zero(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

MatQ mat_mul(const MatQ& a, const MatQ& b) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    MatQ r(n, vec_zero(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (a[i][j] != 0)
                for (std::size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
    return r;
}

VecQ mat_apply(const MatQ& a, const VecQ& x) {
    VecQ r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
    return r;
}

MatQ mat_transpose(const MatQ& a) {
    std::size_t n = a.size(), m = n ? a[0].size() : 0;
    MatQ r(m, vec_zero(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

namespace {

// Fraction-free-ish Gaussian elimination; returns pivot columns.
// Reduces `a` to row echelon form in place (optionally carrying `rhs`).
std::vector<std::size_t> echelon(MatQ& a, VecQ* rhs) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        if (rhs) (*rhs)[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (rhs) (*rhs)[i] -= f * (*rhs)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Rational determinant(MatQ a) {
    std::size_t n = a.size();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Rational inv = 1 / a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

std::size_t rank(MatQ a) { return echelon(a, nullptr).size(); }

MatQ inverse(const MatQ& a) {
    std::size_t n = a.size();
    MatQ work(n, vec_zero(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work[i][j] = a[i][j];
        work[i][n + i] = 1;
    }
    auto pivots = echelon(work, nullptr);
    if (pivots.size() != n) throw std::domain_error("inverse: singular matrix");
    MatQ r(n, vec_zero(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = work[i][n + j];
    return r;
}

std::optional<VecQ> solve(const MatQ& a, const VecQ& b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    MatQ m = a;
    VecQ rhs = b;
    auto pivots = echelon(m, &rhs);
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    VecQ x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
    return x;
}

std::vector<VecQ> nullspace(const MatQ& a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    if (rows == 0) {
        // Null space of the empty map is everything; caller supplies cols via a[0],
        // so an empty matrix means dimension unknown -- treat as no constraints on 0 vars.
        return {};
    }
    MatQ m = a;
    auto pivots = echelon(m, nullptr);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<VecQ> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        VecQ v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<VecQ> orthogonal_complement(const std::vector<VecQ>& rows, std::size_t n) {
    if (rows.empty()) return mat_identity(n);
    MatQ m;
    for (const auto& r : rows) m.push_back(r);
    return nullspace(m);
}

std::vector<Int> primitive_integer_direction(const VecQ& v) {
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& x : v) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<mpz_class> scaled;
    scaled.reserve(v.size());
    for (const auto& x : v) {
        mpz_class num = x.get_num() * (lcm_den / x.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
        scaled.push_back(num);
    }
    if (gcd_num == 0) throw std::domain_error("primitive_integer_direction: zero vector");
    int sign = 0;
    for (const auto& z : scaled) {
        if (z != 0) {
            sign = mpz_sgn(z.get_mpz_t());
            break;
        }
    }
    std::vector<Int> out;
    out.reserve(v.size());
    for (const auto& z : scaled) {
        mpz_class q = z / gcd_num * sign;
        if (!q.fits_slong_p()) throw std::overflow_error("primitive direction overflow");
        out.push_back(static_cast<Int>(q.get_si()));
    }
    return out;
}

}  // namespace tropjac
