#pragma once

#include <vector>

#include "tropjac/rational.hpp"

namespace tropjac {

using VecQ = std::vector<Rational>;
using MatQ = std::vector<VecQ>;  // row-major, rectangular

VecQ vec_zero(std::size_t n);
VecQ vec_add(const VecQ& a, const VecQ& b);
VecQ vec_sub(const VecQ& a, const VecQ& b);
VecQ vec_scale(const Rational& s, const VecQ& a);
Rational dot(const VecQ& a, const VecQ& b);
bool vec_is_zero(const VecQ& a);

MatQ mat_identity(std::size_t n);
MatQ mat_mul(const MatQ& a, const MatQ& b);
VecQ mat_apply(const MatQ& a, const VecQ& x);
MatQ mat_transpose(const MatQ& a);

Rational determinant(MatQ a);
std::size_t rank(MatQ a);

/// Inverse of a square nonsingular matrix; throws std::domain_error if singular.
MatQ inverse(const MatQ& a);

/// One solution x of A x = b, or nullopt when inconsistent.
std::optional<VecQ> solve(const MatQ& a, const VecQ& b);

/// Basis of the null space of A (column dimension = a[0].size()).
std::vector<VecQ> nullspace(const MatQ& a);

/// Basis of the orthogonal complement of span(rows) inside R^n (standard dot).
std::vector<VecQ> orthogonal_complement(const std::vector<VecQ>& rows, std::size_t n);

/// Scale a nonzero rational vector to a primitive integer vector, first
/// nonzero entry positive. Throws on the zero vector.
std::vector<Int> primitive_integer_direction(const VecQ& v);

}  // namespace tropjac
