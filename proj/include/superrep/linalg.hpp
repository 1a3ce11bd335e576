#pragma once

#include "superrep/rational.hpp"

#include <cstddef>
#include <vector>

namespace superrep {

/// Dense exact matrices. QMatrix is rational, GMatrix Gaussian-rational,
/// IMatrix plain integer (Weyl actions). All are row-major vector-of-rows.
using QMatrix = std::vector<std::vector<Rat>>;
using GMatrix = std::vector<std::vector<GaussRat>>;
using IMatrix = std::vector<std::vector<long long>>;

template <typename M>
M make_matrix(std::size_t rows, std::size_t cols) {
  return M(rows, typename M::value_type(cols));
}

template <typename M>
M identity_matrix(std::size_t n) {
  M m = make_matrix<M>(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

template <typename M>
M mat_mul(const M& a, const M& b) {
  const std::size_t r = a.size(), k = b.size(), c = b.at(0).size();
  M out = make_matrix<M>(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      const auto& ail = a[i][l];
      if (ail == typename M::value_type::value_type{}) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += ail * b[l][j];
    }
  return out;
}

template <typename M>
M mat_add(const M& a, const M& b) {
  M out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

template <typename M>
M mat_sub(const M& a, const M& b) {
  M out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

template <typename M, typename S>
M mat_scale(const M& a, const S& s) {
  M out = a;
  for (auto& row : out)
    for (auto& x : row) x = x * s;
  return out;
}

template <typename M>
M mat_commutator(const M& a, const M& b) {
  return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

template <typename M>
bool mat_is_zero(const M& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!(x == typename M::value_type::value_type{})) return false;
  return true;
}

/// Kronecker product, block layout (a[i][j] * b).
template <typename M>
M kron(const M& a, const M& b) {
  const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  M out = make_matrix<M>(ar * br, ac * bc);
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

/// Exact Gauss-Jordan inverse; throws on singular input.
QMatrix mat_inverse(const QMatrix& a);

/// Rank over the rationals (Gaussian elimination on a copy).
int mat_rank(const QMatrix& a);

/// Nullspace basis of an m×n system over a field (QMatrix or GMatrix
/// instantiations live in linalg.cpp). Rows of the result are basis vectors.
std::vector<std::vector<GaussRat>> nullspace(const GMatrix& a);

}  // namespace superrep
