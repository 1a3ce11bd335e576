#include "superrep/cliffmat.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace superrep {

namespace {

GMatrix pauli_i() {
  GMatrix m = make_matrix<GMatrix>(2, 2);
  m[0][0] = 1;
  m[1][1] = 1;
  return m;
}
GMatrix pauli_x() {
  GMatrix m = make_matrix<GMatrix>(2, 2);
  m[0][1] = 1;
  m[1][0] = 1;
  return m;
}
// i*Y has rational entries, which keeps every generator in {0, +-1, +-i}.
GMatrix pauli_iy() {
  GMatrix m = make_matrix<GMatrix>(2, 2);
  m[0][1] = 1;
  m[1][0] = GaussRat(-1);
  return m;
}
GMatrix pauli_z() {
  GMatrix m = make_matrix<GMatrix>(2, 2);
  m[0][0] = 1;
  m[1][1] = GaussRat(-1);
  return m;
}

GMatrix kron_chain(const std::vector<GMatrix>& factors) {
  GMatrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
  return acc;
}

void require_antisymmetric(const QMatrix& a, int n) {
  if (static_cast<int>(a.size()) != n)
    throw std::invalid_argument("matrix size does not match the generator count");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix size does not match the generator count");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (a[i][j] != -a[j][i])
        throw std::invalid_argument("matrix is not antisymmetric");
}

GMatrix to_gauss(const QMatrix& a) {
  GMatrix out = make_matrix<GMatrix>(a.size(), a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = GaussRat(a[i][j]);
  return out;
}

// Rank of the row span, computed from the nullspace dimension.
int row_rank(const std::vector<std::vector<GaussRat>>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  GMatrix a = rows;
  return static_cast<int>(cols - nullspace(a).size());
}

std::vector<GaussRat> flatten(const GMatrix& m) {
  std::vector<GaussRat> out;
  out.reserve(m.size() * m.size());
  for (const auto& row : m)
    for (const auto& x : row) out.push_back(x);
  return out;
}

// Image of a basis vector under an antisymmetric matrix, realized inside the
// Clifford algebra: sum_l A[l][j] e_l.
GMatrix rotated_generator(const CliffordMatrixAlgebra& alg, const QMatrix& a, int j) {
  const std::size_t d = alg.generators.front().size();
  GMatrix out = make_matrix<GMatrix>(d, d);
  for (int l = 0; l < alg.n; ++l) {
    if (a[l][j] == 0) continue;
    out = mat_add(out, mat_scale(alg.generators[l], GaussRat(a[l][j])));
  }
  return out;
}

}  // namespace

CliffordMatrixAlgebra build_clifford(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("generator count must be between 1 and 6");
  const int k = (n + 1) / 2;
  CliffordMatrixAlgebra alg;
  alg.n = n;
  for (int g = 1; g <= n; ++g) {
    const int slot = (g + 1) / 2;  // qubit factor carrying X or Y, 1-based
    std::vector<GMatrix> factors;
    for (int p = 1; p <= k; ++p) {
      if (p < slot)
        factors.push_back(pauli_z());
      else if (p > slot)
        factors.push_back(pauli_i());
      else if (g % 2 == 1)
        factors.push_back(mat_scale(pauli_x(), GaussRat::i()));
      else
        factors.push_back(pauli_iy());
    }
    alg.generators.push_back(kron_chain(factors));
  }
  alg.grading = kron_chain(std::vector<GMatrix>(k, pauli_z()));
  return alg;
}

CommutantResult clifford_commutant(const CliffordMatrixAlgebra& alg) {
  const std::size_t d = alg.generators.front().size();
  const std::size_t unknowns = d * d;

  // Linear system (e T - T e)[r][c] = 0 in the d*d entries of T.
  GMatrix sys;
  for (const auto& e : alg.generators) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<GaussRat> row(unknowns);
        for (std::size_t p = 0; p < d; ++p) row[p * d + c] += e[r][p];
        for (std::size_t q = 0; q < d; ++q) row[r * d + q] -= e[q][c];
        sys.push_back(std::move(row));
      }
    }
  }
  auto basis = nullspace(sys);

  // The commutant is stable under conjugation by the grading, so it splits
  // into even and odd parts.
  std::vector<std::vector<GaussRat>> evens, odds;
  const GaussRat half(Rat(1, 2));
  for (const auto& vec : basis) {
    GMatrix t = make_matrix<GMatrix>(d, d);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) t[p][q] = vec[p * d + q];
    GMatrix conj = mat_mul(alg.grading, mat_mul(t, alg.grading));
    GMatrix even = mat_scale(mat_add(t, conj), half);
    GMatrix odd = mat_scale(mat_sub(t, conj), half);
    if (!mat_is_zero(even)) evens.push_back(flatten(even));
    if (!mat_is_zero(odd)) odds.push_back(flatten(odd));
  }

  CommutantResult out;
  out.even_dim = row_rank(evens, unknowns);
  out.odd_dim = row_rank(odds, unknowns);
  if (alg.n % 2 == 1) {
    // The product of all generators is central for odd n; scaling by i when
    // its square is -1 yields an odd involution in the commutant.
    GMatrix w = alg.generators.front();
    for (int g = 1; g < alg.n; ++g) w = mat_mul(w, alg.generators[g]);
    if ((alg.n * (alg.n + 1) / 2) % 2 != 0) w = mat_scale(w, GaussRat::i());
    if (mat_mul(w, w) != identity_matrix<GMatrix>(d))
      throw std::logic_error("odd commutant witness is not an involution");
    out.odd_involution = std::move(w);
  }
  return out;
}

GMatrix quantize(const CliffordMatrixAlgebra& alg, const QMatrix& a) {
  require_antisymmetric(a, alg.n);
  const std::size_t d = alg.generators.front().size();
  GMatrix out = make_matrix<GMatrix>(d, d);
  for (int i = 0; i < alg.n; ++i) {
    for (int j = 0; j < alg.n; ++j) {
      if (a[j][i] == 0) continue;
      out = mat_add(out, mat_scale(mat_mul(alg.generators[i], alg.generators[j]),
                                   GaussRat(a[j][i] / 4)));
    }
  }
  return out;
}

QuantizedAction quantize_action(const CliffordMatrixAlgebra& alg,
                                const std::vector<QMatrix>& lie_gens) {
  QuantizedAction out;
  out.lie_generators = lie_gens;
  for (const auto& a : lie_gens) out.quantized.push_back(quantize(alg, a));
  return out;
}

std::vector<QMatrix> so3_generators() {
  std::vector<QMatrix> gens(3, make_matrix<QMatrix>(3, 3));
  gens[0][2][1] = 1;
  gens[0][1][2] = -1;
  gens[1][0][2] = 1;
  gens[1][2][0] = -1;
  gens[2][1][0] = 1;
  gens[2][0][1] = -1;
  return gens;
}

Report thom_map_check(const CliffordMatrixAlgebra& alg,
                      const std::vector<QMatrix>& lie_gens,
                      bool drop_quarter) {
  const std::size_t d = alg.generators.front().size();
  const std::size_t nd = static_cast<std::size_t>(alg.n);
  std::vector<GMatrix> quantized;
  for (const auto& a : lie_gens) {
    GMatrix q = quantize(alg, a);
    if (drop_quarter) q = mat_scale(q, GaussRat(4));
    quantized.push_back(std::move(q));
  }
  const GMatrix id_v = identity_matrix<GMatrix>(nd);
  const GMatrix id_cl = identity_matrix<GMatrix>(d);

  // s(X) = X (x) 1 + 1 (x) r(X), acting on V (x) Cl.
  std::vector<GMatrix> action;
  for (std::size_t a = 0; a < lie_gens.size(); ++a)
    action.push_back(mat_add(kron(to_gauss(lie_gens[a]), id_cl),
                             kron(id_v, quantized[a])));

  Report report;

  {
    CheckRecord rec{"semidirect relation: [s(X), 1(x)v] = 1(x)X.v on generators",
                    true, ""};
    for (std::size_t a = 0; a < lie_gens.size() && rec.passed; ++a) {
      for (int j = 0; j < alg.n && rec.passed; ++j) {
        auto lhs = mat_commutator(action[a], kron(id_v, alg.generators[j]));
        auto rhs = kron(id_v, rotated_generator(alg, lie_gens[a], j));
        if (lhs != rhs) {
          rec.passed = false;
          std::ostringstream os;
          os << "Lie generator " << a << " against Clifford generator " << j;
          rec.witness = os.str();
        }
      }
    }
    report.checks.push_back(std::move(rec));
  }

  {
    // f(X (x) v) = X (x) v + 1 (x) r(X)v and its inverse, on the degree-one
    // slice spanned by Lie generators paired with Clifford words.
    CheckRecord rec{"untwisting map and its inverse compose to the identity",
                    true, ""};
    auto fwd = [&](std::size_t a, const GMatrix& m) {
      return mat_add(m, quantized[a]);
    };
    auto bwd = [&](std::size_t a, const GMatrix& m) {
      return mat_sub(m, quantized[a]);
    };
    for (std::size_t a = 0; a < lie_gens.size() && rec.passed; ++a) {
      std::vector<GMatrix> probes = {make_matrix<GMatrix>(d, d), id_cl};
      for (const auto& e : alg.generators) probes.push_back(e);
      for (const auto& m : probes) {
        if (bwd(a, fwd(a, m)) != m || fwd(a, bwd(a, m)) != m) {
          rec.passed = false;
          std::ostringstream os;
          os << "round trip moved a degree-one element at Lie generator " << a;
          rec.witness = os.str();
          break;
        }
      }
    }
    report.checks.push_back(std::move(rec));
  }

  {
    // Formal model of U(g) (x) Cl: words in the Lie generators tag the free
    // associative factor, matrices carry the Clifford factor.
    CheckRecord rec{
        "semidirect relation is preserved by the untwisting map formally",
        true, ""};
    using Formal = std::map<std::vector<int>, GMatrix>;
    auto accumulate = [](Formal& out, std::vector<int> word, GMatrix m) {
      auto it = out.find(word);
      if (it == out.end())
        out.emplace(std::move(word), std::move(m));
      else
        it->second = mat_add(it->second, m);
    };
    auto fmul = [&](const Formal& x, const Formal& y) {
      Formal out;
      for (const auto& [wx, mx] : x) {
        for (const auto& [wy, my] : y) {
          std::vector<int> word = wx;
          word.insert(word.end(), wy.begin(), wy.end());
          accumulate(out, std::move(word), mat_mul(mx, my));
        }
      }
      return out;
    };
    auto fclean = [](Formal x) {
      for (auto it = x.begin(); it != x.end();)
        it = mat_is_zero(it->second) ? x.erase(it) : std::next(it);
      return x;
    };
    for (std::size_t a = 0; a < lie_gens.size() && rec.passed; ++a) {
      Formal fx;
      fx[{static_cast<int>(a)}] = id_cl;
      accumulate(fx, {}, quantized[a]);
      for (int j = 0; j < alg.n && rec.passed; ++j) {
        Formal fv{{{}, alg.generators[j]}};
        Formal lhs = fmul(fx, fv);
        for (auto& [word, m] : fmul(fv, fx))
          accumulate(lhs, word, mat_scale(m, GaussRat(-1)));
        Formal rhs{{{}, rotated_generator(alg, lie_gens[a], j)}};
        if (fclean(std::move(lhs)) != fclean(std::move(rhs))) {
          rec.passed = false;
          std::ostringstream os;
          os << "Lie generator " << a << " against Clifford generator " << j;
          rec.witness = os.str();
        }
      }
    }
    report.checks.push_back(std::move(rec));
  }

  {
    CheckRecord rec{"quantized tensor action is a Lie algebra homomorphism",
                    true, ""};
    for (std::size_t a = 0; a < lie_gens.size() && rec.passed; ++a) {
      for (std::size_t b = a + 1; b < lie_gens.size() && rec.passed; ++b) {
        QMatrix bracket = mat_commutator(lie_gens[a], lie_gens[b]);
        GMatrix qb = quantize(alg, bracket);
        if (drop_quarter) qb = mat_scale(qb, GaussRat(4));
        auto rhs = mat_add(kron(to_gauss(bracket), id_cl), kron(id_v, qb));
        if (mat_commutator(action[a], action[b]) != rhs) {
          rec.passed = false;
          std::ostringstream os;
          os << "Lie generators " << a << " and " << b;
          rec.witness = os.str();
        }
      }
    }
    report.checks.push_back(std::move(rec));
  }

  return report;
}

Report twisted_action_check(const CliffordMatrixAlgebra& alg,
                            const std::vector<QMatrix>& lie_gens,
                            const std::vector<QMatrix>& u_gens,
                            bool omit_grading) {
  if (u_gens.size() != lie_gens.size())
    throw std::invalid_argument("need one module matrix per Lie generator");
  for (const auto& a : lie_gens) require_antisymmetric(a, alg.n);
  const std::size_t du = u_gens.empty() ? 1 : u_gens.front().size();
  for (const auto& u : u_gens)
    if (u.size() != du || u[0].size() != du)
      throw std::invalid_argument("module matrices must be square of equal size");

  // Regular representation of the Clifford algebra on ordered monomials,
  // indexed by subset bitmasks; all entries are rational.
  const int n = alg.n;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<QMatrix> lmul(n, make_matrix<QMatrix>(dim, dim));
  std::vector<QMatrix> rmul(n, make_matrix<QMatrix>(dim, dim));
  QMatrix grading = make_matrix<QMatrix>(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    grading[s][s] = std::popcount(s) % 2 == 0 ? 1 : -1;
    for (int i = 0; i < n; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      const int below = std::popcount(s & (bit - 1));
      const int above = std::popcount(s >> (i + 1));
      const long long lsign = below % 2 == 0 ? 1 : -1;
      const long long rsign = above % 2 == 0 ? 1 : -1;
      if (s & bit) {
        lmul[i][s ^ bit][s] = -lsign;  // e_i e_i = -1 after commuting past
        rmul[i][s ^ bit][s] = -rsign;
      } else {
        lmul[i][s | bit][s] = lsign;
        rmul[i][s | bit][s] = rsign;
      }
    }
  }

  const QMatrix id_u = identity_matrix<QMatrix>(du);
  const QMatrix id_cl = identity_matrix<QMatrix>(dim);

  std::vector<QMatrix> action;  // X (x) 1 + 1 (x) L_{r(X)}
  for (std::size_t a = 0; a < lie_gens.size(); ++a) {
    QMatrix lq = make_matrix<QMatrix>(dim, dim);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (lie_gens[a][j][i] == 0) continue;
        lq = mat_add(lq, mat_scale(mat_mul(lmul[i], lmul[j]),
                                   lie_gens[a][j][i] / 4));
      }
    action.push_back(mat_add(kron(u_gens[a], id_cl), kron(id_u, lq)));
  }

  std::vector<QMatrix> right;  // right multiplication after the grading flip
  for (int i = 0; i < n; ++i)
    right.push_back(omit_grading ? rmul[i] : mat_mul(rmul[i], grading));

  Report report;

  {
    CheckRecord rec{"left multiplication is equivariant: [X, L_v] = L_{X.v}",
                    true, ""};
    for (std::size_t a = 0; a < lie_gens.size() && rec.passed; ++a) {
      for (int j = 0; j < n && rec.passed; ++j) {
        QMatrix rot = make_matrix<QMatrix>(dim, dim);
        for (int l = 0; l < n; ++l) {
          if (lie_gens[a][l][j] == 0) continue;
          rot = mat_add(rot, mat_scale(lmul[l], lie_gens[a][l][j]));
        }
        if (mat_commutator(action[a], kron(id_u, lmul[j])) != kron(id_u, rot)) {
          rec.passed = false;
          std::ostringstream os;
          os << "Lie generator " << a << " against Clifford generator " << j;
          rec.witness = os.str();
        }
      }
    }
    report.checks.push_back(std::move(rec));
  }

  {
    CheckRecord rec{"right generators commute with the Lie action", true, ""};
    for (std::size_t a = 0; a < lie_gens.size() && rec.passed; ++a) {
      for (int i = 0; i < n && rec.passed; ++i) {
        if (!mat_is_zero(mat_commutator(action[a], kron(id_u, right[i])))) {
          rec.passed = false;
          std::ostringstream os;
          os << "Lie generator " << a << " against right generator " << i;
          rec.witness = os.str();
        }
      }
    }
    report.checks.push_back(std::move(rec));
  }

  {
    CheckRecord rec{"right generators anticommute with odd left multiplications",
                    true, ""};
    for (int i = 0; i < n && rec.passed; ++i) {
      for (int j = 0; j < n && rec.passed; ++j) {
        auto anti = mat_add(mat_mul(right[i], lmul[j]),
                            mat_mul(lmul[j], right[i]));
        if (!mat_is_zero(anti)) {
          rec.passed = false;
          std::ostringstream os;
          os << "right generator " << i << " against left multiplication " << j;
          rec.witness = os.str();
        }
      }
    }
    report.checks.push_back(std::move(rec));
  }

  {
    CheckRecord rec{"right generators square to the identity", true, ""};
    for (int i = 0; i < n && rec.passed; ++i) {
      if (mat_mul(right[i], right[i]) != id_cl) {
        rec.passed = false;
        std::ostringstream os;
        os << "right generator " << i;
        rec.witness = os.str();
      }
    }
    report.checks.push_back(std::move(rec));
  }

  {
    CheckRecord rec{"right generators pairwise anticommute", true, ""};
    for (int i = 0; i < n && rec.passed; ++i) {
      for (int j = i + 1; j < n && rec.passed; ++j) {
        auto anti = mat_add(mat_mul(right[i], right[j]),
                            mat_mul(right[j], right[i]));
        if (!mat_is_zero(anti)) {
          rec.passed = false;
          std::ostringstream os;
          os << "right generators " << i << " and " << j;
          rec.witness = os.str();
        }
      }
    }
    report.checks.push_back(std::move(rec));
  }

  return report;
}

}  // namespace superrep
