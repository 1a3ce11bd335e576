#pragma once

#include "superrep/linalg.hpp"

#include <string>
#include <vector>

namespace superrep {

/// Exact matrix model of the complex Clifford algebra on n anticommuting
/// generators squaring to -I, with its diagonal grading involution.
struct CliffordMatrixAlgebra {
  int n = 0;
  std::vector<GMatrix> generators;  // dimension 2^ceil(n/2)
  GMatrix grading;                  // eps, with eps*e_i*eps = -e_i
};

/// Equivariant commutant of the generator action, split by the grading.
/// odd_involution is a parity-reversing square root of the identity when
/// the odd part is nonzero (empty matrix otherwise).
struct CommutantResult {
  int even_dim = 0;
  int odd_dim = 0;
  GMatrix odd_involution;
};

struct QuantizedAction {
  std::vector<QMatrix> lie_generators;
  std::vector<GMatrix> quantized;
};

struct CheckRecord {
  std::string identity;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct Report {
  std::vector<CheckRecord> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// Standard generator tower; 1 <= n <= 6. Odd n embeds into the tower of
/// n+1 generators, which keeps the representation faithful.
CliffordMatrixAlgebra build_clifford(int n);

CommutantResult clifford_commutant(const CliffordMatrixAlgebra& alg);

/// Inner-derivation quantization of an antisymmetric matrix:
/// (1/4) sum_i e_i (A e_i), satisfying [quantize(A), v] = A v.
GMatrix quantize(const CliffordMatrixAlgebra& alg, const QMatrix& a);

QuantizedAction quantize_action(const CliffordMatrixAlgebra& alg,
                                const std::vector<QMatrix>& lie_gens);

/// Basis rotation generators of so(3) as exact 3x3 matrices.
std::vector<QMatrix> so3_generators();

/// Verifies the untwisting isomorphism between the semidirect super tensor
/// product and the plain one, on generators and degree-2 words.
/// drop_quarter perturbs the quantization as a negative control.
Report thom_map_check(const CliffordMatrixAlgebra& alg,
                      const std::vector<QMatrix>& lie_gens,
                      bool drop_quarter = false);

/// Verifies the commuting right Clifford action on U tensor Cl(V): the
/// equivariance of left multiplication, commutation of the right generators
/// with the Lie action, graded anticommutation with vectors, and unit
/// squares. omit_grading drops the grading twist as a negative control.
Report twisted_action_check(const CliffordMatrixAlgebra& alg,
                            const std::vector<QMatrix>& lie_gens,
                            const std::vector<QMatrix>& u_gens,
                            bool omit_grading = false);

}  // namespace superrep
