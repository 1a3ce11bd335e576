#pragma once

#include "superrep/linalg.hpp"
#include "superrep/weights.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace superrep {

inline constexpr std::uint64_t kWeylBoundDefault = 1000000;

/// Root datum of a semisimple type in fundamental-weight coordinates.
/// Simple roots are the rows of the Cartan matrix; the invariant form is
/// normalized so long roots in each simple factor have squared length 2,
/// products being orthogonal direct sums.
struct RootSystem {
  std::string label;
  int rank = 0;
  IMatrix cartan;                     // cartan[i] = simple root alpha_i in fundamental coords
  std::vector<Weight> simple_roots;   // == cartan rows
  std::vector<Weight> positive_roots; // closure, sorted by height then lex
  Weight rho;                         // (1,...,1)
  QMatrix form;                       // (omega_i, omega_j)
  QMatrix cartan_inv;                 // used for root-coefficient expansions
};

/// Accepted labels: A1..A4, B2, C2, D4, G2 and 'x'-products such as "A1xA1".
RootSystem build_root_system(const std::string& label);

Rat form_pair(const RootSystem& rs, const Weight& a, const Weight& b);

/// 2(w,beta)/(beta,beta). Integral for lattice weights w and roots beta;
/// throws if the exact quotient is not an integer.
long long coroot_pairing(const RootSystem& rs, const Weight& w, const Weight& beta);

/// Simple reflection s_i(w) = w - <w, alpha_i^v> alpha_i = w - w[i]*cartan[i].
Weight reflect(const RootSystem& rs, int i, const Weight& w);

/// Reflection through an arbitrary root beta of g.
Weight reflect_root(const RootSystem& rs, const Weight& beta, const Weight& w);

/// Full W-orbit by breadth-first closure; returned sorted lexicographically.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w,
                               std::uint64_t bound = kWeylBoundDefault);

struct DominantResult {
  Weight weight;
  int sign = 1;       // parity of the reflection word applied
  bool regular = false;
};

/// Reduces w into the closed chamber cut out by the designated coroots
/// (default: all simple coroots). For singular weights the sign is the sign
/// of the word actually applied and should be discarded by the caller.
DominantResult dominant_representative(const RootSystem& rs, const Weight& w);
DominantResult dominant_representative(const RootSystem& rs, const Weight& w,
                                       const std::vector<Weight>& coroots);

struct WeylElement {
  std::vector<int> word;  // w = s_{word[0]} ∘ s_{word[1]} ∘ ...
  IMatrix matrix;         // action on fundamental-coordinate column vectors
  int sign = 1;           // = det(matrix)
};

Weight apply_matrix(const IMatrix& m, const Weight& w);

/// All of W by breadth-first closure over the simple generators with matrix
/// deduplication; refuses (naming the bound) if |W| would exceed `bound`.
std::vector<WeylElement> weyl_elements(const RootSystem& rs,
                                       std::uint64_t bound = kWeylBoundDefault);

/// Order of the reflection subgroup generated by the given g-roots.
std::uint64_t reflection_subgroup_order(const RootSystem& rs, const std::vector<Weight>& roots,
                                        std::uint64_t bound = kWeylBoundDefault);

/// Expansion of a lattice vector in the simple-root basis (exact rationals).
std::vector<Rat> root_coefficients(const RootSystem& rs, const Weight& w);

bool is_root(const RootSystem& rs, const Weight& w);

}  // namespace superrep
