#pragma once

#include "superrep/chars.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace superrep {

/// Cache of h-decompositions of restricted ambient characters, keyed by the
/// ambient highest weight. Copies start empty.
struct RestrictCache {
  std::map<Weight, VirtualDecomposition> decomps;
  std::mutex mu;
  RestrictCache() = default;
  RestrictCache(const RestrictCache&) {}
  RestrictCache& operator=(const RestrictCache&) { return *this; }
};

/// Equal-rank reductive subalgebra h of g, designated by simple roots of h
/// chosen among the positive roots of g. The Cartan is shared, so every
/// h-weight is stored in g's fundamental-weight coordinates; spinor shifts
/// may be half-integral, hence the doubled (_x2) fields and the lattice flag.
struct Embedding {
  RootSystem g;
  std::vector<Weight> h_simple;
  std::vector<Weight> h_positive;
  std::vector<Weight> complement;  // positive roots of g not in h
  Weight rho_g;                    // true coordinates
  Weight rho_h_x2;                 // sum of h_positive = 2*rho_h
  Weight rho_diff_x2;              // 2(rho_g - rho_h) = sum of complement
  bool half_lattice = false;       // rho_diff_x2 has an odd coordinate
  int spin_parity_anchor = 0;      // parity assigned to the top spinor weight
  ReflectionFrame g_frame;
  ReflectionFrame h_frame;
  mutable RestrictCache rcache;
};

/// Half-spin h-weight multisets of the Clifford module over the complement
/// directions, in doubled coordinates.
struct SpinWeights {
  WeightMultiset s0_x2;
  WeightMultiset s1_x2;
  bool half_lattice = false;
};

struct CosetTerm {
  int sign = 1;
  Weight weight;
  friend bool operator==(const CosetTerm& a, const CosetTerm& b) {
    return a.sign == b.sign && a.weight == b.weight;
  }
};

/// Validates that h_roots designate the simple system of a closed subsystem
/// of g's roots and derives all fields. Empty h_roots designates the Cartan
/// subalgebra itself.
Embedding build_embedding(const RootSystem& rs, const std::vector<Weight>& h_roots);

SpinWeights spin_module(const Embedding& e);

/// Weight multiset of the irreducible g-module read as h-weights. The
/// Cartan is shared, so this equals the ambient character support.
WeightMultiset restrict_character(const Embedding& e, const Weight& lambda);

/// Irreducible h-decomposition of the restricted g-character, doubled
/// coordinates, memoized on the embedding.
const VirtualDecomposition& restrict_decomposed_x2(const Embedding& e,
                                                   const Weight& lambda);

/// One pair (sign(c), c*xi) per coset of the h-Weyl group in the ambient
/// Weyl group, with the representative pinned by strict h-dominance of the
/// image. Requires xi strictly dominant for g. Sorted by sign descending,
/// then weight.
std::vector<CosetTerm> coset_representatives(const Embedding& e, const Weight& xi,
                                             long long bound = kWeylBoundDefault);

}  // namespace superrep
