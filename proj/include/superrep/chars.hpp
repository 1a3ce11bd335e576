#pragma once

#include "superrep/rootdata.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace superrep {

/// Coefficients of a virtual module in the irreducible basis.
using VirtualDecomposition = std::map<Weight, long long>;

/// Character cache keyed by highest weight; copies start empty so frames
/// stay freely copyable.
struct CharCache {
  std::map<Weight, WeightMultiset> chars;
  std::mutex mu;
  CharCache() = default;
  CharCache(const CharCache&) {}
  CharCache& operator=(const CharCache&) { return *this; }
};

/// Reflection data of a designated root subsystem inside an ambient system
/// (the whole system, or an equal-rank subalgebra's roots, or nothing for
/// the torus). Roots are kept in true coordinates; every generic weight
/// argument of the *_x2 routines is in doubled coordinates, which makes the
/// half-integral spinor shifts integer arithmetic throughout.
struct ReflectionFrame {
  RootSystem rs;                 // ambient system (self-contained copy)
  std::vector<Weight> simple;    // designated simple roots
  std::vector<Weight> positive;  // positive roots of the subsystem
  Weight rho_x2;                 // sum of subsystem positives = 2*rho_sub
  IMatrix sub_cartan;            // <beta_i, beta_j^v>
  QMatrix sub_cartan_inv;
  mutable CharCache cache;
};

ReflectionFrame full_frame(const RootSystem& rs);

/// Frame for the subsystem generated by the given simple roots (must be
/// g-roots; positivity/closure responsibilities sit with build_embedding).
ReflectionFrame sub_frame(const RootSystem& rs, std::vector<Weight> simple);

/// Reflection closure of the designated set intersected with the positive
/// roots of the ambient system.
std::vector<Weight> subsystem_positive_roots(const RootSystem& rs,
                                             const std::vector<Weight>& simple);

bool dominant_x2(const ReflectionFrame& f, const Weight& w2);
DominantResult dominant_rep_x2(const ReflectionFrame& f, const Weight& w2);
std::vector<Weight> frame_orbit_x2(const ReflectionFrame& f, const Weight& w2);

/// Freudenthal multiplicities of the irreducible with highest weight lam2/2
/// relative to the frame's subsystem (doubled coordinates in and out).
WeightMultiset freudenthal_x2(const ReflectionFrame& f, const Weight& lam2);

/// Same, memoized in the frame.
const WeightMultiset& cached_character_x2(const ReflectionFrame& f, const Weight& lam2);

long long weyl_dimension_x2(const ReflectionFrame& f, const Weight& lam2);

/// Greedy peeling of a frame-invariant signed multiset into irreducible
/// frame-characters; keys of the result are frame-dominant (doubled).
VirtualDecomposition decompose_x2(const ReflectionFrame& f, const WeightMultiset& ch2);

// -- public true-coordinate operations over the full system --

WeightMultiset freudenthal_character(const RootSystem& rs, const Weight& lambda);
long long weyl_dimension(const RootSystem& rs, const Weight& lambda);
VirtualDecomposition tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                      const Weight& mu);
VirtualDecomposition decompose_virtual(const RootSystem& rs, const WeightMultiset& ch);
VirtualDecomposition decompose_virtual(const RootSystem& rs, const WeightMultiset& ch,
                                       const std::vector<Weight>& coroots);

}  // namespace superrep
