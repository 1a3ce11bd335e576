#pragma once

#include "superrep/superring.hpp"

#include <optional>
#include <utility>

namespace superrep {

/// Signed family of h-highest weights attached to an ambient irreducible.
/// Member weights are doubled (they live on the rho-shifted lattice when the
/// embedding's half-sum of complement roots is half-integral).
struct Multiplet {
  Weight source;                  // ambient highest weight, true coordinates
  std::vector<CosetTerm> members; // (sign, h-dominant weight, doubled)
  bool half_lattice = false;
};

/// Decomposition over h of the restricted ambient character multiplied by
/// the signed half-spin character. Keys are doubled h-dominant weights.
VirtualDecomposition euler_restriction(const Embedding& e, const Weight& lambda);

/// Closed form of the same decomposition: one signed term per Weyl coset,
/// with weight c(lambda+rho_g) - rho_h pinned by strict h-dominance.
Multiplet gkrs_multiplet(const Embedding& e, const Weight& lambda,
                         long long bound = kWeylBoundDefault);

VirtualDecomposition multiplet_as_decomposition(const Multiplet& m);

/// Index of the induced Dirac family on an irreducible h-module, doubled
/// h-dominant weight in. Empty when mu + rho_h is singular, or when the
/// would-be ambient highest weight falls off the integral lattice (the two
/// lattice cosets pair trivially, so both sides of adjointness vanish).
/// Present results carry true ambient coordinates.
std::optional<CosetTerm> dirac_induce_x2(const Embedding& e, const Weight& mu2);

/// Convenience overload for integral mu in true coordinates.
std::optional<CosetTerm> dirac_induce(const Embedding& e, const Weight& mu);

/// The h-class of U_mu tensored with the dual signed half-spin module,
/// decomposed; this is the kernel paired against restrictions when checking
/// adjointness and the input to the truncated pushforward.
SRElement induction_class_x2(const Embedding& e, const Weight& mu2);

/// (lhs, rhs) of Frobenius adjointness at (mu, lambda): lhs pairs the Dirac
/// index against the ambient class, rhs pairs the dual-spin h-class of mu
/// against the decomposed restriction.
std::pair<long long, long long> verify_adjointness(const Embedding& e,
                                                   const Weight& mu2,
                                                   const Weight& lambda);

}  // namespace superrep
