#include "superrep/gkrs.hpp"

#include <stdexcept>

namespace superrep {

namespace {

void require_h_dominant_x2(const Embedding& e, const Weight& mu2) {
  if (static_cast<int>(mu2.size()) != e.g.rank) {
    throw std::invalid_argument("weight " + weight_str_x2(mu2) + " has wrong rank");
  }
  for (const auto& beta : e.h_simple) {
    if (coroot_pairing(e.g, mu2, beta) < 0) {
      throw std::invalid_argument("weight " + weight_str_x2(mu2) +
                                  " is not dominant for the subalgebra root " +
                                  weight_str(beta));
    }
  }
}

WeightMultiset signed_spin_character(const Embedding& e, bool dual) {
  auto s = spin_module(e);
  if (dual) {
    s.s0_x2 = multiset_dual(s.s0_x2);
    s.s1_x2 = multiset_dual(s.s1_x2);
  }
  return multiset_sum(s.s0_x2, multiset_negate(s.s1_x2));
}

}  // namespace

VirtualDecomposition euler_restriction(const Embedding& e, const Weight& lambda) {
  const auto& ch2 = cached_character_x2(e.g_frame, weight_scale(lambda, 2));
  auto conv = multiset_convolve(ch2, signed_spin_character(e, false));
  return decompose_x2(e.h_frame, conv);
}

Multiplet gkrs_multiplet(const Embedding& e, const Weight& lambda, long long bound) {
  Multiplet m;
  m.source = lambda;
  Weight xi = weight_add(lambda, e.rho_g);
  for (const auto& [sign, w] : coset_representatives(e, xi, bound)) {
    Weight w2 = weight_sub(weight_scale(w, 2), e.rho_h_x2);
    m.members.push_back({sign, w2});
    if (!weight_all_even(w2)) m.half_lattice = true;
  }
  return m;
}

VirtualDecomposition multiplet_as_decomposition(const Multiplet& m) {
  VirtualDecomposition out;
  for (const auto& [sign, w2] : m.members) {
    out[w2] += sign;
    if (out[w2] == 0) out.erase(w2);
  }
  return out;
}

std::optional<CosetTerm> dirac_induce_x2(const Embedding& e, const Weight& mu2) {
  require_h_dominant_x2(e, mu2);
  Weight nu2 = weight_add(mu2, e.rho_h_x2);
  auto rep = dominant_representative(e.g, nu2);
  if (!rep.regular) return std::nullopt;
  Weight lam2 = weight_sub(rep.weight, weight_scale(e.rho_g, 2));
  if (!weight_all_even(lam2)) return std::nullopt;
  return CosetTerm{rep.sign, weight_halve(lam2)};
}

std::optional<CosetTerm> dirac_induce(const Embedding& e, const Weight& mu) {
  return dirac_induce_x2(e, weight_scale(mu, 2));
}

SRElement induction_class_x2(const Embedding& e, const Weight& mu2) {
  require_h_dominant_x2(e, mu2);
  const auto& ch2 = cached_character_x2(e.h_frame, mu2);
  auto conv = multiset_convolve(ch2, signed_spin_character(e, true));
  auto dec = decompose_x2(e.h_frame, conv);

  SRElement u;
  u.degree = static_cast<int>(e.complement.size()) % 2;
  if (!dec.empty()) {
    u.twist.half_lattice_flag = !weight_all_even(dec.begin()->first);
  }
  u.terms_x2.insert(dec.begin(), dec.end());
  return u;
}

std::pair<long long, long long> verify_adjointness(const Embedding& e,
                                                   const Weight& mu2,
                                                   const Weight& lambda) {
  auto d = dirac_induce_x2(e, mu2);
  long long lhs = d.has_value() && d->weight == lambda ? d->sign : 0;

  auto u = induction_class_x2(e, mu2);
  const auto& dec = restrict_decomposed_x2(e, lambda);
  long long rhs = 0;
  for (const auto& [w2, c] : u.terms_x2) {
    auto it = dec.find(w2);
    if (it != dec.end()) rhs += c * it->second;
  }
  return {lhs, rhs};
}

}  // namespace superrep
