#include "superrep/embed.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superrep {

namespace {

void require_g_root_vector(const RootSystem& rs, const Weight& beta) {
  if (static_cast<int>(beta.size()) != rs.rank) {
    std::ostringstream os;
    os << "designated root " << weight_str(beta) << " has " << beta.size()
       << " coordinates, expected " << rs.rank;
    throw std::invalid_argument(os.str());
  }
  if (!is_root(rs, beta)) {
    throw std::invalid_argument("designated vector " + weight_str(beta) +
                                " is not a root of " + rs.label);
  }
}

}  // namespace

Embedding build_embedding(const RootSystem& rs, const std::vector<Weight>& h_roots) {
  for (const auto& beta : h_roots) {
    require_g_root_vector(rs, beta);
    bool positive = std::find(rs.positive_roots.begin(), rs.positive_roots.end(),
                              beta) != rs.positive_roots.end();
    if (!positive) {
      throw std::invalid_argument("designated root " + weight_str(beta) +
                                  " is not positive; the subsystem chamber must "
                                  "be compatible with the ambient one");
    }
  }

  Embedding e;
  e.g = rs;
  e.h_simple = h_roots;
  // sub_frame re-checks the simple-system pairings and independence.
  e.h_frame = sub_frame(rs, h_roots);
  e.g_frame = full_frame(rs);
  e.h_positive = e.h_frame.positive;

  // A subsystem coming from a subalgebra is additively closed inside the
  // ambient roots.
  {
    std::set<Weight> hset;
    for (const auto& beta : e.h_positive) {
      hset.insert(beta);
      hset.insert(weight_neg(beta));
    }
    for (const auto& a : hset) {
      for (const auto& b : hset) {
        Weight sum = weight_add(a, b);
        if (is_root(rs, sum) && !hset.count(sum)) {
          throw std::invalid_argument(
              "designated subsystem is not closed: " + weight_str(a) + " + " +
              weight_str(b) + " = " + weight_str(sum) +
              " is an ambient root outside it");
        }
      }
    }
  }

  std::set<Weight> hpos(e.h_positive.begin(), e.h_positive.end());
  for (const auto& beta : rs.positive_roots) {
    if (!hpos.count(beta)) e.complement.push_back(beta);
  }

  e.rho_g = rs.rho;
  e.rho_h_x2 = e.h_frame.rho_x2;
  e.rho_diff_x2 = weight_sub(weight_scale(e.rho_g, 2), e.rho_h_x2);
  e.half_lattice = !weight_all_even(e.rho_diff_x2);
  e.spin_parity_anchor = 0;

  Weight complement_sum(rs.rank, 0);
  for (const auto& beta : e.complement) {
    complement_sum = weight_add(complement_sum, beta);
  }
  if (complement_sum != e.rho_diff_x2) {
    throw std::logic_error("complement half-sum mismatch");
  }
  return e;
}

SpinWeights spin_module(const Embedding& e) {
  const std::size_t m = e.complement.size();
  if (m > 24) throw std::runtime_error("complement too large for spinor enumeration");
  SpinWeights s;
  s.half_lattice = e.half_lattice;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Weight w = e.rho_diff_x2;
    int parity = e.spin_parity_anchor;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) {
        w = weight_sub(w, weight_scale(e.complement[i], 2));
        parity ^= 1;
      }
    }
    (parity == 0 ? s.s0_x2 : s.s1_x2)[w] += 1;
  }
  return s;
}

WeightMultiset restrict_character(const Embedding& e, const Weight& lambda) {
  return freudenthal_character(e.g, lambda);
}

const VirtualDecomposition& restrict_decomposed_x2(const Embedding& e,
                                                   const Weight& lambda) {
  std::lock_guard<std::mutex> lock(e.rcache.mu);
  auto it = e.rcache.decomps.find(lambda);
  if (it != e.rcache.decomps.end()) return it->second;

  Weight lam2 = weight_scale(lambda, 2);
  WeightMultiset ch2;
  for (const auto& [w2, mult] : cached_character_x2(e.g_frame, lam2)) ch2[w2] = mult;
  auto dec = decompose_x2(e.h_frame, ch2);
  return e.rcache.decomps.emplace(lambda, std::move(dec)).first->second;
}

std::vector<CosetTerm> coset_representatives(const Embedding& e, const Weight& xi,
                                             long long bound) {
  if (static_cast<int>(xi.size()) != e.g.rank) {
    throw std::invalid_argument("weight " + weight_str(xi) + " has wrong rank");
  }
  for (Coord c : xi) {
    if (c <= 0) {
      throw std::invalid_argument("weight " + weight_str(xi) +
                                  " is not strictly dominant");
    }
  }

  std::map<Weight, int> picked;
  for (const auto& w : weyl_elements(e.g, bound)) {
    Weight img = apply_matrix(w.matrix, xi);
    bool strict = true;
    for (const auto& beta : e.h_simple) {
      if (coroot_pairing(e.g, img, beta) <= 0) {
        strict = false;
        break;
      }
    }
    if (!strict) continue;
    auto [it, inserted] = picked.emplace(img, w.sign);
    if (!inserted && it->second != w.sign) {
      throw std::logic_error("conflicting signs for coset representative at " +
                             weight_str(img));
    }
  }

  long long order_h = reflection_subgroup_order(e.g, e.h_positive, bound);
  long long order_g = static_cast<long long>(weyl_elements(e.g, bound).size());
  if (static_cast<long long>(picked.size()) * order_h != order_g) {
    throw std::logic_error("coset count mismatch");
  }

  std::vector<CosetTerm> out;
  for (const auto& [w, sign] : picked) out.push_back({sign, w});
  std::sort(out.begin(), out.end(), [](const CosetTerm& a, const CosetTerm& b) {
    return a.sign != b.sign ? a.sign > b.sign : a.weight < b.weight;
  });
  return out;
}

}  // namespace superrep
