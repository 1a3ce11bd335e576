#include "superrep/chars.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace superrep {

namespace {

constexpr long long kBoxLimit = 2000000;
constexpr long long kPeelLimit = 200000;

void require_rank(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank) {
    std::ostringstream os;
    os << "weight has " << w.size() << " coordinates, expected " << rs.rank;
    throw std::invalid_argument(os.str());
  }
}

// Reflection fixing the hyperplane of `root`, on doubled coordinates.
// Scale equivariance keeps the root itself at true scale.
Weight reflect_by_root_x2(const RootSystem& rs, const Weight& w2, const Weight& root) {
  return weight_sub(w2, weight_scale(root, coroot_pairing(rs, w2, root)));
}

Rat height_x2(const ReflectionFrame& f, const Weight& w2) {
  return form_pair(f.rs, w2, f.rho_x2);
}

}  // namespace

std::vector<Weight> subsystem_positive_roots(const RootSystem& rs,
                                             const std::vector<Weight>& simple) {
  std::set<Weight> closure(simple.begin(), simple.end());
  for (const auto& beta : simple) {
    if (!is_root(rs, beta)) {
      throw std::invalid_argument("designated root " + weight_str(beta) +
                                  " is not a root of " + rs.label);
    }
    closure.insert(weight_neg(beta));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Weight> snapshot(closure.begin(), closure.end());
    for (const auto& beta : snapshot) {
      for (const auto& gamma : snapshot) {
        Weight img = reflect_root(rs, beta, gamma);
        if (closure.insert(img).second) grew = true;
      }
    }
  }
  std::vector<Weight> pos;
  for (const auto& beta : rs.positive_roots) {
    if (closure.count(beta)) pos.push_back(beta);
  }
  return pos;
}

ReflectionFrame full_frame(const RootSystem& rs) {
  ReflectionFrame f;
  f.rs = rs;
  f.simple = rs.simple_roots;
  f.positive = rs.positive_roots;
  f.rho_x2 = Weight(rs.rank, 0);
  for (const auto& beta : f.positive) f.rho_x2 = weight_add(f.rho_x2, beta);
  f.sub_cartan = rs.cartan;
  f.sub_cartan_inv = rs.cartan_inv;
  return f;
}

ReflectionFrame sub_frame(const RootSystem& rs, std::vector<Weight> simple) {
  const int k = static_cast<int>(simple.size());
  ReflectionFrame f;
  f.rs = rs;
  f.simple = std::move(simple);
  f.rho_x2 = Weight(rs.rank, 0);
  if (k == 0) return f;

  f.sub_cartan = make_matrix<IMatrix>(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      f.sub_cartan[i][j] = coroot_pairing(rs, f.simple[i], f.simple[j]);
      if (i != j && f.sub_cartan[i][j] > 0) {
        throw std::invalid_argument("designated roots " + weight_str(f.simple[i]) +
                                    " and " + weight_str(f.simple[j]) +
                                    " do not form a simple system");
      }
    }
  }
  {
    QMatrix rows = make_matrix<QMatrix>(k, rs.rank);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < rs.rank; ++j) rows[i][j] = Rat(f.simple[i][j]);
    if (mat_rank(rows) != k) {
      throw std::invalid_argument("designated roots are linearly dependent");
    }
  }
  QMatrix q = make_matrix<QMatrix>(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) q[i][j] = Rat(f.sub_cartan[i][j]);
  f.sub_cartan_inv = mat_inverse(q);

  f.positive = subsystem_positive_roots(rs, f.simple);
  for (const auto& beta : f.positive) f.rho_x2 = weight_add(f.rho_x2, beta);
  return f;
}

bool dominant_x2(const ReflectionFrame& f, const Weight& w2) {
  for (const auto& beta : f.simple) {
    if (coroot_pairing(f.rs, w2, beta) < 0) return false;
  }
  return true;
}

DominantResult dominant_rep_x2(const ReflectionFrame& f, const Weight& w2) {
  return dominant_representative(f.rs, w2, f.simple);
}

std::vector<Weight> frame_orbit_x2(const ReflectionFrame& f, const Weight& w2) {
  std::set<Weight> seen = {w2};
  std::vector<Weight> queue = {w2};
  while (!queue.empty()) {
    Weight cur = queue.back();
    queue.pop_back();
    for (const auto& beta : f.simple) {
      Weight img = reflect_by_root_x2(f.rs, cur, beta);
      if (seen.insert(img).second) queue.push_back(img);
    }
    if (static_cast<long long>(seen.size()) > kWeylBoundDefault) {
      throw std::runtime_error("orbit exceeds element bound");
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

WeightMultiset freudenthal_x2(const ReflectionFrame& f, const Weight& lam2) {
  require_rank(f.rs, lam2);
  const int k = static_cast<int>(f.simple.size());
  if (k == 0) return WeightMultiset{{lam2, 1}};

  std::vector<Coord> pairings(k);
  for (int j = 0; j < k; ++j) {
    pairings[j] = coroot_pairing(f.rs, lam2, f.simple[j]);
    if (pairings[j] < 0) {
      throw std::invalid_argument("highest weight " + weight_str_x2(lam2) +
                                  " is not dominant for the designated roots");
    }
    if (pairings[j] % 2 != 0) {
      throw std::invalid_argument("highest weight " + weight_str_x2(lam2) +
                                  " has a half-integral coroot pairing");
    }
  }

  // lam - mu = sum c_i beta_i with c >= 0; pairing with the designated
  // coroots bounds c through the inverse pairing matrix (entrywise >= 0
  // for finite type).
  std::vector<long long> bound(k, 0);
  long long box = 1;
  for (int j = 0; j < k; ++j) {
    Rat b = 0;
    for (int i = 0; i < k; ++i) b += Rat(pairings[i], 2) * f.sub_cartan_inv[i][j];
    Int fl = numerator(b) / denominator(b);
    bound[j] = fl.convert_to<long long>();
    box *= bound[j] + 1;
    if (box > kBoxLimit) throw std::runtime_error("character support box too large");
  }

  // Frame-dominant candidates with their distance to the highest weight.
  struct Candidate {
    Weight w2;
    long long dist;
  };
  std::vector<Candidate> cands;
  std::vector<long long> c(k, 0);
  while (true) {
    Weight mu2 = lam2;
    long long dist = 0;
    for (int i = 0; i < k; ++i) {
      mu2 = weight_sub(mu2, weight_scale(f.simple[i], 2 * c[i]));
      dist += c[i];
    }
    if (dominant_x2(f, mu2)) cands.push_back({mu2, dist});
    int pos = 0;
    while (pos < k && c[pos] == bound[pos]) {
      c[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
    ++c[pos];
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return a.dist != b.dist ? a.dist < b.dist : a.w2 < b.w2;
  });

  Weight top2 = weight_add(lam2, f.rho_x2);
  Rat q_top = form_pair(f.rs, top2, top2);
  std::map<Weight, long long> mult;
  mult[lam2] = 1;
  for (const auto& cand : cands) {
    if (cand.dist == 0) continue;
    Rat num = 0;
    for (const auto& beta : f.positive) {
      Weight beta2 = weight_scale(beta, 2);
      for (long long step = 1; step <= cand.dist; ++step) {
        Weight nu2 = weight_add(cand.w2, weight_scale(beta2, step));
        auto rep = dominant_rep_x2(f, nu2);
        auto it = mult.find(rep.weight);
        if (it == mult.end() || it->second == 0) continue;
        num += Rat(it->second) * form_pair(f.rs, nu2, beta2);
      }
    }
    Weight shifted2 = weight_add(cand.w2, f.rho_x2);
    Rat denom = q_top - form_pair(f.rs, shifted2, shifted2);
    if (denom == 0) throw std::logic_error("degenerate multiplicity denominator");
    long long m = to_ll(2 * num / denom);
    if (m < 0) throw std::logic_error("negative multiplicity");
    if (m > 0) mult[cand.w2] = m;
  }

  WeightMultiset out;
  for (const auto& [mu2, m] : mult) {
    if (m == 0) continue;
    for (const auto& w : frame_orbit_x2(f, mu2)) out[w] = m;
  }
  return out;
}

const WeightMultiset& cached_character_x2(const ReflectionFrame& f, const Weight& lam2) {
  std::lock_guard<std::mutex> lock(f.cache.mu);
  auto it = f.cache.chars.find(lam2);
  if (it != f.cache.chars.end()) return it->second;
  auto ch = freudenthal_x2(f, lam2);
  return f.cache.chars.emplace(lam2, std::move(ch)).first->second;
}

long long weyl_dimension_x2(const ReflectionFrame& f, const Weight& lam2) {
  require_rank(f.rs, lam2);
  if (!dominant_x2(f, lam2)) {
    throw std::invalid_argument("highest weight " + weight_str_x2(lam2) +
                                " is not dominant for the designated roots");
  }
  Weight top2 = weight_add(lam2, f.rho_x2);
  Rat dim = 1;
  for (const auto& beta : f.positive) {
    Weight beta2 = weight_scale(beta, 2);
    dim *= form_pair(f.rs, top2, beta2) / form_pair(f.rs, f.rho_x2, beta2);
  }
  return to_ll(dim);
}

VirtualDecomposition decompose_x2(const ReflectionFrame& f, const WeightMultiset& ch2) {
  for (const auto& beta : f.simple) {
    for (const auto& [w, c] : ch2) {
      Weight img = reflect_by_root_x2(f.rs, w, beta);
      auto it = ch2.find(img);
      long long cimg = it == ch2.end() ? 0 : it->second;
      if (cimg != c) {
        throw std::invalid_argument(
            "multiset is not invariant under reflection by " + weight_str(beta) +
            ": weight " + weight_str_x2(w) + " has coefficient " +
            std::to_string(c) + " but its image has " + std::to_string(cimg));
      }
    }
  }

  WeightMultiset rest = ch2;
  VirtualDecomposition terms;
  long long steps = 0;
  while (!rest.empty()) {
    if (++steps > kPeelLimit) throw std::runtime_error("decomposition did not terminate");
    auto best = rest.begin();
    Rat best_ht = height_x2(f, best->first);
    for (auto it = std::next(rest.begin()); it != rest.end(); ++it) {
      Rat ht = height_x2(f, it->first);
      if (ht > best_ht || (ht == best_ht && it->first > best->first)) {
        best = it;
        best_ht = ht;
      }
    }
    Weight lead = best->first;
    long long coeff = best->second;
    if (!dominant_x2(f, lead)) {
      throw std::logic_error("leading weight " + weight_str_x2(lead) +
                             " is not dominant");
    }
    terms[lead] += coeff;
    for (const auto& [w, m] : cached_character_x2(f, lead)) {
      auto it = rest.find(w);
      long long next = (it == rest.end() ? 0 : it->second) - coeff * m;
      if (next == 0) {
        if (it != rest.end()) rest.erase(it);
      } else {
        rest[w] = next;
      }
    }
  }
  return terms;
}

namespace {

Weight doubled(const Weight& w) { return weight_scale(w, 2); }

Weight halved_checked(const Weight& w2) {
  if (!weight_all_even(w2)) {
    throw std::logic_error("weight " + weight_str_x2(w2) +
                           " left the integral lattice");
  }
  return weight_halve(w2);
}

void require_dominant(const RootSystem& rs, const Weight& lambda) {
  require_rank(rs, lambda);
  for (Coord c : lambda) {
    if (c < 0) {
      throw std::invalid_argument("weight " + weight_str(lambda) + " is not dominant");
    }
  }
}

}  // namespace

WeightMultiset freudenthal_character(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  auto f = full_frame(rs);
  WeightMultiset out;
  for (const auto& [w2, m] : freudenthal_x2(f, doubled(lambda))) {
    out[halved_checked(w2)] = m;
  }
  return out;
}

long long weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  return weyl_dimension_x2(full_frame(rs), doubled(lambda));
}

VirtualDecomposition tensor_decompose(const RootSystem& rs, const Weight& lambda,
                                      const Weight& mu) {
  auto prod = multiset_convolve(freudenthal_character(rs, lambda),
                                freudenthal_character(rs, mu));
  return decompose_virtual(rs, prod);
}

VirtualDecomposition decompose_virtual(const RootSystem& rs, const WeightMultiset& ch) {
  return decompose_virtual(rs, ch, rs.simple_roots);
}

VirtualDecomposition decompose_virtual(const RootSystem& rs, const WeightMultiset& ch,
                                       const std::vector<Weight>& designated) {
  auto f = sub_frame(rs, designated);
  WeightMultiset ch2;
  for (const auto& [w, c] : ch) {
    require_rank(rs, w);
    ch2[doubled(w)] = c;
  }
  VirtualDecomposition out;
  for (const auto& [w2, c] : decompose_x2(f, ch2)) {
    out[halved_checked(w2)] = c;
  }
  return out;
}

}  // namespace superrep
