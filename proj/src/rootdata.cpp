#include "superrep/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace superrep {

namespace {

IMatrix cartan_for_simple_type(const std::string& tok) {
  if (tok.size() == 2 && tok[0] == 'A' && tok[1] >= '1' && tok[1] <= '4') {
    const int n = tok[1] - '0';
    IMatrix c(n, std::vector<Coord>(n, 0));
    for (int i = 0; i < n; ++i) {
      c[i][i] = 2;
      if (i > 0) c[i][i - 1] = -1;
      if (i + 1 < n) c[i][i + 1] = -1;
    }
    return c;
  }
  if (tok == "B2") return {{2, -2}, {-1, 2}};
  if (tok == "C2") return {{2, -1}, {-2, 2}};
  if (tok == "G2") return {{2, -1}, {-3, 2}};
  if (tok == "D4") return {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  throw std::invalid_argument("unsupported type descriptor: \"" + tok + "\"");
}

std::vector<std::string> split_product(const std::string& label) {
  std::vector<std::string> toks;
  std::size_t start = 0;
  while (start <= label.size()) {
    const std::size_t pos = label.find('x', start);
    if (pos == std::string::npos) {
      toks.push_back(label.substr(start));
      break;
    }
    toks.push_back(label.substr(start, pos - start));
    start = pos + 1;
  }
  return toks;
}

/// Half squared lengths d_i = (alpha_i, alpha_i)/2, normalized to max 1 per
/// connected component of the Dynkin diagram (long roots get length^2 = 2).
std::vector<Rat> simple_root_half_lengths(const IMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<Rat> d(n, Rat(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    std::deque<int> queue{start};
    std::vector<int> component{start};
    d[start] = 1;
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * cartan[j][i] / cartan[i][j];  // from C[i][j] d_j = C[j][i] d_i
        component.push_back(j);
        queue.push_back(j);
      }
    }
    Rat mx(0);
    for (int i : component) mx = std::max(mx, d[i]);
    for (int i : component) d[i] /= mx;
  }
  return d;
}

QMatrix to_rational(const IMatrix& m) {
  QMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) q[i].assign(m[i].begin(), m[i].end());
  return q;
}

void check_rank(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank)
    throw std::invalid_argument("weight length " + std::to_string(w.size()) +
                                " does not match rank " + std::to_string(rs.rank));
}

long long root_height(const RootSystem& rs, const Weight& beta) {
  long long h = 0;
  for (const Rat& c : root_coefficients(rs, beta)) h += to_ll(c);
  return h;
}

}  // namespace

RootSystem build_root_system(const std::string& label) {
  RootSystem rs;
  rs.label = label;
  for (const auto& tok : split_product(label)) {
    const IMatrix block = cartan_for_simple_type(tok);
    const int old_rank = rs.rank, b = static_cast<int>(block.size());
    rs.rank += b;
    IMatrix grown(rs.rank, std::vector<Coord>(rs.rank, 0));
    for (int i = 0; i < old_rank; ++i)
      for (int j = 0; j < old_rank; ++j) grown[i][j] = rs.cartan[i][j];
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) grown[old_rank + i][old_rank + j] = block[i][j];
    rs.cartan = std::move(grown);
  }

  rs.simple_roots.assign(rs.cartan.begin(), rs.cartan.end());
  rs.rho.assign(rs.rank, 1);
  rs.cartan_inv = mat_inverse(to_rational(rs.cartan));

  // form = D * (C^-1)^T with D = diag(d_i); long roots then have norm 2.
  const auto d = simple_root_half_lengths(rs.cartan);
  rs.form = make_matrix<QMatrix>(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) rs.form[i][j] = d[i] * rs.cartan_inv[j][i];

  // all roots by reflection closure from the simple ones
  std::set<Weight> all(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<Weight> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    const Weight beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      Weight img = reflect(rs, i, beta);
      if (all.insert(img).second) queue.push_back(std::move(img));
    }
  }
  for (const auto& beta : all) {
    const auto coeffs = root_coefficients(rs, beta);
    const bool positive = std::all_of(coeffs.begin(), coeffs.end(),
                                      [](const Rat& c) { return c >= 0; });
    if (positive) rs.positive_roots.push_back(beta);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [&](const Weight& a, const Weight& b) {
              const auto ha = root_height(rs, a), hb = root_height(rs, b);
              return ha != hb ? ha < hb : a < b;
            });
  return rs;
}

Rat form_pair(const RootSystem& rs, const Weight& a, const Weight& b) {
  check_rank(rs, a);
  check_rank(rs, b);
  Rat r(0);
  for (int i = 0; i < rs.rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j)
      if (b[j] != 0) r += rs.form[i][j] * a[i] * b[j];
  }
  return r;
}

long long coroot_pairing(const RootSystem& rs, const Weight& w, const Weight& beta) {
  return to_ll(2 * form_pair(rs, w, beta) / form_pair(rs, beta, beta));
}

Weight reflect(const RootSystem& rs, int i, const Weight& w) {
  if (i < 0 || i >= rs.rank)
    throw std::invalid_argument("reflection index " + std::to_string(i) + " out of range");
  check_rank(rs, w);
  return weight_sub(w, weight_scale(rs.simple_roots[i], w[i]));
}

Weight reflect_root(const RootSystem& rs, const Weight& beta, const Weight& w) {
  return weight_sub(w, weight_scale(beta, coroot_pairing(rs, w, beta)));
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w, std::uint64_t bound) {
  check_rank(rs, w);
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    const Weight v = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      Weight img = reflect(rs, i, v);
      if (seen.insert(img).second) {
        if (seen.size() > bound)
          throw std::runtime_error("weyl_orbit exceeds bound " + std::to_string(bound));
        queue.push_back(std::move(img));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

DominantResult dominant_representative(const RootSystem& rs, const Weight& w) {
  return dominant_representative(rs, w, rs.simple_roots);
}

DominantResult dominant_representative(const RootSystem& rs, const Weight& w,
                                       const std::vector<Weight>& coroots) {
  check_rank(rs, w);
  DominantResult res{w, 1, false};
  constexpr long long kStepGuard = 10000000;
  for (long long step = 0;; ++step) {
    if (step > kStepGuard) throw std::runtime_error("dominant_representative: step guard hit");
    bool reflected = false;
    for (const auto& beta : coroots) {
      if (coroot_pairing(rs, res.weight, beta) < 0) {
        res.weight = reflect_root(rs, beta, res.weight);
        res.sign = -res.sign;
        reflected = true;
        break;
      }
    }
    if (!reflected) break;
  }
  res.regular = std::all_of(coroots.begin(), coroots.end(), [&](const Weight& beta) {
    return coroot_pairing(rs, res.weight, beta) > 0;
  });
  return res;
}

Weight apply_matrix(const IMatrix& m, const Weight& w) {
  const std::size_t n = m.size();
  Weight out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += m[i][j] * w[j];
  return out;
}

namespace {

IMatrix simple_reflection_matrix(const RootSystem& rs, int i) {
  IMatrix m = identity_matrix<IMatrix>(rs.rank);
  // (s_i w)_j = w_j - C[i][j] w_i: column i picks up -alpha_i
  for (int j = 0; j < rs.rank; ++j) m[j][i] -= rs.cartan[i][j];
  return m;
}

IMatrix root_reflection_matrix(const RootSystem& rs, const Weight& beta) {
  IMatrix m = make_matrix<IMatrix>(rs.rank, rs.rank);
  for (int k = 0; k < rs.rank; ++k) {
    Weight ek(rs.rank, 0);
    ek[k] = 1;
    const Weight img = reflect_root(rs, beta, ek);
    for (int j = 0; j < rs.rank; ++j) m[j][k] = img[j];
  }
  return m;
}

}  // namespace

std::vector<WeylElement> weyl_elements(const RootSystem& rs, std::uint64_t bound) {
  std::vector<IMatrix> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection_matrix(rs, i));

  std::vector<WeylElement> out;
  std::map<IMatrix, std::size_t> seen;
  out.push_back({{}, identity_matrix<IMatrix>(rs.rank), 1});
  seen.emplace(out[0].matrix, 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    const WeylElement cur = out[head];  // copy: out may reallocate
    for (int i = 0; i < rs.rank; ++i) {
      IMatrix next = mat_mul(cur.matrix, gens[i]);
      if (seen.count(next)) continue;
      if (out.size() + 1 > bound)
        throw std::runtime_error("Weyl group order exceeds bound " + std::to_string(bound));
      WeylElement w;
      w.word = cur.word;
      w.word.push_back(i);
      w.sign = -cur.sign;
      w.matrix = std::move(next);
      seen.emplace(w.matrix, out.size());
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::uint64_t reflection_subgroup_order(const RootSystem& rs, const std::vector<Weight>& roots,
                                        std::uint64_t bound) {
  std::vector<IMatrix> gens;
  for (const auto& beta : roots) gens.push_back(root_reflection_matrix(rs, beta));
  std::set<IMatrix> seen{identity_matrix<IMatrix>(rs.rank)};
  std::deque<IMatrix> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const IMatrix cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      IMatrix next = mat_mul(cur, g);
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          throw std::runtime_error("reflection subgroup order exceeds bound " +
                                   std::to_string(bound));
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::vector<Rat> root_coefficients(const RootSystem& rs, const Weight& w) {
  check_rank(rs, w);
  std::vector<Rat> c(rs.rank, Rat(0));
  for (int k = 0; k < rs.rank; ++k)
    for (int j = 0; j < rs.rank; ++j)
      if (w[j] != 0) c[k] += rs.cartan_inv[j][k] * w[j];
  return c;
}

bool is_root(const RootSystem& rs, const Weight& w) {
  const auto& pos = rs.positive_roots;
  if (std::find(pos.begin(), pos.end(), w) != pos.end()) return true;
  const Weight neg = weight_neg(w);
  return std::find(pos.begin(), pos.end(), neg) != pos.end();
}

}  // namespace superrep
