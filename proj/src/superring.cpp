#include "superrep/superring.hpp"

#include <sstream>
#include <stdexcept>

namespace superrep {

std::string TwistLabel::name() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [sym, c] : symbols) {
    if (c == 0) continue;
    if (c > 0 && !first) os << "+";
    if (c == -1) os << "-";
    if (c != 1 && c != -1) os << c << "*";
    os << sym;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

TwistLabel operator+(const TwistLabel& a, const TwistLabel& b) {
  TwistLabel out = a;
  for (const auto& [sym, c] : b.symbols) {
    out.symbols[sym] += c;
    if (out.symbols[sym] == 0) out.symbols.erase(sym);
  }
  out.parity_shift += b.parity_shift;
  out.half_lattice_flag = a.half_lattice_flag != b.half_lattice_flag;
  return out;
}

TwistLabel operator-(const TwistLabel& a) {
  TwistLabel out;
  for (const auto& [sym, c] : a.symbols) out.symbols[sym] = -c;
  out.parity_shift = -a.parity_shift;
  out.half_lattice_flag = a.half_lattice_flag;
  return out;
}

TwistLabel twist_symbol(const std::string& sym) {
  TwistLabel t;
  t.symbols[sym] = 1;
  return t;
}

namespace {

void strip_zeros(std::map<Weight, long long>& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
}

}  // namespace

SRElement sr_element(int degree, TwistLabel twist,
                     std::map<Weight, long long> terms_x2) {
  SRElement x;
  x.degree = ((degree % 2) + 2) % 2;
  x.twist = std::move(twist);
  x.terms_x2 = std::move(terms_x2);
  strip_zeros(x.terms_x2);
  return x;
}

SRElement sr_classes(std::map<Weight, long long> terms) {
  std::map<Weight, long long> doubled;
  for (const auto& [w, c] : terms) doubled[weight_scale(w, 2)] = c;
  return sr_element(0, TwistLabel{}, std::move(doubled));
}

SRElement sr_add(const SRElement& x, const SRElement& y) {
  if (x.degree != y.degree) {
    throw std::invalid_argument("cannot add elements of degree " +
                                std::to_string(x.degree) + " and " +
                                std::to_string(y.degree));
  }
  if (x.twist != y.twist) {
    throw std::invalid_argument("cannot add elements of twist " + x.twist.name() +
                                " and " + y.twist.name());
  }
  SRElement out = x;
  for (const auto& [w, c] : y.terms_x2) out.terms_x2[w] += c;
  strip_zeros(out.terms_x2);
  return out;
}

SRElement sr_negate(const SRElement& x) {
  SRElement out = x;
  for (auto& [w, c] : out.terms_x2) c = -c;
  return out;
}

SRElement sr_pi(const SRElement& x) { return sr_negate(x); }

SRElement sr_mul(const SRElement& x, const SRElement& y, const RootSystem& rs) {
  SRElement out;
  out.degree = (x.degree + y.degree) % 2;
  out.twist = x.twist + y.twist;
  if (x.terms_x2.empty() || y.terms_x2.empty()) return out;

  auto f = full_frame(rs);
  WeightMultiset prod;
  for (const auto& [lam2, cx] : x.terms_x2) {
    for (const auto& [mu2, cy] : y.terms_x2) {
      auto conv = multiset_convolve(cached_character_x2(f, lam2),
                                    cached_character_x2(f, mu2));
      for (const auto& [w2, m] : conv) {
        prod[w2] += cx * cy * m;
        if (prod[w2] == 0) prod.erase(w2);
      }
    }
  }
  for (const auto& [w2, c] : decompose_x2(f, prod)) out.terms_x2[w2] = c;
  return out;
}

long long sr_pair(const SRElement& x, const SRElement& y) {
  if (x.degree != y.degree || x.twist != y.twist) return 0;
  long long total = 0;
  for (const auto& [w, c] : x.terms_x2) {
    auto it = y.terms_x2.find(w);
    if (it != y.terms_x2.end()) total += c * it->second;
  }
  return total;
}

CliffordClass classify_clifford(int n) {
  if (n < 0 || n > 12) {
    throw std::invalid_argument("clifford classification supports 0 <= n <= 12, got " +
                                std::to_string(n));
  }
  CliffordClass c;
  c.n = n;
  c.kind = n % 2 == 0 ? CliffordKind::M_pair : CliffordKind::Q;
  c.rank_of_sr = n % 2 == 0 ? 1 : 0;
  return c;
}

namespace {

void dominant_below(const RootSystem& rs, long long budget, Weight& partial, int idx,
                    std::vector<Weight>& out) {
  if (idx == rs.rank) {
    out.push_back(partial);
    return;
  }
  for (Coord c = 0; c <= budget; ++c) {
    partial[idx] = c;
    dominant_below(rs, budget - c, partial, idx + 1, out);
  }
  partial[idx] = 0;
}

}  // namespace

SRElement pushforward_truncated(const Embedding& e, const SRElement& u,
                                long long bound) {
  SRElement out;
  out.degree = u.degree;
  out.twist = u.twist;
  if (u.terms_x2.empty() || bound < 0) return out;

  std::vector<Weight> lambdas;
  Weight partial(e.g.rank, 0);
  dominant_below(e.g, bound, partial, 0, lambdas);
  for (const auto& lam : lambdas) {
    const auto& dec = restrict_decomposed_x2(e, lam);
    long long coeff = 0;
    for (const auto& [mu2, c] : u.terms_x2) {
      auto it = dec.find(mu2);
      if (it != dec.end()) coeff += c * it->second;
    }
    if (coeff != 0) out.terms_x2[weight_scale(lam, 2)] = coeff;
  }
  return out;
}

}  // namespace superrep
