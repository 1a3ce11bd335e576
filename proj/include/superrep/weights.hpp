#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace superrep {

/// Weights live in fundamental-weight coordinates of the ambient root system.
/// Layers that need half-integral weights (spinor shifts) keep the same type
/// but store doubled coordinates; call sites say which scale they are in.
using Coord = long long;
using Weight = std::vector<Coord>;

/// Finite signed multiset of weights. std::map keeps iteration lexicographic,
/// which makes every downstream ordering deterministic.
using WeightMultiset = std::map<Weight, long long>;

inline Weight weight_add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Weight weight_scale(const Weight& a, Coord s) {
  Weight r = a;
  for (auto& x : r) x *= s;
  return r;
}

inline Weight weight_neg(const Weight& a) { return weight_scale(a, -1); }

inline bool weight_is_zero(const Weight& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

inline bool weight_all_even(const Weight& a) {
  for (auto x : a)
    if (x % 2 != 0) return false;
  return true;
}

inline Weight weight_halve(const Weight& a) {
  Weight r = a;
  for (auto& x : r) x /= 2;
  return r;
}

/// Adds c copies of w; erases the entry when it cancels to zero.
inline void multiset_add(WeightMultiset& m, const Weight& w, long long c) {
  if (c == 0) return;
  auto it = m.find(w);
  if (it == m.end()) {
    m.emplace(w, c);
  } else if ((it->second += c) == 0) {
    m.erase(it);
  }
}

inline WeightMultiset multiset_sum(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset r = a;
  for (const auto& [w, c] : b) multiset_add(r, w, c);
  return r;
}

inline WeightMultiset multiset_negate(const WeightMultiset& a) {
  WeightMultiset r;
  for (const auto& [w, c] : a) r.emplace(w, -c);
  return r;
}

/// Image multiset under weight negation w ↦ −w (dualization).
inline WeightMultiset multiset_dual(const WeightMultiset& a) {
  WeightMultiset r;
  for (const auto& [w, c] : a) r.emplace(weight_neg(w), c);
  return r;
}

/// Convolution: δ_v ⊛ δ_w = δ_{v+w}, extended bilinearly.
inline WeightMultiset multiset_convolve(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset r;
  for (const auto& [v, c] : a)
    for (const auto& [w, d] : b) multiset_add(r, weight_add(v, w), c * d);
  return r;
}

inline long long multiset_total(const WeightMultiset& a) {
  long long t = 0;
  for (const auto& [w, c] : a) t += c;
  return t;
}

inline std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

/// Renders a possibly doubled-coordinate weight back in true units: even
/// entries print as integers, odd ones as halves.
inline std::string weight_str_x2(const Weight& w2) {
  std::string s = "(";
  for (std::size_t i = 0; i < w2.size(); ++i) {
    if (i) s += ",";
    if (w2[i] % 2 == 0)
      s += std::to_string(w2[i] / 2);
    else
      s += std::to_string(w2[i]) + "/2";
  }
  return s + ")";
}

}  // namespace superrep
