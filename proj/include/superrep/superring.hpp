#pragma once

#include "superrep/embed.hpp"

#include <map>
#include <string>

namespace superrep {

/// Formal twist tag: a free abelian group on named symbols, plus a Clifford
/// parity contribution and a flag recording a half-weight lattice shift
/// (which composes like a sign, hence XOR).
struct TwistLabel {
  std::map<std::string, int> symbols;
  int parity_shift = 0;
  bool half_lattice_flag = false;

  std::string name() const;

  friend TwistLabel operator+(const TwistLabel& a, const TwistLabel& b);
  friend TwistLabel operator-(const TwistLabel& a);
  friend bool operator==(const TwistLabel& a, const TwistLabel& b) {
    return a.symbols == b.symbols && a.parity_shift == b.parity_shift &&
           a.half_lattice_flag == b.half_lattice_flag;
  }
  friend bool operator!=(const TwistLabel& a, const TwistLabel& b) {
    return !(a == b);
  }
};

TwistLabel twist_symbol(const std::string& sym);

/// Element of the super representation ring: an integer combination of
/// irreducible classes (keys are dominant weights, doubled coordinates so
/// half-lattice twists stay integral), graded mod 2, under a formal twist.
/// Negation is the parity-reversal relation [flip V] = -[V].
struct SRElement {
  int degree = 0;
  TwistLabel twist;
  std::map<Weight, long long> terms_x2;

  friend bool operator==(const SRElement& a, const SRElement& b) {
    return a.degree == b.degree && a.twist == b.twist && a.terms_x2 == b.terms_x2;
  }
};

SRElement sr_element(int degree, TwistLabel twist,
                     std::map<Weight, long long> terms_x2);

/// Convenience: degree-0 untwisted element with true-coordinate keys.
SRElement sr_classes(std::map<Weight, long long> terms);

SRElement sr_add(const SRElement& x, const SRElement& y);
SRElement sr_negate(const SRElement& x);
SRElement sr_pi(const SRElement& x);

/// Bilinear extension of the tensor-product decomposition; degrees add mod
/// 2 and twists add.
SRElement sr_mul(const SRElement& x, const SRElement& y, const RootSystem& rs);

/// Supersymmetric pairing in the orthonormal irreducible basis; elements of
/// distinct degree or twist pair to zero.
long long sr_pair(const SRElement& x, const SRElement& y);

enum class CliffordKind { M_pair, Q };

struct CliffordClass {
  int n = 0;
  CliffordKind kind = CliffordKind::M_pair;
  int rank_of_sr = 1;
  friend bool operator==(const CliffordClass& a, const CliffordClass& b) {
    return a.n == b.n && a.kind == b.kind && a.rank_of_sr == b.rank_of_sr;
  }
};

/// Super-Morita class of the complex Clifford algebra on n generators,
/// twofold periodic; n must lie in [0, 12].
CliffordClass classify_clifford(int n);

/// Truncated adjoint of restriction: coefficients of the pushforward at
/// every ambient dominant weight with coordinate sum <= bound. Degree and
/// twist are carried through unchanged.
SRElement pushforward_truncated(const Embedding& e, const SRElement& u,
                                long long bound);

}  // namespace superrep
