#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace superrep {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Throws unless q is an integer that fits in long long.
inline long long to_ll(const Rat& q) {
  if (!is_integer(q)) throw std::logic_error("expected integer rational, got " + q.str());
  const Int n = numerator(q);
  return n.convert_to<long long>();
}

inline std::string rat_str(const Rat& q) { return q.str(); }

/// Gaussian rational a + b*i. std::complex is undefined for non-FP scalars,
/// so this is spelled out.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long long r) : re(r) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    const Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero GaussRat");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
  GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::string str() const {
    if (im == 0) return re.str();
    if (re == 0) return im.str() + "i";
    return re.str() + (im > 0 ? "+" : "") + im.str() + "i";
  }
};

}  // namespace superrep
