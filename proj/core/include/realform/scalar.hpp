#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace realform {

using Int = mpz_class;
using Rat = mpq_class;

/// Element of the Gaussian rationals Q(i). Both parts are kept canonical
/// (lowest terms, positive denominator), so equality is bitwise on mpq.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(int n) : re_(n), im_(0) {}  // NOLINT: implicit on purpose
  Scalar(long n) : re_(n), im_(0) {}
  Scalar(const Rat& re) : re_(re), im_(0) { canon(re_); }
  Scalar(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {
    canon(re_);
    canon(im_);
  }
  Scalar(int num, int den);

  static Scalar i() { return Scalar(Rat(0), Rat(1)); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_rational_integer() const;

  Scalar conj() const { return Scalar(re_, -im_); }
  Rat norm() const { return re_ * re_ + im_ * im_; }  // a^2 + b^2
  Scalar inverse() const;                             // throws on zero

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Lexicographic order on (re, im); used for canonical sorting only.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  /// Text format: "a/b" or "a/b+c/d*i" (also accepts "i", "-i", "c*i").
  std::string str() const;
  static Scalar parse(const std::string& text);

  /// Exact square root inside Q(i), if one exists.
  static bool sqrt(const Scalar& x, Scalar* out);

 private:
  static void canon(Rat& q) { q.canonicalize(); }
  Rat re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Exact square root of a non-negative rational, if it is a perfect square.
bool rational_sqrt(const Rat& q, Rat* out);

}  // namespace realform
