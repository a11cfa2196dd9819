#include "realform/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace realform {

Scalar::Scalar(int num, int den) : re_(Rat(num, den)), im_(0) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  canon(re_);
}

bool Scalar::is_rational_integer() const {
  return im_ == 0 && re_.get_den() == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  Rat n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rat re = re_ * o.re_ - im_ * o.im_;
  Rat im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Parses "a" or "a/b" with optional sign; pos advances past the token.
Rat parse_rat(const std::string& s, size_t* pos) {
  size_t p = *pos;
  size_t start = p;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
  bool has_digit = false;
  while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
    has_digit = true;
    ++p;
  }
  if (!has_digit) throw std::invalid_argument("Scalar::parse: expected number in '" + s + "'");
  std::string num = s.substr(start, p - start);
  std::string den = "1";
  if (p < s.size() && s[p] == '/') {
    ++p;
    size_t dstart = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == dstart) throw std::invalid_argument("Scalar::parse: bad denominator in '" + s + "'");
    den = s.substr(dstart, p - dstart);
  }
  *pos = p;
  Rat r(num + "/" + den);
  r.canonicalize();
  return r;
}

}  // namespace

std::string Scalar::str() const {
  if (im_ == 0) return rat_str(re_);
  std::string imag = rat_str(im_) + "*i";
  if (re_ == 0) return imag;
  if (im_ > 0) return rat_str(re_) + "+" + imag;
  return rat_str(re_) + imag;  // sign carried by im_
}

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("Scalar::parse: empty input");

  Rat re = 0, im = 0;
  size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    if (pos >= s.size()) throw std::invalid_argument("Scalar::parse: dangling sign");
    if (s[pos] == 'i') {
      ++pos;
      im += sign;
      continue;
    }
    size_t p = pos;
    Rat coeff = parse_rat(s, &p);
    if (p < s.size() && (s[p] == '*' || s[p] == 'i')) {
      if (s[p] == '*') ++p;
      if (p >= s.size() || s[p] != 'i')
        throw std::invalid_argument("Scalar::parse: expected 'i' in '" + text + "'");
      ++p;
      im += sign * coeff;
    } else {
      re += sign * coeff;
    }
    pos = p;
  }
  return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

bool rational_sqrt(const Rat& q, Rat* out) {
  if (q < 0) return false;
  Int num = q.get_num(), den = q.get_den();
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  if (rn * rn != num || rd * rd != den) return false;
  *out = Rat(rn, rd);
  out->canonicalize();
  return true;
}

bool Scalar::sqrt(const Scalar& x, Scalar* out) {
  if (x.is_zero()) {
    *out = Scalar(0);
    return true;
  }
  if (x.im() == 0) {
    Rat r;
    if (x.re() > 0 && rational_sqrt(x.re(), &r)) {
      *out = Scalar(r);
      return true;
    }
    if (x.re() < 0 && rational_sqrt(-x.re(), &r)) {
      *out = Scalar(Rat(0), r);
      return true;
    }
    return false;
  }
  // (p+qi)^2 = a+bi:  p^2 - q^2 = a, 2pq = b.  Then p^2 = (a + sqrt(a^2+b^2))/2.
  Rat n = x.norm(), s;
  if (!rational_sqrt(n, &s)) return false;
  Rat p2 = (x.re() + s) / 2, p;
  if (!rational_sqrt(p2, &p) || p == 0) return false;
  Rat q = x.im() / (2 * p);
  *out = Scalar(p, q);
  return *out * *out == x;
}

}  // namespace realform
