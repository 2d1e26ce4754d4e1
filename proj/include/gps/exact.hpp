#ifndef GPS_EXACT_HPP
#define GPS_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gps {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact construction of num/den (the two-argument cpp_rational constructor
/// is unusable in boost 1.74). Throws on den == 0.
BigRat make_rat(const BigInt& num, const BigInt& den);
BigRat make_rat(long long num, long long den = 1);

struct ExactError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Session-global square-free radicand d of the working field Q(sqrt(d)).
/// Defaults to 3, which covers the whole algebra catalog.
int radicand();
void set_radicand(int d);  // throws unless d > 1 and square-free

/// Element of Q(sqrt(d)): rat + rad*sqrt(d), both parts exact rationals in
/// lowest terms. Immutable value type; equality is component-wise and
/// decidable because sqrt(d) is irrational.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long long n) : rat_(n) {}  // NOLINT: implicit by design
  explicit ExactScalar(BigRat rat) : rat_(std::move(rat)) {}
  ExactScalar(BigRat rat, BigRat rad) : rat_(std::move(rat)), rad_(std::move(rad)) {}

  static ExactScalar sqrt_d() { return ExactScalar(BigRat(0), BigRat(1)); }

  const BigRat& rational() const { return rat_; }
  const BigRat& radical() const { return rad_; }

  bool is_zero() const { return rat_.is_zero() && rad_.is_zero(); }
  bool is_rational() const { return rad_.is_zero(); }

  ExactScalar operator-() const { return {-rat_, -rad_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);  // throws ExactError on o == 0

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.rat_ == b.rat_ && a.rad_ == b.rad_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Exact sign of the real value rat + rad*sqrt(d): -1, 0 or +1.
  int sign() const;

  double to_double() const;

  /// Canonical text form, e.g. "0", "-1/2", "3/4*sqrt(3)", "1/2+1/6*sqrt(3)".
  std::string str() const;
  /// Inverse of str(); also accepts plain integers. Throws ExactError.
  static ExactScalar parse(const std::string& text);

 private:
  BigRat rat_{0};
  BigRat rad_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

ExactScalar pow_int(const ExactScalar& base, unsigned exp);

/// Complex extension used by the matrix-representation oracles.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(long long n) : re_(n) {}  // NOLINT: implicit by design
  ExactComplex(ExactScalar re) : re_(std::move(re)) {}
  ExactComplex(ExactScalar re, ExactScalar im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactComplex i() { return {ExactScalar(0), ExactScalar(1)}; }

  const ExactScalar& real() const { return re_; }
  const ExactScalar& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  ExactComplex conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2, exact and non-negative.
  ExactScalar norm2() const { return re_ * re_ + im_ * im_; }

  ExactComplex operator-() const { return {-re_, -im_}; }
  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  std::string str() const;

 private:
  ExactScalar re_;
  ExactScalar im_;
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

}  // namespace gps

#endif
