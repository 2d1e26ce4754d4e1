#include "gps/exact.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace gps {

namespace {

int g_radicand = 3;

bool square_free(int d) {
  for (int f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

}  // namespace

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw ExactError("make_rat: zero denominator");
  BigRat r(num);
  r /= BigRat(den);
  return r;
}

BigRat make_rat(long long num, long long den) {
  return make_rat(BigInt(num), BigInt(den));
}

int radicand() { return g_radicand; }

void set_radicand(int d) {
  if (d <= 1 || !square_free(d)) {
    throw ExactError("radicand must be a square-free integer > 1, got " + std::to_string(d));
  }
  g_radicand = d;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  rat_ += o.rat_;
  rad_ += o.rad_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  rat_ -= o.rat_;
  rad_ -= o.rad_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  // (a + b sqrt(d)) (a' + b' sqrt(d)) = (aa' + d bb') + (ab' + a'b) sqrt(d)
  BigRat a = rat_ * o.rat_ + BigRat(g_radicand) * rad_ * o.rad_;
  BigRat b = rat_ * o.rad_ + rad_ * o.rat_;
  rat_ = std::move(a);
  rad_ = std::move(b);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw ExactError("division by zero ExactScalar");
  // Multiply by the conjugate a' - b' sqrt(d); the norm a'^2 - d b'^2 is a
  // nonzero rational (sqrt(d) irrational).
  BigRat norm = o.rat_ * o.rat_ - BigRat(g_radicand) * o.rad_ * o.rad_;
  *this *= ExactScalar(o.rat_ / norm, -o.rad_ / norm);
  return *this;
}

int ExactScalar::sign() const {
  int sa = rat_.sign();
  int sb = rad_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare |a| vs |b| sqrt(d) via squares.
  BigRat a2 = rat_ * rat_;
  BigRat db2 = BigRat(g_radicand) * rad_ * rad_;
  if (a2 == db2) return 0;  // cannot happen for square-free d, kept for safety
  return a2 > db2 ? sa : sb;
}

double ExactScalar::to_double() const {
  double a = rat_.convert_to<double>();
  double b = rad_.convert_to<double>();
  return a + b * std::sqrt(static_cast<double>(g_radicand));
}

namespace {

std::string rat_str(const BigRat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

}  // namespace

std::string ExactScalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!rat_.is_zero()) out += rat_str(rat_);
  if (!rad_.is_zero()) {
    if (!out.empty() && rad_.sign() > 0) out += "+";
    out += rat_str(rad_);
    out += "*sqrt(" + std::to_string(g_radicand) + ")";
  }
  return out;
}

ExactScalar ExactScalar::parse(const std::string& text) {
  // Grammar: term ( ('+'|'-') term )*, term = rational [ '*sqrt(' int ')' ].
  size_t pos = 0;
  const auto fail = [&](const std::string& why) -> ExactError {
    return ExactError("cannot parse ExactScalar '" + text + "': " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_int = [&]() -> BigInt {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos, ++digits;
    if (digits == 0) throw fail("expected integer at position " + std::to_string(start));
    return BigInt(text.substr(start, pos - start));
  };
  ExactScalar result;
  skip_ws();
  if (pos == text.size()) throw fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first) throw fail("empty input");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-' between terms");
    }
    BigInt num = parse_int();
    BigInt den = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      den = parse_int();
      if (den.is_zero()) throw fail("zero denominator");
    }
    skip_ws();
    bool radical = false;
    if (pos + 5 <= text.size() && text.compare(pos, 5, "*sqrt") == 0) {
      pos += 5;
      skip_ws();
      if (pos == text.size() || text[pos] != '(') throw fail("expected '(' after sqrt");
      ++pos;
      BigInt d = parse_int();
      skip_ws();
      if (pos == text.size() || text[pos] != ')') throw fail("expected ')' after radicand");
      ++pos;
      if (d != g_radicand) {
        throw fail("radicand " + d.str() + " does not match session radicand " +
                   std::to_string(g_radicand));
      }
      radical = true;
    }
    BigRat value = make_rat(sign * num, den);
    if (radical) {
      result += ExactScalar(BigRat(0), value);
    } else {
      result += ExactScalar(value);
    }
    first = false;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.str(); }

ExactScalar pow_int(const ExactScalar& base, unsigned exp) {
  ExactScalar out(1);
  for (unsigned k = 0; k < exp; ++k) out *= base;
  return out;
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  ExactScalar re = re_ * o.re_ - im_ * o.im_;
  ExactScalar im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string ExactComplex::str() const {
  if (is_zero()) return "0";
  if (im_.is_zero()) return re_.str();
  std::string out;
  if (!re_.is_zero()) out += re_.str();
  if (!out.empty() && im_.sign() > 0) out += "+";
  out += "(" + im_.str() + ")*i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.str(); }

}  // namespace gps
