#include "gps/multivector.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace gps {

namespace {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  unsigned total = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    unsigned e = static_cast<unsigned>(a[k]) + static_cast<unsigned>(b[k]);
    total += e;
    out[k] = static_cast<std::uint8_t>(e);
  }
  if (total > kMaxMonomialDegree) {
    throw MultivectorError("monomial degree cap " + std::to_string(kMaxMonomialDegree) +
                           " exceeded");
  }
  return out;
}

}  // namespace

PolyMultivector::PolyMultivector(int dim, int order) : dim_(dim), order_(order) {
  if (dim < 0 || order < 0) throw MultivectorError("negative dim or order");
  if (order > dim) {
    // still a valid (necessarily zero) multivector space; allow it
  }
}

PolyMultivector PolyMultivector::constant(int dim, ExactScalar c) {
  PolyMultivector f(dim, 0);
  if (!c.is_zero()) f.terms_[{Monomial(static_cast<std::size_t>(dim), 0), {}}] = std::move(c);
  return f;
}

PolyMultivector PolyMultivector::coordinate(int dim, int i) {
  if (i < 0 || i >= dim) throw MultivectorError("coordinate index out of range");
  PolyMultivector f(dim, 0);
  Monomial m(static_cast<std::size_t>(dim), 0);
  m[static_cast<std::size_t>(i)] = 1;
  f.terms_[{std::move(m), {}}] = ExactScalar(1);
  return f;
}

PolyMultivector PolyMultivector::monomial(int dim, const Monomial& mono, ExactScalar c) {
  if (static_cast<int>(mono.size()) != dim) throw MultivectorError("monomial size mismatch");
  if (total_degree(mono) > kMaxMonomialDegree) throw MultivectorError("monomial degree cap exceeded");
  PolyMultivector f(dim, 0);
  if (!c.is_zero()) f.terms_[{mono, {}}] = std::move(c);
  return f;
}

void PolyMultivector::add_term(const Monomial& mono, std::span<const int> indices,
                               const ExactScalar& coeff) {
  if (coeff.is_zero()) return;
  if (static_cast<int>(indices.size()) != order_) {
    throw MultivectorError("derivation tuple length does not match order");
  }
  // sort with sign, drop on repeats
  std::vector<int> idx(indices.begin(), indices.end());
  int sign = 1;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return;
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  }
  IndexTuple tuple;
  tuple.reserve(idx.size());
  for (int v : idx) {
    if (v < 0 || v >= dim_) throw MultivectorError("derivation index out of range");
    if (!tuple.empty() && tuple.back() == static_cast<std::uint8_t>(v)) return;
    tuple.push_back(static_cast<std::uint8_t>(v));
  }
  add_term(mono, tuple, sign > 0 ? coeff : -coeff);
}

void PolyMultivector::add_term(const Monomial& mono, const IndexTuple& sorted_indices,
                               const ExactScalar& coeff) {
  if (coeff.is_zero()) return;
  if (static_cast<int>(mono.size()) != dim_) throw MultivectorError("monomial size mismatch");
  auto key = std::make_pair(mono, sorted_indices);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyMultivector PolyMultivector::operator-() const {
  PolyMultivector out(dim_, order_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

PolyMultivector& PolyMultivector::operator+=(const PolyMultivector& o) {
  if (dim_ != o.dim_ || order_ != o.order_) {
    throw MultivectorError("dim/order mismatch in multivector addition");
  }
  for (const auto& [key, c] : o.terms_) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

PolyMultivector& PolyMultivector::operator-=(const PolyMultivector& o) {
  return *this += -o;
}

PolyMultivector& PolyMultivector::operator*=(const ExactScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

unsigned PolyMultivector::max_poly_degree() const {
  unsigned d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, total_degree(key.first));
  return d;
}

ExactScalar PolyMultivector::eval(std::span<const ExactScalar> point) const {
  if (order_ != 0) throw MultivectorError("eval requires an order-0 multivector");
  if (static_cast<int>(point.size()) != dim_) throw MultivectorError("point size mismatch");
  ExactScalar sum;
  for (const auto& [key, c] : terms_) {
    ExactScalar term = c;
    for (std::size_t k = 0; k < key.first.size(); ++k) {
      if (key.first[k] != 0) term *= pow_int(point[k], key.first[k]);
    }
    sum += term;
  }
  return sum;
}

std::optional<std::pair<int, IndexTuple>> wedge_merge(const IndexTuple& a, const IndexTuple& b) {
  IndexTuple out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining a-entries
      if ((a.size() - i) % 2 != 0) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return std::make_pair(sign, std::move(out));
}

PolyMultivector wedge(const PolyMultivector& a, const PolyMultivector& b) {
  if (a.dim() != b.dim()) throw MultivectorError("dimension mismatch in wedge");
  PolyMultivector out(a.dim(), a.order() + b.order());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      auto merged = wedge_merge(ka.second, kb.second);
      if (!merged) continue;
      ExactScalar c = ca * cb;
      if (merged->first < 0) c = -c;
      out.add_term(mono_mul(ka.first, kb.first), merged->second, c);
    }
  }
  return out;
}

PolyMultivector poly_mul(const PolyMultivector& a, const PolyMultivector& b) {
  if (a.order() != 0 || b.order() != 0) throw MultivectorError("poly_mul requires order 0");
  return wedge(a, b);
}

namespace {

// d/dx_var of a monomial: (exponent, reduced monomial), or exponent 0.
std::pair<unsigned, Monomial> mono_partial(const Monomial& m, int var) {
  unsigned e = m[static_cast<std::size_t>(var)];
  if (e == 0) return {0, {}};
  Monomial out = m;
  out[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e - 1);
  return {e, std::move(out)};
}

}  // namespace

PolyMultivector poly_partial(const PolyMultivector& f, int var) {
  if (f.order() != 0) throw MultivectorError("poly_partial requires order 0");
  if (var < 0 || var >= f.dim()) throw MultivectorError("variable index out of range");
  PolyMultivector out(f.dim(), 0);
  for (const auto& [key, c] : f.terms()) {
    auto [e, reduced] = mono_partial(key.first, var);
    if (e == 0) continue;
    out.add_term(reduced, IndexTuple{}, c * ExactScalar(static_cast<long long>(e)));
  }
  return out;
}

std::vector<PolyMultivector> gradient(const PolyMultivector& f) {
  std::vector<PolyMultivector> out;
  out.reserve(static_cast<std::size_t>(f.dim()));
  for (int k = 0; k < f.dim(); ++k) out.push_back(poly_partial(f, k));
  return out;
}

PolyMultivector schouten_nijenhuis(const PolyMultivector& a, const PolyMultivector& b) {
  if (a.dim() != b.dim()) throw MultivectorError("dimension mismatch in SNB");
  const int dim = a.dim();
  const int oa = a.order();
  const int ob = b.order();
  const int out_order = std::max(oa + ob - 1, 0);
  PolyMultivector out(dim, out_order);
  if (oa + ob == 0) return out;  // [f,g] = 0 for functions

  // On term pairs m d^I, n d^J:
  //   [m d^I, n d^J] = (-1)^{a-1} sum_u (-1)^{u+1} m (d_{I_u} n) d^{I\u} ^ d^J
  //                  +             sum_v (-1)^{v}   (d_{J_v} m) n d^I ^ d^{J\v}
  // (u, v 1-based). Signs follow from the decomposable-field expansion of
  // the bracket and pin the convention stated in the header.
  IndexTuple reduced;
  for (const auto& [ka, ca] : a.terms()) {
    const Monomial& m = ka.first;
    const IndexTuple& ti = ka.second;
    for (const auto& [kb, cb] : b.terms()) {
      const Monomial& n = kb.first;
      const IndexTuple& tj = kb.second;

      for (std::size_t u = 0; u < ti.size(); ++u) {
        auto [e, dn] = mono_partial(n, ti[u]);
        if (e == 0) continue;
        reduced.assign(ti.begin(), ti.end());
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(u));
        auto merged = wedge_merge(reduced, tj);
        if (!merged) continue;
        int sign = merged->first;
        if ((oa - 1 + static_cast<int>(u)) % 2 != 0) sign = -sign;  // (-1)^{a-1} (-1)^{u0}
        ExactScalar c = ca * cb * ExactScalar(static_cast<long long>(e));
        if (sign < 0) c = -c;
        out.add_term(mono_mul(m, dn), merged->second, c);
      }

      for (std::size_t v = 0; v < tj.size(); ++v) {
        auto [e, dm] = mono_partial(m, tj[v]);
        if (e == 0) continue;
        reduced.assign(tj.begin(), tj.end());
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(v));
        auto merged = wedge_merge(ti, reduced);
        if (!merged) continue;
        int sign = merged->first;
        if (v % 2 == 0) sign = -sign;  // (-1)^{v0+1}
        ExactScalar c = ca * cb * ExactScalar(static_cast<long long>(e));
        if (sign < 0) c = -c;
        out.add_term(mono_mul(dm, n), merged->second, c);
      }
    }
  }
  return out;
}

PolyMultivector hamiltonian_vector_field(const PolyMultivector& l, const PolyMultivector& f) {
  if (l.order() != 2) throw MultivectorError("hamiltonian_vector_field requires a bivector");
  if (f.order() != 0) throw MultivectorError("hamiltonian_vector_field requires an order-0 input");
  if (l.dim() != f.dim()) throw MultivectorError("dimension mismatch");
  PolyMultivector out(l.dim(), 1);
  for (const auto& [key, c] : l.terms()) {
    const int j = key.second[0];
    const int k = key.second[1];
    PolyMultivector coeff_mv = PolyMultivector::monomial(l.dim(), key.first, c);
    PolyMultivector dj = poly_mul(coeff_mv, poly_partial(f, j));
    PolyMultivector dk = poly_mul(coeff_mv, poly_partial(f, k));
    const int idx_k[1] = {k};
    const int idx_j[1] = {j};
    for (const auto& [km, cm] : dj.terms()) out.add_term(km.first, std::span<const int>(idx_k), cm);
    for (const auto& [km, cm] : dk.terms()) out.add_term(km.first, std::span<const int>(idx_j), -cm);
  }
  return out;
}

std::string PolyMultivector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string cs = c.str();
    std::string vars;
    for (std::size_t k = 0; k < key.first.size(); ++k) {
      if (key.first[k] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(k + 1);
      if (key.first[k] > 1) vars += "^" + std::to_string(static_cast<int>(key.first[k]));
    }
    std::string ders;
    for (std::size_t k = 0; k < key.second.size(); ++k) {
      if (!ders.empty()) ders += "^";
      ders += "d" + std::to_string(static_cast<int>(key.second[k]) + 1);
    }
    // Coefficient rendering: hide unit coefficients next to variables.
    std::string body;
    bool coeff_is_one = (c == ExactScalar(1));
    bool coeff_is_minus_one = (c == ExactScalar(-1));
    bool composite = !c.rational().is_zero() && !c.radical().is_zero();
    std::string coeff = composite ? "(" + cs + ")" : cs;
    if (vars.empty() && ders.empty()) {
      body = coeff;
    } else {
      std::string tail = vars;
      if (!ders.empty()) tail = tail.empty() ? ders : tail + "*" + ders;
      if (coeff_is_one) {
        body = tail;
      } else if (coeff_is_minus_one) {
        body = "-" + tail;
      } else {
        body = coeff + "*" + tail;
      }
    }
    if (first) {
      os << body;
    } else if (!body.empty() && body[0] == '-') {
      os << body;
    } else {
      os << "+" << body;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyMultivector& m) { return os << m.str(); }

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, int dim) : text_(text), dim_(dim) {}

  PolyMultivector parse() {
    PolyMultivector e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw MultivectorError("polynomial parse error at position " + std::to_string(pos_) + ": " +
                           why + " in '" + text_ + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  unsigned long long parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected number");
    }
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
      if (v > 1'000'000'000ULL) fail("number too large");
      ++pos_;
    }
    return v;
  }

  PolyMultivector expr() {
    PolyMultivector acc = term();
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  PolyMultivector term() {
    PolyMultivector acc = factor();
    while (eat('*')) acc = poly_mul(acc, factor());
    return acc;
  }

  PolyMultivector factor() {
    PolyMultivector base = atom();
    if (eat('^')) {
      unsigned long long e = parse_uint();
      if (e > kMaxMonomialDegree) fail("exponent exceeds degree cap");
      PolyMultivector acc = PolyMultivector::constant(dim_, ExactScalar(1));
      for (unsigned long long k = 0; k < e; ++k) acc = poly_mul(acc, base);
      return acc;
    }
    return base;
  }

  PolyMultivector atom() {
    skip_ws();
    if (eat('(')) {
      PolyMultivector e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat('-')) return -factor();
    char c = peek();
    if (c == 'x') {
      ++pos_;
      unsigned long long i = parse_uint();
      if (i < 1 || static_cast<int>(i) > dim_) fail("variable index out of range");
      return PolyMultivector::coordinate(dim_, static_cast<int>(i) - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long long num = parse_uint();
      BigRat value{BigInt(num)};
      if (eat('/')) {
        unsigned long long den = parse_uint();
        if (den == 0) fail("zero denominator");
        value = make_rat(BigInt(num), BigInt(den));
      }
      return PolyMultivector::constant(dim_, ExactScalar(value));
    }
    fail("expected term");
  }

  const std::string& text_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyMultivector parse_polynomial(const std::string& text, int dim) {
  return PolyParser(text, dim).parse();
}

}  // namespace gps
