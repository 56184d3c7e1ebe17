#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace freediv {

/// nullopt is the bottom element, the degree of the zero polynomial.
using WeightedDegree = std::optional<std::int64_t>;

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial over Q. Terms are kept sorted by descending graded-lex
/// order with no zero coefficients, so equal polynomials have equal term
/// vectors.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial monomial(const RingPtr& ring, const Monomial& m, const Rational& c = 1) {
    Polynomial p(ring);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(const RingPtr& ring, std::size_t i, unsigned power = 1) {
    if (i >= ring->size()) throw InvalidArgument("variable index out of range");
    return monomial(ring, Monomial::var(i, power));
  }

  // Terms may be unsorted and contain duplicates or zeros.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_value() const {
    if (!is_constant()) throw InvalidArgument("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
  }
  const Term& leading() const { return terms_.front(); }

  Rational coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return 0;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    r.terms_ = std::move(out);
    r.canonicalize();
    return r;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ring_);
    if (c == 0) return r;
    r.terms_ = p.terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  // Multiplication by c * m keeps the order, so no sort is needed.
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  // Standard total degree; -1 for zero.
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.deg); }

  unsigned degree_in(std::size_t i) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[i]);
    return d;
  }

  bool involves(std::size_t i) const {
    for (const auto& t : terms_)
      if (t.mono[i]) return true;
    return false;
  }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_)) throw RingMismatch();
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size()) c = -1;
      else if (j == b.size()) c = 1;
      else c = cmp_grlex(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? Rational(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        Rational s = subtract ? Rational(a.terms_[i].coeff - b.terms_[j].coeff)
                              : Rational(a.terms_[i].coeff + b.terms_[j].coeff);
        if (s != 0) r.terms_.push_back({a.terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return cmp_grlex(x.mono, y.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
inline Polynomial one(const RingPtr& ring) { return Polynomial::constant(ring, 1); }

/// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.ring() && b.ring() && !same_ring(a.ring(), b.ring())) throw RingMismatch();
  const RingPtr& ring = b.ring();
  if (a.is_zero()) return Polynomial(ring);
  const Term& lb = b.leading();
  if (b.size() == 1) {
    std::vector<Term> q;
    q.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lb.mono.divides(t.mono)) return std::nullopt;
      q.push_back({t.mono / lb.mono, t.coeff / lb.coeff});
    }
    return Polynomial::from_terms(ring, std::move(q));
  }
  std::vector<Term> q;
  Polynomial r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = lr.mono / lb.mono;
    Rational c = lr.coeff / lb.coeff;
    q.push_back({m, c});
    r = r - b.mul_term(m, c);
  }
  return Polynomial::from_terms(ring, std::move(q));
}

inline bool divides(const Polynomial& b, const Polynomial& a) { return exact_divide(a, b).has_value(); }

inline WeightedDegree wdeg(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  std::int64_t best = f.terms().front().mono.wdeg(*f.ring());
  for (const auto& t : f.terms()) best = std::max(best, t.mono.wdeg(*f.ring()));
  return best;
}

struct Homogeneity {
  bool homogeneous = false;
  bool zero = false;  // the zero polynomial is homogeneous of every degree
  std::int64_t degree = 0;
};

inline Homogeneity homogeneity(const Polynomial& f) {
  Homogeneity h;
  if (f.is_zero()) {
    h.homogeneous = true;
    h.zero = true;
    return h;
  }
  h.degree = f.terms().front().mono.wdeg(*f.ring());
  h.homogeneous = true;
  for (const auto& t : f.terms())
    if (t.mono.wdeg(*f.ring()) != h.degree) {
      h.homogeneous = false;
      break;
    }
  return h;
}

/// The degree when f is weighted homogeneous and nonzero.
inline std::optional<std::int64_t> is_weighted_homogeneous(const Polynomial& f) {
  auto h = homogeneity(f);
  if (!h.homogeneous || h.zero) return std::nullopt;
  return h.degree;
}

inline Polynomial homogeneous_component(const Polynomial& f, std::int64_t d) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (t.mono.wdeg(*f.ring()) == d) out.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(out));
}

// Weighted-degree components in ascending degree order.
inline std::vector<std::pair<std::int64_t, Polynomial>> weighted_components(const Polynomial& f) {
  std::map<std::int64_t, std::vector<Term>> by;
  for (const auto& t : f.terms()) by[t.mono.wdeg(*f.ring())].push_back(t);
  std::vector<std::pair<std::int64_t, Polynomial>> out;
  for (auto& [d, ts] : by) out.emplace_back(d, Polynomial::from_terms(f.ring(), std::move(ts)));
  return out;
}

inline Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  if (i >= f.ring()->size()) throw InvalidArgument("partial derivative: variable index out of range");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    unsigned e = t.mono[i];
    if (!e) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

/// Coefficients of f as a polynomial in x_i; entry k multiplies x_i^k and
/// no longer involves x_i.
inline std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t i) {
  std::vector<std::vector<Term>> buckets(f.degree_in(i) + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    unsigned e = m[i];
    m.set(i, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.ring(), std::move(b)));
  return out;
}

inline Polynomial from_coefficients(const std::vector<Polynomial>& cs, std::size_t i, const RingPtr& ring) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (const auto& t : cs[k].terms()) {
      Monomial m = t.mono;
      m.set(i, m[i] + static_cast<unsigned>(k));
      out.push_back({m, t.coeff});
    }
  return Polynomial::from_terms(ring, std::move(out));
}

/// Replaces x_i by the constant c; the ring is unchanged.
inline Polynomial substitute(const Polynomial& f, std::size_t i, const Rational& c) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    unsigned e = m[i];
    m.set(i, 0);
    Rational v;
    mpz_pow_ui(v.get_num_mpz_t(), c.get_num_mpz_t(), e);
    mpz_pow_ui(v.get_den_mpz_t(), c.get_den_mpz_t(), e);
    out.push_back({m, t.coeff * v});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

/// Rewrites f into a ring with the same variables in any order and with any
/// weights; variables are matched by name.
inline Polynomial change_ring(const Polynomial& f, const RingPtr& target) {
  const auto& src = *f.ring();
  std::vector<std::size_t> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto j = target->index_of(src.var(i));
    if (!j) {
      bool used = f.involves(i);
      if (used) throw InvalidArgument("variable '" + src.var(i) + "' missing from target ring");
      map[i] = kMaxVars;
    } else {
      map[i] = *j;
    }
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.size(); ++i)
      if (t.mono[i]) m.set(map[i], t.mono[i]);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

/// Homogenizes with respect to a new variable placed at pos, padding every
/// term up to standard degree `target` (default: the degree of f).
inline Polynomial homogenize_into(const Polynomial& f, const RingPtr& extended, std::size_t new_index,
                                  std::optional<int> target = std::nullopt) {
  int D = target.value_or(f.total_degree());
  if (!f.is_zero() && D < f.total_degree()) throw InvalidArgument("homogenize: target degree below degree of f");
  std::vector<Term> out;
  out.reserve(f.size());
  const std::size_t n = f.ring()->size();
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0, j = 0; i < n; ++i, ++j) {
      if (j == new_index) ++j;
      if (t.mono[i]) m.set(j, t.mono[i]);
    }
    m.set(new_index, static_cast<unsigned>(D) - t.mono.deg);
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(extended, std::move(out));
}

inline Polynomial homogenize(const Polynomial& f, const std::string& new_var, VarPosition pos = VarPosition::back) {
  auto ext = extend_ring(f.ring(), new_var, 1, pos);
  return homogenize_into(f, ext, pos == VarPosition::front ? 0 : f.ring()->size());
}

/// Sets the named variable to 1 and drops it from the ring.
inline Polynomial dehomogenize(const Polynomial& f, const std::string& var) {
  auto idx = f.ring()->index_of(var);
  if (!idx) throw InvalidArgument("dehomogenize: unknown variable '" + var + "'");
  auto smaller = drop_variable(f.ring(), *idx);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0, j = 0; i < f.ring()->size(); ++i) {
      if (i == *idx) continue;
      if (t.mono[i]) m.set(j, t.mono[i]);
      ++j;
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(smaller, std::move(out));
}

// Positive gcd of numerators over lcm of denominators.
inline Rational content(const Polynomial& f) {
  if (f.is_zero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& t : f.terms()) {
    num = gcd(num, Integer(t.coeff.get_num()));
    den = lcm(den, Integer(t.coeff.get_den()));
  }
  return Rational(num, den);
}

/// Integer coefficients with gcd 1 and a positive leading coefficient.
inline Polynomial normalize(const Polynomial& f) {
  if (f.is_zero()) return f;
  Rational c = content(f);
  if (f.leading().coeff < 0) c = -c;
  Rational inv = 1 / c;
  return inv * f;
}

/// Leading coefficient made 1.
inline Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  Rational inv = 1 / f.leading().coeff;
  return inv * f;
}

inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& ring = *f.ring();
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.var(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

}  // namespace freediv
