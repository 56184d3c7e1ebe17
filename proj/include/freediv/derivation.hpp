#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace freediv {

/// sum_i g_i d/dx_i, one coefficient per ring variable.
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(const RingPtr& ring) : ring_(ring), coeffs_(ring->size(), Polynomial(ring)) {}
  Derivation(const RingPtr& ring, std::vector<Polynomial> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring_->size())
      throw InvalidArgument("derivation needs " + std::to_string(ring_->size()) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
    for (auto& c : coeffs_) {
      if (c.ring() && !same_ring(c.ring(), ring_)) throw RingMismatch();
      if (!c.ring()) c = Polynomial(ring_);
    }
  }

  static Derivation partial(const RingPtr& ring, std::size_t i) {
    Derivation d(ring);
    d.coeffs_.at(i) = one(ring);
    return d;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }
  const Polynomial& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t size() const { return coeffs_.size(); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return same_ring(a.ring_, b.ring_) && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

  friend Derivation operator+(const Derivation& a, const Derivation& b) {
    check(a, b);
    Derivation r(a.ring_);
    for (std::size_t i = 0; i < a.size(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend Derivation operator-(const Derivation& a, const Derivation& b) {
    check(a, b);
    Derivation r(a.ring_);
    for (std::size_t i = 0; i < a.size(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }
  friend Derivation operator*(const Polynomial& p, const Derivation& d) {
    if (p.ring() && !same_ring(p.ring(), d.ring_)) throw RingMismatch();
    Derivation r(d.ring_);
    for (std::size_t i = 0; i < d.size(); ++i) r.coeffs_[i] = p * d.coeffs_[i];
    return r;
  }
  friend Derivation operator*(const Rational& c, const Derivation& d) {
    Derivation r(d.ring_);
    for (std::size_t i = 0; i < d.size(); ++i) r.coeffs_[i] = c * d.coeffs_[i];
    return r;
  }

 private:
  static void check(const Derivation& a, const Derivation& b) {
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
  }

  RingPtr ring_;
  std::vector<Polynomial> coeffs_;
};

inline Derivation euler(const RingPtr& ring) {
  std::vector<Polynomial> cs;
  for (std::size_t i = 0; i < ring->size(); ++i)
    cs.push_back(Polynomial::variable(ring, i) * Rational(ring->weight(i)));
  return Derivation(ring, std::move(cs));
}

inline Polynomial apply(const Derivation& d, const Polynomial& f) {
  if (f.ring() && !same_ring(d.ring(), f.ring())) throw RingMismatch();
  Polynomial r(d.ring());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) continue;
    Polynomial fi = partial_derivative(f, i);
    if (!fi.is_zero()) r += d[i] * fi;
  }
  return r;
}

struct DerivationDegree {
  WeightedDegree degree;  // nullopt for the zero derivation
  bool homogeneous = false;
  bool zero = false;
};

/// deg(g_i d/dx_i) = wdeg(g_i) + 1 - w_i; zero slots impose nothing.
inline DerivationDegree wdeg_derivation(const Derivation& d) {
  DerivationDegree out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) continue;
    std::int64_t top = *wdeg(d[i]) + 1 - d.ring()->weight(i);
    if (!out.degree || top > *out.degree) out.degree = top;
  }
  if (!out.degree) {
    out.zero = true;
    out.homogeneous = true;
    return out;
  }
  out.homogeneous = true;
  for (std::size_t i = 0; i < d.size() && out.homogeneous; ++i) {
    if (d[i].is_zero()) continue;
    auto h = homogeneity(d[i]);
    out.homogeneous = h.homogeneous && h.degree + 1 - d.ring()->weight(i) == *out.degree;
  }
  return out;
}

struct DerMembership {
  bool member = false;
  std::optional<Polynomial> cofactor;  // d(f) = cofactor * f
  bool annihilates = false;
};

inline DerMembership in_der(const Derivation& d, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("membership test against the zero polynomial");
  DerMembership r;
  Polynomial df = apply(d, f);
  if (df.is_zero()) {
    r.member = true;
    r.annihilates = true;
    r.cofactor = Polynomial(f.ring());
    return r;
  }
  auto q = exact_divide(df, f);
  if (q) {
    r.member = true;
    r.cofactor = *q;
  }
  return r;
}

struct EulerSplit {
  Polynomial euler_multiple;  // cofactor / deg f
  Derivation annihilating;    // lies in Der0(f)
};

/// delta = (delta(f) / (d f)) * E + delta~ with delta~(f) = 0.
inline EulerSplit split_euler(const Derivation& delta, const Polynomial& f) {
  auto deg = is_weighted_homogeneous(f);
  if (!deg) throw InvalidArgument("split_euler: divisor is not weighted homogeneous");
  if (*deg == 0) throw InvalidArgument("split_euler: divisor has weighted degree 0");
  auto m = in_der(delta, f);
  if (!m.member) throw InvalidArgument("split_euler: derivation is not in Der(f)");
  Polynomial p = Rational(1, *deg) * *m.cofactor;
  Derivation rest = delta - p * euler(f.ring());
  if (!apply(rest, f).is_zero()) throw Error("split_euler: reconstruction failed");
  return {p, rest};
}

/// Pads every coefficient to the largest standard degree D among them, so
/// d/dx_i gets g_i^h * t^(D - deg g_i); the new variable's slot is zero.
inline Derivation homogenize_derivation(const Derivation& d, const std::string& new_var,
                                        VarPosition pos = VarPosition::back) {
  if (d.is_zero()) throw InvalidArgument("homogenize_derivation: zero derivation");
  auto ext = extend_ring(d.ring(), new_var, 1, pos);
  std::size_t idx = pos == VarPosition::front ? 0 : d.ring()->size();
  int D = 0;
  for (const auto& g : d.coeffs()) D = std::max(D, g.total_degree());
  std::vector<Polynomial> cs;
  for (const auto& g : d.coeffs()) cs.push_back(g.is_zero() ? Polynomial(ext) : homogenize_into(g, ext, idx, D));
  cs.insert(cs.begin() + static_cast<std::ptrdiff_t>(idx), Polynomial(ext));
  return Derivation(ext, std::move(cs));
}

/// Same derivation in a ring with matching variable names (e.g. regraded).
inline Derivation change_ring(const Derivation& d, const RingPtr& target) {
  std::vector<Polynomial> cs(target->size(), Polynomial(target));
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto j = target->index_of(d.ring()->var(i));
    if (!j) {
      if (!d[i].is_zero()) throw InvalidArgument("variable '" + d.ring()->var(i) + "' missing from target ring");
      continue;
    }
    cs[*j] = change_ring(d[i], target);
  }
  return Derivation(target, std::move(cs));
}

/// Weighted homogeneous pieces in ascending degree; they sum to d.
inline std::vector<std::pair<std::int64_t, Derivation>> graded_components(const Derivation& d) {
  std::map<std::int64_t, std::vector<std::vector<Term>>> by;
  const auto& ring = *d.ring();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (const auto& t : d[i].terms()) {
      std::int64_t deg = t.mono.wdeg(ring) + 1 - ring.weight(i);
      auto& slot = by[deg];
      if (slot.empty()) slot.resize(d.size());
      slot[i].push_back(t);
    }
  std::vector<std::pair<std::int64_t, Derivation>> out;
  for (auto& [deg, slots] : by) {
    std::vector<Polynomial> cs;
    for (auto& ts : slots) cs.push_back(Polynomial::from_terms(d.ring(), std::move(ts)));
    out.emplace_back(deg, Derivation(d.ring(), std::move(cs)));
  }
  return out;
}

inline std::string to_string(const Derivation& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += "; ";
    s += to_string(d[i]);
  }
  return s;
}

}  // namespace freediv
