#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace freediv {

// Monomials store exponents inline; rings are capped at this many variables.
inline constexpr std::size_t kMaxVars = 16;

enum class VarPosition { front, back };

/// Polynomial ring over Q with a positive integer weight per variable.
///
/// The weight vector defines the (possibly nonstandard) Z-grading used by
/// weighted degrees of polynomials and derivations. All weights equal to 1
/// is the standard grading.
class GradedRing {
 public:
  GradedRing(std::vector<std::string> vars, std::vector<std::int64_t> weights)
      : vars_(std::move(vars)), weights_(std::move(weights)) {
    if (vars_.size() != weights_.size())
      throw InvalidArgument("ring: variable and weight lists differ in length");
    if (vars_.size() > kMaxVars)
      throw InvalidArgument("ring: at most " + std::to_string(kMaxVars) + " variables supported");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!valid_name(vars_[i])) throw InvalidArgument("ring: invalid variable name '" + vars_[i] + "'");
      if (!seen.insert(vars_[i]).second)
        throw InvalidArgument("ring: duplicate variable '" + vars_[i] + "'");
      if (weights_[i] <= 0)
        throw InvalidArgument("ring: weight of '" + vars_[i] + "' must be positive");
    }
  }

  static bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
  }

  std::size_t size() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const std::string& var(std::size_t i) const { return vars_.at(i); }
  std::int64_t weight(std::size_t i) const { return weights_.at(i); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    return std::nullopt;
  }

  bool is_standard() const {
    for (auto w : weights_)
      if (w != 1) return false;
    return true;
  }

  std::int64_t weight_sum() const { return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0}); }

  friend bool operator==(const GradedRing& a, const GradedRing& b) {
    return a.vars_ == b.vars_ && a.weights_ == b.weights_;
  }

  std::string describe() const {
    std::string s;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i) s += ",";
      s += vars_[i] + ":" + std::to_string(weights_[i]);
    }
    return s;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<std::int64_t> weights_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

inline RingPtr make_ring(std::vector<std::string> vars, std::vector<std::int64_t> weights) {
  return std::make_shared<const GradedRing>(std::move(vars), std::move(weights));
}

inline RingPtr standard_ring(std::vector<std::string> vars) {
  std::vector<std::int64_t> w(vars.size(), 1);
  return make_ring(std::move(vars), std::move(w));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

inline RingPtr with_weights(const RingPtr& r, std::vector<std::int64_t> weights) {
  return make_ring(r->vars(), std::move(weights));
}

inline RingPtr standard_regrade(const RingPtr& r) { return standard_ring(r->vars()); }

// Ring with one more variable of the given weight.
inline RingPtr extend_ring(const RingPtr& r, const std::string& name, std::int64_t weight, VarPosition pos) {
  if (r->index_of(name)) throw InvalidArgument("variable '" + name + "' already in ring");
  auto vars = r->vars();
  auto w = r->weights();
  if (pos == VarPosition::front) {
    vars.insert(vars.begin(), name);
    w.insert(w.begin(), weight);
  } else {
    vars.push_back(name);
    w.push_back(weight);
  }
  return make_ring(std::move(vars), std::move(w));
}

inline RingPtr drop_variable(const RingPtr& r, std::size_t idx) {
  auto vars = r->vars();
  auto w = r->weights();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(idx));
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(idx));
  return make_ring(std::move(vars), std::move(w));
}

struct WeightNormalization {
  RingPtr ring;
  std::int64_t common_factor = 1;
  // (index kept, q divided out of the other weights), in application order.
  std::vector<std::pair<std::size_t, std::int64_t>> steps;
};

/// Divides out the common factor of the weights, then applies the
/// well-forming reduction (divide all weights but w_i by the gcd q of the
/// others) until every such q is 1.
inline WeightNormalization normalize_weights(const RingPtr& ring) {
  WeightNormalization out;
  auto w = ring->weights();
  std::int64_t g = 0;
  for (auto x : w) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : w) x /= g;
  out.common_factor = g == 0 ? 1 : g;
  bool changed = true;
  while (changed && w.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::int64_t q = 0;
      for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i) q = std::gcd(q, w[j]);
      if (q > 1) {
        for (std::size_t j = 0; j < w.size(); ++j)
          if (j != i) w[j] /= q;
        out.steps.emplace_back(i, q);
        changed = true;
      }
    }
  }
  out.ring = with_weights(ring, std::move(w));
  return out;
}

}  // namespace freediv
