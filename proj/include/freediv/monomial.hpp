#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "error.hpp"
#include "ring.hpp"

namespace freediv {

/// Exponent vector x^r. Unused slots past the ring size stay zero, so two
/// monomials of one ring compare correctly with plain array comparison.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  Monomial() = default;

  explicit Monomial(const std::vector<unsigned>& exps) {
    if (exps.size() > kMaxVars) throw InvalidArgument("monomial: too many variables");
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0xFFFF) throw InvalidArgument("monomial: exponent too large");
      e[i] = static_cast<std::uint16_t>(exps[i]);
      deg += exps[i];
    }
  }

  static Monomial var(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.e[i] = static_cast<std::uint16_t>(power);
    m.deg = power;
    return m;
  }

  unsigned operator[](std::size_t i) const { return e[i]; }

  void set(std::size_t i, unsigned v) {
    deg = deg - e[i] + v;
    e[i] = static_cast<std::uint16_t>(v);
  }

  bool is_one() const { return deg == 0; }

  std::int64_t wdeg(const GradedRing& ring) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) s += static_cast<std::int64_t>(e[i]) * ring.weight(i);
    return s;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e[i]) + b.e[i];
      if (s > 0xFFFF) throw InvalidArgument("monomial: exponent overflow");
      m.e[i] = static_cast<std::uint16_t>(s);
    }
    m.deg = a.deg + b.deg;
    return m;
  }

  bool divides(const Monomial& b) const {
    if (deg > b.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }

  // b / a, assuming a | b.
  friend Monomial operator/(const Monomial& b, const Monomial& a) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    m.deg = b.deg - a.deg;
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.e[i] = std::max(a.e[i], b.e[i]);
      m.deg += m.e[i];
    }
    return m;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.e[i] = std::min(a.e[i], b.e[i]);
      m.deg += m.e[i];
    }
    return m;
  }

  bool coprime(const Monomial& b) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] && b.e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Graded lex: total degree first, then the larger exponent of x0, x1, ...
inline int cmp_grlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

// Graded reverse lex over the first n variables: ties broken by the
// smaller exponent in the last variable.
inline int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t n) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (std::size_t i = n; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace freediv
