#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "polynomial.hpp"

namespace freediv {

namespace detail {

// Arithmetic in Z/p, p = 2^61 - 1.
struct ModP {
  static constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a + b) % p; }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + p - b) % p; }
  static std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  static std::uint64_t inv(std::uint64_t a) { return pow(a, p - 2); }
  // nullopt when p divides the denominator.
  static std::optional<std::uint64_t> of(const Rational& q) {
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) return std::nullopt;
    std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    return mul(num, inv(den));
  }
};

using UPoly = std::vector<std::uint64_t>;  // low degree first, trimmed

inline void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline UPoly umod(UPoly a, const UPoly& b) {
  std::uint64_t inv = ModP::inv(b.back());
  while (a.size() >= b.size()) {
    std::uint64_t c = ModP::mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = ModP::sub(a[i + shift], ModP::mul(c, b[i]));
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Degree of gcd over Z/p.
inline int ugcd_degree(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
}

// f with every variable but v replaced by point values, reduced mod p.
// nullopt when a denominator vanishes mod p.
inline std::optional<UPoly> specialize_mod_p(const Polynomial& f, std::size_t v, const std::vector<std::uint64_t>& pt) {
  UPoly out(f.degree_in(v) + 1, 0);
  const std::size_t n = f.ring()->size();
  for (const auto& t : f.terms()) {
    auto c = ModP::of(t.coeff);
    if (!c) return std::nullopt;
    std::uint64_t val = *c;
    for (std::size_t i = 0; i < n; ++i)
      if (i != v && t.mono[i]) val = ModP::mul(val, ModP::pow(pt[i], t.mono[i]));
    out[t.mono[v]] = ModP::add(out[t.mono[v]], val);
  }
  return out;
}

inline std::vector<std::uint64_t> sample_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint64_t> dist(2, ModP::p - 1);
  std::vector<std::uint64_t> pt(n);
  for (auto& x : pt) x = dist(rng);
  return pt;
}

// True only when gcd(a, b) = 1 is proven. With the leading coefficients in
// v nonzero at the point mod p, any common factor involving v survives the
// reduction with its degree intact; running this for every shared
// variable therefore rules out all nonconstant common factors.
inline bool coprime_by_specialization(const Polynomial& a, const Polynomial& b) {
  std::mt19937_64 rng(0x5eed1234abcdULL);
  const std::size_t n = a.ring()->size();
  for (std::size_t v = 0; v < n; ++v) {
    if (!a.involves(v) || !b.involves(v)) continue;
    bool ok = false;
    for (int attempt = 0; attempt < 2 && !ok; ++attempt) {
      auto pt = sample_point(rng, n);
      auto sa = specialize_mod_p(a, v, pt);
      auto sb = specialize_mod_p(b, v, pt);
      if (!sa || !sb) continue;
      if (sa->back() == 0 || sb->back() == 0) continue;
      ok = ugcd_degree(*sa, *sb) == 0;
    }
    if (!ok) return false;
  }
  return true;
}

inline Polynomial lead_coeff_in(const Polynomial& f, std::size_t v) { return coefficients_in(f, v).back(); }

}  // namespace detail

inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

inline Polynomial content_in(const Polynomial& f, std::size_t v) {
  auto cs = coefficients_in(f, v);
  Polynomial g(f.ring());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize(c) : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

inline Polynomial primitive_part_in(const Polynomial& f, std::size_t v) {
  if (f.is_zero()) return f;
  auto c = content_in(f, v);
  return normalize(*exact_divide(f, c));
}

// Pseudo-remainder of A by B as polynomials in x_v.
inline Polynomial prem(Polynomial A, const Polynomial& B, std::size_t v) {
  unsigned db = B.degree_in(v);
  Polynomial lb = lead_coeff_in(B, v);
  while (!A.is_zero() && A.degree_in(v) >= db && A.involves(v)) {
    unsigned da = A.degree_in(v);
    Polynomial la = lead_coeff_in(A, v);
    A = lb * A - la * B.mul_term(Monomial::var(v, da - db), 1);
    if (!A.is_zero()) A = (1 / content(A)) * A;
  }
  return A;
}

inline Polynomial monomial_gcd(const Polynomial& m, const Polynomial& b) {
  Monomial g = m.leading().mono;
  for (const auto& t : b.terms()) g = Monomial::gcd(g, t.mono);
  return Polynomial::monomial(m.ring(), g);
}

}  // namespace detail

/// gcd with content 1 and positive leading coefficient; gcd(a, 0) = normalize(a).
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  if (a.ring() && b.ring() && !same_ring(a.ring(), b.ring())) throw RingMismatch();
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  const RingPtr& ring = a.ring();
  if (a.is_constant() || b.is_constant()) return one(ring);
  if (a.size() == 1) return detail::monomial_gcd(a, b);
  if (b.size() == 1) return detail::monomial_gcd(b, a);
  if (normalize(a) == normalize(b)) return normalize(a);

  const std::size_t n = ring->size();
  // A variable present in only one argument cannot occur in the gcd.
  for (std::size_t v = 0; v < n; ++v) {
    bool ia = a.involves(v), ib = b.involves(v);
    if (ia && !ib) return poly_gcd(detail::content_in(a, v), b);
    if (ib && !ia) return poly_gcd(a, detail::content_in(b, v));
  }
  if (detail::coprime_by_specialization(a, b)) return one(ring);

  std::size_t v = n;
  unsigned best = ~0u;
  for (std::size_t u = 0; u < n; ++u) {
    if (!a.involves(u)) continue;
    unsigned d = std::max(a.degree_in(u), b.degree_in(u));
    if (d < best) {
      best = d;
      v = u;
    }
  }
  Polynomial ca = detail::content_in(a, v), cb = detail::content_in(b, v);
  Polynomial c = poly_gcd(ca, cb);
  Polynomial A = normalize(*exact_divide(a, ca));
  Polynomial B = normalize(*exact_divide(b, cb));
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  while (true) {
    Polynomial R = detail::prem(A, B, v);
    if (R.is_zero()) break;
    if (!R.involves(v)) {
      B = one(ring);
      break;
    }
    A = std::move(B);
    B = detail::primitive_part_in(R, v);
  }
  return normalize(c * detail::primitive_part_in(B, v));
}

// gcd(0, ..., 0) is 0.
inline Polynomial poly_gcd(const std::vector<Polynomial>& ps) {
  if (ps.empty()) throw InvalidArgument("gcd of an empty list");
  Polynomial g(ps.front().ring());
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? normalize(p) : poly_gcd(g, p);
    if (g.is_constant()) return g;
  }
  return g;
}

/// Proves squarefreeness by specialization when it can, otherwise falls
/// back to comparing with the exact squarefree part.
inline Polynomial squarefree_part(const Polynomial& f);

inline bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("squarefree test of the zero polynomial");
  if (f.is_constant()) return true;
  std::mt19937_64 rng(0xfeedbeefULL);
  const std::size_t n = f.ring()->size();
  bool proven = true;
  for (std::size_t v = 0; v < n && proven; ++v) {
    if (!f.involves(v)) continue;
    bool ok = false;
    Polynomial fv = partial_derivative(f, v);
    for (int attempt = 0; attempt < 2 && !ok; ++attempt) {
      auto pt = detail::sample_point(rng, n);
      auto sf = detail::specialize_mod_p(f, v, pt);
      auto sd = detail::specialize_mod_p(fv, v, pt);
      if (!sf || !sd || sf->back() == 0 || sd->empty() || sd->size() != sf->size() - 1 || sd->back() == 0) continue;
      ok = detail::ugcd_degree(*sf, *sd) == 0;
    }
    proven = ok;
  }
  if (proven) return true;
  return squarefree_part(f) == normalize(f);
}

/// f / gcd(f, df/dx_0, ..., df/dx_n), normalized.
inline Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("squarefree part of the zero polynomial");
  if (f.is_constant()) return one(f.ring());
  Polynomial g = normalize(f);
  for (std::size_t v = 0; v < f.ring()->size(); ++v) {
    if (!f.involves(v)) continue;
    g = poly_gcd(g, partial_derivative(f, v));
    if (g.is_constant()) break;
  }
  return normalize(*exact_divide(f, g));
}

}  // namespace freediv
