#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "saito.hpp"
#include "wme.hpp"

namespace freediv {

/// canonical: the product weights (omega_i = prod_{j != i} n_j and friends).
/// reduced: the same vector divided by its gcd, e.g. all ones when every n_i agrees.
enum class FamilyWeights { canonical, reduced };

enum class Route { saito, wme, wme_general };

inline std::string to_string(Route r) {
  switch (r) {
    case Route::saito: return "saito";
    case Route::wme: return "wme";
    case Route::wme_general: return "wme-general";
  }
  return "?";
}

struct FamilyInstance {
  RingPtr ring;
  Polynomial divisor;
  Route route = Route::saito;
  std::vector<Derivation> basis;    // full basis (saito route)
  std::vector<Derivation> tensors;  // inputs of the wme routes
  std::vector<std::int64_t> expected_der0;
  std::vector<std::int64_t> expected_exponents;  // expected_der0 plus Euler's 1, sorted
  std::string provenance;
  std::vector<std::string> notes;
};

struct FamilyResult {
  bool free = false;
  std::optional<FreenessCertificate> certificate;
  std::string message;
  bool exponents_match = false;
};

inline FamilyResult certify(const FamilyInstance& inst, GroebnerLimits limits = {}) {
  FamilyResult out;
  switch (inst.route) {
    case Route::saito: {
      auto r = saito_check(inst.divisor, inst.basis, "saito");
      out.free = r.free;
      out.certificate = r.certificate;
      out.message = r.message;
      break;
    }
    case Route::wme: {
      WmeOptions opt;
      opt.limits = limits;
      auto r = wme_freeness(inst.divisor, inst.tensors, opt);
      out.free = r.free;
      out.certificate = r.certificate;
      out.message = r.message;
      break;
    }
    case Route::wme_general: {
      auto r = general_determinantal_freeness(inst.divisor, inst.tensors, limits);
      out.free = r.free;
      out.certificate = r.certificate;
      out.message = r.message;
      break;
    }
  }
  if (!out.free) {
    out.message = "non-generic or theorem-hypothesis unmet: " + out.message;
    return out;
  }
  out.certificate->provenance = inst.provenance;
  for (const auto& n : inst.notes) out.certificate->notes.push_back(n);
  out.exponents_match = out.certificate->der0_exponents == inst.expected_der0 &&
                        out.certificate->exponents == inst.expected_exponents;
  if (!out.exponents_match) out.certificate->notes.push_back("certified exponents differ from the family formula");
  return out;
}

namespace detail {

inline std::vector<std::string> indexed_names(const std::string& stem, std::size_t from, std::size_t count) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(stem + std::to_string(from + i));
  return v;
}

// omega_i = prod_{j != i} n_j, optionally divided by the gcd of the entries.
inline std::vector<std::int64_t> product_weights(const std::vector<std::int64_t>& n, FamilyWeights w) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Integer p = 1;
    for (std::size_t j = 0; j < n.size(); ++j)
      if (j != i) p *= n[j];
    if (!p.fits_slong_p()) throw InvalidArgument("weights too large");
    out.push_back(p.get_si());
  }
  if (w == FamilyWeights::reduced) {
    std::int64_t g = 0;
    for (auto x : out) g = std::gcd(g, x);
    for (auto& x : out) x /= g;
  }
  return out;
}

inline Polynomial var_pow(const RingPtr& R, std::size_t i, std::int64_t e) {
  if (e < 0) throw InvalidArgument("negative exponent");
  return Polynomial::variable(R, i, static_cast<unsigned>(e));
}

inline std::vector<std::int64_t> with_euler(std::vector<std::int64_t> der0) {
  der0.push_back(1);
  std::sort(der0.begin(), der0.end());
  return der0;
}

inline void finish(FamilyInstance& inst) {
  std::sort(inst.expected_der0.begin(), inst.expected_der0.end());
  inst.expected_exponents = with_euler(inst.expected_der0);
}

inline void check_positive(const std::vector<std::int64_t>& v, const char* what) {
  for (auto x : v)
    if (x < 1) throw InvalidArgument(std::string(what) + " must be positive integers");
}

// Standard grading on the same variables, then cone variable of weight 1.
inline Polynomial cone_poly(const Polynomial& f, const std::string& var, VarPosition pos) {
  return homogenize(change_ring(f, standard_regrade(f.ring())), var, pos);
}

inline Derivation cone_derivation(const Derivation& d, const std::string& var, VarPosition pos) {
  return homogenize_derivation(change_ring(d, standard_regrade(d.ring())), var, pos);
}

inline std::int64_t standard_degree(const Derivation& d) {
  std::int64_t D = -1;
  for (const auto& g : d.coeffs()) D = std::max<std::int64_t>(D, g.total_degree());
  return D;
}

}  // namespace detail

// ---------------------------------------------------------------- reflection

struct ReflectionData {
  RingPtr ring;
  Polynomial F;  // p * prod_{i<j} (x_i^{n_i} - x_j^{n_j})
  Polynomial p;  // x_1 ... x_k
  std::int64_t N = 0;  // n_i * omega_i, the same for every i
};

inline ReflectionData reflection_data(std::size_t l, std::size_t k, const std::vector<std::int64_t>& n,
                                      FamilyWeights w) {
  if (l < 2) throw InvalidArgument("reflection: need l >= 2");
  if (l > kMaxVars - 1) throw InvalidArgument("reflection: l too large");
  if (k > l) throw InvalidArgument("reflection: need 0 <= k <= l");
  if (n.size() != l) throw InvalidArgument("reflection: need l exponents n_i");
  detail::check_positive(n, "reflection: n_i");
  ReflectionData d;
  d.ring = make_ring(detail::indexed_names("x", 1, l), detail::product_weights(n, w));
  const auto& R = d.ring;
  d.p = one(R);
  for (std::size_t i = 0; i < k; ++i) d.p *= Polynomial::variable(R, i);
  d.F = d.p;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) d.F *= detail::var_pow(R, i, n[i]) - detail::var_pow(R, j, n[j]);
  d.N = n[0] * R->weight(0);
  return d;
}

/// delta_m = sum_i w_i x_i^{m n_i + 1} d/dx_i.
inline Derivation reflection_delta(const RingPtr& R, const std::vector<std::int64_t>& n, std::int64_t m) {
  std::vector<Polynomial> cs;
  for (std::size_t i = 0; i < n.size(); ++i)
    cs.push_back(Rational(R->weight(i)) * detail::var_pow(R, i, m * n[i] + 1));
  return Derivation(R, std::move(cs));
}

/// mu_k = sum_i p w_i prod_{j != i} x_j^{n_j - 1} d/dx_i.
inline Derivation reflection_mu(const ReflectionData& d, const std::vector<std::int64_t>& n) {
  const auto& R = d.ring;
  std::vector<Polynomial> cs;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Polynomial c = Rational(R->weight(i)) * d.p;
    for (std::size_t j = 0; j < n.size(); ++j)
      if (j != i) c *= detail::var_pow(R, j, n[j] - 1);
    cs.push_back(c);
  }
  return Derivation(R, std::move(cs));
}

/// F_k in weighted projective space with basis delta_0..delta_{l-2}, mu_k.
inline FamilyInstance reflection(std::size_t l, std::size_t k, const std::vector<std::int64_t>& n,
                                 FamilyWeights w = FamilyWeights::canonical) {
  auto d = reflection_data(l, k, n, w);
  FamilyInstance inst;
  inst.ring = d.ring;
  inst.divisor = d.F;
  for (std::size_t m = 0; m + 2 <= l; ++m) inst.basis.push_back(reflection_delta(d.ring, n, static_cast<std::int64_t>(m)));
  inst.basis.push_back(reflection_mu(d, n));
  for (std::size_t m = 1; m + 2 <= l; ++m) inst.expected_der0.push_back(static_cast<std::int64_t>(m) * d.N + 1);
  std::int64_t last = static_cast<std::int64_t>(l - 1) * d.N + 1;
  for (std::size_t j = k; j < l; ++j) last -= d.ring->weight(j);
  inst.expected_der0.push_back(last);
  inst.provenance = "reflection: weighted arrangement with k coordinate hyperplanes";
  detail::finish(inst);
  return inst;
}

/// delta_0..delta_{l-1}; a Saito basis of F when k = l.
inline std::vector<Derivation> reflection_vandermonde_basis(std::size_t l, const std::vector<std::int64_t>& n,
                                                            FamilyWeights w = FamilyWeights::canonical) {
  auto d = reflection_data(l, l, n, w);
  std::vector<Derivation> out;
  for (std::size_t m = 0; m < l; ++m) out.push_back(reflection_delta(d.ring, n, static_cast<std::int64_t>(m)));
  return out;
}

/// zeta_m = sum_{i<=m} w_i x_i prod_{m<j<=l} (x_i^{n_i} - x_j^{n_j}) d/dx_i for m = 1..l.
inline std::vector<Derivation> reflection_alt_basis(std::size_t l, const std::vector<std::int64_t>& n,
                                                    FamilyWeights w = FamilyWeights::canonical) {
  auto d = reflection_data(l, l, n, w);
  const auto& R = d.ring;
  std::vector<Derivation> out;
  for (std::size_t m = 1; m <= l; ++m) {
    std::vector<Polynomial> cs(l, Polynomial(R));
    for (std::size_t i = 0; i < m; ++i) {
      Polynomial c = Rational(R->weight(i)) * Polynomial::variable(R, i);
      for (std::size_t j = m; j < l; ++j) c *= detail::var_pow(R, i, n[i]) - detail::var_pow(R, j, n[j]);
      cs[i] = c;
    }
    out.emplace_back(R, std::move(cs));
  }
  return out;
}

/// x0 * F_k^h in standard projective space; needs n sorted ascending.
inline FamilyInstance reflection_cone(std::size_t l, std::size_t k, const std::vector<std::int64_t>& n,
                                      const std::string& cone_var = "x0",
                                      FamilyWeights w = FamilyWeights::canonical) {
  if (!std::is_sorted(n.begin(), n.end())) throw InvalidArgument("reflection_cone: n_i must be non-decreasing");
  auto d = reflection_data(l, k, n, w);
  auto zeta = reflection_alt_basis(l, n, w);
  FamilyInstance inst;
  inst.divisor = detail::cone_poly(d.F, cone_var, VarPosition::front) ;
  inst.ring = inst.divisor.ring();
  inst.divisor = Polynomial::variable(inst.ring, 0) * inst.divisor;
  inst.basis.push_back(euler(inst.ring));
  for (std::size_t m = l; m >= 2; --m) inst.basis.push_back(detail::cone_derivation(zeta[m - 1], cone_var, VarPosition::front));
  inst.basis.push_back(detail::cone_derivation(reflection_mu(d, n), cone_var, VarPosition::front));
  inst.expected_der0.push_back(1);
  std::int64_t s = 0;
  for (std::size_t j = l; j >= 3; --j) {
    s += n[j - 1];
    inst.expected_der0.push_back(s + 1);
  }
  s += n[1];
  inst.expected_der0.push_back(s + 1 - static_cast<std::int64_t>(l) + static_cast<std::int64_t>(k));
  inst.provenance = "reflection cone: x0 times the homogenized arrangement";
  detail::finish(inst);
  return inst;
}

// ------------------------------------------------------------ Brieskorn-Pham

/// F = (x^r0 + y^r1) prod_a (x^r0 + y^r1 + a z^r2); wme route with
/// delta_1 = -r1 y^(r1-1) d/dx + r0 x^(r0-1) d/dy.
inline FamilyInstance brieskorn_pham(std::int64_t r0, std::int64_t r1, std::int64_t r2,
                                     const std::vector<Rational>& lambda,
                                     FamilyWeights w = FamilyWeights::canonical) {
  detail::check_positive({r0, r1, r2}, "brieskorn_pham: r_i");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) throw InvalidArgument("brieskorn_pham: Lambda must not contain 0");
    for (std::size_t j = 0; j < i; ++j)
      if (lambda[i] == lambda[j]) throw InvalidArgument("brieskorn_pham: Lambda has repeated elements");
  }
  auto R = make_ring({"x", "y", "z"}, detail::product_weights({r0, r1, r2}, w));
  Polynomial base = detail::var_pow(R, 0, r0) + detail::var_pow(R, 1, r1);
  Polynomial F = base;
  for (const auto& a : lambda) F *= base + a * detail::var_pow(R, 2, r2);
  FamilyInstance inst;
  inst.ring = R;
  inst.divisor = F;
  inst.route = Route::wme;
  inst.tensors.push_back(Derivation(R, {Rational(-r1) * detail::var_pow(R, 1, r1 - 1),
                                        Rational(r0) * detail::var_pow(R, 0, r0 - 1), Polynomial(R)}));
  const std::int64_t wr = R->weight(0) * r0;
  const std::int64_t L = static_cast<std::int64_t>(lambda.size());
  inst.expected_der0 = {wr + 1 - R->weight(0) - R->weight(1), L * wr - R->weight(2) + 1};
  inst.provenance = "Brieskorn-Pham variant in weighted projective plane";
  detail::finish(inst);
  return inst;
}

/// t * F^h in P^3 through the determinantal route with Euler, the weighted
/// Euler tensor and delta_1^h.
inline FamilyInstance brieskorn_pham_cone(std::int64_t r0, std::int64_t r1, std::int64_t r2,
                                          const std::vector<Rational>& lambda, const std::string& cone_var = "t") {
  auto aff = brieskorn_pham(r0, r1, r2, lambda, FamilyWeights::canonical);
  FamilyInstance inst;
  Polynomial Fh = detail::cone_poly(aff.divisor, cone_var, VarPosition::back);
  inst.ring = Fh.ring();
  inst.divisor = Polynomial::variable(inst.ring, 3) * Fh;
  inst.route = Route::wme_general;
  inst.tensors.push_back(euler(inst.ring));
  inst.tensors.push_back(detail::cone_derivation(euler(aff.ring), cone_var, VarPosition::back));
  inst.tensors.push_back(detail::cone_derivation(aff.tensors[0], cone_var, VarPosition::back));
  const std::int64_t L = static_cast<std::int64_t>(lambda.size());
  inst.expected_der0 = {1, std::max(r0, r1) - 1, L * std::max({r0, r1, r2})};
  inst.provenance = "Brieskorn-Pham variant, cone in P^3";
  detail::finish(inst);
  return inst;
}

// ------------------------------------------------------------------- pencils

struct PencilData {
  RingPtr ring;
  Polynomial f1;       // sum_{i=m+1}^n h_i
  Polynomial f2;       // sum_{i=0}^m h_i
  Polynomial reduced;  // f1 f2 / prod x_j^(r_j - 1)
  std::int64_t N = 0;  // r_i * omega_i
};

/// h_i = prod_{j != i} x_j^{r_j} over x0..xn.
inline PencilData pencil(std::size_t n, std::size_t m, const std::vector<std::int64_t>& r,
                         FamilyWeights w = FamilyWeights::canonical) {
  if (n < 1) throw InvalidArgument("pencil: need n >= 1");
  if (n + 1 > kMaxVars - 1) throw InvalidArgument("pencil: n too large");
  if (m + 1 > n) throw InvalidArgument("pencil: need 0 <= m <= n-1");
  if (r.size() != n + 1) throw InvalidArgument("pencil: need n+1 exponents r_i");
  detail::check_positive(r, "pencil: r_i");
  PencilData d;
  d.ring = make_ring(detail::indexed_names("x", 0, n + 1), detail::product_weights(r, w));
  const auto& R = d.ring;
  auto h = [&](std::size_t i) {
    Polynomial p = one(R);
    for (std::size_t j = 0; j <= n; ++j)
      if (j != i) p *= detail::var_pow(R, j, r[j]);
    return p;
  };
  d.f1 = Polynomial(R);
  d.f2 = Polynomial(R);
  for (std::size_t i = 0; i <= n; ++i) (i > m ? d.f1 : d.f2) += h(i);
  Polynomial den = one(R);
  for (std::size_t j = 0; j <= n; ++j) den *= detail::var_pow(R, j, r[j] - 1);
  d.reduced = *exact_divide(d.f1 * d.f2, den);
  d.N = r[0] * R->weight(0);
  return d;
}

using PencilScalars = std::vector<std::pair<Rational, Rational>>;

namespace detail {

inline void check_scalars(const PencilScalars& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].first == 0 || s[i].second == 0)
      throw InvalidArgument("pencil: member (a:b) needs a and b nonzero, otherwise it repeats f1 or f2");
    for (std::size_t j = 0; j < i; ++j)
      if (s[i].first * s[j].second == s[j].first * s[i].second)
        throw InvalidArgument("pencil: members must be distinct points of P^1");
  }
}

// delta_j for 1 <= j <= m and eta_t for m+2 <= t <= n.
inline std::vector<Derivation> pencil_block_derivations(const PencilData& d, std::size_t n, std::size_t m,
                                                        const std::vector<std::int64_t>& r) {
  const auto& R = d.ring;
  auto piece = [&](std::size_t a, std::size_t b) {
    std::vector<Polynomial> cs(n + 1, Polynomial(R));
    cs[a] = Rational(1, r[a]) * var_pow(R, a, r[a] + 1);
    cs[b] = Rational(-1, r[b]) * var_pow(R, b, r[b] + 1);
    return Derivation(R, std::move(cs));
  };
  std::vector<Derivation> out;
  for (std::size_t j = 1; j <= m; ++j) out.push_back(piece(0, j));
  for (std::size_t t = m + 2; t <= n; ++t) out.push_back(piece(m + 1, t));
  return out;
}

inline Derivation pencil_mu(const PencilData& d, std::size_t n, std::size_t m, const std::vector<std::int64_t>& r) {
  std::vector<Polynomial> cs(n + 1, Polynomial(d.ring));
  for (std::size_t i = m + 1; i <= n; ++i) cs[i] = Rational(1, r[i]) * Polynomial::variable(d.ring, i);
  return Derivation(d.ring, std::move(cs));
}

}  // namespace detail

/// (f1 f2)^red * prod (a f1 + b f2) in weighted projective space.
inline FamilyInstance pencil_divisor(std::size_t n, std::size_t m, const std::vector<std::int64_t>& r,
                                     const PencilScalars& scalars, FamilyWeights w = FamilyWeights::canonical) {
  detail::check_scalars(scalars);
  auto d = pencil(n, m, r, w);
  FamilyInstance inst;
  inst.ring = d.ring;
  inst.divisor = d.reduced;
  for (const auto& [a, b] : scalars) inst.divisor *= a * d.f1 + b * d.f2;
  auto blocks = detail::pencil_block_derivations(d, n, m, r);
  const std::int64_t k = 2 + static_cast<std::int64_t>(scalars.size());
  if (scalars.empty()) {
    inst.basis.push_back(euler(d.ring));
    for (const auto& b : blocks) inst.basis.push_back(b);
    inst.basis.push_back(detail::pencil_mu(d, n, m, r));
    inst.expected_der0.push_back(1);
    for (std::size_t i = 0; i + 1 < n; ++i) inst.expected_der0.push_back(d.N + 1);
    inst.provenance = "pencil: reduced product of the two base members";
  } else {
    inst.route = Route::wme;
    inst.tensors = blocks;
    for (std::size_t i = 0; i + 1 < n; ++i) inst.expected_der0.push_back(d.N + 1);
    inst.expected_der0.push_back((k - 2) * static_cast<std::int64_t>(n) * d.N + 1);
    inst.provenance = "pencil: base members times further members of the pencil";
  }
  detail::finish(inst);
  return inst;
}

/// x_{n+1} ((f1 f2)^red)^h prod (a f1 + b f2)^h; needs r sorted ascending.
inline FamilyInstance pencil_cone(std::size_t n, std::size_t m, const std::vector<std::int64_t>& r,
                                  const PencilScalars& scalars, const std::string& cone_var = "") {
  if (!std::is_sorted(r.begin(), r.end())) throw InvalidArgument("pencil_cone: r_i must be non-decreasing");
  detail::check_scalars(scalars);
  auto d = pencil(n, m, r, FamilyWeights::canonical);
  const std::string var = cone_var.empty() ? "x" + std::to_string(n + 1) : cone_var;
  FamilyInstance inst;
  Polynomial red = detail::cone_poly(d.reduced, var, VarPosition::back);
  inst.ring = red.ring();
  inst.divisor = Polynomial::variable(inst.ring, n + 1) * red;
  for (const auto& [a, b] : scalars) inst.divisor *= detail::cone_poly(a * d.f1 + b * d.f2, var, VarPosition::back);
  std::vector<Derivation> zeta{detail::cone_derivation(euler(d.ring), var, VarPosition::back)};
  for (const auto& b : detail::pencil_block_derivations(d, n, m, r))
    zeta.push_back(detail::cone_derivation(b, var, VarPosition::back));
  const std::int64_t k = 2 + static_cast<std::int64_t>(scalars.size());
  std::vector<std::int64_t> mid;
  for (std::size_t i = 1; i <= n; ++i)
    if (i != m + 1) mid.push_back(r[i] + 1);
  if (scalars.empty()) {
    inst.basis.push_back(euler(inst.ring));
    for (const auto& z : zeta) inst.basis.push_back(z);
    inst.basis.push_back(detail::cone_derivation(detail::pencil_mu(d, n, m, r), var, VarPosition::back));
    inst.expected_der0 = {1, 1};
    inst.provenance = "pencil cone: hyperplane at infinity times the base members";
  } else {
    inst.route = Route::wme_general;
    inst.tensors.push_back(euler(inst.ring));
    for (const auto& z : zeta) inst.tensors.push_back(z);
    std::int64_t s = 0;
    for (std::size_t i = 1; i <= n; ++i) s += r[i];
    inst.expected_der0 = {1, (k - 2) * s + 1};
    inst.provenance = "pencil cone: hyperplane at infinity times several members";
  }
  inst.expected_der0.insert(inst.expected_der0.end(), mid.begin(), mid.end());
  detail::finish(inst);
  return inst;
}

// ---------------------------------------------------------------- cone check

struct ConeCheck {
  bool accepted = false;
  std::int64_t deficit = 0;  // deg f - sum of basis degrees
  std::optional<FamilyInstance> instance;
  std::string message;
};

/// Lifts an affine Saito basis to x0 f^h when the basis degrees add up to deg f.
inline ConeCheck cone_check(const Polynomial& f_in, const std::vector<Derivation>& basis_in,
                            const std::string& cone_var = "x0", VarPosition pos = VarPosition::front) {
  RingPtr S = standard_regrade(f_in.ring());
  Polynomial f = change_ring(f_in, S);
  std::vector<Derivation> basis;
  for (const auto& d : basis_in) basis.push_back(change_ring(d, S));
  auto rep = saito_check(f, basis);
  if (!rep.free) throw InvalidArgument("cone_check: basis does not certify f: " + rep.message);
  ConeCheck out;
  std::int64_t sum = 0;
  std::vector<std::int64_t> degs;
  for (const auto& d : basis) {
    degs.push_back(detail::standard_degree(d));
    sum += degs.back();
  }
  out.deficit = f.total_degree() - sum;
  if (out.deficit != 0) {
    out.message = "basis degrees sum to " + std::to_string(sum) + " but deg f = " +
                  std::to_string(f.total_degree()) + "; the lift is not guaranteed";
    return out;
  }
  FamilyInstance inst;
  Polynomial fh = homogenize(f, cone_var, pos);
  inst.ring = fh.ring();
  std::size_t idx = pos == VarPosition::front ? 0 : S->size();
  inst.divisor = Polynomial::variable(inst.ring, idx) * fh;
  inst.basis.push_back(euler(inst.ring));
  for (const auto& d : basis) inst.basis.push_back(homogenize_derivation(d, cone_var, pos));
  inst.expected_der0 = degs;
  inst.provenance = "cone construction of an affine free divisor";
  detail::finish(inst);
  out.accepted = true;
  out.instance = std::move(inst);
  return out;
}

}  // namespace freediv
