#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gcd.hpp"
#include "groebner.hpp"
#include "matrix.hpp"
#include "saito.hpp"

namespace freediv {

/// Euler row (w_i x_i) stacked over the coefficient rows of r tensors.
struct WmeMatrix {
  RingPtr ring;
  PolyMatrix matrix;
  std::vector<Derivation> tensors;
};

inline WmeMatrix build_wme_matrix(const RingPtr& ring, const std::vector<Derivation>& derivs) {
  const std::size_t n = ring->size();
  if (derivs.empty() || derivs.size() + 1 > n)
    throw InvalidArgument("build_wme_matrix: need between 1 and " + std::to_string(n - 1) + " tensors, got " +
                          std::to_string(derivs.size()));
  std::vector<std::vector<Polynomial>> rows{euler(ring).coeffs()};
  for (std::size_t i = 0; i < derivs.size(); ++i) {
    if (!same_ring(derivs[i].ring(), ring)) throw RingMismatch();
    if (!wdeg_derivation(derivs[i]).homogeneous)
      throw InvalidArgument("build_wme_matrix: tensor " + std::to_string(i) + " is not weighted homogeneous");
    rows.push_back(derivs[i].coeffs());
  }
  return {ring, PolyMatrix::from_rows(ring, rows), derivs};
}

struct MinorSet {
  std::vector<Polynomial> minors;
  std::vector<std::vector<std::size_t>> columns;  // columns kept for each minor
  Polynomial gcd;
};

/// All rows x rows minors. With one column more than rows, minor i is
/// (-1)^i det(M without column i); otherwise column subsets in lex order.
inline MinorSet maximal_minors(const PolyMatrix& M) {
  const std::size_t r = M.rows(), c = M.cols();
  if (r == 0 || r > c) throw InvalidArgument("maximal_minors: need 1 <= rows <= columns");
  MinorSet out;
  if (c == r + 1) {
    for (std::size_t i = 0; i < c; ++i) {
      Polynomial d = det(M.without_column(i));
      out.minors.push_back(i % 2 ? -d : d);
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < c; ++j)
        if (j != i) cols.push_back(j);
      out.columns.push_back(std::move(cols));
    }
  } else {
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
      PolyMatrix sub(M.ring(), r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub.at(i, j) = M.at(i, pick[j]);
      out.minors.push_back(det(sub));
      out.columns.push_back(pick);
      std::size_t k = r;
      while (k > 0 && pick[k - 1] == c - r + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  out.gcd = poly_gcd(out.minors);
  return out;
}

inline MinorSet maximal_minors(const WmeMatrix& M) { return maximal_minors(M.matrix); }

struct Codim2Verdict {
  bool codim2 = false;
  bool zero_ideal = false;
  std::optional<Polynomial> common_factor;  // set when the gcd is not constant
};

inline Codim2Verdict codim2_test(const std::vector<Polynomial>& gens) {
  Codim2Verdict v;
  if (gens.empty()) throw InvalidArgument("codim2_test: no generators");
  Polynomial g = poly_gcd(gens);
  if (g.is_zero()) {
    v.zero_ideal = true;
    return v;
  }
  if (g.is_constant()) {
    v.codim2 = true;
    return v;
  }
  v.common_factor = normalize(g);
  return v;
}

inline Codim2Verdict codim2_test(const MinorSet& m) { return codim2_test(m.minors); }

struct WmeOptions {
  bool strict = false;  // also require each tensor outside the span of Euler and the others
  GroebnerLimits limits;
};

struct WmeReport {
  bool free = false;
  std::optional<FreenessCertificate> certificate;
  // "", "input", "membership", "independence", "codim", "ideal", "saito"
  std::string failed;
  std::string message;
  std::optional<std::size_t> failed_index;
  MinorSet minors;
  std::optional<Codim2Verdict> codim;
  std::vector<Polynomial> cofactors;  // f = sum c_j m_j
  std::optional<Derivation> completing;
  std::vector<std::int64_t> expected_der0;  // tensor degrees plus d + sum(1-w) - sum d_i - 1, sorted
};

namespace detail {

// Row T with det([M; T]) = sum c_j m_j = f, each entry cut down to the degree
// that keeps the row weighted homogeneous.
inline Derivation completing_row(const Polynomial& f, const MinorSet& ms, const std::vector<Polynomial>& cof,
                                 std::size_t rows) {
  const RingPtr& ring = f.ring();
  auto fd = is_weighted_homogeneous(f);
  std::vector<Polynomial> cs;
  for (std::size_t j = 0; j < cof.size(); ++j) {
    Polynomial c = cof[j];
    if (fd && !ms.minors[j].is_zero()) {
      auto md = is_weighted_homogeneous(ms.minors[j]);
      if (md) c = homogeneous_component(c, *fd - *md);
    }
    if (ms.minors[j].is_zero()) c = Polynomial(ring);
    cs.push_back(rows % 2 ? -c : c);
  }
  return Derivation(ring, std::move(cs));
}

inline bool check_divisor(const Polynomial& f, std::string& why) {
  if (f.is_zero()) {
    why = "divisor is zero";
    return false;
  }
  if (!is_squarefree(f)) {
    why = "divisor is not reduced";
    return false;
  }
  return true;
}

}  // namespace detail

/// Freeness through the ideal of the weighted multiple eigenscheme:
/// nvars-2 tensors, codimension 2, then f in the minor ideal.
inline WmeReport wme_freeness(const Polynomial& f, const std::vector<Derivation>& derivs, WmeOptions opt = {}) {
  WmeReport r;
  auto fail = [&](std::string what, std::string msg) {
    r.failed = std::move(what);
    r.message = std::move(msg);
    return r;
  };
  std::string why;
  if (!detail::check_divisor(f, why)) return fail("input", why);
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->size();
  auto fd = is_weighted_homogeneous(f);
  if (!fd) return fail("input", "divisor is not weighted homogeneous for weights " + ring->describe());
  if (*fd == 0) return fail("input", "divisor has weighted degree 0");
  if (n < 2) return fail("input", "need at least 2 variables");
  if (derivs.size() + 2 != n)
    return fail("input", "need " + std::to_string(n - 2) + " derivations, got " + std::to_string(derivs.size()));
  WmeMatrix M;
  try {
    if (derivs.empty())
      M = {ring, PolyMatrix::from_rows(ring, {euler(ring).coeffs()}), {}};
    else
      M = build_wme_matrix(ring, derivs);
  } catch (const InvalidArgument& e) {
    return fail("input", e.what());
  }
  std::int64_t sum_d = 0;
  for (std::size_t i = 0; i < derivs.size(); ++i) {
    auto dd = wdeg_derivation(derivs[i]);
    if (dd.zero) {
      r.failed_index = i;
      return fail("input", "derivation " + std::to_string(i) + " is zero");
    }
    sum_d += *dd.degree;
    r.expected_der0.push_back(*dd.degree);
    if (!in_der(derivs[i], f).member) {
      r.failed_index = i;
      return fail("membership", "derivation " + std::to_string(i) + " is not in Der(f)");
    }
  }
  std::int64_t last = *fd - sum_d - 1;
  for (std::size_t i = 0; i < n; ++i) last += 1 - ring->weight(i);
  r.expected_der0.push_back(last);
  std::sort(r.expected_der0.begin(), r.expected_der0.end());
  if (opt.strict) {
    for (std::size_t i = 0; i < derivs.size(); ++i) {
      std::vector<Derivation> others{euler(ring)};
      for (std::size_t j = 0; j < derivs.size(); ++j)
        if (j != i) others.push_back(derivs[j]);
      if (in_submodule(derivs[i], others, opt.limits)) {
        r.failed_index = i;
        return fail("independence", "derivation " + std::to_string(i) + " lies in the span of Euler and the others");
      }
    }
  }
  r.minors = maximal_minors(M);
  r.codim = codim2_test(r.minors);
  if (r.codim->zero_ideal) return fail("codim", "all maximal minors vanish");
  if (!r.codim->codim2)
    return fail("codim", "minors share the factor " + to_string(*r.codim->common_factor) + "; codimension < 2");
  auto cof = ideal_membership(f, r.minors.minors, opt.limits);
  if (!cof) return fail("ideal", "f is not in the ideal of maximal minors");
  r.cofactors = *cof;
  Derivation mu = detail::completing_row(f, r.minors, r.cofactors, M.matrix.rows());
  r.completing = mu;
  std::vector<Derivation> basis{euler(ring)};
  for (const auto& d : derivs) basis.push_back(d);
  basis.push_back(mu);
  auto rep = saito_check(f, basis, "wme");
  if (!rep.free) return fail("saito", "completed matrix fails Saito's criterion: " + rep.message);
  r.free = true;
  r.certificate = std::move(rep.certificate);
  if (r.certificate->der0_exponents != r.expected_der0)
    r.certificate->notes.push_back("Der0 exponents differ from the eigenscheme formula");
  return r;
}

struct GeneralDetReport {
  bool free = false;
  std::optional<FreenessCertificate> certificate;
  std::string failed;  // "", "input", "membership", "zero", "ideal", "saito"
  std::string message;
  std::optional<std::size_t> failed_index;
  MinorSet minors;
  std::vector<Polynomial> cofactors;
  std::optional<Derivation> completing;
  bool euler_case = false;  // some input is a nonzero scalar multiple of Euler
  std::optional<std::size_t> euler_index;
};

namespace detail {

inline std::optional<Rational> euler_multiple(const Derivation& d) {
  Derivation E = euler(d.ring());
  std::optional<Rational> c;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& e = E[i];
    if (d[i].is_zero()) return std::nullopt;
    Rational q = d[i].leading().coeff / e.leading().coeff;
    if (d[i] != q * e) return std::nullopt;
    if (c && *c != q) return std::nullopt;
    c = q;
  }
  return c;
}

}  // namespace detail

/// Determinantal variant without a forced Euler row: n-1 rows in n variables,
/// f in their minor ideal, completed row checked with Saito. Given n rows it
/// degenerates to a plain Saito check.
inline GeneralDetReport general_determinantal_freeness(const Polynomial& f, const std::vector<Derivation>& derivs,
                                                       GroebnerLimits limits = {}) {
  GeneralDetReport r;
  auto fail = [&](std::string what, std::string msg) {
    r.failed = std::move(what);
    r.message = std::move(msg);
    return r;
  };
  std::string why;
  if (!detail::check_divisor(f, why)) return fail("input", why);
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->size();
  if (derivs.size() + 1 != n && derivs.size() != n)
    return fail("input", "need " + std::to_string(n - 1) + " or " + std::to_string(n) + " derivations, got " +
                             std::to_string(derivs.size()));
  for (std::size_t i = 0; i < derivs.size(); ++i) {
    if (!same_ring(derivs[i].ring(), ring)) throw RingMismatch();
    if (!in_der(derivs[i], f).member) {
      r.failed_index = i;
      return fail("membership", "derivation " + std::to_string(i) + " is not in Der(f)");
    }
    if (!r.euler_case && detail::euler_multiple(derivs[i])) {
      r.euler_case = true;
      r.euler_index = i;
    }
  }
  std::vector<Derivation> basis = derivs;
  if (derivs.size() + 1 == n) {
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& d : derivs) rows.push_back(d.coeffs());
    r.minors = maximal_minors(PolyMatrix::from_rows(ring, rows));
    if (r.minors.gcd.is_zero()) return fail("zero", "all maximal minors vanish");
    auto cof = ideal_membership(f, r.minors.minors, limits);
    if (!cof) return fail("ideal", "f is not in the ideal of maximal minors");
    r.cofactors = *cof;
    r.completing = detail::completing_row(f, r.minors, r.cofactors, derivs.size());
    basis.push_back(*r.completing);
  }
  auto rep = saito_check(f, basis, "wme-general");
  if (!rep.free) return fail("saito", "completed matrix fails Saito's criterion: " + rep.message);
  r.free = true;
  r.certificate = std::move(rep.certificate);
  r.certificate->notes.push_back(r.euler_case ? "Euler among the inputs up to a scalar"
                                              : "no input is a multiple of Euler");
  return r;
}

}  // namespace freediv
