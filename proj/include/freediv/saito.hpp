#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "gcd.hpp"
#include "matrix.hpp"

namespace freediv {

/// Self-contained freeness certificate: every field is recomputable.
struct FreenessCertificate {
  RingPtr ring;
  Polynomial divisor;
  std::vector<Derivation> basis;
  Rational unit = 1;
  std::vector<std::int64_t> exponents;       // sorted degrees of the whole basis
  std::vector<std::int64_t> der0_exponents;  // exponents minus one Euler slot
  std::string method = "saito";
  std::vector<std::string> notes;
  std::optional<std::string> provenance;
};

inline bool known_method(const std::string& m) {
  return m == "saito" || m == "wme" || m == "wme-general" || m == "oracle";
}

/// Sum of derivation degrees plus sum of (w_i - 1).
inline std::int64_t expected_det_wdeg(const std::vector<Derivation>& derivs) {
  if (derivs.empty()) throw InvalidArgument("expected_det_wdeg: no derivations");
  const auto& ring = *derivs.front().ring();
  std::int64_t s = 0;
  for (const auto& d : derivs) {
    auto dd = wdeg_derivation(d);
    if (dd.zero || !dd.homogeneous) throw InvalidArgument("expected_det_wdeg: derivation not weighted homogeneous");
    s += *dd.degree;
  }
  for (std::size_t i = 0; i < ring.size(); ++i) s += ring.weight(i) - 1;
  return s;
}

struct ExponentData {
  std::vector<std::int64_t> exponents;
  std::vector<std::int64_t> der0;
  std::vector<std::string> notes;
};

inline ExponentData exponents_of(const Polynomial& f, const std::vector<Derivation>& basis) {
  ExponentData out;
  bool homogeneous = true;
  for (const auto& d : basis) {
    auto dd = wdeg_derivation(d);
    if (dd.zero) {
      homogeneous = false;
      continue;
    }
    if (!dd.homogeneous) homogeneous = false;
    out.exponents.push_back(*dd.degree);
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  if (!homogeneous) out.notes.push_back("basis not weighted homogeneous; exponents are maximal degrees");
  auto fd = is_weighted_homogeneous(f);
  auto one_slot = std::find(out.exponents.begin(), out.exponents.end(), 1);
  if (homogeneous && fd && *fd != 0 && one_slot != out.exponents.end()) {
    out.der0 = out.exponents;
    out.der0.erase(out.der0.begin() + (one_slot - out.exponents.begin()));
  } else {
    out.notes.push_back("Der0 exponents not reported: divisor or basis not weighted homogeneous");
  }
  return out;
}

struct SaitoReport {
  bool free = false;
  std::optional<FreenessCertificate> certificate;
  std::string failed;  // "", "zero", "reduced", "count", "membership", "det"
  std::string message;
  std::optional<std::size_t> failed_index;
  Polynomial determinant;
  Polynomial residual;  // det - u f for the best u
};

/// Saito's criterion: every row in Der(f) and det = u f with u a nonzero rational.
inline SaitoReport saito_check(const Polynomial& f, const std::vector<Derivation>& derivs,
                               const std::string& method = "saito") {
  SaitoReport r;
  if (f.is_zero()) {
    r.failed = "zero";
    r.message = "divisor is the zero polynomial";
    return r;
  }
  const RingPtr& ring = f.ring();
  if (!is_squarefree(f)) {
    r.failed = "reduced";
    r.message = "divisor is not reduced; pass its squarefree part " + to_string(squarefree_part(f));
    return r;
  }
  if (derivs.size() != ring->size()) {
    r.failed = "count";
    r.message = "need " + std::to_string(ring->size()) + " derivations, got " + std::to_string(derivs.size());
    return r;
  }
  for (std::size_t i = 0; i < derivs.size(); ++i) {
    if (!same_ring(derivs[i].ring(), ring)) throw RingMismatch();
    auto m = in_der(derivs[i], f);
    if (!m.member) {
      r.failed = "membership";
      r.failed_index = i;
      r.message = "derivation " + std::to_string(i) + " is not in Der(f)";
      r.residual = apply(derivs[i], f);
      return r;
    }
  }
  r.determinant = det(saito_matrix(derivs));
  auto q = exact_divide(r.determinant, f);
  if (!q || !q->is_constant() || q->is_zero()) {
    r.failed = "det";
    r.message = r.determinant.is_zero() ? "Saito determinant vanishes" : "Saito determinant is not a unit multiple of f";
    Rational u = 0;
    if (!r.determinant.is_zero() && r.determinant.leading().mono == f.leading().mono)
      u = r.determinant.leading().coeff / f.leading().coeff;
    r.residual = r.determinant - u * f;
    return r;
  }
  r.free = true;
  FreenessCertificate c;
  c.ring = ring;
  c.divisor = f;
  c.basis = derivs;
  c.unit = q->constant_value();
  auto ex = exponents_of(f, derivs);
  c.exponents = ex.exponents;
  c.der0_exponents = ex.der0;
  c.notes = ex.notes;
  c.method = method;
  r.certificate = std::move(c);
  r.residual = Polynomial(ring);
  return r;
}

struct VerifyReport {
  bool ok = false;
  std::string condition;  // first violated condition
  std::string detail;
};

/// Recomputes every condition of the certificate from scratch.
inline VerifyReport verify_certificate(const FreenessCertificate& c) {
  auto fail = [](std::string cond, std::string detail) { return VerifyReport{false, std::move(cond), std::move(detail)}; };
  if (!c.ring) return fail("ring", "missing ring");
  if (!known_method(c.method)) return fail("method", "unknown method '" + c.method + "'");
  if (c.divisor.is_zero()) return fail("divisor", "divisor is zero");
  if (!same_ring(c.divisor.ring(), c.ring)) return fail("ring", "divisor lives in another ring");
  if (!is_squarefree(c.divisor)) return fail("divisor", "divisor is not reduced");
  if (c.basis.size() != c.ring->size())
    return fail("basis", "basis has " + std::to_string(c.basis.size()) + " elements, ring has " +
                             std::to_string(c.ring->size()) + " variables");
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    if (!same_ring(c.basis[i].ring(), c.ring)) return fail("ring", "basis element in another ring");
    if (!in_der(c.basis[i], c.divisor).member)
      return fail("membership", "basis element " + std::to_string(i) + " is not in Der(f)");
  }
  if (c.unit == 0) return fail("unit", "unit is zero");
  Polynomial d = det(saito_matrix(c.basis));
  if (d != c.unit * c.divisor) return fail("det", "Saito determinant differs from unit * divisor");
  auto ex = exponents_of(c.divisor, c.basis);
  if (ex.exponents != c.exponents) return fail("exponents", "exponents do not match basis degrees");
  if (ex.der0 != c.der0_exponents) return fail("der0_exponents", "Der0 exponents do not match basis degrees");
  return {true, "", ""};
}

}  // namespace freediv
