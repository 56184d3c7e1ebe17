#include <gtest/gtest.h>

#include <numeric>

#include "common.hpp"

using namespace fdt;

namespace {

Ints product_weights(const Ints& n) {
  Ints w;
  for (std::size_t i = 0; i < n.size(); ++i) {
    std::int64_t p = 1;
    for (std::size_t j = 0; j < n.size(); ++j)
      if (j != i) p *= n[j];
    w.push_back(p);
  }
  return w;
}

// Der0 exponents for p * prod (x_i^n_i - x_j^n_j) in weighted projective space.
Ints reflection_formula(std::size_t l, std::size_t k, const Ints& n) {
  Ints w = product_weights(n);
  std::int64_t N = n[0] * w[0];
  Ints out;
  for (std::size_t m = 1; m + 1 < l; ++m) out.push_back(static_cast<std::int64_t>(m) * N + 1);
  std::int64_t tail = 0;
  for (std::size_t j = k; j < l; ++j) tail += w[j];
  out.push_back(static_cast<std::int64_t>(l - 1) * N + 1 - tail);
  return sorted(out);
}

// Der0 exponents of x0 * F_k^h for sorted n.
Ints reflection_cone_formula(std::size_t l, std::size_t k, const Ints& n) {
  Ints out{1};
  std::int64_t s = 0;
  for (std::size_t j = l; j >= 3; --j) {
    s += n[j - 1];
    out.push_back(s + 1);
  }
  s += n[1];
  out.push_back(s + 1 - static_cast<std::int64_t>(l) + static_cast<std::int64_t>(k));
  return sorted(out);
}

FamilyResult certified(const FamilyInstance& inst) {
  auto r = certify(inst);
  EXPECT_TRUE(r.free) << r.message;
  if (r.free) {
    EXPECT_TRUE(verify_certificate(*r.certificate).ok);
  }
  return r;
}

std::int64_t std_degree(const Derivation& d) {
  std::int64_t D = -1;
  for (const auto& g : d.coeffs()) D = std::max<std::int64_t>(D, g.total_degree());
  return D;
}

}  // namespace

TEST(Reflection, BraidArrangement) {
  auto inst = reflection(3, 3, {1, 1, 1});
  auto q = exact_divide(inst.divisor, P(inst.ring, "x1*x2*x3*(x1-x2)*(x1-x3)*(x2-x3)"));
  ASSERT_TRUE(q);
  EXPECT_TRUE(q->is_constant());
  auto r = certified(inst);
  EXPECT_EQ(r.certificate->exponents, (Ints{1, 2, 3}));
  EXPECT_TRUE(r.exponents_match);
}

TEST(Reflection, SmoothLine) {
  auto inst = reflection(2, 0, {1, 1});
  auto q = exact_divide(inst.divisor, P(inst.ring, "x1 - x2"));
  ASSERT_TRUE(q);
  EXPECT_TRUE(q->is_constant());
  auto r = certified(inst);
  EXPECT_EQ(r.certificate->der0_exponents, reflection_formula(2, 0, {1, 1}));
  EXPECT_EQ(r.certificate->exponents, (Ints{0, 1}));
}

TEST(Reflection, MixedExponentsAllK) {
  Ints n = {1, 2, 3};
  for (std::size_t k = 0; k <= 3; ++k) {
    auto inst = reflection(3, k, n);
    EXPECT_EQ(inst.ring->weights(), product_weights(n));
    auto r = certified(inst);
    EXPECT_EQ(r.certificate->der0_exponents, reflection_formula(3, k, n)) << "k=" << k;
    EXPECT_TRUE(r.exponents_match);
  }
}

TEST(Reflection, FourVariables) {
  Ints n = {1, 1, 2, 3};
  for (std::size_t k : {0u, 2u, 4u}) {
    auto r = certified(reflection(4, k, n));
    EXPECT_EQ(r.certificate->der0_exponents, reflection_formula(4, k, n));
  }
}

TEST(Reflection, RejectsBadInput) {
  EXPECT_THROW(reflection(1, 1, {1}), InvalidArgument);
  EXPECT_THROW(reflection(3, 4, {1, 1, 1}), InvalidArgument);
  EXPECT_THROW(reflection(3, 3, {1, 0, 1}), InvalidArgument);
}

TEST(ReflectionAltBasis, TwoVariables) {
  auto z = reflection_alt_basis(2, {1, 1});
  ASSERT_EQ(z.size(), 2u);
  const auto& R = z[0].ring();
  EXPECT_EQ(z[0], D(R, "x1*(x1 - x2); 0"));
  EXPECT_EQ(z[1], euler(R));
}

TEST(ReflectionAltBasis, DegreesAddUp) {
  Ints n = {1, 2, 3};
  auto z = reflection_alt_basis(3, n);
  auto F = reflection(3, 3, n).divisor;
  auto S = standard_regrade(F.ring());
  std::int64_t sum = 0;
  for (const auto& d : z) sum += std_degree(d);
  EXPECT_EQ(sum, change_ring(F, S).total_degree());
  EXPECT_EQ(sum, 11);
}

TEST(ReflectionAltBasis, BothBasesCertify) {
  for (Ints n : {Ints{1, 1, 1}, Ints{1, 2, 3}, Ints{2, 2, 3}}) {
    auto F = reflection(3, 3, n).divisor;
    auto a = saito_check(F, reflection_vandermonde_basis(3, n));
    auto b = saito_check(F, reflection_alt_basis(3, n));
    EXPECT_TRUE(a.free) << a.message;
    EXPECT_TRUE(b.free) << b.message;
    if (a.free && b.free) {
      EXPECT_EQ(a.certificate->exponents, b.certificate->exponents);
    }
  }
}

TEST(ReflectionCone, Table) {
  Ints n = {1, 2, 3};
  std::vector<Ints> want = {{1, 3, 4}, {1, 4, 4}, {1, 4, 5}, {1, 4, 6}};
  for (std::size_t k = 0; k <= 3; ++k) {
    auto inst = reflection_cone(3, k, n);
    auto r = certified(inst);
    EXPECT_EQ(r.certificate->der0_exponents, want[k]) << "k=" << k;
    EXPECT_EQ(reflection_cone_formula(3, k, n), want[k]);
    EXPECT_TRUE(r.exponents_match);
  }
}

TEST(ReflectionCone, BraidCone) {
  auto inst = reflection_cone(2, 2, {1, 1});
  auto r = certified(inst);
  EXPECT_EQ(r.certificate->der0_exponents, (Ints{1, 2}));
  auto q = exact_divide(inst.divisor, P(inst.ring, "x0*x1*x2*(x1 - x2)"));
  ASSERT_TRUE(q);
  EXPECT_TRUE(q->is_constant());
}

TEST(ReflectionCone, UnsortedRejected) { EXPECT_THROW(reflection_cone(3, 3, {3, 2, 1}), InvalidArgument); }

TEST(BrieskornPham, WeightedPlane) {
  auto inst = brieskorn_pham(2, 3, 4, {1, 2});
  EXPECT_EQ(inst.ring->weights(), (Ints{12, 8, 6}));
  auto r = certified(inst);
  // (w0 r0 + 1 - w0 - w1, |L| w0 r0 - w2 + 1)
  EXPECT_EQ(r.certificate->der0_exponents, (Ints{24 + 1 - 12 - 8, 2 * 24 - 6 + 1}));
}

TEST(BrieskornPham, LinesThroughAPoint) {
  auto inst = brieskorn_pham(1, 1, 1, {1});
  auto q = exact_divide(inst.divisor, P(inst.ring, "(x+y)*(x+y+z)"));
  ASSERT_TRUE(q);
  EXPECT_TRUE(q->is_constant());
  auto r = certified(inst);
  EXPECT_EQ(r.certificate->der0_exponents, (Ints{0, 1}));
}

TEST(BrieskornPham, HomogeneousCase) {
  for (std::int64_t rr : {2, 3}) {
    std::vector<Rational> lambda = {1, 2};
    auto inst = brieskorn_pham(rr, rr, rr, lambda, FamilyWeights::reduced);
    EXPECT_EQ(inst.ring->weights(), (Ints{1, 1, 1}));
    auto r = certified(inst);
    EXPECT_EQ(r.certificate->der0_exponents, (Ints{rr - 1, rr * 2}));
  }
}

TEST(BrieskornPham, Cone) {
  auto r = certified(brieskorn_pham_cone(2, 3, 4, {1, 2}));
  EXPECT_EQ(r.certificate->der0_exponents, (Ints{1, 2, 8}));
  auto r2 = certified(brieskorn_pham_cone(3, 2, 4, {1}));
  EXPECT_EQ(r2.certificate->der0_exponents, (Ints{1, 2, 4}));
}

TEST(BrieskornPham, RejectsBadLambda) {
  EXPECT_THROW(brieskorn_pham(2, 3, 4, {0}), InvalidArgument);
  EXPECT_THROW(brieskorn_pham(2, 3, 4, {1, 1}), InvalidArgument);
}

TEST(Pencil, Instantiation) {
  auto pd = pencil(2, 0, {1, 1, 1});
  EXPECT_EQ(pd.f1, P(pd.ring, "x0*x2 + x0*x1"));
  EXPECT_EQ(pd.f2, P(pd.ring, "x1*x2"));
}

TEST(Pencil, EqualExponentsMatchClosedForm) {
  // f1 f2 = x0^2 x1^2 x2^2 (x1^2 + x2^2), and x1^2 + x2^2 is irreducible over Q
  auto pd = pencil(2, 0, {2, 2, 2}, FamilyWeights::reduced);
  EXPECT_EQ(pd.f1 * pd.f2, P(pd.ring, "x0^2*x1^2*x2^2*(x1^2 + x2^2)"));
  auto closed = P(pd.ring, "x0*x1*x2*(x1^2 + x2^2)");
  auto q = exact_divide(pd.reduced, closed);
  ASSERT_TRUE(q);
  EXPECT_TRUE(q->is_constant());
}

TEST(PencilDivisor, HomogeneousTwoMembers) {
  auto r = certified(pencil_divisor(2, 0, {2, 2, 2}, {}, FamilyWeights::reduced));
  EXPECT_EQ(r.certificate->der0_exponents, (Ints{1, 3}));
}

TEST(PencilDivisor, HomogeneousThreeMembers) {
  auto r = certified(pencil_divisor(3, 1, {1, 1, 1, 1}, {{1, 1}}, FamilyWeights::reduced));
  // (r+1, r+1, r n (k-2) + 1)
  EXPECT_EQ(r.certificate->der0_exponents, (Ints{2, 2, 4}));
}

TEST(PencilDivisor, MixedExponents) {
  Ints rr = {1, 2, 3};
  auto w = product_weights(rr);
  std::int64_t N = rr[0] * w[0];
  auto r2 = certified(pencil_divisor(2, 0, rr, {}));
  EXPECT_EQ(r2.certificate->der0_exponents, sorted({1, N + 1}));
  auto r3 = certified(pencil_divisor(2, 0, rr, {{1, 1}}));
  EXPECT_EQ(r3.certificate->der0_exponents, sorted({N + 1, 1 * 2 * N + 1}));
}

TEST(PencilDivisor, RejectsBadScalars) {
  EXPECT_THROW(pencil_divisor(2, 0, {1, 1, 1}, {{0, 1}}), InvalidArgument);
  EXPECT_THROW(pencil_divisor(2, 0, {1, 1, 1}, {{1, 1}, {2, 2}}), InvalidArgument);
}

TEST(PencilCone, TwoMembers) {
  auto inst = pencil_cone(2, 0, {1, 1, 1}, {});
  EXPECT_EQ(inst.ring->var(3), "x3");
  auto r = certified(inst);
  EXPECT_EQ(r.certificate->der0_exponents, (Ints{1, 1, 2}));
}

TEST(PencilCone, ThreeMembers) {
  auto inst = pencil_cone(2, 0, {1, 1, 1}, {{1, 1}});
  EXPECT_EQ(inst.route, Route::wme_general);
  auto r = certified(inst);
  EXPECT_EQ(r.certificate->der0_exponents, (Ints{1, 2, 3}));
}

TEST(PencilCone, FourMembers) {
  auto r = certified(pencil_cone(2, 1, {1, 1, 2}, {{1, 1}, {1, 2}}));
  // (1, r_1 + 1, (k-2)(r_1 + r_2) + 1) with m = 1 dropping r_2 + 1
  EXPECT_EQ(r.certificate->der0_exponents, sorted({1, 2, 2 * 3 + 1}));
}

TEST(ConeCheck, ReflectionAltBasis) {
  Ints n = {1, 2, 3};
  auto F = reflection(3, 3, n).divisor;
  auto cc = cone_check(F, reflection_alt_basis(3, n));
  ASSERT_TRUE(cc.accepted) << cc.message;
  auto r = certified(*cc.instance);
  EXPECT_EQ(r.certificate->der0_exponents, (Ints{1, 4, 6}));
}

TEST(ConeCheck, VandermondeBasisRefused) {
  Ints n = {1, 2, 3};
  auto F = reflection(3, 3, n).divisor;
  auto cc = cone_check(F, reflection_vandermonde_basis(3, n));
  EXPECT_FALSE(cc.accepted);
  EXPECT_NE(cc.deficit, 0);
}

TEST(ConeCheck, NormalCrossing) {
  auto R = parse_ring("x,y");
  auto cc = cone_check(P(R, "x*y"), {D(R, "x; 0"), D(R, "0; y")});
  ASSERT_TRUE(cc.accepted);
  EXPECT_EQ(cc.instance->divisor, P(cc.instance->ring, "x0*x*y"));
  auto r = certified(*cc.instance);
  EXPECT_EQ(r.certificate->exponents, (Ints{1, 1, 1}));
  EXPECT_EQ(r.certificate->der0_exponents, (Ints{1, 1}));
}

TEST(ConeCheck, NotABasis) {
  auto R = parse_ring("x,y");
  EXPECT_THROW(cone_check(P(R, "x*y"), {D(R, "x; 0"), D(R, "0; x*y")}), InvalidArgument);
}

TEST(Provenance, SetOnCertificates) {
  auto r = certified(reflection_cone(3, 3, {1, 2, 3}));
  ASSERT_TRUE(r.certificate->provenance);
  EXPECT_FALSE(r.certificate->provenance->empty());
}
