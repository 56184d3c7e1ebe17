#include <gtest/gtest.h>

#include "common.hpp"

using namespace fdt;

namespace {

RingPtr whitney_ring() { return parse_ring("x:4,y:2,z:4"); }

bool scalar_multiple(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return false;
  auto q = exact_divide(a, b);
  return q && q->is_constant();
}

}  // namespace

TEST(BuildWmeMatrix, Whitney) {
  auto R = whitney_ring();
  auto M = build_wme_matrix(R, {D(R, "2*x; 2*y; 0")});
  ASSERT_EQ(M.matrix.rows(), 2u);
  ASSERT_EQ(M.matrix.cols(), 3u);
  const char* want[2][3] = {{"4*x", "2*y", "4*z"}, {"2*x", "2*y", "0"}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(M.matrix.at(i, j), P(R, want[i][j]));
}

TEST(BuildWmeMatrix, BrieskornPhamConeTensors) {
  // r = (2,3,4): rows Euler, weighted Euler padded, delta_1 padded
  auto inst = brieskorn_pham_cone(2, 3, 4, {1, 2});
  const auto& R = inst.ring;
  ASSERT_EQ(R->vars(), (std::vector<std::string>{"x", "y", "z", "t"}));
  auto M = build_wme_matrix(R, {inst.tensors[1], inst.tensors[2]});
  const char* want[3][4] = {{"x", "y", "z", "t"}, {"12*x", "8*y", "6*z", "0"}, {"-3*y^2", "2*t*x", "0", "0"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(M.matrix.at(i, j), P(R, want[i][j])) << i << "," << j;
  auto ms = maximal_minors(M);
  ASSERT_EQ(ms.minors.size(), 4u);
  bool found = false;
  for (const auto& m : ms.minors) found = found || scalar_multiple(m, P(R, "t*(t*x^2 + y^3)"));
  EXPECT_TRUE(found);
  EXPECT_TRUE(codim2_test(ms).codim2);
}

TEST(BuildWmeMatrix, EulerTensorIsRankDeficient) {
  auto R = parse_ring("x,y");
  auto M = build_wme_matrix(R, {euler(R)});
  for (const auto& m : maximal_minors(M).minors) EXPECT_TRUE(m.is_zero());
  EXPECT_TRUE(codim2_test(maximal_minors(M)).zero_ideal);
}

TEST(BuildWmeMatrix, RejectsBadInput) {
  auto R = parse_ring("x,y,z");
  EXPECT_THROW(build_wme_matrix(R, {}), InvalidArgument);
  EXPECT_THROW(build_wme_matrix(R, {D(R, "x; y^2; 0")}), InvalidArgument);
  EXPECT_THROW(build_wme_matrix(R, {euler(R), euler(R), euler(R)}), InvalidArgument);
}

TEST(MaximalMinors, WhitneyIdeal) {
  auto R = whitney_ring();
  auto ms = maximal_minors(build_wme_matrix(R, {D(R, "2*x; 2*y; 0")}));
  ASSERT_EQ(ms.minors.size(), 3u);
  EXPECT_TRUE(scalar_multiple(ms.minors[0], P(R, "y*z")));
  EXPECT_TRUE(scalar_multiple(ms.minors[1], P(R, "x*z")));
  EXPECT_TRUE(scalar_multiple(ms.minors[2], P(R, "x*y")));
}

TEST(MaximalMinors, RepeatedRow) {
  auto R = parse_ring("x,y,z");
  auto M = PolyMatrix::from_rows(R, {{P(R, "x"), P(R, "y"), P(R, "z")}, {P(R, "x"), P(R, "y"), P(R, "z")}});
  for (const auto& m : maximal_minors(M).minors) EXPECT_TRUE(m.is_zero());
}

TEST(MaximalMinors, LexSubsetsForWideMatrices) {
  auto R = parse_ring("a,b,c,d");
  auto M = PolyMatrix::from_rows(R, {{P(R, "a"), P(R, "b"), P(R, "c"), P(R, "d")}});
  auto ms = maximal_minors(M);
  ASSERT_EQ(ms.minors.size(), 4u);
  // one row and four columns: minors are the entries, signed
  EXPECT_TRUE(scalar_multiple(ms.minors[0], P(R, "a")) || scalar_multiple(ms.minors[0], P(R, "b")));
}

TEST(Codim2, Examples) {
  auto R = parse_ring("x,y,z");
  EXPECT_TRUE(codim2_test(std::vector<Polynomial>{P(R, "x*y"), P(R, "x*z"), P(R, "y*z")}).codim2);
  auto v = codim2_test(std::vector<Polynomial>{P(R, "(x+y)*x"), P(R, "(x+y)*y")});
  EXPECT_FALSE(v.codim2);
  ASSERT_TRUE(v.common_factor);
  EXPECT_TRUE(scalar_multiple(*v.common_factor, P(R, "x+y")));
  EXPECT_TRUE(codim2_test(std::vector<Polynomial>{Polynomial(R), Polynomial(R)}).zero_ideal);
}

TEST(IdealMembership, Whitney) {
  auto R = whitney_ring();
  std::vector<Polynomial> I = {P(R, "x*y"), P(R, "x*z"), P(R, "y*z")};
  auto zf = P(R, "z*(x^2 - y^2*z)");
  auto c = ideal_membership(zf, I);
  ASSERT_TRUE(c);
  Polynomial s(R);
  for (std::size_t i = 0; i < I.size(); ++i) s += (*c)[i] * I[i];
  EXPECT_EQ(s, zf);
  EXPECT_FALSE(ideal_membership(P(R, "x^2 - y^2*z"), I));
  auto g0 = ideal_membership(I[0], I);
  ASSERT_TRUE(g0);
  EXPECT_EQ((*g0)[0], one(R));
  EXPECT_TRUE((*g0)[1].is_zero());
  EXPECT_TRUE((*g0)[2].is_zero());
}

TEST(WmeFreeness, WhitneyZf) {
  auto R = whitney_ring();
  auto rep = wme_freeness(P(R, "z*(x^2 - y^2*z)"), {D(R, "2*x; 2*y; 0")});
  ASSERT_TRUE(rep.free) << rep.message;
  // (1, 2abc - 2bc - ac + 1) at (2,2,1)
  EXPECT_EQ(rep.certificate->der0_exponents, (Ints{1, 3}));
  EXPECT_EQ(rep.certificate->exponents, (Ints{1, 1, 3}));
  EXPECT_EQ(rep.expected_der0, (Ints{1, 3}));
  EXPECT_TRUE(verify_certificate(*rep.certificate).ok);
}

TEST(WmeFreeness, WhitneyYf) {
  auto R = whitney_ring();
  auto rep = wme_freeness(P(R, "y*(x^2 - y^2*z)"), {D(R, "x; 0; 2*z")});
  ASSERT_TRUE(rep.free) << rep.message;
  // (1, 2abc - 2bc - ab + 1) = (1, 1)
  EXPECT_EQ(rep.certificate->der0_exponents, (Ints{1, 1}));
}

TEST(WmeFreeness, WhitneyAloneFails) {
  auto R = whitney_ring();
  auto rep = wme_freeness(P(R, "x^2 - y^2*z"), {D(R, "2*x; 2*y; 0")});
  EXPECT_FALSE(rep.free);
  EXPECT_EQ(rep.failed, "ideal");
}

TEST(WmeFreeness, StrictMode) {
  auto R = whitney_ring();
  WmeOptions opt;
  opt.strict = true;
  EXPECT_TRUE(wme_freeness(P(R, "z*(x^2 - y^2*z)"), {D(R, "2*x; 2*y; 0")}, opt).free);
  auto R2 = parse_ring("x,y,z");
  auto f = P(R2, "x*y*z");
  auto rep = wme_freeness(f, {P(R2, "x") * euler(R2)}, opt);
  EXPECT_FALSE(rep.free);
}

TEST(WmeFreeness, MembershipFailure) {
  auto R = whitney_ring();
  auto rep = wme_freeness(P(R, "z*(x^2 - y^2*z)"), {D(R, "2*x; 0; 0")});
  EXPECT_FALSE(rep.free);
  EXPECT_EQ(rep.failed, "membership");
}

TEST(GeneralDeterminantal, DegeneratesToSaito) {
  auto inst = reflection(3, 3, {1, 1, 1});
  auto g = general_determinantal_freeness(inst.divisor, inst.basis);
  auto s = saito_check(inst.divisor, inst.basis);
  ASSERT_TRUE(g.free) << g.message;
  ASSERT_TRUE(s.free);
  EXPECT_EQ(g.certificate->exponents, s.certificate->exponents);
  EXPECT_EQ(g.certificate->basis, s.certificate->basis);
  EXPECT_EQ(g.certificate->unit, s.certificate->unit);
}

TEST(GeneralDeterminantal, EulerCaseDetected) {
  auto inst = reflection(3, 3, {1, 1, 1});
  const auto& R = inst.ring;
  auto d1 = reflection_delta(R, {1, 1, 1}, 1);
  auto g = general_determinantal_freeness(inst.divisor, {Rational(3) * euler(R), d1});
  ASSERT_TRUE(g.free) << g.message;
  EXPECT_TRUE(g.euler_case);
  EXPECT_EQ(g.euler_index, std::optional<std::size_t>(0));
  EXPECT_EQ(g.certificate->exponents, (Ints{1, 2, 3}));
}

TEST(GeneralDeterminantal, BrieskornPhamCone) {
  auto inst = brieskorn_pham_cone(2, 3, 4, {1, 2});
  auto g = general_determinantal_freeness(inst.divisor, {inst.tensors[0], inst.tensors[1], inst.tensors[2]});
  ASSERT_TRUE(g.free) << g.message;
  EXPECT_EQ(g.certificate->der0_exponents, (Ints{1, 2, 8}));
  EXPECT_EQ(g.certificate->exponents, (Ints{1, 1, 2, 8}));
}

TEST(GeneralDeterminantal, ZeroMinors) {
  auto R = parse_ring("x,y,z");
  auto g = general_determinantal_freeness(P(R, "x*y*z"), {euler(R), Rational(2) * euler(R)});
  EXPECT_FALSE(g.free);
  EXPECT_EQ(g.failed, "zero");
}
