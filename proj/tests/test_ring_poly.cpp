#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "common.hpp"

using namespace fdt;

namespace {

RingPtr xyz(Ints w = {1, 1, 1}) { return make_ring({"x", "y", "z"}, w); }

// Factor into irreducibles by trial division against every primitive linear
// form a*x + b*y + c*z with |a|,|b|,|c| <= 2. Enough for products of linear forms.
std::vector<Polynomial> linear_factors(Polynomial f) {
  const RingPtr& R = f.ring();
  std::vector<Polynomial> out;
  std::vector<Polynomial> cands;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        // first nonzero coefficient positive
        int lead = a ? a : b ? b : c;
        if (lead < 0) continue;
        Polynomial p = Polynomial::constant(R, a) * Polynomial::variable(R, 0) +
                       Polynomial::constant(R, b) * Polynomial::variable(R, 1) +
                       Polynomial::constant(R, c) * Polynomial::variable(R, 2);
        cands.push_back(p);
      }
  bool progress = true;
  while (progress && !f.is_constant()) {
    progress = false;
    for (const auto& c : cands) {
      auto q = exact_divide(f, c);
      if (q) {
        out.push_back(c);
        f = *q;
        progress = true;
        break;
      }
    }
  }
  EXPECT_TRUE(f.is_constant()) << "trial division left " << to_string(f);
  return out;
}

Polynomial multiset_gcd(const Polynomial& a, const Polynomial& b) {
  auto fa = linear_factors(a), fb = linear_factors(b);
  Polynomial g = one(a.ring());
  std::vector<bool> used(fb.size(), false);
  for (const auto& p : fa)
    for (std::size_t j = 0; j < fb.size(); ++j)
      if (!used[j] && fb[j] == p) {
        used[j] = true;
        g *= p;
        break;
      }
  return g;
}

bool associate(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto q = exact_divide(a, b);
  return q && q->is_constant();
}

// Normalization by trying every index order; all orders must agree.
Ints normalize_oracle(Ints w, const std::vector<std::size_t>& order) {
  std::int64_t g = 0;
  for (auto x : w) g = std::gcd(g, x);
  for (auto& x : w) x /= g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i : order) {
      std::int64_t q = 0;
      for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i) q = std::gcd(q, w[j]);
      if (q > 1) {
        for (std::size_t j = 0; j < w.size(); ++j)
          if (j != i) w[j] /= q;
        changed = true;
      }
    }
  }
  return w;
}

}  // namespace

TEST(PolyArith, DifferenceOfSquares) {
  auto R = xyz();
  EXPECT_EQ(P(R, "(x+y)*(x-y)"), P(R, "x^2 - y^2"));
}

TEST(PolyArith, ExactDivide) {
  auto R = xyz();
  auto q = exact_divide(P(R, "x^2*y"), P(R, "x*y"));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P(R, "x"));
  EXPECT_FALSE(exact_divide(P(R, "x^2 + y"), P(R, "x")));
}

TEST(PolyArith, PowerAndRationalCoefficients) {
  auto R = xyz();
  EXPECT_EQ(P(R, "x+y").pow(3), P(R, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  EXPECT_EQ(P(R, "1/2*x + 1/3*x"), P(R, "5/6*x"));
}

TEST(Wdeg, WhitneyWeights) {
  auto R = xyz({4, 2, 4});
  EXPECT_EQ(*wdeg(P(R, "x^2 - y^2*z")), 8);
}

TEST(Wdeg, ZeroIsBottom) {
  auto R = xyz();
  EXPECT_FALSE(wdeg(Polynomial(R)).has_value());
}

TEST(Wdeg, StandardGrading) {
  auto R = make_ring({"x", "y"}, {1, 1});
  EXPECT_EQ(*wdeg(P(R, "x^3 + y")), 3);
}

TEST(Homogeneity, Examples) {
  auto R = xyz({4, 2, 4});
  EXPECT_EQ(is_weighted_homogeneous(P(R, "x^2 - y^2*z")), std::optional<std::int64_t>(8));
  auto S = make_ring({"x", "y"}, {1, 1});
  EXPECT_FALSE(is_weighted_homogeneous(P(S, "x^2 + y")));
  auto T = make_ring({"x", "y"}, {2, 3});
  EXPECT_EQ(is_weighted_homogeneous(P(T, "x^3 + y^2")), std::optional<std::int64_t>(6));
}

TEST(Partial, Examples) {
  auto R = xyz();
  auto f = P(R, "x^2 - y^2*z");
  EXPECT_EQ(partial_derivative(f, 0), P(R, "2*x"));
  EXPECT_EQ(partial_derivative(f, 2), P(R, "-y^2"));
  EXPECT_TRUE(partial_derivative(P(R, "x^3"), 1).is_zero());
}

TEST(Gcd, Monomials) {
  auto R = xyz();
  EXPECT_TRUE(associate(poly_gcd(P(R, "x*y"), P(R, "x*z")), P(R, "x")));
}

TEST(Gcd, FoldOfWhitneyMinorsIsOne) {
  auto R = xyz();
  auto g = poly_gcd(poly_gcd(P(R, "y*z"), P(R, "x*z")), P(R, "x*y"));
  EXPECT_TRUE(g.is_constant());
  EXPECT_FALSE(g.is_zero());
}

TEST(Gcd, AgainstTrialDivisionOracle) {
  auto R = xyz();
  auto a = P(R, "x^2*y - x*y^2"), b = P(R, "x^2*y + x*y^2");
  auto expect = multiset_gcd(a, b);
  EXPECT_TRUE(associate(expect, P(R, "x*y")));
  EXPECT_TRUE(associate(poly_gcd(a, b), expect));
}

TEST(Gcd, RandomProductsOfLinearForms) {
  auto R = xyz();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-2, 2), k(1, 3);
  auto lin = [&] {
    Polynomial p(R);
    while (p.is_zero() || p.is_constant())
      p = Polynomial::constant(R, c(rng)) * Polynomial::variable(R, 0) +
          Polynomial::constant(R, c(rng)) * Polynomial::variable(R, 1) +
          Polynomial::constant(R, c(rng)) * Polynomial::variable(R, 2);
    return p;
  };
  for (int t = 0; t < 60; ++t) {
    Polynomial common = one(R), a = one(R), b = one(R);
    for (int i = k(rng) - 1; i > 0; --i) common *= lin();
    for (int i = k(rng); i > 0; --i) a *= lin();
    for (int i = k(rng); i > 0; --i) b *= lin();
    a *= common;
    b *= common;
    EXPECT_TRUE(associate(poly_gcd(a, b), multiset_gcd(a, b))) << to_string(a) << " | " << to_string(b);
  }
}

TEST(Squarefree, ConstructedSquare) {
  auto R = xyz();
  EXPECT_TRUE(associate(squarefree_part(P(R, "(x+y)^2*z")), P(R, "(x+y)*z")));
  auto f = P(R, "x*y*(x-y)");
  EXPECT_TRUE(associate(squarefree_part(f), f));
  EXPECT_FALSE(is_squarefree(P(R, "(x+y)^2*z")));
}

TEST(Squarefree, PencilClosedForm) {
  Ints r = {1, 2, 3};
  auto pd = pencil(2, 0, r);
  auto prod = pd.f1 * pd.f2;
  Polynomial mono = one(pd.ring);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] > 1) mono *= Polynomial::variable(pd.ring, i, static_cast<unsigned>(r[i] - 1));
  auto closed = exact_divide(prod, mono);
  ASSERT_TRUE(closed);
  EXPECT_TRUE(associate(squarefree_part(prod), *closed));
  EXPECT_TRUE(associate(pd.reduced, *closed));
}

TEST(Homogenize, Examples) {
  auto R = xyz();
  auto fh = homogenize(P(R, "x^2 - y^2*z"), "t");
  EXPECT_EQ(fh, P(fh.ring(), "x^2*t - y^2*z"));
  auto g = homogenize(P(R, "x*y - z^2"), "t");
  EXPECT_EQ(g, P(g.ring(), "x*y - z^2"));
  EXPECT_EQ(dehomogenize(fh, "t"), change_ring(P(R, "x^2 - y^2*z"), dehomogenize(fh, "t").ring()));
}

TEST(Homogenize, ReflectionBinomial) {
  auto R = make_ring({"x", "y"}, {1, 1});
  auto fh = homogenize(P(R, "x - y^3"), "x0", VarPosition::front);
  EXPECT_EQ(fh, P(fh.ring(), "x*x0^2 - y^3"));
  EXPECT_EQ(fh.ring()->var(0), "x0");
}

TEST(Homogenize, DehomogenizeFreeVariable) {
  auto R = xyz();
  auto f = P(R, "x^2 + y");
  auto d = dehomogenize(f, "z");
  EXPECT_EQ(to_string(d), "x^2 + y");
}

TEST(Homogenize, PaddingDivisibility) {
  auto R = make_ring({"x0", "x", "y"}, {1, 1, 1});
  auto F2 = P(R, "x^2 - x0*y");
  auto F1 = P(R, "x0^3") * F2;
  EXPECT_EQ(dehomogenize(F1, "x0"), dehomogenize(F2, "x0"));
  auto q = exact_divide(F1, F2);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, P(R, "x0^3"));
}

TEST(NormalizeWeights, Examples) {
  EXPECT_EQ(normalize_weights(xyz({2, 4, 6})).ring->weights(), (Ints{1, 2, 3}));
  EXPECT_EQ(normalize_weights(xyz({1, 1, 1})).ring->weights(), (Ints{1, 1, 1}));
  auto n = normalize_weights(xyz({1, 2, 2}));
  EXPECT_EQ(n.ring->weights(), (Ints{1, 1, 1}));
  ASSERT_FALSE(n.steps.empty());
  EXPECT_EQ(n.steps[0], (std::pair<std::size_t, std::int64_t>{0, 2}));
}

TEST(NormalizeWeights, ExhaustiveOracle) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> w(1, 36);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + t % 3;
    Ints ws;
    for (std::size_t i = 0; i < n; ++i) ws.push_back(w(rng));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Ints first;
    bool have = false;
    do {
      auto o = normalize_oracle(ws, order);
      if (!have) {
        first = o;
        have = true;
      }
      ASSERT_EQ(o, first);
    } while (std::next_permutation(order.begin(), order.end()));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    EXPECT_EQ(normalize_weights(make_ring(names, ws)).ring->weights(), first);
    // well formed: every n-1 of them coprime
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t q = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) q = std::gcd(q, first[j]);
      EXPECT_EQ(q, 1);
    }
  }
}

TEST(FindWeights, Whitney) {
  auto R = xyz();
  auto w = find_weight_vector({P(R, "x^2 - y^2*z")}, false);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (Ints{2, 1, 2}));
  auto S = xyz({4, 2, 4});
  EXPECT_TRUE(is_weighted_homogeneous(P(S, "x^2 - y^2*z")));
}

TEST(FindWeights, Linear) {
  auto R = make_ring({"x", "y"}, {1, 1});
  EXPECT_EQ(*find_weight_vector({P(R, "x + y")}, false), (Ints{1, 1}));
}

TEST(FindWeights, HomogeneousPencil) {
  auto pd = pencil(2, 0, {2, 2, 2});
  auto w = find_weight_vector({pd.f1, pd.f2}, true);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (Ints{1, 1, 1}));
}

TEST(Parse, Rings) {
  auto R = parse_ring("x:4,y:2,z:4");
  EXPECT_EQ(R->weights(), (Ints{4, 2, 4}));
  EXPECT_EQ(parse_ring("x,y")->weights(), (Ints{1, 1}));
  EXPECT_THROW(parse_ring("x:0,y:1"), Error);
  EXPECT_THROW(parse_ring("x,x"), Error);
}

TEST(Parse, Polynomials) {
  auto R = xyz();
  EXPECT_EQ(P(R, "x^2 - y^2*z"), Polynomial::variable(R, 0, 2) - Polynomial::variable(R, 1, 2) * Polynomial::variable(R, 2));
  EXPECT_EQ(to_string(P(R, "(x+y)*(x+y+z)")), "x^2 + 2*x*y + x*z + y^2 + y*z");
  try {
    P(R, "x + * y");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("column 5"), std::string::npos) << e.what();
  }
  EXPECT_THROW(P(R, "w + 1"), ParseError);
}

TEST(Parse, RoundTripRandom) {
  auto R = xyz({2, 3, 1});
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto f = random_poly(rng, R, 5, 4);
    EXPECT_EQ(P(R, to_string(f)), f);
  }
}
