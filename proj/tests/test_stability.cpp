#include <gtest/gtest.h>

#include <cmath>

#include "elim/elimination.hpp"
#include "elim/stability.hpp"
#include "support/oracles.hpp"

namespace elim {
namespace {

using testing::Rng;

const std::vector<double> kDecades{1e-3, 1e-4, 1e-5, 1e-6};

MultiPoly w(std::string_view text, std::size_t vars) { return parse_poly(text, vars); }

/// p / (its leading coefficient), so projective equality becomes equality.
MultiPoly monic(const MultiPoly& p) {
  MultiPoly out = p;
  out *= Rational(1 / p.terms().begin()->second);
  return out;
}

OnePS negated(const OnePS& l) {
  OnePS out = l;
  for (auto& x : out.weights) x = -x;
  return out;
}

TEST(ActDecompose, Examples) {
  const auto f = w("w0*w3 - w1*w2", 4);
  const auto balanced = act_decompose(f, {{1, -1, 1, -1}});
  ASSERT_EQ(balanced.size(), 1u);
  EXPECT_EQ(balanced.at(0), f);

  const auto split = act_decompose(f, {{1, 0, 0, 0}});
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split.at(-1), w("w0*w3", 4));
  EXPECT_EQ(split.at(0), w("-w1*w2", 4));

  const auto g = w("w1^2 - 4*w0*w2", 3);
  const auto whole = act_decompose(g, {{2, 1, 0}});
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole.at(-2), g);

  EXPECT_THROW(act_decompose(g, {{1, 0}}), std::invalid_argument);
}

TEST(Weight, Examples) {
  const auto f = w("w0*w3 - w1*w2", 4);
  EXPECT_EQ(weight(f, {{1, -1, 1, -1}}), 0);
  EXPECT_EQ(weight(f, {{1, 0, 0, 0}}), -1);
  const OnePS a{{3, -2}};
  EXPECT_EQ(weight(w("w0*w1", 2), a), weight(w("w0", 2), a) + weight(w("w1", 2), a));
  EXPECT_EQ(weight(w("w1^2-4*w0*w2", 3), {{2, 1, 0}}), -2);
  EXPECT_THROW(weight(MultiPoly(2), a), DomainError);
}

TEST(LimitPolynomial, Examples) {
  const auto f = w("w0*w3 - w1*w2", 4);
  EXPECT_EQ(limit_polynomial(f, {{1, 0, 0, 0}}), w("w0*w3", 4));
  EXPECT_EQ(limit_polynomial(f, {{1, -1, 1, -1}}), f);
  EXPECT_EQ(limit_polynomial(w("w1^2-4*w0*w2", 3), {{0, 1, 0}}), w("w1^2", 3));
  EXPECT_THROW(limit_polynomial(MultiPoly(3), {{0, 1, 0}}), DomainError);
}

TEST(Valuation, AdditiveAndMultiplicative) {
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = testing::random_nonzero_form(rng, 3, 2, 3);
    const auto g = testing::random_nonzero_form(rng, 3, 3, 3);
    const OnePS l{{testing::uniform_int(rng, -3, 3), testing::uniform_int(rng, -3, 3), testing::uniform_int(rng, -3, 3)}};
    EXPECT_EQ(weight(f * g, l), weight(f, l) + weight(g, l));
    EXPECT_EQ(limit_polynomial(f * g, l), limit_polynomial(f, l) * limit_polynomial(g, l));
  }
}

TEST(Decomposition, ReassemblesAction) {
  Rng rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = testing::random_nonzero_form(rng, 3, 3, 4);
    const OnePS l{{testing::uniform_int(rng, -2, 2), testing::uniform_int(rng, -2, 2), testing::uniform_int(rng, -2, 2)}};
    const Rational t(2, 3);
    MultiPoly sum(3);
    for (const auto& [e, part] : act_decompose(f, l)) {
      Rational te = 1;
      for (long k = 0; k < std::abs(e); ++k) te *= t;
      sum += (e < 0 ? Rational(1 / te) : te) * part;
    }
    EXPECT_EQ(sum, act(f, l, t));
  }
}

TEST(InducedCoefficientWeights, Examples) {
  EXPECT_EQ(induced_coefficient_weights(1, 1, {{1, -1}}).weights, (std::vector<long>{-1, 1}));
  EXPECT_EQ(induced_coefficient_weights(1, 2, {{1, -1}}).weights, (std::vector<long>{-2, 0, 2}));
  EXPECT_EQ(induced_coefficient_weights(2, 2, {{0, 0, 0}}).weights, std::vector<long>(6, 0));
  EXPECT_THROW(induced_coefficient_weights(1, 2, {{1}}), std::invalid_argument);
}

TEST(ConventionConsistency, ResultantOfActedForms) {
  // Res(f(t^b x), g(t^b x)) equals the induced action on the resultant's
  // coefficient polynomial, evaluated at the original coefficients.
  Rng rng(73);
  const std::vector<unsigned> degrees{2, 1};
  const auto sym = resultant_symbolic(1, degrees);
  for (int trial = 0; trial < 20; ++trial) {
    const OnePS b{{testing::uniform_int(rng, -2, 2), testing::uniform_int(rng, -2, 2)}};
    OnePS induced;
    for (auto d : degrees) {
      for (auto x : induced_coefficient_weights(1, d, b).weights) induced.weights.push_back(x);
    }
    std::vector<Rational> u;
    for (std::size_t k = 0; k < coefficient_count(1, degrees); ++k) u.push_back(testing::uniform_int(rng, -4, 4));
    const auto forms = forms_from_coefficients(1, degrees, u);
    for (const Rational& t : {Rational(1, 2), Rational(3)}) {
      Matrix diag(2, 2);
      for (std::size_t k = 0; k < 2; ++k) {
        diag(k, k) = 1;
        for (long e = 0; e < std::abs(b.weights[k]); ++e) diag(k, k) *= t;
        if (b.weights[k] < 0) diag(k, k) = 1 / diag(k, k);
      }
      std::vector<MultiPoly> moved;
      for (const auto& f : forms) moved.push_back(apply_linear(f, diag));
      const Rational direct = resultant(FormSystem(moved, degrees));
      const Rational base = resultant(FormSystem(forms, degrees));
      const Rational via_action = eval(act(sym, induced, t), u);
      const Rational sym_base = eval(sym, u);
      // The numeric and symbolic resultants differ by one fixed sign.
      EXPECT_EQ(direct * sym_base, via_action * base);
      EXPECT_EQ(abs(direct), abs(via_action));
    }
  }
}

TEST(Degeneration, ChowFormOfMovingPointsHasLimitConfiguration) {
  // Points p_k moved by t^b; their Chow form is act(F, -b, t). The limit
  // of the Chow form is the Chow form of the limit points, with multiplicity.
  Rng rng(74);
  for (int trial = 0; trial < 30; ++trial) {
    const OnePS b{{testing::uniform_int(rng, 0, 2), testing::uniform_int(rng, 0, 2), testing::uniform_int(rng, 0, 2)}};
    std::vector<std::vector<Rational>> pts, limits, moved;
    const Rational t(1, 3);
    for (int k = 0; k < 3; ++k) {
      std::vector<Rational> p{1, testing::uniform_int(rng, -3, 3), testing::uniform_int(rng, -3, 3)};
      long lowest = 100;
      for (std::size_t j = 0; j < 3; ++j) {
        if (p[j] != 0) lowest = std::min(lowest, b.weights[j]);
      }
      std::vector<Rational> lim(3), mv(3);
      for (std::size_t j = 0; j < 3; ++j) {
        lim[j] = b.weights[j] == lowest ? p[j] : Rational(0);
        mv[j] = p[j];
        for (long e = 0; e < b.weights[j]; ++e) mv[j] *= t;
      }
      pts.push_back(p);
      limits.push_back(lim);
      moved.push_back(mv);
    }
    const auto chow = chow_form_points(pts);
    EXPECT_EQ(monic(act(chow, negated(b), t)), monic(chow_form_points(moved)));
    EXPECT_EQ(monic(limit_polynomial(chow, negated(b))), monic(chow_form_points(limits)));
  }
}

TEST(Degeneration, CollidingPointsDisagreeWithReducedLimit) {
  // [1:1] and [1:2] both flow to [1:0] under b = (0, 1). The limit keeps the
  // multiplicity, so it is not the Chow form of the reduced limit set.
  using Points = std::vector<std::vector<Rational>>;
  const auto chow = chow_form_points(Points{{1, 1}, {1, 2}});
  const auto limit = limit_polynomial(chow, {{0, -1}});
  EXPECT_EQ(monic(limit), chow_form_points(Points{{1, 0}, {1, 0}}));
  EXPECT_NE(homogeneous_degree(limit), homogeneous_degree(chow_form_points(Points{{1, 0}})));
}

TEST(SlopeFit, Examples) {
  const auto f = w("w0*w3 - w1*w2", 4);
  EXPECT_NEAR(slope_fit(f, {{1, -1, 1, -1}}, kDecades), 0.0, 1e-9);
  EXPECT_NEAR(slope_fit(f, {{1, 0, 0, 0}}, kDecades), -1.0, 1e-3);
  const auto mono = w("3*w0^2*w1", 2);
  const OnePS l{{2, -5}};
  EXPECT_NEAR(slope_fit(mono, l, kDecades), static_cast<double>(weight(mono, l)), 1e-12);
  EXPECT_THROW(slope_fit(f, {{1, 0, 0, 0}}, std::vector<double>{1e-3}), DomainError);
  EXPECT_THROW(slope_fit(f, {{1, 0, 0, 0}}, std::vector<double>{1e-3, 2.0}), DomainError);
}

TEST(SlopeFit, ImprovesMonotonicallyAcrossDecades) {
  Rng rng(75);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = testing::random_nonzero_form(rng, 3, 3, 5);
    const OnePS l{{testing::uniform_int(rng, -3, 3), testing::uniform_int(rng, -3, 3), testing::uniform_int(rng, -3, 3)}};
    const double target = static_cast<double>(weight(f, l));
    double previous = INFINITY;
    for (int k = 1; k <= 6; ++k) {
      const std::vector<double> window{std::pow(10.0, -k), std::pow(10.0, -k - 1)};
      const double err = std::abs(slope_fit(f, l, window) - target);
      EXPECT_LE(err, previous + 1e-12);
      previous = err;
    }
  }
}

}  // namespace
}  // namespace elim
