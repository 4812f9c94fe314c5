#include <gtest/gtest.h>

#include "elim/multipoly.hpp"
#include "support/oracles.hpp"

namespace elim {
namespace {

using testing::Rng;

MultiPoly random_poly(Rng& rng, std::size_t vars, int terms) {
  MultiPoly p(vars);
  for (int k = 0; k < terms; ++k) {
    Exponents e(vars);
    for (auto& x : e) x = static_cast<unsigned>(testing::uniform_int(rng, 0, 3));
    p.add_term(e, testing::small_rational(rng, 4));
  }
  return p;
}

TEST(Parse, Examples) {
  const auto p = parse_poly("x0^2 - 2*x0*x1");
  EXPECT_EQ(p.var_count(), 2u);
  EXPECT_EQ(p.term_count(), 2u);
  EXPECT_EQ(p.coefficient({2, 0}), 1);
  EXPECT_EQ(p.coefficient({1, 1}), -2);
  EXPECT_TRUE(parse_poly("0").is_zero());
  const auto q = parse_poly("1/2*x1^3");
  EXPECT_EQ(q.term_count(), 1u);
  EXPECT_EQ(q.coefficient({0, 3}), Rational(1, 2));
}

TEST(Parse, WhitespaceAndImplicitProducts) {
  EXPECT_EQ(parse_poly(" 3 x0 x1 + x1 ^ 2 ", 2), parse_poly("3*x0*x1+x1^2", 2));
  EXPECT_EQ(parse_poly("u0*u3 - u1*u2"), parse_poly("x0*x3-x1*x2"));
  EXPECT_EQ(parse_poly("x0*x0"), parse_poly("x0^2"));
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse_poly("x0 + * x1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_poly("x3", 2), ParseError);
  EXPECT_THROW(parse_poly("x0^"), ParseError);
  EXPECT_THROW(parse_poly("1/0*x0"), ParseError);
}

TEST(Format, Examples) {
  EXPECT_EQ(format_poly(parse_poly("x0^2 - 2*x0*x1")), "x0^2 - 2*x0*x1");
  EXPECT_EQ(format_poly(MultiPoly(2)), "0");
  EXPECT_EQ(format_poly(parse_poly("1/2*x1^3")), "1/2*x1^3");
  EXPECT_EQ(format_poly(parse_poly("-x0+5"), "w"), "-w0 + 5");
}

TEST(Format, RoundTrip) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto vars = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
    const auto p = random_poly(rng, vars, static_cast<int>(testing::uniform_int(rng, 0, 6)));
    EXPECT_EQ(parse_poly(format_poly(p), vars), p);
  }
}

TEST(HomogeneousDegree, Examples) {
  EXPECT_EQ(homogeneous_degree(parse_poly("x0^2 + x0*x1")), 2u);
  EXPECT_EQ(homogeneous_degree(parse_poly("x0 + x0^2")), std::nullopt);
  EXPECT_EQ(homogeneous_degree(MultiPoly(3)), 0u);
}

TEST(RingOps, Examples) {
  EXPECT_EQ(partial(parse_poly("x0^2*x1"), 0), parse_poly("2*x0*x1"));
  EXPECT_EQ(parse_poly("x0+x1") * parse_poly("x0-x1"), parse_poly("x0^2-x1^2"));
  const auto p = parse_poly("3*x0 - x1^2");
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_THROW(partial(p, 2), std::out_of_range);
}

TEST(RingOps, Axioms) {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng, 3, 4);
    const auto b = random_poly(rng, 3, 4);
    const auto c = random_poly(rng, 3, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
  }
}

TEST(MonomialBasis, Examples) {
  EXPECT_EQ(monomial_basis(2, 2), (std::vector<Exponents>{{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(monomial_basis(3, 1), (std::vector<Exponents>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(monomial_basis(2, 0), (std::vector<Exponents>{{0, 0}}));
  for (std::size_t v = 1; v <= 4; ++v) {
    for (unsigned d = 0; d <= 5; ++d) EXPECT_EQ(monomial_basis(v, d).size(), binomial(d + v - 1, v - 1));
  }
}

TEST(ApplyLinear, Examples) {
  EXPECT_EQ(apply_linear(parse_poly("x0", 2), Matrix{{0, 1}, {1, 0}}), parse_poly("x1", 2));
  EXPECT_EQ(apply_linear(parse_poly("x0^2", 2), 2 * Matrix::identity(2)), parse_poly("4*x0^2", 2));
  EXPECT_EQ(apply_linear(parse_poly("x0*x1"), Matrix{{1, 1}, {0, 1}}), parse_poly("x0*x1 + x1^2"));
  EXPECT_THROW(apply_linear(parse_poly("x0*x1"), Matrix::identity(3)), std::invalid_argument);
}

TEST(ApplyLinear, CompositionLaw) {
  // p(ABx) = q(Bx) with q(y) = p(Ay).
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_form(rng, 3, 2);
    const Matrix a = testing::random_matrix(rng, 3, 3, 2);
    const Matrix b = testing::random_matrix(rng, 3, 3, 2);
    EXPECT_EQ(apply_linear(p, a * b), apply_linear(apply_linear(p, a), b));
  }
}

TEST(ApplyLinear, AgreesWithPointEvaluation) {
  Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_form(rng, 3, 3);
    const Matrix a = testing::random_matrix(rng, 3, 3, 2);
    std::vector<Rational> x{testing::small_rational(rng), testing::small_rational(rng), testing::small_rational(rng)};
    std::vector<Rational> ax(3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) ax[r] += a(r, c) * x[c];
    }
    EXPECT_EQ(eval(apply_linear(p, a), x), eval(p, ax));
  }
}

TEST(EulerIdentity, HomogeneousForms) {
  Rng rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    const auto vars = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
    const auto d = static_cast<unsigned>(testing::uniform_int(rng, 0, 4));
    const auto f = testing::random_form(rng, vars, d);
    MultiPoly lhs(vars);
    for (std::size_t k = 0; k < vars; ++k) lhs += MultiPoly::variable(vars, k) * partial(f, k);
    EXPECT_EQ(lhs, Rational(d) * f);
  }
}

TEST(Eval, Examples) {
  const std::vector<Rational> p34{3, 4};
  EXPECT_EQ(eval(parse_poly("x0^2+x1^2"), p34), 25);
  const std::vector<Rational> zero{0, 0};
  EXPECT_EQ(eval(parse_poly("7/2 + x0*x1 - x1"), zero), Rational(7, 2));
  const std::vector<std::complex<double>> z{{0, 1}, {1, 0}};
  const auto v = eval_float(parse_poly("x0*x1"), z);
  EXPECT_DOUBLE_EQ(v.real(), 0.0);
  EXPECT_DOUBLE_EQ(v.imag(), 1.0);
  EXPECT_THROW(eval(parse_poly("x0*x1"), std::vector<Rational>{1}), std::invalid_argument);
}

}  // namespace
}  // namespace elim
