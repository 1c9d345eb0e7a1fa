#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "milnorkit/error.hpp"
#include "milnorkit/exterior.hpp"

using namespace milnorkit;
using testing::P;

namespace {

DiffForm dx(const ContextPtr& c, std::vector<std::size_t> idx, const Polynomial& coeff) {
  return DiffForm::basis(c, idx, coeff);
}

VectorField field(const ContextPtr& c, std::vector<std::string> comps) {
  std::vector<Polynomial> v;
  for (const auto& s : comps) v.push_back(P(c, s));
  return VectorField(c, std::move(v));
}

}  // namespace

TEST_CASE("tuple order and shuffle signs") {
  TupleLess less;
  CHECK(less(0b011, 0b101));  // (0,1) < (0,2)
  CHECK(less(0b101, 0b110));  // (0,2) < (1,2)
  CHECK(less(0b001, 0b011));  // (0) < (0,1)
  CHECK_FALSE(less(0b011, 0b011));
  CHECK(shuffle_sign(0b001, 0b010) == 1);
  CHECK(shuffle_sign(0b010, 0b001) == -1);
  CHECK(shuffle_sign(0b110, 0b001) == 1);
  CHECK(shuffle_sign(0b100, 0b011) == 1);
  CHECK(shuffle_sign(0b010, 0b101) == -1);
}

TEST_CASE("basis with unsorted and repeated indices") {
  auto c = testing::ctx({"x", "y", "z"});
  auto one = P(c, "1");
  CHECK(dx(c, {1, 0}, one) == -dx(c, {0, 1}, one));
  CHECK(dx(c, {2, 0, 1}, one) == dx(c, {0, 1, 2}, one));
  CHECK(dx(c, {0, 0}, one).is_zero());
}

TEST_CASE("wedge of dx1 with a differential") {
  auto c = VariableContext::numbered(4);
  auto f2 = P(c, "3*x1^2*x2 + x2^3 + x3^2 + x4^2");
  auto w = wedge(differential(P(c, "x1")), differential(f2));
  auto expected = dx(c, {0, 1}, P(c, "3*x1^2 + 3*x2^2")) + dx(c, {0, 2}, P(c, "2*x3")) +
                  dx(c, {0, 3}, P(c, "2*x4"));
  CHECK(w == expected);
}

TEST_CASE("wedge antisymmetry") {
  auto c = testing::ctx({"x", "y", "z"});
  auto a = one_form(c, {P(c, "x*y"), P(c, "z - 1"), P(c, "y^2")});
  CHECK(wedge(a, a).is_zero());
  auto dxdy = wedge(dx(c, {0}, P(c, "1")), dx(c, {1}, P(c, "1")));
  auto dydx = wedge(dx(c, {1}, P(c, "1")), dx(c, {0}, P(c, "1")));
  CHECK(dxdy == -dydx);
  CHECK_FALSE(dxdy.is_zero());
}

TEST_CASE("wedge beyond the top degree vanishes") {
  auto c = testing::ctx({"x", "y"});
  auto top = dx(c, {0, 1}, P(c, "x"));
  auto r = wedge(top, dx(c, {0}, P(c, "1")));
  CHECK(r.is_zero());
  CHECK(r.degree() == 3);
}

TEST_CASE("exterior derivative") {
  auto c = testing::ctx({"x", "y", "a", "b"});
  auto f = P(c, "a^2*x - 2*a*b*y - b^2*x");
  auto df = exterior_derivative(zero_form(f));
  CHECK(df == one_form(c, {P(c, "a^2 - b^2"), P(c, "-2*a*b"), P(c, "2*a*x - 2*b*y"),
                           P(c, "-2*a*y - 2*b*x")}));
  CHECK(df == differential(f));
  CHECK(exterior_derivative(df).is_zero());

  auto e = testing::ctx({"x", "y"});
  CHECK(exterior_derivative(dx(e, {1}, P(e, "x"))) == dx(e, {0, 1}, P(e, "1")));
  CHECK(exterior_derivative(dx(e, {0}, P(e, "y"))) == dx(e, {0, 1}, P(e, "-1")));
}

TEST_CASE("interior product") {
  auto c = VariableContext::numbered(3);
  auto f = P(c, "x1^2 - x2^2 + x3^2");
  auto X = field(c, {"3*x2*x3^2 + x3", "x1*x3*(3*x3 - 2)", "-(2*x2 + 1)*x1"});
  auto r = interior_product(differential(f), X);
  CHECK(r.degree() == 0);
  CHECK(r.is_zero());

  // independent oracle: the hand-expanded sum at random rational points
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int k = 0; k < 50; ++k) {
    Rational x1 = Rational(d(rng)) / 7, x2 = Rational(d(rng)) / 3, x3 = Rational(d(rng)) / 5;
    Rational hand = 2 * x1 * (3 * x2 * x3 * x3 + x3) - 2 * x2 * x1 * x3 * (3 * x3 - 2) -
                    2 * x3 * (2 * x2 + 1) * x1;
    CHECK(hand == 0);
    std::vector<Rational> pt{x1, x2, x3};
    CHECK(evaluate(X.apply(f), pt) == hand);
  }

  CHECK(interior_product(differential(P(c, "x2")), field(c, {"1", "0", "0"})).is_zero());

  auto e = testing::ctx({"x", "y"});
  auto dxdy = dx(e, {0, 1}, P(e, "1"));
  CHECK(interior_product(dxdy, field(e, {"1", "0"})) == dx(e, {1}, P(e, "1")));
  CHECK(interior_product(dxdy, field(e, {"0", "1"})) == dx(e, {0}, P(e, "-1")));
  CHECK_THROWS(interior_product(zero_form(P(e, "x")), field(e, {"1", "0"})));
}

TEST_CASE("lie bracket") {
  auto c = testing::ctx({"x", "y"});
  CHECK(lie_bracket(field(c, {"1", "0"}), field(c, {"0", "1"})) == field(c, {"0", "0"}));
  CHECK(lie_bracket(field(c, {"0", "x"}), field(c, {"y", "0"})) == field(c, {"x", "-y"}));
  auto X = field(c, {"x^2*y", "3 - y"});
  CHECK(lie_bracket(X, X) == field(c, {"0", "0"}));
}

TEST_CASE("vector field arity is checked") {
  auto c = testing::ctx({"x", "y"});
  CHECK_THROWS_AS(VectorField(c, {P(c, "x")}), InputError);
  CHECK_THROWS_AS(one_form(c, {P(c, "x")}), InputError);
}

TEST_CASE("frobenius: exact and integrable forms") {
  auto c = VariableContext::numbered(8);
  auto f1 = P(c, "x7*x1^3 - 3*x7*x1*x2^2 + 3*x8*x1^2*x2 - x8*x2^3 + x5^3 - 3*x5*x6^2 + x4^2 - x3^2");
  auto r = frobenius_check({differential(f1)});
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == Status::holds);
  CHECK(r[0].residual.is_zero());

  auto e2 = testing::ctx({"x", "y"});
  CHECK(frobenius_check({dx(e2, {1}, P(e2, "x"))})[0].status == Status::holds);
  auto e3 = testing::ctx({"x", "y", "z"});
  CHECK(frobenius_check({dx(e3, {1}, P(e3, "x"))})[0].status == Status::holds);
}

TEST_CASE("frobenius: contact form fails with its residual") {
  auto c = testing::ctx({"x", "y", "z"});
  auto w = one_form(c, {P(c, "z"), P(c, "1"), P(c, "0")});
  auto r = frobenius_check({w});
  CHECK(r[0].status == Status::fails);
  CHECK(r[0].residual == dx(c, {2, 0, 1}, P(c, "1")));
  CHECK_THROWS(frobenius_check({}));
}

TEST_CASE("frobenius with two forms omits the j-th form") {
  auto c = testing::ctx({"x", "y", "z", "w"});
  // d(z dx) ^ dy = dz^dx^dy, nonzero
  auto r = frobenius_check({dx(c, {0}, P(c, "z")), dx(c, {1}, P(c, "1"))});
  CHECK(r[0].status == Status::fails);
  CHECK(r[0].residual == dx(c, {2, 0, 1}, P(c, "1")));
  CHECK(r[1].status == Status::holds);
}

TEST_CASE("involutivity") {
  auto c = testing::ctx({"x", "y", "z"});
  CHECK(involutivity_check({field(c, {"1", "0", "0"}), field(c, {"0", "1", "0"})}).status == Status::holds);
  auto heis = involutivity_check({field(c, {"1", "0", "0"}), field(c, {"0", "1", "x"})});
  CHECK(heis.status == Status::fails);
  REQUIRE(heis.residual.has_value());
  CHECK(*heis.residual == Multivector::basis(c, {0, 1, 2}, P(c, "1")));
  CHECK(std::string(InvolutivityResult::criterion).find("[X_i,X_j]") != std::string::npos);
  CHECK(involutivity_check({field(c, {"x*y", "z", "1"})}).status == Status::holds);
}

TEST_CASE("first integrals from vector fields") {
  auto c = testing::ctx({"x", "y", "z", "u"});
  PolyMap f(c, {P(c, "5*u^4*z - 10*u^2*z^3 + z^5 + x^2 - y^2")});
  auto X1 = field(c, {"5/2*(z^4 - 6*z^2*u^2 + u^4)", "10*(z^3*u - z*u^3)", "-x", "-y"});
  auto r = first_integral_check(f, {X1});
  CHECK(r.status == Status::holds);
  CHECK(r.residuals[0][0].is_zero());

  auto e = testing::ctx({"x1", "x2"});
  CHECK(first_integral_check(PolyMap(e, {P(e, "x1")}), {field(e, {"0", "1"})}).status == Status::holds);
  auto bad = first_integral_check(PolyMap(e, {P(e, "x1")}), {field(e, {"1", "0"})});
  CHECK(bad.status == Status::fails);
  CHECK(bad.residuals[0][0] == P(e, "1"));
}

TEST_CASE("first integrals of a pair of fields as printed") {
  auto c = VariableContext::numbered(4);
  PolyMap f(c, {P(c, "x1"), P(c, "3*x1^2*x2 + x2^3 + x3^2 + x4^2")});
  auto X1 = field(c, {"0", "2*x3*x4", "-3*x4*(x1^2 + x2^2)", "-3*x3*(x1^2 + x2^2)"});
  auto X2 = field(c, {"0", "x4", "x4^3", "-(3/2*(x1^2 + x2^2) + x3*x4)"});
  auto r = first_integral_check(f, {X1, X2});
  CHECK(r.status == Status::fails);
  CHECK(r.residuals[0][0].is_zero());
  CHECK(r.residuals[0][1].is_zero());
  CHECK(r.residuals[1][0] == P(c, "-6*x3*x4*(x1^2 + x2^2)"));
  CHECK(r.residuals[1][1] == P(c, "2*x3*x4^3 - 2*x3*x4^2"));
}

TEST_CASE("first integrals from forms") {
  auto c = testing::ctx({"x", "y", "z"});
  PolyMap f(c, {P(c, "x + y"), P(c, "z")});
  auto r = form_first_integral_check(f, {differential(P(c, "x + y"))});
  CHECK(r[0].status == Status::holds);
  CHECK(r[1].status == Status::fails);
  CHECK(r[1].residual == wedge(differential(P(c, "z")), differential(P(c, "x + y"))));
}

TEST_CASE("printing forms") {
  auto c = testing::ctx({"x", "y"});
  CHECK(to_string(dx(c, {0, 1}, P(c, "x - 1"))) == "(x - 1)*dx^dy");
  CHECK(to_string(DiffForm(c, 1)) == "0");
  CHECK(to_string(field(c, {"y", "0"})) == "(y)*d/dx");
}
