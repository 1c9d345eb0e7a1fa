#include <doctest.h>

#include "helpers.hpp"
#include "milnorkit/error.hpp"
#include "milnorkit/groebner.hpp"
#include "milnorkit/harmonic.hpp"
#include "oracles.hpp"

using namespace milnorkit;
using testing::P;

namespace {

std::vector<Polynomial> polys(const ContextPtr& c, std::vector<std::string> texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(c, t));
  return out;
}

}  // namespace

TEST_CASE("buchberger on simple ideals") {
  auto c = testing::ctx({"x", "y"});
  CHECK(buchberger(polys(c, {"x", "y"})).generators() == polys(c, {"x", "y"}));

  auto gb = buchberger(polys(c, {"x^2 - y^2", "x*y"}));
  CHECK(gb.generators() == polys(c, {"y^3", "x^2 - y^2", "x*y"}));

  auto h = testing::ctx({"x", "y", "z", "w"});
  CHECK(buchberger(polys(h, {"2*x", "2*y", "-2*z", "-2*w"})).generators() == polys(h, {"x", "y", "z", "w"}));
}

TEST_CASE("buchberger edge cases") {
  auto c = testing::ctx({"x", "y"});
  CHECK(buchberger(polys(c, {"0"})).is_zero_ideal());
  CHECK(buchberger(polys(c, {"x", "x - 1"})).is_unit());
  CHECK(buchberger(polys(c, {"3"})).generators() == polys(c, {"1"}));
  CHECK_THROWS(buchberger({}));
  auto gb = buchberger(polys(c, {"x^2 + y", "x*y - 1"}));
  for (const auto& g : gb.generators()) CHECK(g.leading_coefficient() == 1);
}

TEST_CASE("buchberger matches a hand-computed basis") {
  auto c = testing::ctx({"x", "y", "z"});
  // twisted cubic: the 2x2 minors of [[x,y,z],[y,z,w]] with w = 1 dehomogenized
  auto gb = buchberger(polys(c, {"x*z - y^2", "y - x^2", "z - x*y"}));
  CHECK(gb.contains(P(c, "z - x^3")));
  CHECK(ideal_dimension(gb) == 1);
}

TEST_CASE("normal forms") {
  auto c = testing::ctx({"x", "y"});
  auto gb = buchberger(polys(c, {"x^2 - y^2", "x*y", "y^3"}));
  CHECK(normal_form(P(c, "x^3"), gb).is_zero());
  CHECK(normal_form(P(c, "x^2"), gb) == P(c, "y^2"));
  CHECK(normal_form(P(c, "y^2"), gb) == P(c, "y^2"));
  CHECK(normal_form(P(c, "x^5 + 7*y"), buchberger(polys(c, {"1"}))).is_zero());
}

TEST_CASE("ideal dimension") {
  auto h = testing::ctx({"x", "y", "z", "w"});
  CHECK(ideal_dimension(buchberger(polys(h, {"x", "y", "z", "w"}))) == 0);
  auto c3 = testing::ctx({"x", "y", "z"});
  CHECK(ideal_dimension(buchberger(polys(c3, {"x"}))) == 2);
  CHECK(ideal_dimension(buchberger(polys(c3, {"1"}))) == -1);
  CHECK(ideal_dimension(buchberger(polys(c3, {"0"}))) == 3);
}

TEST_CASE("singular locus of the R^8 cubic pair") {
  auto c = VariableContext::numbered(8);
  PolyMap f(c, polys(c, {"x7*x1^3 - 3*x7*x1*x2^2 + 3*x8*x1^2*x2 - x8*x2^3 + x5^3 - 3*x5*x6^2 + x4^2 - x3^2",
                         "-3*x7*x1^2*x2 + x7*x2^3 + x8*x1^3 - 3*x8*x1*x2^2 + x5^2*x6 - x6^3 + 2*x4*x3"}));
  auto s = singular_ideal(f);
  CHECK(s.minors.size() == 28);
  auto gb = buchberger(s.minors);
  CHECK(ideal_dimension(gb) == 4);
  auto real = real_refinement(s.minors);
  CHECK(real.linear);
  CHECK(real.dimension == 2);
}

TEST_CASE("quotient algebra") {
  auto h = testing::ctx({"x", "y", "z", "w"});
  auto q1 = QuotientAlgebra(buchberger(polys(h, {"x", "y", "z", "w"})));
  CHECK(q1.dim() == 1);
  CHECK(q1.basis()[0].is_one());

  auto c = testing::ctx({"x", "y"});
  QuotientAlgebra q(buchberger(polys(c, {"x^2 - y^2", "x*y", "y^3"})));
  REQUIRE(q.dim() == 4);
  CHECK(q.basis()[0].is_one());
  CHECK(q.basis()[1] == Monomial::variable(0));
  CHECK(q.basis()[2] == Monomial::variable(1));
  CHECK(q.basis()[3] == Monomial::variable(1, 2));
  CHECK(q.multiply(1, 1) == std::vector<Rational>{0, 0, 0, 1});
  CHECK(q.element(q.coordinates(P(c, "3*x^2 + x - 2"))) == P(c, "3*y^2 + x - 2"));

  CHECK_THROWS_AS(QuotientAlgebra(buchberger(polys(c, {"x"}))), DomainError);
  CHECK(QuotientAlgebra(buchberger(polys(c, {"1"}))).dim() == 0);
}

TEST_CASE("milnor numbers") {
  auto h = testing::ctx({"x", "y", "z", "w"});
  auto m = milnor_number(P(h, "x^2 + y^2 - z^2 - w^2"));
  CHECK(m.kind == MilnorNumber::Kind::finite);
  CHECK(m.value == 1);

  auto c = testing::ctx({"x", "y"});
  auto m2 = milnor_number(P(c, "x^3 - 3*x*y^2"));
  CHECK(m2.kind == MilnorNumber::Kind::finite);
  CHECK(m2.value == 4);
  CHECK(oracles::graded_quotient_dimension(jacobian_ideal(P(c, "x^3 - 3*x*y^2"))) == 4);

  CHECK(milnor_number(P(c, "x^2")).kind == MilnorNumber::Kind::infinite);
  CHECK(milnor_number(P(c, "x")).value == 0);
  CHECK(milnor_number(P(c, "x^3 - 3/2*x^2 + y^2")).kind == MilnorNumber::Kind::unsupported);
  CHECK(milnor_number(P(c, "x^3 + x^2 + y^2 - 3*x")).value == 0);
}

TEST_CASE("milnor number of a two-block cubic") {
  auto c = testing::ctx({"x", "y", "z", "u"});
  auto f = P(c, "x^3 - 3*x*y^2 - 3*z*u^2 + z^3");
  auto m = milnor_number(f);
  CHECK(m.kind == MilnorNumber::Kind::finite);
  CHECK(m.value == 16);
  CHECK(oracles::graded_quotient_dimension(jacobian_ideal(f)) == 16);
}

TEST_CASE("quadratic forms have milnor number one") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto c = VariableContext::numbered(n);
    Polynomial f(c);
    for (std::size_t i = 0; i < n; ++i) {
      f += Polynomial::monomial(c, Monomial::variable(i, 2), Rational(i % 2 ? -1 : 2) * Rational(i + 1));
    }
    CHECK(milnor_number(f).value == 1);
  }
}

TEST_CASE("real refinement") {
  auto c = testing::ctx({"x", "y", "z"});
  auto r = real_refinement(polys(c, {"x^2 + y^2"}));
  CHECK(r.dimension == 1);
  CHECK(r.linear);
  auto r2 = real_refinement(polys(c, {"x^2 + y^2 + z^2"}));
  CHECK(r2.origin_only);
  auto r3 = real_refinement(polys(c, {"x^2 - y^2"}));
  CHECK(r3.dimension == 2);
  CHECK_FALSE(r3.linear);
  auto r4 = real_refinement(polys(c, {"x^2 + 1"}));
  CHECK(r4.basis.is_unit());
}
