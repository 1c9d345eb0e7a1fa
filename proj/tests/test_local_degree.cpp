#include <doctest.h>

#include "helpers.hpp"
#include "milnorkit/local_degree.hpp"

using namespace milnorkit;
using testing::P;

TEST_CASE("inertia of symmetric matrices") {
  CHECK(inertia({{1, 0}, {0, -1}}).signature() == 0);
  auto h = inertia({{0, 1}, {1, 0}});
  CHECK(h.positive == 1);
  CHECK(h.negative == 1);
  auto z = inertia({{0, 0}, {0, 0}});
  CHECK(z.zero == 2);
  auto d = inertia({{2, 1, 0}, {1, 2, 0}, {0, 0, 0}});
  CHECK(d.positive == 2);
  CHECK(d.zero == 1);
  auto n = inertia({{0, 0, 1}, {0, -3, 0}, {1, 0, 0}});
  CHECK(n.positive == 1);
  CHECK(n.negative == 2);
}

TEST_CASE("EL degree of a nondegenerate quadric") {
  auto c = testing::ctx({"x", "y", "z", "w"});
  auto r = el_degree(P(c, "x^2 + y^2 - z^2 - w^2"));
  CHECK(r.kind == ElDegree::Kind::defined);
  CHECK(r.degree == 1);
  CHECK(r.milnor.value == 1);
  CHECK_FALSE(r.alarm);
  auto q = el_degree(P(c, "x^2 + y^2 + z^2 - w^2"));
  CHECK(q.degree == -1);
}

TEST_CASE("EL degree of the monkey saddle") {
  auto c = testing::ctx({"x", "y"});
  auto a = analyze_degree(P(c, "x^3 - 3*x*y^2"));
  CHECK(a.el.kind == ElDegree::Kind::defined);
  CHECK(a.el.degree == -2);
  CHECK(a.el.milnor.value == 4);
  CHECK(a.winding_agreement == "agree");
  CHECK(a.alarms.empty());
  REQUIRE(a.el.certificate);
  CHECK(a.el.certificate->inertia.positive + a.el.certificate->inertia.negative == 4);
}

TEST_CASE("EL degree of a two-block cubic") {
  auto c = testing::ctx({"x", "y", "z", "u"});
  auto a = analyze_degree(P(c, "x^3 - 3*x*y^2 - 3*z*u^2 + z^3"));
  CHECK(a.el.degree == 4);
  CHECK(a.el.milnor.value == 16);
  CHECK(a.alarms.empty());
}

TEST_CASE("EL degree edge cases") {
  auto c = testing::ctx({"x", "y", "z"});
  auto r = el_degree(P(c, "x"));
  CHECK(r.kind == ElDegree::Kind::regular);
  CHECK(r.degree == 0);
  CHECK(el_degree(P(c, "x^2 + y^2")).kind == ElDegree::Kind::infinite);
  auto c2 = testing::ctx({"x", "y"});
  CHECK(el_degree(P(c2, "x^3 - 3/2*x^2 + y^2")).kind == ElDegree::Kind::unsupported);
  auto c1 = testing::ctx({"x"});
  CHECK(el_degree(P(c1, "x^4")).degree == 1);
  CHECK(el_degree(P(c1, "x^3")).degree == 0);
  CHECK(el_degree(P(c1, "x^2")).degree == 1);
  CHECK(el_degree(P(c1, "-x^6")).degree == -1);
}

TEST_CASE("EL degree matches a product formula") {
  // deg grad(f(x) + g(y)) = deg grad f * deg grad g
  auto c = testing::ctx({"x", "y"});
  CHECK(el_degree(P(c, "x^2 - y^4")).degree == -1);
  CHECK(el_degree(P(c, "x^3 + y^2")).degree == 0);
  CHECK(el_degree(P(c, "x^4 + y^4")).degree == 1);
  CHECK(el_degree(P(c, "x^2*y + y^4")).degree == el_degree(P(c, "x^2*y + y^4"), 99).degree);
}

TEST_CASE("winding oracle") {
  auto c = testing::ctx({"x", "y"});
  auto w = [&](std::string a, std::string b) {
    return winding_degree_2d(PolyMap(c, {P(c, a), P(c, b)}), 1.0).degree;
  };
  CHECK(w("2*x", "2*y") == 1);
  CHECK(w("3*x^2 - 3*y^2", "-6*x*y") == -2);
  CHECK(w("x^2 - y^2", "2*x*y") == 2);
  CHECK(w("x + 2", "y") == 0);
  CHECK(w("x^3 - 3*x*y^2", "3*x^2*y - y^3") == 3);
}

TEST_CASE("preimage oracle") {
  auto c = testing::ctx({"x", "y"});
  auto g = PolyMap(c, {P(c, "x^2 - y^2"), P(c, "2*x*y")});
  auto r = preimage_degree(g, 1.0, 200, 7, 1.0);
  REQUIRE(r.degree);
  CHECK(*r.degree == 2);
  CHECK(r.solutions == 2);
  auto h = testing::ctx({"x", "y", "z"});
  auto s = preimage_degree(PolyMap(h, {P(h, "x"), P(h, "-y"), P(h, "z^3 + z")}), 1.0, 200, 7, 1.0);
  REQUIRE(s.degree);
  CHECK(*s.degree == -1);
}
