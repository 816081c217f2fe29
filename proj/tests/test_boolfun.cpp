#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "signrep/boolfun.hpp"
#include "signrep/cube.hpp"
#include "signrep/errors.hpp"

using namespace signrep;

namespace {

int bits_set(const Point& p) {
  int c = 0;
  for (const auto& x : p) c += x == 1;
  return c;
}

}  // namespace

TEST_CASE("cube domain order and majority values") {
  BooleanFunction m = majority(3);
  REQUIRE(m.size() == 8);
  CHECK(m.is_cube());
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(m.point(i) == cube_point(3, i));
    int plus = bits_set(m.point(i));
    CHECK(m.value(i) == (plus >= 2 ? 1 : -1));
  }
  // even n: a tie counts as true (-1)
  BooleanFunction m4 = majority(4);
  CHECK(m4.value_at({Rat(1), Rat(1), Rat(-1), Rat(-1)}) == -1);
  CHECK(m4.value_at({Rat(1), Rat(1), Rat(1), Rat(-1)}) == 1);
}

TEST_CASE("named families agree with direct definitions") {
  BooleanFunction p = make_named("PARITY", {4});
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.value(i) == ((4 - bits_set(p.point(i))) % 2 ? -1 : 1));
  BooleanFunction a = make_named("AND", {3}), o = make_named("OR-PM", {3});
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(a.value(i) == (i == 0 ? -1 : 1));
    CHECK(o.value(i) == (i == 7 ? 1 : -1));
  }
  BooleanFunction ob = make_named("OR", {3});
  CHECK(ob.point(0) == Point{Rat(0), Rat(0), Rat(0)});
  CHECK(ob.value(0) == 1);
  for (std::size_t i = 1; i < 8; ++i) CHECK(ob.value(i) == -1);
  BooleanFunction d = make_named("DICT", {3, 2});
  for (std::size_t i = 0; i < 8; ++i) CHECK(d.value(i) == (d.point(i)[1] > 0 ? 1 : -1));
  BooleanFunction s = make_named("SIGN", {3});
  CHECK(s.size() == 6);
  CHECK(s.coordinate_values(0) == std::vector<Rat>{Rat(-3), Rat(-2), Rat(-1), Rat(1), Rat(2), Rat(3)});
  BooleanFunction g = make_named("DFA-HS", {2});
  CHECK(g.size() == 25);
  CHECK(g.value_at({Rat(-1), Rat(1)}) == 1);   // 1 - 2 + 4
  CHECK(g.value_at({Rat(1), Rat(-1)}) == -1);  // 1 + 2 - 4
  BooleanFunction h = make_named("HS-GRID", {1});
  CHECK(h.size() == 81);
  CHECK(h.dimension() == 2);
}

TEST_CASE("odd-max-bit is decided by the highest set bit") {
  BooleanFunction f = make_named("ODD-MAX-BIT", {4});
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Point& x = f.point(i);
    int top = -1;
    for (int j = 0; j < 4; ++j)
      if (x[j] == 1) top = j;
    int expect = top < 0 ? 1 : ((top + 1) % 2 ? -1 : 1);
    CHECK(f.value(i) == expect);
  }
}

TEST_CASE("halfspace family counts weighted agreement") {
  BooleanFunction f = make_named("HALFSPACE", {2, 2});
  CHECK(f.dimension() == 4);
  // rows: x11 x12 weight 2, x21 x22 weight 4
  CHECK(f.value_at({Rat(-1), Rat(-1), Rat(1), Rat(1)}) == 1);   // 1 - 4 + 8
  CHECK(f.value_at({Rat(1), Rat(1), Rat(-1), Rat(-1)}) == -1);  // 1 + 4 - 8
  CHECK(f.value_at({Rat(1), Rat(-1), Rat(1), Rat(-1)}) == 1);   // 1
}

TEST_CASE("composition of parities is parity") {
  BooleanFunction c = compose({parity(2), {parity(2), parity(2)}});
  BooleanFunction p4 = parity(4);
  CHECK(c.points() == p4.points());
  CHECK(c.values() == p4.values());
  BooleanFunction c2 = compose({and_pm(2), {majority(3), or_pm(2)}});
  CHECK(c2.size() == 32);
  for (std::size_t i = 0; i < c2.size(); ++i) {
    const Point& x = c2.point(i);
    bool m = bits_set({x[0], x[1], x[2]}) < 2;
    bool o = x[3] == -1 || x[4] == -1;
    CHECK(c2.value(i) == (m && o ? -1 : 1));
  }
}

TEST_CASE("negate, reflect and restrictions") {
  BooleanFunction m = majority(3);
  BooleanFunction n = negate(m), r = reflect(m);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(n.value(i) == -m.value(i));
    Point minus = m.point(i);
    for (auto& c : minus) c = -c;
    CHECK(r.value_at(minus) == m.value(i));
  }
  // MAJ3 with x1 = +1 is OR-like: +1 unless both others are -1
  BooleanFunction h = restrict_cube(m, {1, 0, 0});
  CHECK(h.dimension() == 2);
  CHECK(h.values() == std::vector<int>{-1, 1, 1, 1});
  // z_i = -1 forces true, y_i = +1 forces false, otherwise free
  BooleanFunction s = subfunction(m, {-1, 1, -1}, {1, 1, -1});
  CHECK(s.dimension() == 1);
  // x2 = +1, x3 = -1, so x1 decides
  CHECK(s.value_at({Rat(1)}) == 1);
  CHECK(s.value_at({Rat(-1)}) == -1);
}

TEST_CASE("errors and caps") {
  CHECK_THROWS_AS(make_named("NOPE", {3}), PreconditionError);
  CHECK_THROWS_AS(make_named("MAJ", {}), PreconditionError);
  CHECK_THROWS_AS(make_named("MAJ", {22}, DomainCap{std::size_t(1) << 10}), ResourceError);
  CHECK_THROWS_AS(majority(3).value_at({Rat(0), Rat(0), Rat(0)}), PreconditionError);
  CHECK_THROWS_AS(compose({majority(3), {parity(2)}}), PreconditionError);
  CHECK(make_named("CONST", {2, -1}).is_constant());
  CHECK_FALSE(majority(3).is_constant());
}
