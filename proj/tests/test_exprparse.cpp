#include <doctest.h>

#include "oracles.hpp"
#include "wf/exprparse.hpp"

using namespace wf;

namespace {

GroupElem gi(std::int64_t n) { return GroupElem::integer(n); }

}  // namespace

TEST_SUITE("exprparse") {

TEST_CASE("gp-word expressions") {
  auto ctx = GPContext::finite_uniform(SimpGraph({"u"}, {}), GroupSpec::cyclic(3));
  CHECK(parse_gp_word(ctx, "u^2*u^1").empty());  // u^3 = 1
  CHECK(parse_gp_word(ctx, "u").word().size() == 1);
  CHECK(parse_gp_word(ctx, "1").empty());

  auto path = GPContext::finite_uniform(
      SimpGraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), GroupSpec::cyclic(2));
  Canon w = parse_gp_word(path, "c ^1 * b * a^-1");
  CHECK(render_gp_word(path, w) == "b^1*c^1*a^1");
  CHECK(parse_gp_word(path, render_gp_word(path, w)) == w);

  CHECK_THROWS_AS((void)parse_gp_word(ctx, "v^1"), parse_error);
  CHECK_THROWS_AS((void)parse_gp_word(ctx, "u^"), parse_error);
  CHECK_THROWS_AS((void)parse_gp_word(ctx, "u u"), parse_error);
  CHECK_THROWS_AS((void)parse_gp_word(ctx, ""), parse_error);
  try {
    (void)parse_gp_word(ctx, "u^2 * w^1");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.pos == 6);
  }

  auto zd = GPContext::finite_uniform(SimpGraph({"u"}, {}), GroupSpec::free_abelian(2));
  Canon v = parse_gp_word(zd, "u^(1,-2)");
  CHECK(v.word()[0].elem == GroupElem::vec({1, -2}));
  CHECK(parse_gp_word(zd, render_gp_word(zd, v)) == v);
}

TEST_CASE("wreath expressions") {
  auto ctx = make_wreath_ctx(GroupSpec::cyclic(2), GroupSpec::cyclic(0));
  WreathElem x = parse_wreath(ctx, "lamp(5,1)");
  CHECK(x == w_lamp(ctx, gi(5), gi(1)));
  WreathElem y = parse_wreath(ctx, "lamp(0,1)*t^3");
  CHECK(y == w_mul(ctx, w_lamp(ctx, gi(0), gi(1)), w_cursor(ctx, gi(3))));
  CHECK(parse_wreath(ctx, "lamp(0,1)^-1*lamp(0,1)*1") == w_identity(ctx));
  CHECK(parse_wreath(ctx, "t^-2") == w_cursor(ctx, gi(-2)));
  CHECK(parse_wreath(ctx, render_wreath(ctx, y)) == y);
  CHECK(render_wreath(ctx, w_identity(ctx)) == "1");

  auto zd = make_wreath_ctx(GroupSpec::cyclic(2), GroupSpec::free_abelian(2));
  WreathElem g = parse_wreath(zd, "lamp(1,0,1)*t^(0,2)");
  CHECK(g.cursor == GroupElem::vec({0, 2}));
  CHECK(g.lamps.count(GroupElem::vec({1, 0})) == 1);
  CHECK(parse_wreath(zd, render_wreath(zd, g)) == g);

  auto fp = make_wreath_ctx(GroupSpec::cyclic(3), GroupSpec::free_product_of_cyclics({2, 0}));
  WreathElem h = parse_wreath(fp, "z0*z1^-2*lamp(z0^1*z1^1,2)");
  CHECK(h.lamps.size() == 1);
  CHECK(parse_wreath(fp, render_wreath(fp, h)) == h);

  CHECK_THROWS_AS((void)parse_wreath(ctx, "lamp(0)"), parse_error);
  CHECK_THROWS_AS((void)parse_wreath(ctx, "foo"), parse_error);
  CHECK_THROWS_AS((void)parse_wreath(fp, "t^1"), parse_error);
}

TEST_CASE("laurent expressions") {
  CHECK(parse_laurent("10*X+6 (mod 15)") == l_make(15, {{1, 10}, {0, 6}}));
  CHECK(parse_laurent("1+2*X", 4) == l_make(4, {{0, 1}, {1, 2}}));
  CHECK(parse_laurent("X^-1 (mod 4)") == l_make(4, {{-1, 1}}));
  CHECK(parse_laurent("-X^2") == l_make(0, {{2, -1}}));
  CHECK(parse_laurent("1+2*X^1") == l_make(0, {{0, 1}, {1, 2}}));
  CHECK(parse_laurent("3-X+X-3") == l_zero(0));
  CHECK(parse_laurent("2") == l_make(0, {{0, 2}}));

  CHECK_THROWS_AS((void)parse_laurent("1+"), parse_error);
  CHECK_THROWS_AS((void)parse_laurent("X^"), parse_error);
  CHECK_THROWS_AS((void)parse_laurent("1 (mod 3) junk"), parse_error);
  CHECK_THROWS_AS((void)parse_laurent("1 (mod 3)", 4), parse_error);
  try {
    (void)parse_laurent("1+2*Y");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.pos == 4);
  }

  for (int i = 0; i < 60; ++i) {
    std::map<std::int64_t, std::int64_t> c;
    for (int t = 0, n = static_cast<int>(wftest::rand_int(0, 4)); t < n; ++t)
      c[wftest::rand_int(-4, 4)] = wftest::rand_int(-9, 9);
    std::int64_t k = std::vector<std::int64_t>{0, 4, 15}[static_cast<std::size_t>(wftest::rand_int(0, 2))];
    Laurent p = l_make(k, c);
    CHECK(parse_laurent(render_laurent(p)) == p);
  }
}

TEST_CASE("gwords") {
  CHECK(parse_gword("adad") == "adad");
  CHECK(parse_gword("") == "");
  try {
    (void)parse_gword("adxd");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.pos == 2);
  }
}

}  // TEST_SUITE
