#include <doctest.h>

#include "oracles.hpp"
#include "wf/qmgraph.hpp"
#include "wf/trunc.hpp"

using namespace wf;

namespace {

GroupElem gi(std::int64_t n) { return GroupElem::integer(n); }

TruncCtx z2_box_z(std::vector<std::int64_t> s) {
  std::vector<GroupElem> S;
  for (auto v : s) S.push_back(gi(v));
  return make_trunc_ctx(GroupSpec::cyclic(2), GroupSpec::cyclic(0), S);
}

TruncElem random_elem(const TruncCtx& ctx) {
  TruncElem x = t_identity(ctx);
  int n = static_cast<int>(wftest::rand_int(0, 4));
  for (int i = 0; i < n; ++i)
    x = t_mul(ctx, x, t_lamp(ctx, gi(wftest::rand_int(-3, 3)), gi(1)));
  return t_mul(ctx, x, t_cursor(ctx, gi(wftest::rand_int(-3, 3))));
}

}  // namespace

TEST_SUITE("trunc") {

TEST_CASE("multiplication respects the Cayley commutation pattern") {
  auto ctx = z2_box_z({1});
  // Adjacent positions commute: the product sorts to position order.
  TruncElem p = t_mul(ctx, t_lamp(ctx, gi(0), gi(1)), t_lamp(ctx, gi(1), gi(1)));
  REQUIRE(p.gp.length() == 2);
  CHECK(p.gp.word()[0].vertex.elem() == gi(0));
  CHECK(p.gp.word()[1].vertex.elem() == gi(1));
  CHECK(p.cursor == gi(0));
  CHECK(p == t_mul(ctx, t_lamp(ctx, gi(1), gi(1)), t_lamp(ctx, gi(0), gi(1))));

  // Distance-2 positions do not commute.
  TruncElem q = t_mul(ctx, t_lamp(ctx, gi(0), gi(1)), t_lamp(ctx, gi(2), gi(1)));
  TruncElem q2 = t_mul(ctx, t_lamp(ctx, gi(2), gi(1)), t_lamp(ctx, gi(0), gi(1)));
  CHECK(q.gp.length() == 2);
  CHECK(q != q2);

  // Conjugation by the cursor shifts lamp positions.
  TruncElem conj = t_mul(ctx, t_mul(ctx, t_cursor(ctx, gi(1)), t_lamp(ctx, gi(0), gi(1))),
                         t_cursor(ctx, gi(-1)));
  CHECK(conj == t_lamp(ctx, gi(1), gi(1)));
}

TEST_CASE("word problem") {
  auto ctx = z2_box_z({1});
  CHECK(is_trivial(ctx, t_identity(ctx)));
  CHECK(!is_trivial(ctx, t_lamp(ctx, gi(0), gi(1))));
  // Commutator of adjacent lamps dies in the graph product.
  TruncElem a = t_lamp(ctx, gi(0), gi(1));
  TruncElem b = t_lamp(ctx, gi(1), gi(1));
  TruncElem comm = t_mul(ctx, t_mul(ctx, t_mul(ctx, a, b), t_inv(ctx, a)), t_inv(ctx, b));
  CHECK(is_trivial(ctx, comm));
  // Commutator of distance-2 lamps survives.
  TruncElem c = t_lamp(ctx, gi(2), gi(1));
  TruncElem comm2 = t_mul(ctx, t_mul(ctx, t_mul(ctx, a, c), t_inv(ctx, a)), t_inv(ctx, c));
  CHECK(!is_trivial(ctx, comm2));
}

TEST_CASE("group laws on random elements") {
  auto ctx = z2_box_z({1});
  for (int i = 0; i < 80; ++i) {
    TruncElem x = random_elem(ctx), y = random_elem(ctx), z = random_elem(ctx);
    CHECK(t_mul(ctx, t_mul(ctx, x, y), z) == t_mul(ctx, x, t_mul(ctx, y, z)));
    CHECK(is_trivial(ctx, t_mul(ctx, x, t_inv(ctx, x))));
    CHECK(is_trivial(ctx, t_mul(ctx, t_inv(ctx, x), x)));
  }
}

TEST_CASE("pi_S is a homomorphism onto the wreath product") {
  auto ctx = z2_box_z({1});
  WreathCtx wctx{ctx.A, ctx.B};

  TruncElem q = t_mul(ctx, t_lamp(ctx, gi(0), gi(1)), t_lamp(ctx, gi(2), gi(1)));
  WreathElem img = pi_S(ctx, q);
  CHECK(img.lamps == std::map<GroupElem, GroupElem>{{gi(0), gi(1)}, {gi(2), gi(1)}});
  CHECK(img.cursor == gi(0));

  CHECK(pi_S(ctx, t_cursor(ctx, gi(4))) == w_cursor(wctx, gi(4)));

  for (int i = 0; i < 200; ++i) {
    TruncElem x = random_elem(ctx), y = random_elem(ctx);
    CHECK(pi_S(ctx, t_mul(ctx, x, y)) == w_mul(wctx, pi_S(ctx, x), pi_S(ctx, y)));
  }

  // Sampled surjectivity: every wreath element with support in the window
  // has a lift.
  for (int i = 0; i < 100; ++i) {
    WreathElem w = w_identity(wctx);
    for (int j = 0, n = static_cast<int>(wftest::rand_int(0, 4)); j < n; ++j)
      w = w_mul(wctx, w, w_lamp(wctx, gi(wftest::rand_int(-4, 4)), gi(1)));
    w = w_mul(wctx, w, w_cursor(wctx, gi(wftest::rand_int(-4, 4))));
    CHECK(pi_S(ctx, t_from_wreath(ctx, w)) == w);
  }
}

TEST_CASE("check_hom") {
  auto wctx = make_wreath_ctx(GroupSpec::cyclic(2), GroupSpec::cyclic(0));
  FinitePresentation z2pres{{"s", "t"}, {{"s", "t", "s^-1", "t^-1"}}};
  std::map<std::string, WreathElem> images{{"s", w_lamp(wctx, gi(0), gi(1))},
                                           {"t", w_lamp(wctx, gi(5), gi(1))}};
  CHECK(!check_hom(z2pres, wctx, images));

  // Non-abelian lamps with clashing supports fail the commutator.
  auto s3ctx = make_wreath_ctx(GroupSpec::finite_table(wftest::s3_table()), GroupSpec::cyclic(0));
  std::map<std::string, WreathElem> clash{{"s", w_lamp(s3ctx, gi(0), gi(1))},
                                          {"t", w_lamp(s3ctx, gi(0), gi(2))}};
  auto fail = check_hom(z2pres, s3ctx, clash);
  REQUIRE(fail);
  CHECK(fail->index == 0);
  CHECK(!fail->residual.lamps.empty());

  FinitePresentation norels{{"s"}, {}};
  CHECK(!check_hom(norels, wctx, images));

  FinitePresentation bad{{"s"}, {{"u"}}};
  CHECK_THROWS_AS((void)check_hom(bad, wctx, images), std::invalid_argument);
}

TEST_CASE("factor_through_truncation grows a sufficient S") {
  auto wctx = make_wreath_ctx(GroupSpec::cyclic(2), GroupSpec::cyclic(0));
  FinitePresentation z2pres{{"s", "t"}, {{"s", "t", "s^-1", "t^-1"}}};
  std::map<std::string, WreathElem> images{{"s", w_lamp(wctx, gi(0), gi(1))},
                                           {"t", w_lamp(wctx, gi(5), gi(1))}};
  FactorResult res = factor_through_truncation(z2pres, wctx, images, 16);
  CHECK(res.S == std::vector<GroupElem>{gi(-5), gi(5)});
  REQUIRE(res.trace.size() == 1);
  CHECK(res.trace[0].added == gi(-5));  // ties resolved by canonical encoding order
  // The lifted images kill every relator in the truncation.
  TruncCtx ctx = make_trunc_ctx(wctx.A, wctx.B, res.S);
  const TruncElem& ls = res.lifted.at("s");
  const TruncElem& lt = res.lifted.at("t");
  CHECK(pi_S(ctx, ls) == images.at("s"));
  TruncElem comm = t_mul(ctx, t_mul(ctx, t_mul(ctx, ls, lt), t_inv(ctx, ls)), t_inv(ctx, lt));
  CHECK(is_trivial(ctx, comm));

  // Images inside B need no commutations at all.
  std::map<std::string, WreathElem> in_b{{"s", w_cursor(wctx, gi(2))}, {"t", w_cursor(wctx, gi(3))}};
  CHECK(factor_through_truncation(z2pres, wctx, in_b, 16).S.empty());

  // A single torsion relator dies by merging at one position.
  FinitePresentation sq{{"s"}, {{"s", "s"}}};
  std::map<std::string, WreathElem> one{{"s", w_lamp(wctx, gi(0), gi(1))}};
  CHECK(factor_through_truncation(sq, wctx, one, 16).S.empty());

  // check_hom failures are rejected.
  std::map<std::string, WreathElem> notmor{{"s", w_lamp(wctx, gi(0), gi(1))},
                                           {"t", w_cursor(wctx, gi(1))}};
  CHECK_THROWS_AS((void)factor_through_truncation(z2pres, wctx, notmor, 16), std::invalid_argument);

  // The S bound trips a limit error.
  CHECK_THROWS_AS((void)factor_through_truncation(z2pres, wctx, images, 1), limit_error);
}

TEST_CASE("monotonicity of triviality in S") {
  auto wctx = make_wreath_ctx(GroupSpec::cyclic(2), GroupSpec::cyclic(0));
  FinitePresentation z2pres{{"s", "t"}, {{"s", "t", "s^-1", "t^-1"}}};
  std::map<std::string, WreathElem> images{{"s", w_lamp(wctx, gi(0), gi(1))},
                                           {"t", w_lamp(wctx, gi(5), gi(1))}};
  auto res = factor_through_truncation(z2pres, wctx, images, 16);
  // Any S' containing the found S keeps every relator trivial.
  for (std::int64_t extra : {1, 2, 3}) {
    std::vector<GroupElem> bigger = res.S;
    bigger.push_back(gi(extra));
    TruncCtx ctx = make_trunc_ctx(wctx.A, wctx.B, bigger);
    TruncElem ls = t_from_wreath(ctx, images.at("s"));
    TruncElem lt = t_from_wreath(ctx, images.at("t"));
    TruncElem comm = t_mul(ctx, t_mul(ctx, t_mul(ctx, ls, lt), t_inv(ctx, ls)), t_inv(ctx, lt));
    CHECK(is_trivial(ctx, comm));
  }
}

TEST_CASE("cayley_clique") {
  auto z = GroupSpec::cyclic(0);
  CHECK(cayley_clique(z, {gi(1)}) == 2);
  CHECK(cayley_clique(z, {gi(1), gi(2)}) == 3);
  CHECK(cayley_clique(z, {}) == 1);
  CHECK(cayley_clique(GroupSpec::free_abelian(2), {GroupElem::vec({1, 0}), GroupElem::vec({0, 1})}) == 2);
}

TEST_CASE("oriented edge stabilisers are trivial (windowed sample)") {
  // Radius-2 warm-up of the acceptance criterion: A = Z/2, B = Z, S = {+-1}.
  auto ctx = z2_box_z({1});

  // Elements of word length <= 2 over {lamp_0, cursor^{+-1}}.
  std::vector<TruncElem> gens{t_lamp(ctx, gi(0), gi(1)), t_cursor(ctx, gi(1)), t_cursor(ctx, gi(-1))};
  std::set<TruncElem> elems{t_identity(ctx)};
  std::vector<TruncElem> frontier{t_identity(ctx)};
  for (int len = 0; len < 2; ++len) {
    std::vector<TruncElem> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        TruncElem p = t_mul(ctx, e, g);
        if (elems.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }

  std::vector<GroupElem> window;
  for (int p = -2; p <= 2; ++p) window.push_back(gi(p));
  QMBall ball = build_ball(ctx.gp, 2, window);

  auto act = [&](const TruncElem& h, const Canon& x) {
    Word shifted;
    for (const auto& s : x.word())
      shifted.push_back(Syllable{VertexRef::lazy(mul(ctx.B, h.cursor, s.vertex.elem())), s.elem});
    return gp_mul(ctx.gp, h.gp, canonicalize(ctx.gp, shifted));
  };

  for (const auto& h : elems) {
    if (is_trivial(ctx, h)) continue;
    for (const auto& e : ball.edges()) {
      const Canon& x = ball.vertices()[static_cast<std::size_t>(e.u)];
      const Canon& y = ball.vertices()[static_cast<std::size_t>(e.v)];
      bool fixes = act(h, x) == x && act(h, y) == y;
      CHECK(!fixes);
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("trunc") {

TEST_CASE("pi_S multiplies same-position syllables in word order") {
  // Non-abelian lamps: position 0 repeats around a non-commuting position 2.
  auto ctx = make_trunc_ctx(GroupSpec::finite_table(wftest::s3_table()), GroupSpec::cyclic(0),
                            {GroupElem::integer(1)});
  GroupElem swap01 = GroupElem::integer(1), swap02 = GroupElem::integer(3);
  TruncElem x = t_mul(ctx, t_mul(ctx, t_lamp(ctx, GroupElem::integer(0), swap01),
                                 t_lamp(ctx, GroupElem::integer(2), swap01)),
                      t_lamp(ctx, GroupElem::integer(0), swap02));
  CHECK(x.gp.length() == 3);  // nothing merges across the blocker
  WreathElem img = pi_S(ctx, x);
  GroupElem expect = mul(ctx.A, swap01, swap02);
  CHECK(img.lamps.at(GroupElem::integer(0)) == expect);
  // The reversed order gives the other product.
  TruncElem y = t_mul(ctx, t_mul(ctx, t_lamp(ctx, GroupElem::integer(0), swap02),
                                 t_lamp(ctx, GroupElem::integer(2), swap01)),
                      t_lamp(ctx, GroupElem::integer(0), swap01));
  CHECK(pi_S(ctx, y).lamps.at(GroupElem::integer(0)) == mul(ctx.A, swap02, swap01));
  CHECK(pi_S(ctx, x).lamps.at(GroupElem::integer(0)) !=
        pi_S(ctx, y).lamps.at(GroupElem::integer(0)));
}

}  // TEST_SUITE

TEST_SUITE("trunc") {

TEST_CASE("truncations over other base groups") {
  // B = Z^2 with the two coordinate steps.
  auto ctx = make_trunc_ctx(GroupSpec::cyclic(2), GroupSpec::free_abelian(2),
                            {GroupElem::vec({1, 0}), GroupElem::vec({0, 1})});
  WreathCtx wctx{ctx.A, ctx.B};
  auto pos = [](std::int64_t x, std::int64_t y) { return GroupElem::vec({x, y}); };
  // Adjacent lattice positions commute, diagonal ones do not.
  TruncElem p = t_mul(ctx, t_lamp(ctx, pos(0, 0), gi(1)), t_lamp(ctx, pos(1, 0), gi(1)));
  CHECK(p == t_mul(ctx, t_lamp(ctx, pos(1, 0), gi(1)), t_lamp(ctx, pos(0, 0), gi(1))));
  TruncElem q1 = t_mul(ctx, t_lamp(ctx, pos(0, 0), gi(1)), t_lamp(ctx, pos(1, 1), gi(1)));
  TruncElem q2 = t_mul(ctx, t_lamp(ctx, pos(1, 1), gi(1)), t_lamp(ctx, pos(0, 0), gi(1)));
  CHECK(q1 != q2);
  for (int i = 0; i < 40; ++i) {
    TruncElem x = t_mul(ctx, t_lamp(ctx, pos(wftest::rand_int(-2, 2), wftest::rand_int(-2, 2)), gi(1)),
                        t_cursor(ctx, pos(wftest::rand_int(-2, 2), wftest::rand_int(-2, 2))));
    TruncElem y = t_mul(ctx, t_lamp(ctx, pos(wftest::rand_int(-2, 2), wftest::rand_int(-2, 2)), gi(1)),
                        t_cursor(ctx, pos(wftest::rand_int(-2, 2), wftest::rand_int(-2, 2))));
    CHECK(pi_S(ctx, t_mul(ctx, x, y)) == w_mul(wctx, pi_S(ctx, x), pi_S(ctx, y)));
    CHECK(is_trivial(ctx, t_mul(ctx, x, t_inv(ctx, x))));
  }

  // B a free product of two involutions: conjugation relabels positions
  // through the word arithmetic of B.
  auto fp = GroupSpec::free_product_of_cyclics({2, 2});
  auto fctx = make_trunc_ctx(GroupSpec::cyclic(2), fp, {GroupElem::word({{0, 1}})});
  GroupElem z0 = GroupElem::word({{0, 1}});
  TruncElem conj = t_mul(fctx, t_mul(fctx, t_cursor(fctx, z0), t_lamp(fctx, identity(fp), gi(1))),
                         t_cursor(fctx, z0));
  CHECK(conj == t_lamp(fctx, z0, gi(1)));

  CHECK(cayley_clique(fp, {GroupElem::word({{0, 1}}), GroupElem::word({{1, 1}})}) == 2);
  CHECK(cayley_clique(GroupSpec::cyclic(5), {gi(1)}) == 2);
}

}  // TEST_SUITE
