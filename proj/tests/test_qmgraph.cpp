#include <doctest.h>

#include <queue>

#include "oracles.hpp"
#include "wf/qmgraph.hpp"

using namespace wf;

namespace {

GPContext single_z3() { return GPContext::finite_uniform(SimpGraph({"u"}, {}), GroupSpec::cyclic(3)); }

GPContext edge_z2() {
  return GPContext::finite_uniform(SimpGraph({"a", "b"}, {{"a", "b"}}), GroupSpec::cyclic(2));
}

GPContext edgeless_z2() {
  return GPContext::finite_uniform(SimpGraph({"a", "c"}, {}), GroupSpec::cyclic(2));
}

// Graph distances computed from the edge set alone.
std::vector<std::vector<int>> all_pairs_bfs(const QMBall& ball) {
  const int n = static_cast<int>(ball.vertices().size());
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& pr : ball.adjacency()[static_cast<std::size_t>(v)])
        if (d[static_cast<std::size_t>(s)][static_cast<std::size_t>(pr.first)] == -1) {
          d[static_cast<std::size_t>(s)][static_cast<std::size_t>(pr.first)] =
              d[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] + 1;
          q.push(pr.first);
        }
    }
  }
  return d;
}

}  // namespace

TEST_SUITE("qmgraph") {

TEST_CASE("small balls have the expected shape") {
  // Single Z/3 vertex, radius 1: a triangle.
  QMBall k3 = build_ball(single_z3(), 1);
  CHECK(k3.vertices().size() == 3);
  CHECK(k3.edges().size() == 3);
  CHECK(k3.triangles().size() == 1);
  CHECK(k3.squares().empty());

  // Z/2 x Z/2, radius 2: the 4-cycle on {1, a, b, ab}.
  QMBall c4 = build_ball(edge_z2(), 2);
  CHECK(c4.vertices().size() == 4);
  CHECK(c4.edges().size() == 4);
  CHECK(c4.squares().size() == 1);
  CHECK(c4.triangles().empty());

  // Radius 0: a single vertex.
  QMBall point = build_ball(edge_z2(), 0);
  CHECK(point.vertices().size() == 1);
  CHECK(point.edges().empty());

  CHECK_THROWS_AS((void)build_ball(edge_z2(), -1), std::invalid_argument);
  auto zctx = GPContext::finite_uniform(SimpGraph({"a"}, {}), GroupSpec::cyclic(0));
  CHECK_THROWS_AS((void)build_ball(zctx, 1), std::domain_error);
}

TEST_CASE("edges are exactly the single-syllable quotients") {
  QMBall ball = build_ball(edgeless_z2(), 3);
  const auto& vs = ball.vertices();
  auto ctx = ball.ctx();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Canon q = gp_mul(ctx, gp_inv(ctx, vs[j]), vs[i]);
      bool should = q.length() == 1;
      bool has = false;
      for (const auto& pr : ball.adjacency()[i])
        if (pr.first == static_cast<int>(j)) has = true;
      CHECK(has == should);
    }
}

TEST_CASE("distance from center equals reduced syllable length") {
  std::vector<GPContext> ctxs = {single_z3(), edge_z2(), edgeless_z2()};
  for (const auto& ctx : ctxs) {
    QMBall ball = build_ball(ctx, 4);
    auto d = all_pairs_bfs(ball);
    for (std::size_t v = 0; v < ball.vertices().size(); ++v) {
      CHECK(d[0][v] == static_cast<int>(ball.vertices()[v].length()));
      CHECK(ball.distances()[v] == d[0][v]);
    }
  }
}

TEST_CASE("geodesic law for pairs within radius-1") {
  std::vector<GPContext> ctxs = {single_z3(), edge_z2(), edgeless_z2()};
  for (const auto& ctx : ctxs) {
    QMBall ball = build_ball(ctx, 4);
    auto d = all_pairs_bfs(ball);
    for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
      if (ball.distances()[i] > 3) continue;
      for (std::size_t j = 0; j < ball.vertices().size(); ++j) {
        if (ball.distances()[j] > 3) continue;
        Canon q = gp_mul(ctx, gp_inv(ctx, ball.vertices()[i]), ball.vertices()[j]);
        CHECK(d[i][j] == static_cast<int>(q.length()));
      }
    }
  }
}

TEST_CASE("hyperplanes of the canonical examples") {
  QMBall k3 = build_ball(single_z3(), 1);
  REQUIRE(k3.hyperplanes().size() == 1);
  CHECK(k3.hyperplanes()[0].edges.size() == 3);
  CHECK(!k3.hyperplanes()[0].truncated);
  auto sc = sector_count(k3, 0);
  CHECK(sc.count == 3);
  CHECK(!sc.approximate);
  CHECK(!are_transverse(k3, 0, 0));

  QMBall c4 = build_ball(edge_z2(), 2);
  REQUIRE(c4.hyperplanes().size() == 2);
  for (const auto& h : c4.hyperplanes()) {
    CHECK(h.edges.size() == 2);
    CHECK(!h.truncated);
    auto s = sector_count(c4, h.id);
    CHECK(s.count == 2);
    CHECK(!s.approximate);
  }
  CHECK(are_transverse(c4, 0, 1));
  CHECK(strongly_separated_in_ball(c4, 0, 1) == Separation::certified_true);

  // Tree ball: two isolated Z/2 vertices, radius 2; every edge is its own
  // hyperplane.
  QMBall tree = build_ball(edgeless_z2(), 2);
  CHECK(tree.hyperplanes().size() == tree.edges().size());
  for (const auto& h : tree.hyperplanes()) {
    auto s = sector_count(tree, h.id);
    CHECK(s.count == 2);
  }
  for (const auto& h1 : tree.hyperplanes())
    for (const auto& h2 : tree.hyperplanes()) CHECK(!are_transverse(tree, h1.id, h2.id));

  // The two untruncated hyperplanes at the center are certified strongly
  // separated; no square can appear near interior edges.
  int e1 = -1, e2 = -1;
  for (const auto& h : tree.hyperplanes()) {
    bool at_center = false;
    for (int e : h.edges)
      if (tree.edges()[static_cast<std::size_t>(e)].u == 0) at_center = true;
    if (!at_center) continue;
    (e1 == -1 ? e1 : e2) = h.id;
  }
  REQUIRE(e2 != -1);
  CHECK(!tree.hyperplanes()[static_cast<std::size_t>(e1)].truncated);
  CHECK(strongly_separated_in_ball(tree, e1, e2) == Separation::certified_true);
}

TEST_CASE("truncated inputs give inconclusive separation") {
  // Radius-1 ball of Z/2 x Z/2: both edges continue into the unseen square.
  QMBall b1 = build_ball(edge_z2(), 1);
  REQUIRE(b1.hyperplanes().size() == 2);
  CHECK(b1.hyperplanes()[0].truncated);
  CHECK(strongly_separated_in_ball(b1, 0, 1) == Separation::inconclusive);
}

TEST_CASE("every untruncated hyperplane separates into at least two sectors") {
  std::vector<GPContext> ctxs = {single_z3(), edge_z2(), edgeless_z2()};
  for (const auto& ctx : ctxs)
    for (int r = 1; r <= 4; ++r) {
      QMBall ball = build_ball(ctx, r);
      for (const auto& h : ball.hyperplanes())
        if (!h.truncated) CHECK(sector_count(ball, h.id).count >= 2);
    }
}

TEST_CASE("left multiplication maps hyperplane classes into the larger ball") {
  std::vector<GPContext> ctxs = {edge_z2(), edgeless_z2(), single_z3()};
  for (const auto& ctx : ctxs) {
    QMBall small = build_ball(ctx, 2);
    QMBall big = build_ball(ctx, 3);
    std::vector<Canon> gens{Canon{}};
    {
      QMBall b1 = build_ball(ctx, 1);
      for (const auto& v : b1.vertices()) gens.push_back(v);
    }
    for (const auto& g : gens) {
      // Image hyperplane id must be constant over each small-ball class.
      for (const auto& h : small.hyperplanes()) {
        int image_hyp = -2;
        for (int e : h.edges) {
          const auto& edge = small.edges()[static_cast<std::size_t>(e)];
          Canon gu = gp_mul(ctx, g, small.vertices()[static_cast<std::size_t>(edge.u)]);
          Canon gv = gp_mul(ctx, g, small.vertices()[static_cast<std::size_t>(edge.v)]);
          int iu = big.index_of(gu), iv = big.index_of(gv);
          REQUIRE(iu >= 0);
          REQUIRE(iv >= 0);
          int found = -1;
          for (const auto& pr : big.adjacency()[static_cast<std::size_t>(iu)])
            if (pr.first == iv) found = big.edges()[static_cast<std::size_t>(pr.second)].hyperplane;
          REQUIRE(found >= 0);
          if (image_hyp == -2)
            image_hyp = found;
          else
            CHECK(image_hyp == found);
        }
      }
    }
  }
}

TEST_CASE("dot export is deterministic and complete") {
  QMBall k3 = build_ball(single_z3(), 1);
  std::string dot = export_dot(k3, {0});
  CHECK(dot == export_dot(k3, {0}));
  CHECK(dot.find("digraph QM") == 0);
  CHECK(dot.find("\"1\"") != std::string::npos);
  CHECK(dot.find("u^1") != std::string::npos);
  CHECK(dot.find("penwidth=3") != std::string::npos);
  // one colour for the single hyperplane
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("color=blue") == std::string::npos);

  QMBall c4 = build_ball(edge_z2(), 2);
  std::string dot2 = export_dot(c4);
  CHECK(dot2.find("color=red") != std::string::npos);
  CHECK(dot2.find("color=blue") != std::string::npos);

  QMBall point = build_ball(edge_z2(), 0);
  std::string dot3 = export_dot(point);
  CHECK(dot3.find("\"1\"") != std::string::npos);
}

TEST_CASE("windowed balls of lazy contexts") {
  LazyCayley line(GroupSpec::cyclic(0), {GroupElem::integer(1)});
  auto ctx = GPContext::lazy(line, GroupSpec::cyclic(2));
  std::vector<GroupElem> window;
  for (int p = -2; p <= 2; ++p) window.push_back(GroupElem::integer(p));
  QMBall ball = build_ball(ctx, 2, window);
  // Matches the ball of the restricted finite context vertex-for-vertex.
  QMBall fin = build_ball(ctx.restrict_to(window), 2);
  CHECK(ball.vertices().size() == fin.vertices().size());
  CHECK(ball.edges().size() == fin.edges().size());
  CHECK(ball.squares().size() == fin.squares().size());
  CHECK(ball.hyperplanes().size() == fin.hyperplanes().size());
  CHECK_THROWS_AS((void)build_ball(ctx, 2), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("qmgraph") {

TEST_CASE("prism ball mixes triangle and square relations") {
  // Edge u--v with Z/2 and Z/3: the whole group is a triangular prism.
  auto ctx = GPContext::finite(SimpGraph({"u", "v"}, {{"u", "v"}}),
                               {GroupSpec::cyclic(2), GroupSpec::cyclic(3)});
  QMBall ball = build_ball(ctx, 2);
  CHECK(ball.vertices().size() == 6);
  CHECK(ball.edges().size() == 9);
  REQUIRE(ball.hyperplanes().size() == 2);
  for (const auto& h : ball.hyperplanes()) {
    CHECK(!h.truncated);
    auto sc = sector_count(ball, h.id);
    if (h.edges.size() == 3) CHECK(sc.count == 2);  // the u-class
    if (h.edges.size() == 6) CHECK(sc.count == 3);  // the v-class
  }
  CHECK(are_transverse(ball, 0, 1));
  CHECK(strongly_separated_in_ball(ball, 0, 1) == Separation::certified_true);
}

TEST_CASE("truncated crossing candidates force inconclusive separation") {
  // Path a--b--c--d of Z/2's, radius 3: the hyperplanes of the a-edge and
  // the d-edge at the identity are untruncated and share no visible
  // crossing, but the c-class crossing the d-side reaches the boundary, so
  // the ball cannot certify strong separation.
  auto ctx = GPContext::finite_uniform(
      SimpGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}), GroupSpec::cyclic(2));
  QMBall ball = build_ball(ctx, 3);
  auto hyp_of_center_edge = [&](int vertex_index) {
    for (const auto& e : ball.edges())
      if (e.u == 0 && e.vertex == VertexRef::finite(vertex_index)) return e.hyperplane;
    return -1;
  };
  int ha = hyp_of_center_edge(0);
  int hd = hyp_of_center_edge(3);
  REQUIRE(ha >= 0);
  REQUIRE(hd >= 0);
  CHECK(!ball.hyperplanes()[static_cast<std::size_t>(ha)].truncated);
  CHECK(!ball.hyperplanes()[static_cast<std::size_t>(hd)].truncated);
  for (const auto& h : ball.hyperplanes())
    CHECK(!(are_transverse(ball, h.id, ha) && are_transverse(ball, h.id, hd)));
  CHECK(strongly_separated_in_ball(ball, ha, hd) == Separation::inconclusive);
}

}  // TEST_SUITE
