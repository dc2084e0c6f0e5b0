#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wf/graphprod.hpp"

namespace wf {

struct QMEdge {
  int u = 0, v = 0;  // vertex indices with u < v; verts[v] = verts[u] * (vertex, elem)
  VertexRef vertex;
  GroupElem elem;
  int hyperplane = -1;
};

// A class of edges under "opposite in an induced square or in a common
// triangle", with its carrier and a truncation flag: truncated hyperplanes
// may continue beyond the ball, so certificates about them stay pessimistic.
struct Hyperplane {
  int id = 0;
  std::vector<int> edges;
  std::vector<int> carrier;
  bool truncated = false;
};

struct QMSquare {
  std::array<int, 4> verts;  // cycle order: verts[0]-verts[1]-verts[2]-verts[3]
  std::array<int, 4> edges;  // edges[i] joins verts[i], verts[(i+1)%4]; 0/2 and 1/3 are opposite
  int hyp02 = -1, hyp13 = -1;
};

struct SectorCount {
  int count = 0;
  bool approximate = false;
};

enum class Separation { certified_true, no, inconclusive };

// A radius-r ball of QM(Gamma, G) around the identity, with its triangle and
// square registries and hyperplane partition.
class QMBall {
 public:
  const GPContext& ctx() const { return ctx_; }
  int radius() const { return radius_; }
  Canon center() const { return Canon{}; }
  const std::vector<Canon>& vertices() const { return verts_; }
  const std::vector<int>& distances() const { return dist_; }
  const std::vector<QMEdge>& edges() const { return edges_; }
  const std::vector<std::array<int, 3>>& triangles() const { return tris_; }
  const std::vector<QMSquare>& squares() const { return squares_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyps_; }
  const std::vector<std::vector<std::pair<int, int>>>& adjacency() const { return adj_; }
  bool is_cut_vertex(int v) const { return cut_[static_cast<std::size_t>(v)]; }
  int index_of(const Canon& v) const;  // -1 when outside the ball

 private:
  friend QMBall build_ball_impl(const GPContext&, int, const std::vector<GroupElem>*);
  explicit QMBall(GPContext ctx) : ctx_(std::move(ctx)) {}
  GPContext ctx_;
  int radius_ = 0;
  std::vector<Canon> verts_;
  std::map<Canon, int> index_;
  std::vector<int> dist_;
  std::vector<bool> cut_;
  std::vector<QMEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // vertex -> (neighbor, edge id)
  std::vector<std::array<int, 3>> tris_;
  std::vector<QMSquare> squares_;
  std::vector<Hyperplane> hyps_;
};

// BFS ball over the generator set  U_u G_u \ {1}.  All vertex groups must be
// finite and the radius nonnegative.
QMBall build_ball(const GPContext& ctx, int radius);

// Ball of a lazy context with generator positions limited to `window`:
// equivalently, the ball of the window-restricted finite context.
QMBall build_ball(const GPContext& ctx, int radius, const std::vector<GroupElem>& window);

// Connected components of (ball minus the hyperplane's edges) that meet the
// hyperplane's carrier. Approximate when the hyperplane is ball-truncated.
SectorCount sector_count(const QMBall& ball, int hyp);

// Whether some induced square crosses h1 and h2 along its two opposite-edge
// pairs.
bool are_transverse(const QMBall& ball, int h1, int h2);

// certified_true only when no ball hyperplane is transverse to both and
// neither input nor any truncated near-candidate could spoil it outside the
// ball.
Separation strongly_separated_in_ball(const QMBall& ball, int h1, int h2);

// DOT text with hyperplane classes coloured; highlighted ids are drawn bold.
std::string export_dot(const QMBall& ball, const std::vector<int>& highlight = {});

// Human-readable name of a word, e.g. "a^1*b^2"; "1" for the identity.
std::string display_word(const GPContext& ctx, const Word& w);

}  // namespace wf
