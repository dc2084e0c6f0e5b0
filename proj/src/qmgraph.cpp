#include "wf/qmgraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wf {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void merge(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::string payload_label(const GroupElem& e) {
  if (e.is_int()) return std::to_string(e.as_int());
  if (e.is_vec()) {
    std::string s = "(";
    const auto& v = e.as_vec();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s + ")";
  }
  std::string s;
  const auto& w = e.as_word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += "z" + std::to_string(w[i].factor) + "^" + std::to_string(w[i].val);
  }
  return s.empty() ? "1" : s;
}

std::string vertex_label(const GPContext& ctx, const VertexRef& u) {
  if (u.is_finite()) return ctx.graph().name(u.index());
  return enc_key(ctx.cayley().base(), u.elem());
}

}  // namespace

std::string display_word(const GPContext& ctx, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += vertex_label(ctx, w[i].vertex) + "^" + payload_label(w[i].elem);
  }
  return s;
}

int QMBall::index_of(const Canon& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

QMBall build_ball_impl(const GPContext& ctx, int radius, const std::vector<GroupElem>* window) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  if (ctx.is_lazy() && !window)
    throw std::invalid_argument("ball of a lazy context needs a position window");

  // Generator syllables, in deterministic vertex-then-element order.
  std::vector<Syllable> gens;
  if (ctx.is_lazy()) {
    const GroupSpec& spec = ctx.vertex_spec(VertexRef::lazy(identity(ctx.cayley().base())));
    if (!spec.is_finite()) throw std::domain_error("infinite vertex group");
    std::vector<GroupElem> positions;
    for (const auto& p : *window) positions.push_back(canonical(ctx.cayley().base(), p));
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    for (const auto& p : positions)
      for (const auto& e : nontrivial_elems(spec)) gens.push_back(Syllable{VertexRef::lazy(p), e});
  } else {
    for (int u = 0; u < ctx.graph().order(); ++u) {
      const GroupSpec& spec = ctx.vertex_spec(VertexRef::finite(u));
      if (!spec.is_finite()) throw std::domain_error("infinite vertex group");
      for (const auto& e : nontrivial_elems(spec)) gens.push_back(Syllable{VertexRef::finite(u), e});
    }
  }

  QMBall ball(ctx);
  ball.radius_ = radius;
  ball.verts_.push_back(Canon{});
  ball.index_[Canon{}] = 0;
  ball.dist_.push_back(0);
  ball.cut_.push_back(false);
  std::map<std::pair<int, int>, int> edge_index;

  for (std::size_t head = 0; head < ball.verts_.size(); ++head) {
    Canon x = ball.verts_[head];  // copy: verts_ grows below
    int dx = ball.dist_[head];
    for (const auto& s : gens) {
      Canon y = gp_mul(ctx, x, canonicalize(ctx, Word{s}));
      auto it = ball.index_.find(y);
      int iy;
      if (it == ball.index_.end()) {
        if (dx + 1 > radius) {
          ball.cut_[head] = true;  // unexplored neighbour beyond the ball
          continue;
        }
        iy = static_cast<int>(ball.verts_.size());
        ball.index_[y] = iy;
        ball.verts_.push_back(y);
        ball.dist_.push_back(dx + 1);
        ball.cut_.push_back(false);
      } else {
        iy = it->second;
      }
      int a = static_cast<int>(head), b = iy;
      Syllable lab = s;
      if (a == b) continue;
      if (a > b) {
        std::swap(a, b);
        lab.elem = inv(ctx.vertex_spec(s.vertex), s.elem);
      }
      if (edge_index.emplace(std::make_pair(a, b), static_cast<int>(ball.edges_.size())).second)
        ball.edges_.push_back(QMEdge{a, b, lab.vertex, lab.elem, -1});
    }
  }

  ball.adj_.assign(ball.verts_.size(), {});
  for (std::size_t e = 0; e < ball.edges_.size(); ++e) {
    ball.adj_[static_cast<std::size_t>(ball.edges_[e].u)].emplace_back(ball.edges_[e].v, static_cast<int>(e));
    ball.adj_[static_cast<std::size_t>(ball.edges_[e].v)].emplace_back(ball.edges_[e].u, static_cast<int>(e));
  }

  auto adjacent = [&](int a, int b) {
    return edge_index.count(std::make_pair(std::min(a, b), std::max(a, b))) > 0;
  };
  auto edge_id = [&](int a, int b) { return edge_index.at(std::make_pair(std::min(a, b), std::max(a, b))); };

  const int n = static_cast<int>(ball.verts_.size());
  // Triangles: 3-cliques.
  for (const auto& e : ball.edges_)
    for (int w = e.v + 1; w < n; ++w)
      if (adjacent(e.u, w) && adjacent(e.v, w))
        ball.tris_.push_back({e.u, e.v, w});

  // Squares: induced 4-cycles, keyed by the diagonal pair containing the
  // smallest vertex.
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      if (adjacent(u, w)) continue;
      std::vector<int> common;
      for (const auto& pr : ball.adj_[static_cast<std::size_t>(u)])
        if (pr.first > u && adjacent(pr.first, w)) common.push_back(pr.first);
      std::sort(common.begin(), common.end());
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          int b = common[i], d = common[j];
          if (adjacent(b, d)) continue;
          QMSquare sq;
          sq.verts = {u, b, w, d};
          sq.edges = {edge_id(u, b), edge_id(b, w), edge_id(w, d), edge_id(d, u)};
          ball.squares_.push_back(sq);
        }
    }

  // Hyperplanes: union-find with the two generating relations.
  UnionFind uf(ball.edges_.size());
  for (const auto& t : ball.tris_) {
    uf.merge(edge_id(t[0], t[1]), edge_id(t[0], t[2]));
    uf.merge(edge_id(t[0], t[1]), edge_id(t[1], t[2]));
  }
  for (const auto& sq : ball.squares_) {
    uf.merge(sq.edges[0], sq.edges[2]);
    uf.merge(sq.edges[1], sq.edges[3]);
  }
  std::map<int, int> root_to_id;
  for (std::size_t e = 0; e < ball.edges_.size(); ++e) {
    int r = uf.find(static_cast<int>(e));
    auto [it, fresh] = root_to_id.emplace(r, static_cast<int>(ball.hyps_.size()));
    if (fresh) {
      Hyperplane h;
      h.id = it->second;
      ball.hyps_.push_back(h);
    }
    ball.edges_[e].hyperplane = it->second;
    ball.hyps_[static_cast<std::size_t>(it->second)].edges.push_back(static_cast<int>(e));
  }
  for (auto& h : ball.hyps_) {
    std::set<int> carrier;
    for (int e : h.edges) {
      carrier.insert(ball.edges_[static_cast<std::size_t>(e)].u);
      carrier.insert(ball.edges_[static_cast<std::size_t>(e)].v);
    }
    h.carrier.assign(carrier.begin(), carrier.end());
    h.truncated = false;
    for (int v : h.carrier)
      if (ball.cut_[static_cast<std::size_t>(v)]) h.truncated = true;
  }
  for (auto& sq : ball.squares_) {
    sq.hyp02 = ball.edges_[static_cast<std::size_t>(sq.edges[0])].hyperplane;
    sq.hyp13 = ball.edges_[static_cast<std::size_t>(sq.edges[1])].hyperplane;
  }
  return ball;
}

QMBall build_ball(const GPContext& ctx, int radius) { return build_ball_impl(ctx, radius, nullptr); }

QMBall build_ball(const GPContext& ctx, int radius, const std::vector<GroupElem>& window) {
  return build_ball_impl(ctx, radius, &window);
}

SectorCount sector_count(const QMBall& ball, int hyp) {
  if (hyp < 0 || hyp >= static_cast<int>(ball.hyperplanes().size()))
    throw std::invalid_argument("unknown hyperplane");
  const Hyperplane& h = ball.hyperplanes()[static_cast<std::size_t>(hyp)];
  std::set<int> removed(h.edges.begin(), h.edges.end());
  std::vector<int> comp(ball.vertices().size(), -1);
  int ncomp = 0;
  for (std::size_t start = 0; start < ball.vertices().size(); ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> stack{static_cast<int>(start)};
    comp[start] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [nb, eid] : ball.adjacency()[static_cast<std::size_t>(v)]) {
        if (removed.count(eid)) continue;
        if (comp[static_cast<std::size_t>(nb)] == -1) {
          comp[static_cast<std::size_t>(nb)] = ncomp;
          stack.push_back(nb);
        }
      }
    }
    ++ncomp;
  }
  std::set<int> sectors;
  for (int v : h.carrier) sectors.insert(comp[static_cast<std::size_t>(v)]);
  return SectorCount{static_cast<int>(sectors.size()), h.truncated};
}

bool are_transverse(const QMBall& ball, int h1, int h2) {
  if (h1 == h2) return false;
  for (const auto& sq : ball.squares()) {
    if ((sq.hyp02 == h1 && sq.hyp13 == h2) || (sq.hyp02 == h2 && sq.hyp13 == h1)) return true;
  }
  return false;
}

Separation strongly_separated_in_ball(const QMBall& ball, int h1, int h2) {
  const auto& hyps = ball.hyperplanes();
  if (h1 < 0 || h2 < 0 || h1 >= static_cast<int>(hyps.size()) || h2 >= static_cast<int>(hyps.size()))
    throw std::invalid_argument("unknown hyperplane");
  for (const auto& h : hyps)
    if (are_transverse(ball, h.id, h1) && are_transverse(ball, h.id, h2)) return Separation::no;
  if (hyps[static_cast<std::size_t>(h1)].truncated || hyps[static_cast<std::size_t>(h2)].truncated)
    return Separation::inconclusive;
  // A truncated class transverse to one input might merge, outside the ball,
  // with a class transverse to the other.
  for (const auto& h : hyps)
    if (h.truncated && (are_transverse(ball, h.id, h1) || are_transverse(ball, h.id, h2)))
      return Separation::inconclusive;
  return Separation::certified_true;
}

std::string export_dot(const QMBall& ball, const std::vector<int>& highlight) {
  static const char* palette[] = {"red",    "blue",   "green",  "orange", "purple",
                                  "brown",  "cyan",   "magenta", "olive",  "navy"};
  const std::size_t npal = sizeof(palette) / sizeof(palette[0]);
  std::string out = "digraph QM {\n  node [shape=circle fontsize=10];\n  edge [dir=none];\n";
  for (std::size_t v = 0; v < ball.vertices().size(); ++v)
    out += "  \"" + display_word(ball.ctx(), ball.vertices()[v].word()) + "\";\n";
  for (const auto& e : ball.edges()) {
    std::string color = palette[static_cast<std::size_t>(e.hyperplane) % npal];
    bool bold = std::find(highlight.begin(), highlight.end(), e.hyperplane) != highlight.end();
    out += "  \"" + display_word(ball.ctx(), ball.vertices()[static_cast<std::size_t>(e.u)].word()) +
           "\" -> \"" + display_word(ball.ctx(), ball.vertices()[static_cast<std::size_t>(e.v)].word()) +
           "\" [color=" + color + (bold ? " penwidth=3" : "") + " label=\"h" +
           std::to_string(e.hyperplane) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace wf
