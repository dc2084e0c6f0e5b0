#include "wf/graphprod.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wf {

GPContext GPContext::finite(SimpGraph g, std::vector<GroupSpec> specs) {
  if (static_cast<int>(specs.size()) != g.order())
    throw std::invalid_argument("one spec per vertex required");
  for (const auto& s : specs)
    if (auto diag = validate_spec(s)) throw std::invalid_argument("invalid vertex spec: " + *diag);
  GPContext ctx;
  ctx.graph_ = std::make_shared<SimpGraph>(std::move(g));
  ctx.specs_ = std::move(specs);
  return ctx;
}

GPContext GPContext::finite_uniform(SimpGraph g, GroupSpec spec) {
  std::vector<GroupSpec> specs(static_cast<std::size_t>(g.order()), spec);
  return finite(std::move(g), std::move(specs));
}

GPContext GPContext::lazy(LazyCayley cayley, GroupSpec uniform) {
  if (auto diag = validate_spec(uniform)) throw std::invalid_argument("invalid vertex spec: " + *diag);
  GPContext ctx;
  ctx.lazy_ = std::make_shared<LazyCayley>(std::move(cayley));
  ctx.specs_ = {std::move(uniform)};
  ctx.uniform_ = true;
  return ctx;
}

const SimpGraph& GPContext::graph() const {
  if (!graph_) throw std::invalid_argument("lazy context has no finite graph");
  return *graph_;
}

const LazyCayley& GPContext::cayley() const {
  if (!lazy_) throw std::invalid_argument("finite context has no Cayley graph");
  return *lazy_;
}

const GroupSpec& GPContext::vertex_spec(const VertexRef& u) const {
  check_vertex(u);
  if (uniform_ || is_lazy()) return specs_[0];
  return specs_[static_cast<std::size_t>(u.index())];
}

void GPContext::check_vertex(const VertexRef& u) const {
  if (is_lazy()) {
    if (u.is_finite()) throw std::invalid_argument("finite vertex used in lazy context");
  } else {
    if (!u.is_finite() || u.index() < 0 || u.index() >= graph_->order())
      throw std::invalid_argument("vertex not in graph");
  }
}

bool GPContext::adjacent(const VertexRef& u, const VertexRef& w) const {
  if (is_lazy()) return lazy_->adjacent(u.elem(), w.elem());
  return graph_->adjacent(u.index(), w.index());
}

GPContext GPContext::restrict_to(const std::vector<GroupElem>& verts) const {
  if (!is_lazy()) throw std::invalid_argument("restrict_to applies to lazy contexts");
  std::vector<std::string> names;
  names.reserve(verts.size());
  std::vector<GroupElem> canon;
  for (const auto& v : verts) {
    canon.push_back(canonical(lazy_->base(), v));
    names.push_back(enc_key(lazy_->base(), canon.back()));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < canon.size(); ++i)
    for (std::size_t j = i + 1; j < canon.size(); ++j)
      if (lazy_->adjacent(canon[i], canon[j])) edges.emplace_back(names[i], names[j]);
  return finite_uniform(SimpGraph(std::move(names), edges), specs_[0]);
}

Word reduce_push(const GPContext& ctx, Word w, const Syllable& h) {
  ctx.check_vertex(h.vertex);
  const GroupSpec& spec = ctx.vertex_spec(h.vertex);
  GroupElem e = canonical(spec, h.elem);
  if (e == identity(spec)) return w;

  // Scan right-to-left for the unique syllable of h's vertex group that
  // shuffles to the right; stop at the first non-adjacent vertex.
  int found = -1;
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    const auto& v = w[static_cast<std::size_t>(i)].vertex;
    if (v == h.vertex) {
      found = i;
      break;
    }
    if (!ctx.adjacent(v, h.vertex)) break;
  }
  if (found >= 0) {
    GroupElem merged = mul(spec, w[static_cast<std::size_t>(found)].elem, e);
    w.erase(w.begin() + found);
    if (!(merged == identity(spec))) w.push_back(Syllable{h.vertex, std::move(merged)});
    return w;
  }
  w.push_back(Syllable{h.vertex, std::move(e)});
  return w;
}

namespace {

Word reduce_word(const GPContext& ctx, const Word& w) {
  Word r;
  for (const auto& s : w) r = reduce_push(ctx, r, s);
  return r;
}

// Greedy lexicographically-least shuffle of a reduced word: repeatedly emit
// the least syllable whose vertex commutes with everything before it.
Word lex_least_shuffle(const GPContext& ctx, Word r) {
  Word out;
  out.reserve(r.size());
  while (!r.empty()) {
    std::size_t best = 0;
    bool have = false;
    for (std::size_t i = 0; i < r.size(); ++i) {
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j)
        if (!ctx.adjacent(r[j].vertex, r[i].vertex)) front = false;
      if (!front) continue;
      if (!have || r[i] < r[best]) {
        best = i;
        have = true;
      }
    }
    out.push_back(r[best]);
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Word inv_word(const GPContext& ctx, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Syllable{it->vertex, inv(ctx.vertex_spec(it->vertex), it->elem)});
  return out;
}

bool shuffles_left(const GPContext& ctx, const Word& w, std::size_t i) {
  for (std::size_t k = 0; k < i; ++k)
    if (!ctx.adjacent(w[k].vertex, w[i].vertex)) return false;
  return true;
}

bool shuffles_right(const GPContext& ctx, const Word& w, std::size_t j) {
  for (std::size_t k = j + 1; k < w.size(); ++k)
    if (!ctx.adjacent(w[k].vertex, w[j].vertex)) return false;
  return true;
}

// Core of the cyclic reduction loop, without the rotation closure.
void cyclic_reduce_xy(const GPContext& ctx, const Canon& g, Word& x, Word& y) {
  x.clear();
  y = g.word();
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < y.size() && !moved; ++i) {
      if (!shuffles_left(ctx, y, i)) continue;
      for (std::size_t j = i + 1; j < y.size() && !moved; ++j) {
        if (y[j].vertex != y[i].vertex) continue;
        if (!shuffles_right(ctx, y, j)) continue;
        // y = y_i * rest * y_j, so conjugating by y_i^{-1} leaves
        // rest * (y_j y_i).
        Syllable front = y[i];
        Syllable back = y[j];
        Word rest;
        rest.reserve(y.size() - 2);
        for (std::size_t k = 0; k < y.size(); ++k)
          if (k != i && k != j) rest.push_back(y[k]);
        Word next = reduce_word(ctx, rest);
        next = reduce_push(ctx, std::move(next),
                           Syllable{back.vertex, mul(ctx.vertex_spec(back.vertex), back.elem, front.elem)});
        x = reduce_push(ctx, std::move(x), front);
        y = std::move(next);
        moved = true;
      }
    }
    if (!moved) break;
  }
}

// Conjugation successors of a cyclically reduced word: any syllable that
// shuffles to the front may be moved to the back (a cyclic permutation),
// and a syllable whose vertex is adjacent to every other syllable's vertex
// commutes with the rest of the core, so conjugating it inside its own
// vertex group is a conjugation of the whole element; such syllables are
// normalized to their vertex-group class representative.
std::vector<Canon> conjugacy_moves(const GPContext& ctx, const Word& y) {
  std::vector<Canon> out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!shuffles_left(ctx, y, i)) continue;
    Word rot;
    rot.reserve(y.size());
    for (std::size_t k = 0; k < y.size(); ++k)
      if (k != i) rot.push_back(y[k]);
    rot.push_back(y[i]);
    out.push_back(canonicalize(ctx, rot));
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    bool dominating = true;
    for (std::size_t k = 0; k < y.size() && dominating; ++k)
      if (k != i && !ctx.adjacent(y[k].vertex, y[i].vertex)) dominating = false;
    if (!dominating) continue;
    GroupElem rep = conj_canonical(ctx.vertex_spec(y[i].vertex), y[i].elem);
    if (rep == y[i].elem) continue;
    Word w = y;
    w[i].elem = std::move(rep);
    out.push_back(canonicalize(ctx, w));
  }
  return out;
}

Canon conjugacy_closure_min(const GPContext& ctx, const Canon& core) {
  std::set<Canon> seen{core};
  std::vector<Canon> queue{core};
  while (!queue.empty()) {
    Canon w = std::move(queue.back());
    queue.pop_back();
    for (auto& r : conjugacy_moves(ctx, w.word()))
      if (seen.insert(r).second) queue.push_back(r);
  }
  return *seen.begin();
}

}  // namespace

Canon canonicalize(const GPContext& ctx, const Word& w) {
  Word r;
  for (const auto& s : w) {
    ctx.check_vertex(s.vertex);
    r = reduce_push(ctx, std::move(r), s);
  }
  return Canon(lex_least_shuffle(ctx, std::move(r)));
}

Canon gp_mul(const GPContext& ctx, const Canon& u, const Canon& v) {
  Word w = u.word();
  for (const auto& s : v.word()) w = reduce_push(ctx, std::move(w), s);
  return canonicalize(ctx, w);
}

Canon gp_inv(const GPContext& ctx, const Canon& u) {
  // The reverse of a reduced word with inverted syllables is reduced.
  return canonicalize(ctx, inv_word(ctx, u.word()));
}

Canon gp_pow(const GPContext& ctx, const Canon& u, std::int64_t n) {
  Canon base = n < 0 ? gp_inv(ctx, u) : u;
  std::int64_t k = n < 0 ? -n : n;
  Canon acc;
  while (k > 0) {
    if (k & 1) acc = gp_mul(ctx, acc, base);
    base = gp_mul(ctx, base, base);
    k >>= 1;
  }
  return acc;
}

CyclicCanon cyclic_reduce(const GPContext& ctx, const Canon& g) {
  Word x, y;
  cyclic_reduce_xy(ctx, g, x, y);
  CyclicCanon out;
  out.conjugator = canonicalize(ctx, x);
  out.core = canonicalize(ctx, y);
  out.rotation_min = conjugacy_closure_min(ctx, out.core);
  return out;
}

std::vector<VertexRef> essential_support(const GPContext& ctx, const Canon& g) {
  Word x, y;
  cyclic_reduce_xy(ctx, g, x, y);
  std::set<VertexRef> verts;
  for (const auto& s : y) verts.insert(s.vertex);
  return {verts.begin(), verts.end()};
}

bool is_irreducible(const GPContext& ctx, const Canon& g) {
  if (ctx.is_lazy())
    throw std::invalid_argument("is_irreducible needs a finite graph; restrict the lazy context first");
  auto supp = essential_support(ctx, g);
  if (supp.size() < 2) return false;
  std::vector<int> vs;
  vs.reserve(supp.size());
  for (const auto& v : supp) vs.push_back(v.index());
  // Contained in a join iff the induced support is a join or some outside
  // vertex is adjacent to all of the support.
  if (is_join(ctx.graph().induced(vs))) return false;
  for (int u = 0; u < ctx.graph().order(); ++u) {
    if (std::find(vs.begin(), vs.end(), u) != vs.end()) continue;
    bool dominates = true;
    for (int v : vs)
      if (!ctx.graph().adjacent(u, v)) {
        dominates = false;
        break;
      }
    if (dominates) return false;
  }
  return true;
}

Canon cyclic_canon(const GPContext& ctx, const Canon& g) {
  return cyclic_reduce(ctx, g).rotation_min;
}

bool is_conjugate(const GPContext& ctx, const Canon& g, const Canon& h) {
  return cyclic_canon(ctx, g) == cyclic_canon(ctx, h);
}

std::vector<VertexRef> support_of_generated_bounded(const GPContext& ctx,
                                                    const std::vector<Canon>& gens,
                                                    int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  std::vector<Canon> step{Canon{}};
  std::set<Canon> seen{Canon{}};
  std::vector<Canon> moves;
  for (const auto& g : gens) {
    moves.push_back(g);
    moves.push_back(gp_inv(ctx, g));
  }
  std::set<VertexRef> support;
  for (int d = 0; d < depth; ++d) {
    std::vector<Canon> next;
    for (const auto& w : step)
      for (const auto& m : moves) {
        Canon p = gp_mul(ctx, w, m);
        if (!seen.insert(p).second) continue;
        for (const auto& v : essential_support(ctx, p)) support.insert(v);
        next.push_back(std::move(p));
      }
    step = std::move(next);
    if (step.empty()) break;
  }
  return {support.begin(), support.end()};
}

}  // namespace wf
