#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "wf/sgraph.hpp"

namespace wf {

// A vertex of the underlying graph: an index into a finite SimpGraph, or an
// element of B for the lazy Cayley graph Gamma_S.
struct VertexRef {
  std::variant<std::int32_t, GroupElem> v;
  VertexRef() : v(std::int32_t{0}) {}
  static VertexRef finite(std::int32_t i) {
    VertexRef r;
    r.v = i;
    return r;
  }
  static VertexRef lazy(GroupElem b) {
    VertexRef r;
    r.v = std::move(b);
    return r;
  }
  bool is_finite() const { return std::holds_alternative<std::int32_t>(v); }
  std::int32_t index() const { return std::get<std::int32_t>(v); }
  const GroupElem& elem() const { return std::get<GroupElem>(v); }
  bool operator==(const VertexRef&) const = default;
  auto operator<=>(const VertexRef&) const = default;
};

struct Syllable {
  VertexRef vertex;
  GroupElem elem;
  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

// A word is a sequence of syllables carrying nontrivial vertex-group
// elements.
using Word = std::vector<Syllable>;

// Graph-product context: a finite simplicial graph with one validated spec
// per vertex, or a lazy Cayley graph with a uniform spec.
class GPContext {
 public:
  static GPContext finite(SimpGraph g, std::vector<GroupSpec> specs);
  static GPContext finite_uniform(SimpGraph g, GroupSpec spec);
  static GPContext lazy(LazyCayley cayley, GroupSpec uniform);

  bool is_lazy() const { return lazy_ != nullptr; }
  const SimpGraph& graph() const;
  const LazyCayley& cayley() const;
  const GroupSpec& vertex_spec(const VertexRef& u) const;

  bool adjacent(const VertexRef& u, const VertexRef& w) const;
  void check_vertex(const VertexRef& u) const;  // throws std::invalid_argument

  // Induced finite context on the given B-elements of a lazy context.
  // Vertex names are the enc_key encodings, in the given order.
  GPContext restrict_to(const std::vector<GroupElem>& verts) const;

 private:
  GPContext() = default;
  std::shared_ptr<const SimpGraph> graph_;
  std::vector<GroupSpec> specs_;  // per vertex, or single uniform entry
  bool uniform_ = false;
  std::shared_ptr<const LazyCayley> lazy_;
};

// A graphically reduced word that is lexicographically least among all
// reduced representatives of its group element. Two Canons are equal iff the
// group elements are equal. The default value is the identity.
class Canon {
 public:
  Canon() = default;
  const Word& word() const { return w_; }
  std::size_t length() const { return w_.size(); }
  bool empty() const { return w_.empty(); }
  bool operator==(const Canon&) const = default;
  auto operator<=>(const Canon&) const = default;

 private:
  friend Canon canonicalize(const GPContext&, const Word&);
  explicit Canon(Word w) : w_(std::move(w)) {}
  Word w_;
};

// Graphical reduction of the product w*h for reduced w, by the four cases:
// identity syllable dropped, cancelling right-shuffling syllable deleted,
// mergeable right-shuffling syllable merged at the end, otherwise appended.
Word reduce_push(const GPContext& ctx, Word w, const Syllable& h);

// Left-to-right reduction followed by the greedy lexicographically-least
// shuffle, under the total syllable order (vertex, element payload).
Canon canonicalize(const GPContext& ctx, const Word& w);

Canon gp_mul(const GPContext& ctx, const Canon& u, const Canon& v);
Canon gp_inv(const GPContext& ctx, const Canon& u);
Canon gp_pow(const GPContext& ctx, const Canon& u, std::int64_t n);

// g = conjugator * core * conjugator^{-1} with core graphically cyclically
// reduced; rotation_min is the lexicographic minimum of the core's closure
// under cyclic permutations, shuffles, and vertex-group conjugation of
// syllables commuting with the rest of the core (the conjugacy class key).
struct CyclicCanon {
  Canon conjugator;
  Canon core;
  Canon rotation_min;
};

CyclicCanon cyclic_reduce(const GPContext& ctx, const Canon& g);

// Vertices of the cyclically reduced core, sorted.
std::vector<VertexRef> essential_support(const GPContext& ctx, const Canon& g);

// Essential support has >= 2 vertices and is not contained in a join of the
// graph. Finite contexts only.
bool is_irreducible(const GPContext& ctx, const Canon& g);

// Lexicographic minimum of the conjugacy-move closure of the cyclically
// reduced core.
Canon cyclic_canon(const GPContext& ctx, const Canon& g);
bool is_conjugate(const GPContext& ctx, const Canon& g, const Canon& h);

// Union of essential supports over all products of at most `depth`
// generators and inverses; a monotone lower bound for the support of the
// generated subgroup.
std::vector<VertexRef> support_of_generated_bounded(const GPContext& ctx,
                                                    const std::vector<Canon>& gens,
                                                    int depth);

}  // namespace wf
