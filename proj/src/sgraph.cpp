#include "wf/sgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace wf {

SimpGraph::SimpGraph(std::vector<std::string> names,
                     const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate vertex name: " + names_[i]);
  adj_.assign(names_.size(), std::vector<bool>(names_.size(), false));
  for (const auto& [a, b] : edges) {
    auto u = index_of(a);
    auto v = index_of(b);
    if (!u || !v) throw std::invalid_argument("edge references unknown vertex");
    if (*u == *v) throw std::invalid_argument("loop edge at vertex " + a);
    adj_[static_cast<std::size_t>(*u)][static_cast<std::size_t>(*v)] = true;
    adj_[static_cast<std::size_t>(*v)][static_cast<std::size_t>(*u)] = true;
  }
}

bool SimpGraph::adjacent(int u, int v) const {
  return adj_.at(static_cast<std::size_t>(u)).at(static_cast<std::size_t>(v));
}

std::optional<int> SimpGraph::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<std::pair<int, int>> SimpGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (int v = u + 1; v < order(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

SimpGraph SimpGraph::induced(const std::vector<int>& vs) const {
  std::vector<std::string> names;
  names.reserve(vs.size());
  for (int v : vs) names.push_back(name(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (adjacent(vs[i], vs[j])) edges.emplace_back(name(vs[i]), name(vs[j]));
  return SimpGraph(std::move(names), edges);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> is_join(const SimpGraph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("is_join needs at least 2 vertices");
  // Component of vertex 0 in the complement graph.
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (v != u && !seen[static_cast<std::size_t>(v)] && !g.adjacent(u, v)) {
        seen[static_cast<std::size_t>(v)] = true;
        stack.push_back(v);
      }
  }
  std::vector<int> v1, v2;
  for (int v = 0; v < n; ++v) (seen[static_cast<std::size_t>(v)] ? v1 : v2).push_back(v);
  if (v2.empty()) return std::nullopt;
  return std::make_pair(std::move(v1), std::move(v2));
}

namespace {

void clique_search(const SimpGraph& g, std::vector<int>& candidates, int current, int& best) {
  if (current + static_cast<int>(candidates.size()) <= best) return;
  if (candidates.empty()) {
    best = std::max(best, current);
    return;
  }
  while (!candidates.empty()) {
    if (current + static_cast<int>(candidates.size()) <= best) return;
    int v = candidates.back();
    candidates.pop_back();
    std::vector<int> next;
    for (int u : candidates)
      if (g.adjacent(u, v)) next.push_back(u);
    clique_search(g, next, current + 1, best);
  }
}

}  // namespace

int clique_number(const SimpGraph& g) {
  if (g.order() == 0) return 0;
  std::vector<int> all;
  for (int v = 0; v < g.order(); ++v) all.push_back(v);
  int best = 0;
  clique_search(g, all, 0, best);
  return best;
}

LazyCayley::LazyCayley(GroupSpec base, const std::vector<GroupElem>& connection) : base_(std::move(base)) {
  if (auto diag = validate_spec(base_)) throw std::invalid_argument("invalid base spec: " + *diag);
  for (const auto& s : connection) {
    GroupElem c = canonical(base_, s);
    if (c == identity(base_)) continue;
    conn_.push_back(c);
    conn_.push_back(inv(base_, c));
  }
  std::sort(conn_.begin(), conn_.end());
  conn_.erase(std::unique(conn_.begin(), conn_.end()), conn_.end());
}

bool LazyCayley::in_connection(const GroupElem& b) const {
  return std::binary_search(conn_.begin(), conn_.end(), b);
}

bool LazyCayley::adjacent(const GroupElem& b1, const GroupElem& b2) const {
  GroupElem c1 = canonical(base_, b1);
  GroupElem c2 = canonical(base_, b2);
  if (c1 == c2) return false;
  return in_connection(mul(base_, inv(base_, c1), c2));
}

}  // namespace wf
