#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wf/groups.hpp"

namespace wf {

// Finite simplicial graph. Vertex order is the input order; it seeds all
// lexicographic tie-breaking downstream.
class SimpGraph {
 public:
  SimpGraph() = default;
  SimpGraph(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges);

  int order() const { return static_cast<int>(names_.size()); }
  bool adjacent(int u, int v) const;
  const std::string& name(int u) const { return names_.at(static_cast<std::size_t>(u)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;
  std::vector<std::pair<int, int>> edges() const;

  SimpGraph induced(const std::vector<int>& vs) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> adj_;
};

// Witness partition (V1, V2) with all cross edges present, or nullopt.
// A graph is a join iff its complement is disconnected; V1 is the complement
// component of vertex 0. Throws std::invalid_argument on < 2 vertices.
std::optional<std::pair<std::vector<int>, std::vector<int>>> is_join(const SimpGraph& g);

// Exact maximum clique size (branch and bound; graphs here are small).
int clique_number(const SimpGraph& g);

// Lazy Cayley graph Cayl(B, S). S is symmetrized and identity-stripped on
// construction.
class LazyCayley {
 public:
  LazyCayley(GroupSpec base, const std::vector<GroupElem>& connection);

  const GroupSpec& base() const { return base_; }
  const std::vector<GroupElem>& connection() const { return conn_; }
  bool adjacent(const GroupElem& b1, const GroupElem& b2) const;
  bool in_connection(const GroupElem& b) const;

 private:
  GroupSpec base_;
  std::vector<GroupElem> conn_;  // sorted, symmetric, no identity
};

}  // namespace wf
