#pragma once

// Brute-force oracles, independent of the implementation paths they check.

#include <array>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "wf/graphprod.hpp"

namespace wftest {

inline std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("WF_SEED")) return std::strtoull(s, nullptr, 10);
  return 0xC0FFEEull;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(seed_from_env());
  return gen;
}

inline std::int64_t rand_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

// Closure of a word under the elementary moves: merge/cancel neighbouring
// same-vertex syllables and swap neighbouring adjacent-vertex syllables.
// Words never grow, so the closure is finite.
inline std::set<wf::Word> move_closure(const wf::GPContext& ctx, const wf::Word& start) {
  std::set<wf::Word> seen{start};
  std::vector<wf::Word> queue{start};
  while (!queue.empty()) {
    wf::Word w = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].vertex == w[i + 1].vertex) {
        const auto& spec = ctx.vertex_spec(w[i].vertex);
        wf::GroupElem m = wf::mul(spec, w[i].elem, w[i + 1].elem);
        wf::Word next;
        next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        if (!(m == wf::identity(spec))) next.push_back(wf::Syllable{w[i].vertex, m});
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        if (seen.insert(next).second) queue.push_back(next);
      } else if (ctx.adjacent(w[i].vertex, w[i + 1].vertex)) {
        wf::Word next = w;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return seen;
}

// Lexicographically least among the minimum-length members of the move
// closure: the canonical form computed the slow, obviously-correct way.
inline wf::Word brute_canon(const wf::GPContext& ctx, const wf::Word& w) {
  auto closure = move_closure(ctx, w);
  std::size_t best_len = w.size();
  for (const auto& c : closure) best_len = std::min(best_len, c.size());
  const wf::Word* best = nullptr;
  for (const auto& c : closure) {
    if (c.size() != best_len) continue;
    if (!best || c < *best) best = &c;
  }
  return *best;
}

// Every element reachable from the generators (finite groups only).
inline std::set<wf::Canon> enumerate_group(const wf::GPContext& ctx, const std::vector<wf::Canon>& gens) {
  std::set<wf::Canon> seen{wf::Canon{}};
  std::vector<wf::Canon> queue{wf::Canon{}};
  while (!queue.empty()) {
    wf::Canon w = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      wf::Canon p = wf::gp_mul(ctx, w, g);
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen;
}

// Conjugacy by exhaustion over all conjugators of a finite group.
inline bool brute_conjugate(const wf::GPContext& ctx, const std::set<wf::Canon>& all, const wf::Canon& g,
                            const wf::Canon& h) {
  for (const auto& x : all)
    if (wf::gp_mul(ctx, wf::gp_mul(ctx, x, g), wf::gp_inv(ctx, x)) == h) return true;
  return false;
}

// Multiplication table of the symmetric group on 3 points, identity at
// index 0, built from permutation composition.
inline std::vector<std::vector<std::int64_t>> s3_table() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<std::int64_t>(i);
    return std::int64_t{-1};
  };
  std::vector<std::vector<std::int64_t>> t(6, std::vector<std::int64_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int k = 0; k < 3; ++k) comp[static_cast<std::size_t>(k)] = perms[i][static_cast<std::size_t>(perms[j][static_cast<std::size_t>(k)])];
      t[i][j] = index_of(comp);
    }
  return t;
}

}  // namespace wftest
