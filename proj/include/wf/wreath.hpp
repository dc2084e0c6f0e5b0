#pragma once

#include <map>
#include <vector>

#include "wf/groups.hpp"

namespace wf {

struct WreathCtx {
  GroupSpec A;  // lamp group
  GroupSpec B;  // base group
  bool operator==(const WreathCtx&) const = default;
};

WreathCtx make_wreath_ctx(GroupSpec A, GroupSpec B);

// A pair (lamps, cursor): a finitely supported map B -> A \ {1} with
// canonical keys, plus a cursor in B.
struct WreathElem {
  std::map<GroupElem, GroupElem> lamps;
  GroupElem cursor;
  bool operator==(const WreathElem&) const = default;
  auto operator<=>(const WreathElem&) const = default;
};

WreathElem w_identity(const WreathCtx& ctx);
WreathElem w_lamp(const WreathCtx& ctx, const GroupElem& pos, const GroupElem& val);
WreathElem w_cursor(const WreathCtx& ctx, const GroupElem& b);

// (c1, p1)(c2, p2) = (c1(.) c2(p1^{-1} .), p1 p2)
WreathElem w_mul(const WreathCtx& ctx, const WreathElem& x, const WreathElem& y);
WreathElem w_inv(const WreathCtx& ctx, const WreathElem& x);
WreathElem w_pow(const WreathCtx& ctx, const WreathElem& x, std::int64_t n);

// Key set of the lamp map.
std::vector<GroupElem> support(const WreathElem& x);

// Sum of the lamp values; A must be abelian.
GroupElem rho_sum(const WreathCtx& ctx, const WreathElem& x);

GroupElem project_B(const WreathElem& x);

// Whether x normalizes the base copy of B: the lamp map must be a constant
// map B -> A, which for infinite B and finite support means no lamps at all.
bool normalizes_base(const WreathCtx& ctx, const WreathElem& x);

}  // namespace wf
