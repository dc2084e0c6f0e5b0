#include "wf/wreath.hpp"

#include <stdexcept>

namespace wf {

namespace {

bool abelian(const GroupSpec& spec) {
  switch (spec.kind) {
    case SpecKind::cyclic:
    case SpecKind::zd: return true;
    case SpecKind::table: {
      for (std::size_t i = 0; i < spec.table.size(); ++i)
        for (std::size_t j = i + 1; j < spec.table.size(); ++j)
          if (spec.table[i][j] != spec.table[j][i]) return false;
      return true;
    }
    case SpecKind::freeprod: {
      int eff = 0;
      for (auto m : spec.moduli)
        if (m != 1) ++eff;
      return eff <= 1;
    }
  }
  return false;
}

void set_lamp(const WreathCtx& ctx, std::map<GroupElem, GroupElem>& lamps, const GroupElem& pos,
              const GroupElem& val) {
  if (val == identity(ctx.A)) {
    lamps.erase(pos);
    return;
  }
  lamps[pos] = val;
}

}  // namespace

WreathCtx make_wreath_ctx(GroupSpec A, GroupSpec B) {
  if (auto d = validate_spec(A)) throw std::invalid_argument("invalid lamp spec: " + *d);
  if (auto d = validate_spec(B)) throw std::invalid_argument("invalid base spec: " + *d);
  return WreathCtx{std::move(A), std::move(B)};
}

WreathElem w_identity(const WreathCtx& ctx) { return WreathElem{{}, identity(ctx.B)}; }

WreathElem w_lamp(const WreathCtx& ctx, const GroupElem& pos, const GroupElem& val) {
  WreathElem x = w_identity(ctx);
  set_lamp(ctx, x.lamps, canonical(ctx.B, pos), canonical(ctx.A, val));
  return x;
}

WreathElem w_cursor(const WreathCtx& ctx, const GroupElem& b) {
  return WreathElem{{}, canonical(ctx.B, b)};
}

WreathElem w_mul(const WreathCtx& ctx, const WreathElem& x, const WreathElem& y) {
  WreathElem out;
  out.lamps = x.lamps;
  for (const auto& [k, v] : y.lamps) {
    GroupElem pos = mul(ctx.B, x.cursor, k);
    auto it = out.lamps.find(pos);
    GroupElem cur = it == out.lamps.end() ? identity(ctx.A) : it->second;
    set_lamp(ctx, out.lamps, pos, mul(ctx.A, cur, v));
  }
  out.cursor = mul(ctx.B, x.cursor, y.cursor);
  return out;
}

WreathElem w_inv(const WreathCtx& ctx, const WreathElem& x) {
  WreathElem out;
  out.cursor = inv(ctx.B, x.cursor);
  for (const auto& [k, v] : x.lamps)
    out.lamps.emplace(mul(ctx.B, out.cursor, k), inv(ctx.A, v));
  return out;
}

WreathElem w_pow(const WreathCtx& ctx, const WreathElem& x, std::int64_t n) {
  WreathElem base = n < 0 ? w_inv(ctx, x) : x;
  std::int64_t k = n < 0 ? -n : n;
  WreathElem acc = w_identity(ctx);
  while (k > 0) {
    if (k & 1) acc = w_mul(ctx, acc, base);
    base = w_mul(ctx, base, base);
    k >>= 1;
  }
  return acc;
}

std::vector<GroupElem> support(const WreathElem& x) {
  std::vector<GroupElem> out;
  out.reserve(x.lamps.size());
  for (const auto& [k, v] : x.lamps) out.push_back(k);
  return out;
}

GroupElem rho_sum(const WreathCtx& ctx, const WreathElem& x) {
  if (!abelian(ctx.A)) throw std::invalid_argument("rho_sum needs an abelian lamp group");
  GroupElem s = identity(ctx.A);
  for (const auto& [k, v] : x.lamps) s = mul(ctx.A, s, v);
  return s;
}

GroupElem project_B(const WreathElem& x) { return x.cursor; }

bool normalizes_base(const WreathCtx& ctx, const WreathElem& x) {
  if (x.lamps.empty()) return true;
  if (!ctx.B.is_finite()) return false;
  // Finite B: a constant nontrivial map has full support and equal values.
  if (x.lamps.size() != ctx.B.order()) return false;
  const GroupElem& v0 = x.lamps.begin()->second;
  for (const auto& [k, v] : x.lamps)
    if (!(v == v0)) return false;
  return true;
}

}  // namespace wf
