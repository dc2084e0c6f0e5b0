#include "wf/autlamp.hpp"

#include <set>
#include <stdexcept>

namespace wf {

LampCtx make_lamp_ctx(GroupSpec F, GroupSpec H) {
  if (F.kind != SpecKind::cyclic) throw std::invalid_argument("lamp group must be cyclic");
  if (auto d = validate_spec(F)) throw std::invalid_argument("invalid lamp spec: " + *d);
  if (auto d = validate_spec(H)) throw std::invalid_argument("invalid base spec: " + *d);
  bool is_z = H.kind == SpecKind::cyclic && H.m == 0;
  if (!is_z && H.kind != SpecKind::freeprod)
    throw std::invalid_argument("base must be Z or a free product of cyclic groups");
  return LampCtx{std::move(F), std::move(H)};
}

int LampCtx::num_factors() const {
  return h_is_z() ? 1 : static_cast<int>(H.moduli.size());
}

GroupElem LampCtx::factor_gen(int i) const {
  if (i < 0 || i >= num_factors()) throw std::invalid_argument("factor index out of range");
  if (h_is_z()) return GroupElem::integer(1);
  return GroupElem::word({FpSyllable{static_cast<std::int32_t>(i), 1}});
}

std::optional<std::uint64_t> LampCtx::factor_order(int i) const {
  if (i < 0 || i >= num_factors()) throw std::invalid_argument("factor index out of range");
  if (h_is_z()) return std::nullopt;
  std::int64_t m = H.moduli[static_cast<std::size_t>(i)];
  if (m == 0) return std::nullopt;
  return static_cast<std::uint64_t>(m);
}

ElemAuto ElemAuto::inner(WreathElem g) {
  ElemAuto e;
  e.kind = Kind::inner;
  e.g = std::move(g);
  return e;
}

ElemAuto ElemAuto::lift(LiftData d) {
  ElemAuto e;
  e.kind = Kind::lift;
  e.lift_data = std::move(d);
  return e;
}

ElemAuto ElemAuto::trans(int factor, LampMap a) {
  ElemAuto e;
  e.kind = Kind::trans;
  e.factor = factor;
  e.a = std::move(a);
  return e;
}

ElemAuto ElemAuto::pconj(int factor, LampMap a) {
  ElemAuto e;
  e.kind = Kind::pconj;
  e.factor = factor;
  e.a = std::move(a);
  return e;
}

ElemAuto ElemAuto::unit(Laurent u) {
  ElemAuto e;
  e.kind = Kind::unit;
  e.u = std::move(u);
  return e;
}

ElemAuto ElemAuto::mirror() { return ElemAuto{}; }

namespace {

// phi(h) from generator images.
GroupElem map_through(const LampCtx& ctx, const std::vector<GroupElem>& images, const GroupElem& h) {
  if (ctx.h_is_z()) return power(ctx.H, images[0], h.as_int());
  GroupElem hc = canonical(ctx.H, h);
  GroupElem out = identity(ctx.H);
  for (const auto& s : hc.as_word())
    out = mul(ctx.H, out, power(ctx.H, images[static_cast<std::size_t>(s.factor)], s.val));
  return out;
}

LampMap canonical_lamp_map(const LampCtx& ctx, const LampMap& a) {
  LampMap out;
  for (const auto& [k, v] : a) {
    GroupElem val = canonical(ctx.F, v);
    if (val == identity(ctx.F)) continue;
    out[canonical(ctx.H, k)] = val;
  }
  return out;
}

WreathElem lamp_elem(const LampCtx& ctx, const LampMap& a) {
  WreathElem w{canonical_lamp_map(ctx, a), identity(ctx.H)};
  return w;
}

// kappa(p) for a transvection or partial conjugation on one free factor.
WreathElem kappa_cursor(const LampCtx& ctx, const ElemAuto& e, const GroupElem& p) {
  WreathCtx wctx = ctx.wctx();
  WreathElem az = w_mul(wctx, lamp_elem(ctx, e.a), w_cursor(wctx, ctx.factor_gen(e.factor)));
  auto step = [&](std::int32_t fac, std::int64_t exp) -> WreathElem {
    if (fac != e.factor) return w_cursor(wctx, power(ctx.H, ctx.factor_gen(fac), exp));
    if (e.kind == ElemAuto::Kind::trans) return w_pow(wctx, az, exp);
    // pconj: a z^exp a^-1
    WreathElem aw = lamp_elem(ctx, e.a);
    return w_mul(wctx, w_mul(wctx, aw, w_cursor(wctx, power(ctx.H, ctx.factor_gen(fac), exp))),
                 w_inv(wctx, aw));
  };
  if (ctx.h_is_z()) return step(0, p.as_int());
  GroupElem pc = canonical(ctx.H, p);
  WreathElem out = w_identity(wctx);
  for (const auto& s : pc.as_word()) out = w_mul(wctx, out, step(s.factor, s.val));
  return out;
}

Laurent lamps_to_laurent(const LampCtx& ctx, const std::map<GroupElem, GroupElem>& lamps) {
  std::map<std::int64_t, std::int64_t> c;
  for (const auto& [k, v] : lamps) c[k.as_int()] = v.as_int();
  return l_make(ctx.F.m, c);
}

std::map<GroupElem, GroupElem> laurent_to_lamps(const Laurent& p) {
  std::map<GroupElem, GroupElem> lamps;
  for (const auto& [d, c] : p.c) lamps.emplace(GroupElem::integer(d), GroupElem::integer(c));
  return lamps;
}

}  // namespace

std::optional<std::string> validate(const LampCtx& ctx, const ElemAuto& e) {
  WreathCtx wctx = ctx.wctx();
  switch (e.kind) {
    case ElemAuto::Kind::inner: return std::nullopt;
    case ElemAuto::Kind::lift: {
      std::size_t n = static_cast<std::size_t>(ctx.num_factors());
      if (e.lift_data.images.size() != n || e.lift_data.inv_images.size() != n)
        return "lift needs one image and one inverse image per factor generator";
      for (int i = 0; i < ctx.num_factors(); ++i) {
        GroupElem z = ctx.factor_gen(i);
        if (map_through(ctx, e.lift_data.images, map_through(ctx, e.lift_data.inv_images, z)) != z)
          return "declared inverse fails on generator " + std::to_string(i);
        if (map_through(ctx, e.lift_data.inv_images, map_through(ctx, e.lift_data.images, z)) != z)
          return "declared inverse fails on generator " + std::to_string(i) + " (other side)";
        if (auto r = ctx.factor_order(i)) {
          GroupElem img = e.lift_data.images[static_cast<std::size_t>(i)];
          if (!(power(ctx.H, img, static_cast<std::int64_t>(*r)) == identity(ctx.H)))
            return "image of generator " + std::to_string(i) + " breaks its torsion relation";
        }
      }
      return std::nullopt;
    }
    case ElemAuto::Kind::trans: {
      if (e.factor < 0 || e.factor >= ctx.num_factors()) return "factor index out of range";
      if (auto r = ctx.factor_order(e.factor)) {
        WreathElem az = w_mul(wctx, lamp_elem(ctx, e.a), w_cursor(wctx, ctx.factor_gen(e.factor)));
        if (!(w_pow(wctx, az, static_cast<std::int64_t>(*r)) == w_identity(wctx)))
          return "(az)^r != 1: some <z>-orbit has a nontrivial colour product";
      }
      return std::nullopt;
    }
    case ElemAuto::Kind::pconj:
      if (e.factor < 0 || e.factor >= ctx.num_factors()) return "factor index out of range";
      return std::nullopt;
    case ElemAuto::Kind::unit: {
      if (!ctx.h_is_z()) return "unit automorphisms need H = Z";
      if (e.u.k != ctx.F.m) return "unit modulus does not match the lamp group";
      if (!unit_invert(e.u)) return "multiplier is not a unit";
      return std::nullopt;
    }
    case ElemAuto::Kind::mirror:
      if (!ctx.h_is_z()) return "mirror needs H = Z";
      return std::nullopt;
  }
  return "unknown automorphism kind";
}

WreathElem apply_one(const LampCtx& ctx, const ElemAuto& e, const WreathElem& x) {
  WreathCtx wctx = ctx.wctx();
  switch (e.kind) {
    case ElemAuto::Kind::inner:
      return w_mul(wctx, w_mul(wctx, e.g, x), w_inv(wctx, e.g));
    case ElemAuto::Kind::lift: {
      WreathElem out = w_identity(wctx);
      for (const auto& [k, v] : x.lamps) out.lamps.emplace(map_through(ctx, e.lift_data.images, k), v);
      out.cursor = map_through(ctx, e.lift_data.images, x.cursor);
      return out;
    }
    case ElemAuto::Kind::trans:
    case ElemAuto::Kind::pconj: {
      // (c, p) -> (c, 1) * kappa(p): kappa fixes the lamps pointwise.
      WreathElem lamps_only{x.lamps, identity(ctx.H)};
      return w_mul(wctx, lamps_only, kappa_cursor(ctx, e, x.cursor));
    }
    case ElemAuto::Kind::unit: {
      WreathElem out;
      out.lamps = laurent_to_lamps(l_mul(lamps_to_laurent(ctx, x.lamps), e.u));
      out.cursor = x.cursor;
      return out;
    }
    case ElemAuto::Kind::mirror: {
      WreathElem out;
      for (const auto& [k, v] : x.lamps) out.lamps.emplace(GroupElem::integer(-k.as_int()), v);
      out.cursor = GroupElem::integer(-x.cursor.as_int());
      return out;
    }
  }
  return x;
}

WreathElem apply(const LampCtx& ctx, const AutoWord& w, const WreathElem& x) {
  WreathElem out = x;
  for (const auto& e : w) out = apply_one(ctx, e, out);
  return out;
}

AutoWord compose(AutoWord w1, const AutoWord& w2) {
  w1.insert(w1.end(), w2.begin(), w2.end());
  return w1;
}

AutoWord invert_word(const LampCtx& ctx, const AutoWord& w) {
  WreathCtx wctx = ctx.wctx();
  AutoWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (it->kind) {
      case ElemAuto::Kind::inner: out.push_back(ElemAuto::inner(w_inv(wctx, it->g))); break;
      case ElemAuto::Kind::lift:
        out.push_back(ElemAuto::lift(LiftData{it->lift_data.inv_images, it->lift_data.images}));
        break;
      case ElemAuto::Kind::trans: {
        LampMap inv_a;
        for (const auto& [k, v] : it->a) inv_a.emplace(k, inv(ctx.F, v));
        out.push_back(ElemAuto::trans(it->factor, std::move(inv_a)));
        break;
      }
      case ElemAuto::Kind::pconj: {
        LampMap inv_a;
        for (const auto& [k, v] : it->a) inv_a.emplace(k, inv(ctx.F, v));
        out.push_back(ElemAuto::pconj(it->factor, std::move(inv_a)));
        break;
      }
      case ElemAuto::Kind::unit: {
        auto uinv = unit_invert(it->u);
        if (!uinv) throw std::invalid_argument("cannot invert a non-unit multiplier");
        out.push_back(ElemAuto::unit(*uinv));
        break;
      }
      case ElemAuto::Kind::mirror: out.push_back(ElemAuto::mirror()); break;
    }
  }
  return out;
}

std::vector<WreathElem> generating_set(const LampCtx& ctx) {
  WreathCtx wctx = ctx.wctx();
  std::vector<WreathElem> gens;
  gens.push_back(w_lamp(wctx, identity(ctx.H), GroupElem::integer(1)));
  for (int i = 0; i < ctx.num_factors(); ++i) gens.push_back(w_cursor(wctx, ctx.factor_gen(i)));
  return gens;
}

bool equal(const LampCtx& ctx, const AutoWord& w1, const AutoWord& w2) {
  for (const auto& g : generating_set(ctx))
    if (!(apply(ctx, w1, g) == apply(ctx, w2, g))) return false;
  return true;
}

std::optional<WreathElem> trans_is_inner(const LampCtx& ctx, const LampMap& g) {
  if (!ctx.h_is_z()) throw std::invalid_argument("trans_is_inner is over H = Z");
  LampMap gc = canonical_lamp_map(ctx, g);
  GroupElem rho = identity(ctx.F);
  for (const auto& [k, v] : gc) rho = mul(ctx.F, rho, v);
  if (!(rho == identity(ctx.F))) return std::nullopt;
  WreathElem conj = w_identity(ctx.wctx());
  if (!gc.empty()) {
    std::int64_t lo = gc.begin()->first.as_int();
    std::int64_t hi = gc.rbegin()->first.as_int();
    GroupElem acc = identity(ctx.F);
    for (std::int64_t q = lo; q < hi; ++q) {
      auto it = gc.find(GroupElem::integer(q));
      if (it != gc.end()) acc = mul(ctx.F, acc, it->second);
      if (!(acc == identity(ctx.F))) conj.lamps.emplace(GroupElem::integer(q), acc);
    }
  }
  if (!equal(ctx, {ElemAuto::trans(0, gc)}, {ElemAuto::inner(conj)}))
    throw std::logic_error("prefix-sum conjugator failed the equality check");
  return conj;
}

LampMap transvection_orbit_data(const LampCtx& ctx, int factor,
                                const std::vector<OrbitColouring>& orbits) {
  auto r = ctx.factor_order(factor);
  if (!r) throw std::invalid_argument("orbit colourings need a finite-order factor generator");
  GroupElem z = ctx.factor_gen(factor);
  LampMap a;
  std::set<GroupElem> used;
  for (const auto& orbit : orbits) {
    if (orbit.colours.size() != *r)
      throw std::invalid_argument("orbit of wrong size: expected " + std::to_string(*r) +
                                  " colours, got " + std::to_string(orbit.colours.size()));
    GroupElem sum = identity(ctx.F);
    for (const auto& c : orbit.colours) sum = mul(ctx.F, sum, canonical(ctx.F, c));
    if (!(sum == identity(ctx.F))) throw std::invalid_argument("nonzero colour product on an orbit");
    GroupElem pos = canonical(ctx.H, orbit.base);
    for (const auto& c : orbit.colours) {
      if (!used.insert(pos).second) throw std::invalid_argument("orbits overlap");
      GroupElem val = canonical(ctx.F, c);
      if (!(val == identity(ctx.F))) a.emplace(pos, val);
      pos = mul(ctx.H, z, pos);
    }
  }
  ElemAuto t = ElemAuto::trans(factor, a);
  if (auto diag = validate(ctx, t)) throw std::logic_error("orbit construction failed: " + *diag);
  return a;
}

}  // namespace wf
