#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wf/groupring.hpp"
#include "wf/wreath.hpp"

namespace wf {

// The wreath products whose automorphisms we compute: F cyclic, H either Z
// or a free product of cyclic groups.
struct LampCtx {
  GroupSpec F;
  GroupSpec H;
  WreathCtx wctx() const { return WreathCtx{F, H}; }
  int num_factors() const;
  GroupElem factor_gen(int i) const;
  std::optional<std::uint64_t> factor_order(int i) const;
  bool h_is_z() const { return H.kind == SpecKind::cyclic; }
};

LampCtx make_lamp_ctx(GroupSpec F, GroupSpec H);

using LampMap = std::map<GroupElem, GroupElem>;  // position -> nontrivial F-value

// Generator images of an automorphism of H, with declared inverse images.
struct LiftData {
  std::vector<GroupElem> images;
  std::vector<GroupElem> inv_images;
};

// One elementary automorphism of F wr H.
struct ElemAuto {
  enum class Kind { inner, lift, trans, pconj, unit, mirror };
  Kind kind = Kind::mirror;
  WreathElem g;       // inner: x -> g x g^-1
  LiftData lift_data; // lift: (c, p) -> (c o phi^-1, phi(p))
  int factor = 0;     // trans: z -> a z; pconj: z -> a z a^-1 (lamps fixed)
  LampMap a;
  Laurent u;          // unit: (c, p) -> (c * u, p), H = Z only

  static ElemAuto inner(WreathElem g);
  static ElemAuto lift(LiftData d);
  static ElemAuto trans(int factor, LampMap a);
  static ElemAuto pconj(int factor, LampMap a);
  static ElemAuto unit(Laurent u);
  static ElemAuto mirror();
};

// Composition list, applied left-to-right.
using AutoWord = std::vector<ElemAuto>;

// nullopt when the entry defines an automorphism; otherwise a diagnostic
// (failed lift inversion, (az)^r != 1, non-unit multiplier, ...).
std::optional<std::string> validate(const LampCtx& ctx, const ElemAuto& e);

WreathElem apply_one(const LampCtx& ctx, const ElemAuto& e, const WreathElem& x);
WreathElem apply(const LampCtx& ctx, const AutoWord& w, const WreathElem& x);

AutoWord compose(AutoWord w1, const AutoWord& w2);
AutoWord invert_word(const LampCtx& ctx, const AutoWord& w);

// The lamp generator at the identity position plus the factor generators of
// H; images on these determine an endomorphism of F wr H.
std::vector<WreathElem> generating_set(const LampCtx& ctx);

bool equal(const LampCtx& ctx, const AutoWord& w1, const AutoWord& w2);

// Over H = Z: the transvection z -> gz is inner iff the colour sum of g
// vanishes; the conjugator's lamps are the prefix sums of g.
std::optional<WreathElem> trans_is_inner(const LampCtx& ctx, const LampMap& g);

// A <z>-orbit {base, z*base, ..., z^{r-1}*base} with one colour per point.
struct OrbitColouring {
  GroupElem base;
  std::vector<GroupElem> colours;
};

// Assembles a valid transvection datum from zero-sum orbit colourings.
LampMap transvection_orbit_data(const LampCtx& ctx, int factor,
                                const std::vector<OrbitColouring>& orbits);

}  // namespace wf
