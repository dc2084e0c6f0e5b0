#pragma once

#include <string>

#include "wf/common.hpp"
#include "wf/graphprod.hpp"
#include "wf/groupring.hpp"
#include "wf/grig.hpp"
#include "wf/wreath.hpp"

namespace wf {

// `u^3 * v^-1 * u`; exponents are residues for cyclic vertex groups, table
// indices for table groups, and `u^(1,-2)` tuples for Z^d groups. "1" is the
// identity. Errors carry the offset of the first offending token.
Canon parse_gp_word(const GPContext& ctx, const std::string& text);
std::string render_gp_word(const GPContext& ctx, const Canon& w);

// `lamp(0,1)*t^3` with `t` the cursor generator over B = Z (use t^(1,0) over
// Z^d and z0, z1, ... over free products); atoms may carry ^int.
WreathElem parse_wreath(const WreathCtx& ctx, const std::string& text);
std::string render_wreath(const WreathCtx& ctx, const WreathElem& x);

// `10*X+6 (mod 15)`, `1+2*X`, `X^-1`, `-X^2+1`. A trailing `(mod k)` sets
// the modulus; otherwise `fallback_mod` applies (0 = Z).
Laurent parse_laurent(const std::string& text, std::int64_t fallback_mod = 0);
std::string render_laurent(const Laurent& p);

// Letter string over {a,b,c,d}.
GWord parse_gword(const std::string& text);

}  // namespace wf
