#pragma once

#include <json.hpp>

#include "wf/autlamp.hpp"
#include "wf/groupring.hpp"
#include "wf/qmgraph.hpp"
#include "wf/trunc.hpp"

namespace wf {

using json = nlohmann::json;

// {"kind":"cyclic","m":2} | {"kind":"table","table":[[...]]} |
// {"kind":"zd","d":2} | {"kind":"freeprod","moduli":[2,3]}
json spec_to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const json& j);

// int for cyclic/table, [ints] for zd, [[factor,val],...] for free products
json elem_to_json(const GroupSpec& spec, const GroupElem& x);
GroupElem elem_from_json(const GroupSpec& spec, const json& j);

// {"vertices":["u","v"],"edges":[["u","v"]]}
json graph_to_json(const SimpGraph& g);
SimpGraph graph_from_json(const json& j);

// {"graph":..., "specs":{"u":...}} or {"graph":..., "spec": uniform}
json gpctx_to_json(const GPContext& ctx);
GPContext gpctx_from_json(const json& j);

// [["u",1],["v",2]]: vertex names for finite contexts, encoded B-keys for
// lazy ones
json word_to_json(const GPContext& ctx, const Word& w);
Word word_from_json(const GPContext& ctx, const json& j);

// {"lamps":{"0":1,"5":1},"pos":3}
json wreath_to_json(const WreathCtx& ctx, const WreathElem& x);
WreathElem wreath_from_json(const WreathCtx& ctx, const json& j);

// {"k":4,"coeffs":{"0":1,"1":2}}
json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const json& j);

// {"gens":["s","t"],"rels":[["s","t","s^-1","t^-1"]]}
json pres_to_json(const FinitePresentation& pres);
FinitePresentation pres_from_json(const json& j);

// {"gp":[["0",1]],"pos":3}
json trunc_elem_to_json(const TruncCtx& ctx, const TruncElem& x);

// [{"kind":"trans","factor":0,"a":{"0":1}}, {"kind":"unit","u":{...}}, ...]
json autoword_to_json(const LampCtx& ctx, const AutoWord& w);
AutoWord autoword_from_json(const LampCtx& ctx, const json& j);

json lamp_map_to_json(const LampCtx& ctx, const LampMap& a);
LampMap lamp_map_from_json(const LampCtx& ctx, const json& j);

// {"radius":r,"vertices":[...],"edges":[{"u":..,"v":..,"vertex":..,"elem":..,
//  "hyperplane":id}],"hyperplanes":[{"id":..,"edges":n,"sectors":..,...}]}
json ball_to_json(const QMBall& ball);

// {"S":[...],"lifted_images":{...},"relator_trace":[...]}
json factor_result_to_json(const WreathCtx& wctx, const FactorResult& res);

}  // namespace wf
