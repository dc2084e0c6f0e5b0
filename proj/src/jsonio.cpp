#include "wf/jsonio.hpp"

#include <stdexcept>

namespace wf {

json spec_to_json(const GroupSpec& spec) {
  switch (spec.kind) {
    case SpecKind::cyclic: return json{{"kind", "cyclic"}, {"m", spec.m}};
    case SpecKind::table: return json{{"kind", "table"}, {"table", spec.table}};
    case SpecKind::zd: return json{{"kind", "zd"}, {"d", spec.d}};
    case SpecKind::freeprod: return json{{"kind", "freeprod"}, {"moduli", spec.moduli}};
  }
  throw std::invalid_argument("unknown spec kind");
}

GroupSpec spec_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  GroupSpec spec;
  if (kind == "cyclic")
    spec = GroupSpec::cyclic(j.at("m").get<std::int64_t>());
  else if (kind == "table")
    spec = GroupSpec::finite_table(j.at("table").get<std::vector<std::vector<std::int64_t>>>());
  else if (kind == "zd")
    spec = GroupSpec::free_abelian(j.at("d").get<std::int64_t>());
  else if (kind == "freeprod")
    spec = GroupSpec::free_product_of_cyclics(j.at("moduli").get<std::vector<std::int64_t>>());
  else
    throw std::invalid_argument("unknown spec kind: " + kind);
  if (auto diag = validate_spec(spec)) throw std::invalid_argument("invalid spec: " + *diag);
  return spec;
}

json elem_to_json(const GroupSpec& spec, const GroupElem& x) {
  GroupElem c = canonical(spec, x);
  if (c.is_int()) return c.as_int();
  if (c.is_vec()) return c.as_vec();
  json out = json::array();
  for (const auto& s : c.as_word()) out.push_back(json::array({s.factor, s.val}));
  return out;
}

GroupElem elem_from_json(const GroupSpec& spec, const json& j) {
  switch (spec.kind) {
    case SpecKind::cyclic:
    case SpecKind::table: return canonical(spec, GroupElem::integer(j.get<std::int64_t>()));
    case SpecKind::zd: return canonical(spec, GroupElem::vec(j.get<std::vector<std::int64_t>>()));
    case SpecKind::freeprod: {
      FpWord w;
      for (const auto& s : j)
        w.push_back(FpSyllable{s.at(0).get<std::int32_t>(), s.at(1).get<std::int64_t>()});
      return canonical(spec, GroupElem::word(std::move(w)));
    }
  }
  throw std::invalid_argument("unknown spec kind");
}

json graph_to_json(const SimpGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({g.name(u), g.name(v)}));
  return json{{"vertices", g.names()}, {"edges", edges}};
}

SimpGraph graph_from_json(const json& j) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return SimpGraph(j.at("vertices").get<std::vector<std::string>>(), edges);
}

json gpctx_to_json(const GPContext& ctx) {
  if (ctx.is_lazy()) throw std::invalid_argument("lazy contexts have no graph JSON form");
  json specs = json::object();
  for (int v = 0; v < ctx.graph().order(); ++v)
    specs[ctx.graph().name(v)] = spec_to_json(ctx.vertex_spec(VertexRef::finite(v)));
  return json{{"graph", graph_to_json(ctx.graph())}, {"specs", specs}};
}

GPContext gpctx_from_json(const json& j) {
  SimpGraph g = graph_from_json(j.at("graph"));
  if (j.contains("spec")) return GPContext::finite_uniform(std::move(g), spec_from_json(j.at("spec")));
  const json& specs = j.at("specs");
  std::vector<GroupSpec> per_vertex;
  for (int v = 0; v < g.order(); ++v) {
    if (!specs.contains(g.name(v)))
      throw std::invalid_argument("missing spec for vertex " + g.name(v));
    per_vertex.push_back(spec_from_json(specs.at(g.name(v))));
  }
  return GPContext::finite(std::move(g), std::move(per_vertex));
}

namespace {

std::string vertex_key(const GPContext& ctx, const VertexRef& u) {
  if (u.is_finite()) return ctx.graph().name(u.index());
  return enc_key(ctx.cayley().base(), u.elem());
}

VertexRef vertex_from_key(const GPContext& ctx, const std::string& key) {
  if (ctx.is_lazy()) return VertexRef::lazy(dec_key(ctx.cayley().base(), key));
  auto idx = ctx.graph().index_of(key);
  if (!idx) throw std::invalid_argument("unknown vertex: " + key);
  return VertexRef::finite(*idx);
}

}  // namespace

json word_to_json(const GPContext& ctx, const Word& w) {
  json out = json::array();
  for (const auto& s : w)
    out.push_back(json::array({vertex_key(ctx, s.vertex), elem_to_json(ctx.vertex_spec(s.vertex), s.elem)}));
  return out;
}

Word word_from_json(const GPContext& ctx, const json& j) {
  Word w;
  for (const auto& s : j) {
    VertexRef v = vertex_from_key(ctx, s.at(0).get<std::string>());
    w.push_back(Syllable{v, elem_from_json(ctx.vertex_spec(v), s.at(1))});
  }
  return w;
}

json wreath_to_json(const WreathCtx& ctx, const WreathElem& x) {
  json lamps = json::object();
  for (const auto& [k, v] : x.lamps) lamps[enc_key(ctx.B, k)] = elem_to_json(ctx.A, v);
  return json{{"lamps", lamps}, {"pos", elem_to_json(ctx.B, x.cursor)}};
}

WreathElem wreath_from_json(const WreathCtx& ctx, const json& j) {
  WreathElem x = w_identity(ctx);
  if (j.contains("lamps"))
    for (const auto& [key, val] : j.at("lamps").items()) {
      GroupElem v = elem_from_json(ctx.A, val);
      if (v == identity(ctx.A)) continue;
      x.lamps.emplace(dec_key(ctx.B, key), v);
    }
  if (j.contains("pos")) x.cursor = elem_from_json(ctx.B, j.at("pos"));
  return x;
}

json laurent_to_json(const Laurent& p) {
  json coeffs = json::object();
  for (const auto& [d, c] : p.c) coeffs[std::to_string(d)] = c;
  return json{{"k", p.k}, {"coeffs", coeffs}};
}

Laurent laurent_from_json(const json& j) {
  std::map<std::int64_t, std::int64_t> c;
  if (j.contains("coeffs"))
    for (const auto& [key, val] : j.at("coeffs").items())
      c[std::stoll(key)] = val.get<std::int64_t>();
  return l_make(j.at("k").get<std::int64_t>(), c);
}

json pres_to_json(const FinitePresentation& pres) {
  return json{{"gens", pres.gens}, {"rels", pres.rels}};
}

FinitePresentation pres_from_json(const json& j) {
  FinitePresentation pres{j.at("gens").get<std::vector<std::string>>(),
                          j.at("rels").get<std::vector<std::vector<std::string>>>()};
  validate_presentation(pres);
  return pres;
}

json trunc_elem_to_json(const TruncCtx& ctx, const TruncElem& x) {
  return json{{"gp", word_to_json(ctx.gp, x.gp.word())}, {"pos", elem_to_json(ctx.B, x.cursor)}};
}

json lamp_map_to_json(const LampCtx& ctx, const LampMap& a) {
  json out = json::object();
  for (const auto& [k, v] : a) out[enc_key(ctx.H, k)] = elem_to_json(ctx.F, v);
  return out;
}

LampMap lamp_map_from_json(const LampCtx& ctx, const json& j) {
  LampMap a;
  for (const auto& [key, val] : j.items()) {
    GroupElem v = elem_from_json(ctx.F, val);
    if (v == identity(ctx.F)) continue;
    a.emplace(dec_key(ctx.H, key), v);
  }
  return a;
}

json autoword_to_json(const LampCtx& ctx, const AutoWord& w) {
  json out = json::array();
  for (const auto& e : w) {
    switch (e.kind) {
      case ElemAuto::Kind::inner:
        out.push_back(json{{"kind", "inner"}, {"g", wreath_to_json(ctx.wctx(), e.g)}});
        break;
      case ElemAuto::Kind::lift: {
        json imgs = json::array(), invs = json::array();
        for (const auto& x : e.lift_data.images) imgs.push_back(elem_to_json(ctx.H, x));
        for (const auto& x : e.lift_data.inv_images) invs.push_back(elem_to_json(ctx.H, x));
        out.push_back(json{{"kind", "lift"}, {"images", imgs}, {"inv_images", invs}});
        break;
      }
      case ElemAuto::Kind::trans:
        out.push_back(json{{"kind", "trans"}, {"factor", e.factor}, {"a", lamp_map_to_json(ctx, e.a)}});
        break;
      case ElemAuto::Kind::pconj:
        out.push_back(json{{"kind", "pconj"}, {"factor", e.factor}, {"a", lamp_map_to_json(ctx, e.a)}});
        break;
      case ElemAuto::Kind::unit:
        out.push_back(json{{"kind", "unit"}, {"u", laurent_to_json(e.u)}});
        break;
      case ElemAuto::Kind::mirror:
        out.push_back(json{{"kind", "mirror"}});
        break;
    }
  }
  return out;
}

AutoWord autoword_from_json(const LampCtx& ctx, const json& j) {
  AutoWord w;
  for (const auto& e : j) {
    std::string kind = e.at("kind").get<std::string>();
    if (kind == "inner") {
      w.push_back(ElemAuto::inner(wreath_from_json(ctx.wctx(), e.at("g"))));
    } else if (kind == "lift") {
      LiftData d;
      for (const auto& x : e.at("images")) d.images.push_back(elem_from_json(ctx.H, x));
      for (const auto& x : e.at("inv_images")) d.inv_images.push_back(elem_from_json(ctx.H, x));
      w.push_back(ElemAuto::lift(std::move(d)));
    } else if (kind == "trans") {
      w.push_back(ElemAuto::trans(e.at("factor").get<int>(), lamp_map_from_json(ctx, e.at("a"))));
    } else if (kind == "pconj") {
      w.push_back(ElemAuto::pconj(e.at("factor").get<int>(), lamp_map_from_json(ctx, e.at("a"))));
    } else if (kind == "unit") {
      w.push_back(ElemAuto::unit(laurent_from_json(e.at("u"))));
    } else if (kind == "mirror") {
      w.push_back(ElemAuto::mirror());
    } else {
      throw std::invalid_argument("unknown automorphism kind: " + kind);
    }
    if (auto diag = validate(ctx, w.back()))
      throw std::invalid_argument("invalid automorphism entry: " + *diag);
  }
  return w;
}

json ball_to_json(const QMBall& ball) {
  json verts = json::array();
  for (const auto& v : ball.vertices()) verts.push_back(display_word(ball.ctx(), v.word()));
  json edges = json::array();
  for (const auto& e : ball.edges()) {
    edges.push_back(json{{"u", verts.at(static_cast<std::size_t>(e.u))},
                         {"v", verts.at(static_cast<std::size_t>(e.v))},
                         {"vertex", vertex_key(ball.ctx(), e.vertex)},
                         {"elem", elem_to_json(ball.ctx().vertex_spec(e.vertex), e.elem)},
                         {"hyperplane", e.hyperplane}});
  }
  json hyps = json::array();
  for (const auto& h : ball.hyperplanes()) {
    SectorCount sc = sector_count(ball, h.id);
    json carrier = json::array();
    for (int v : h.carrier) carrier.push_back(verts.at(static_cast<std::size_t>(v)));
    hyps.push_back(json{{"id", h.id},
                        {"edges", h.edges.size()},
                        {"carrier", carrier},
                        {"truncated", h.truncated},
                        {"sectors", sc.count},
                        {"sectors_approximate", sc.approximate}});
  }
  return json{{"radius", ball.radius()}, {"vertices", verts}, {"edges", edges}, {"hyperplanes", hyps}};
}

json factor_result_to_json(const WreathCtx& wctx, const FactorResult& res) {
  json s = json::array();
  for (const auto& e : res.S) s.push_back(enc_key(wctx.B, e));
  TruncCtx tctx = make_trunc_ctx(wctx.A, wctx.B, res.S);
  json lifted = json::object();
  for (const auto& [name, x] : res.lifted) lifted[name] = trunc_elem_to_json(tctx, x);
  json trace = json::array();
  for (const auto& t : res.trace)
    trace.push_back(json{{"relator", t.relator}, {"added", enc_key(wctx.B, t.added)}, {"s_size", t.s_size}});
  return json{{"S", s}, {"lifted_images", lifted}, {"relator_trace", trace}};
}

}  // namespace wf
