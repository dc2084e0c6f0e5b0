#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wf/exprparse.hpp"
#include "wf/jsonio.hpp"

namespace py = pybind11;
using namespace wf;

namespace {

json to_json(const py::object& o) {
  py::module_ pyjson = py::module_::import("json");
  return json::parse(py::cast<std::string>(pyjson.attr("dumps")(o)));
}

py::object from_json(const json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

GPContext ctx_of(const py::object& o) { return gpctx_from_json(to_json(o)); }
WreathCtx wctx_of(const py::object& o) {
  json j = to_json(o);
  return make_wreath_ctx(spec_from_json(j.at("A")), spec_from_json(j.at("B")));
}
LampCtx lctx_of(const py::object& o) {
  json j = to_json(o);
  return make_lamp_ctx(spec_from_json(j.at("F")), spec_from_json(j.at("H")));
}

Laurent laurent_of(const py::object& o, std::int64_t mod) {
  if (py::isinstance<py::str>(o)) return parse_laurent(py::cast<std::string>(o), mod);
  json j = to_json(o);
  if (j.is_object() && j.contains("coeffs")) return laurent_from_json(j);
  std::map<std::int64_t, std::int64_t> c;
  for (const auto& [key, val] : j.items()) c[std::stoll(key)] = val.get<std::int64_t>();
  return l_make(mod, c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact computations in wreath products, graph products, and their truncations";

  // graph products
  m.def(
      "nf",
      [](const py::object& ctx, const std::string& expr) {
        GPContext c = ctx_of(ctx);
        Canon w = parse_gp_word(c, expr);
        return from_json(json{{"word", word_to_json(c, w.word())}, {"display", render_gp_word(c, w)}});
      },
      py::arg("ctx"), py::arg("expr"), "canonical form of a graph-product word");
  m.def(
      "conjugate",
      [](const py::object& ctx, const std::string& a, const std::string& b) {
        GPContext c = ctx_of(ctx);
        return is_conjugate(c, parse_gp_word(c, a), parse_gp_word(c, b));
      },
      py::arg("ctx"), py::arg("a"), py::arg("b"));
  m.def(
      "support",
      [](const py::object& ctx, const std::string& expr) {
        GPContext c = ctx_of(ctx);
        std::vector<std::string> out;
        for (const auto& v : essential_support(c, parse_gp_word(c, expr)))
          out.push_back(c.graph().name(v.index()));
        return out;
      },
      py::arg("ctx"), py::arg("expr"), "essential support of a word");
  m.def(
      "irreducible",
      [](const py::object& ctx, const std::string& expr) {
        GPContext c = ctx_of(ctx);
        return is_irreducible(c, parse_gp_word(c, expr));
      },
      py::arg("ctx"), py::arg("expr"));

  // quasi-median balls
  m.def(
      "qm_ball",
      [](const py::object& ctx, int radius) { return from_json(ball_to_json(build_ball(ctx_of(ctx), radius))); },
      py::arg("ctx"), py::arg("radius"));
  m.def(
      "qm_ball_dot",
      [](const py::object& ctx, int radius, const std::vector<int>& highlight) {
        return export_dot(build_ball(ctx_of(ctx), radius), highlight);
      },
      py::arg("ctx"), py::arg("radius"), py::arg("highlight") = std::vector<int>{});

  // wreath products
  m.def(
      "wreath_mul",
      [](const py::object& wctx, const std::string& x, const std::string& y) {
        WreathCtx c = wctx_of(wctx);
        WreathElem p = w_mul(c, parse_wreath(c, x), parse_wreath(c, y));
        return from_json(json{{"product", wreath_to_json(c, p)}, {"display", render_wreath(c, p)}});
      },
      py::arg("wctx"), py::arg("x"), py::arg("y"));
  m.def(
      "normalizes_base",
      [](const py::object& wctx, const std::string& x) {
        WreathCtx c = wctx_of(wctx);
        return normalizes_base(c, parse_wreath(c, x));
      },
      py::arg("wctx"), py::arg("x"));

  // truncations
  m.def(
      "factor_through_truncation",
      [](const py::object& wctx, const py::object& pres, const py::object& images, std::size_t max_s) {
        WreathCtx c = wctx_of(wctx);
        FinitePresentation p = pres_from_json(to_json(pres));
        json ij = to_json(images);
        std::map<std::string, WreathElem> imgs;
        for (const auto& [name, j] : ij.items()) imgs.emplace(name, wreath_from_json(c, j));
        return from_json(factor_result_to_json(c, factor_through_truncation(p, c, imgs, max_s)));
      },
      py::arg("wctx"), py::arg("pres"), py::arg("images"), py::arg("max_s") = 64);
  m.def(
      "cayley_clique",
      [](const py::object& b_spec, const std::vector<std::string>& s_keys) {
        GroupSpec B = spec_from_json(to_json(b_spec));
        std::vector<GroupElem> S;
        for (const auto& k : s_keys) S.push_back(dec_key(B, k));
        return cayley_clique(B, S);
      },
      py::arg("B"), py::arg("S"));

  // group-ring units
  m.def(
      "unit_invert",
      [](const py::object& p, std::int64_t mod) -> py::object {
        auto inv = unit_invert(laurent_of(p, mod));
        if (!inv) return py::none();
        return from_json(laurent_to_json(*inv));
      },
      py::arg("p"), py::arg("mod") = 0);
  m.def(
      "is_trivial_unit",
      [](const py::object& p, std::int64_t mod) { return is_trivial_unit(laurent_of(p, mod)); },
      py::arg("p"), py::arg("mod") = 0);
  m.def(
      "brute_inverse",
      [](const py::object& p, std::int64_t mod, std::int64_t lo, std::int64_t hi) -> py::object {
        auto inv = brute_inverse(laurent_of(p, mod), lo, hi);
        if (!inv) return py::none();
        return from_json(laurent_to_json(*inv));
      },
      py::arg("p"), py::arg("mod"), py::arg("lo"), py::arg("hi"));
  m.def("factor_modulus", [](std::int64_t k) { return factor_modulus(k); }, py::arg("k"));

  // lamplighter automorphisms
  m.def(
      "aut_apply",
      [](const py::object& lctx, const py::object& word, const std::string& x) {
        LampCtx c = lctx_of(lctx);
        AutoWord w = autoword_from_json(c, to_json(word));
        WreathElem img = apply(c, w, parse_wreath(c.wctx(), x));
        return from_json(json{{"image", wreath_to_json(c.wctx(), img)},
                              {"display", render_wreath(c.wctx(), img)}});
      },
      py::arg("lctx"), py::arg("word"), py::arg("x"));
  m.def(
      "aut_equal",
      [](const py::object& lctx, const py::object& w1, const py::object& w2) {
        LampCtx c = lctx_of(lctx);
        return equal(c, autoword_from_json(c, to_json(w1)), autoword_from_json(c, to_json(w2)));
      },
      py::arg("lctx"), py::arg("w1"), py::arg("w2"));
  m.def(
      "trans_is_inner",
      [](const py::object& lctx, const py::object& lamp_map) -> py::object {
        LampCtx c = lctx_of(lctx);
        auto conj = trans_is_inner(c, lamp_map_from_json(c, to_json(lamp_map)));
        if (!conj) return py::none();
        return from_json(wreath_to_json(c.wctx(), *conj));
      },
      py::arg("lctx"), py::arg("lamp_map"));

  // Grigorchuk machinery
  m.def("sigma_sub", &sigma_sub, py::arg("w"));
  m.def("u_word", &u_word, py::arg("n"));
  m.def("v_word", &v_word, py::arg("n"));
  m.def(
      "grig_presentation",
      [](int n) { return from_json(pres_to_json(grig_presentation(n))); }, py::arg("n"));
  m.def("grig_presentation_text", &grig_presentation_text, py::arg("n"));
  m.def("free_involutive_reduce", &free_involutive_reduce, py::arg("w"));
}
