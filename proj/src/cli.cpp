#include "wf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "wf/exprparse.hpp"
#include "wf/jsonio.hpp"

namespace wf::cli {

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

WreathCtx wreath_ctx_from(const json& j) {
  return make_wreath_ctx(spec_from_json(j.at("A")), spec_from_json(j.at("B")));
}

LampCtx lamp_ctx_from(const json& j) {
  return make_lamp_ctx(spec_from_json(j.at("F")), spec_from_json(j.at("H")));
}

struct Options {
  std::string ctx_path, wreath_path, lamp_path, pres_path, images_path, dot_path, word_path;
  std::string word2_path, invert_expr, trivial_expr, apply_expr, trans_inner;
  std::vector<std::string> exprs;
  std::vector<int> highlight;
  int radius = 0;
  int grig_n = 0;
  bool grig_text = false;
  std::int64_t mod = 0;
  std::size_t max_s = 64;
};

int dispatch(const std::string& sub, const Options& opt, std::ostream& out) {
  if (sub == "nf") {
    GPContext ctx = gpctx_from_json(load_json(opt.ctx_path));
    Canon c = parse_gp_word(ctx, opt.exprs.at(0));
    emit(out, json{{"word", word_to_json(ctx, c.word())}, {"display", render_gp_word(ctx, c)}});
  } else if (sub == "conj") {
    GPContext ctx = gpctx_from_json(load_json(opt.ctx_path));
    Canon g = parse_gp_word(ctx, opt.exprs.at(0));
    Canon h = parse_gp_word(ctx, opt.exprs.at(1));
    emit(out, json{{"conjugate", is_conjugate(ctx, g, h)}});
  } else if (sub == "support") {
    GPContext ctx = gpctx_from_json(load_json(opt.ctx_path));
    Canon g = parse_gp_word(ctx, opt.exprs.at(0));
    json supp = json::array();
    for (const auto& v : essential_support(ctx, g)) supp.push_back(ctx.graph().name(v.index()));
    emit(out, json{{"support", supp}});
  } else if (sub == "irred") {
    GPContext ctx = gpctx_from_json(load_json(opt.ctx_path));
    emit(out, json{{"irreducible", is_irreducible(ctx, parse_gp_word(ctx, opt.exprs.at(0)))}});
  } else if (sub == "qm-ball") {
    GPContext ctx = gpctx_from_json(load_json(opt.ctx_path));
    QMBall ball = build_ball(ctx, opt.radius);
    if (!opt.dot_path.empty()) {
      std::ofstream dot(opt.dot_path);
      if (!dot) throw std::invalid_argument("cannot write " + opt.dot_path);
      dot << export_dot(ball, opt.highlight);
    }
    emit(out, ball_to_json(ball));
  } else if (sub == "wmul") {
    WreathCtx ctx = wreath_ctx_from(load_json(opt.wreath_path));
    WreathElem x = parse_wreath(ctx, opt.exprs.at(0));
    WreathElem y = parse_wreath(ctx, opt.exprs.at(1));
    WreathElem p = w_mul(ctx, x, y);
    emit(out, json{{"product", wreath_to_json(ctx, p)}, {"display", render_wreath(ctx, p)}});
  } else if (sub == "trunc-factor") {
    WreathCtx ctx = wreath_ctx_from(load_json(opt.wreath_path));
    FinitePresentation pres = pres_from_json(load_json(opt.pres_path));
    json images_json = load_json(opt.images_path);
    std::map<std::string, WreathElem> images;
    for (const auto& [name, j] : images_json.items()) images.emplace(name, wreath_from_json(ctx, j));
    FactorResult res = factor_through_truncation(pres, ctx, images, opt.max_s);
    emit(out, factor_result_to_json(ctx, res));
  } else if (sub == "units") {
    if (opt.invert_expr.empty() == opt.trivial_expr.empty())
      throw CLI::ValidationError("units", "pass exactly one of --invert or --trivial");
    if (!opt.invert_expr.empty()) {
      Laurent p = parse_laurent(opt.invert_expr, opt.mod);
      auto inv = unit_invert(p);
      if (inv)
        emit(out, json{{"inverse", laurent_to_json(*inv).at("coeffs")},
                       {"display", render_laurent(*inv)}});
      else
        emit(out, json{{"unit", false}});
    } else {
      Laurent p = parse_laurent(opt.trivial_expr, opt.mod);
      emit(out, json{{"trivial", is_trivial_unit(p)}});
    }
  } else if (sub == "aut") {
    LampCtx ctx = lamp_ctx_from(load_json(opt.lamp_path));
    int modes = (!opt.apply_expr.empty() ? 1 : 0) + (!opt.word2_path.empty() ? 1 : 0) +
                (!opt.trans_inner.empty() ? 1 : 0);
    if (modes != 1)
      throw CLI::ValidationError("aut", "pass exactly one of --apply, --equal, --trans-inner");
    if (!opt.apply_expr.empty()) {
      AutoWord w = autoword_from_json(ctx, load_json(opt.word_path));
      WreathElem x = parse_wreath(ctx.wctx(), opt.apply_expr);
      WreathElem y = apply(ctx, w, x);
      emit(out, json{{"image", wreath_to_json(ctx.wctx(), y)},
                     {"display", render_wreath(ctx.wctx(), y)}});
    } else if (!opt.word2_path.empty()) {
      AutoWord w1 = autoword_from_json(ctx, load_json(opt.word_path));
      AutoWord w2 = autoword_from_json(ctx, load_json(opt.word2_path));
      emit(out, json{{"equal", equal(ctx, w1, w2)}});
    } else {
      LampMap g = lamp_map_from_json(ctx, json::parse(opt.trans_inner));
      auto conj = trans_is_inner(ctx, g);
      if (conj)
        emit(out, json{{"inner", true}, {"conjugator", wreath_to_json(ctx.wctx(), *conj)}});
      else
        emit(out, json{{"inner", false}});
    }
  } else if (sub == "grig") {
    if (opt.grig_text)
      out << grig_presentation_text(opt.grig_n) << "\n";
    else
      emit(out, pres_to_json(grig_presentation(opt.grig_n)));
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations in wreath products, graph products, and their truncations"};
  app.require_subcommand(1);
  Options opt;

  auto* nf = app.add_subcommand("nf", "canonical form of a graph-product word");
  nf->add_option("--ctx", opt.ctx_path, "context JSON file")->required();
  nf->add_option("expr", opt.exprs, "word expression")->expected(1);

  auto* conj = app.add_subcommand("conj", "conjugacy of two graph-product words");
  conj->add_option("--ctx", opt.ctx_path)->required();
  conj->add_option("expr", opt.exprs)->expected(2);

  auto* support = app.add_subcommand("support", "essential support of a word");
  support->add_option("--ctx", opt.ctx_path)->required();
  support->add_option("expr", opt.exprs)->expected(1);

  auto* irred = app.add_subcommand("irred", "irreducibility of a word");
  irred->add_option("--ctx", opt.ctx_path)->required();
  irred->add_option("expr", opt.exprs)->expected(1);

  auto* ball = app.add_subcommand("qm-ball", "ball of the quasi-median Cayley graph");
  ball->add_option("--ctx", opt.ctx_path)->required();
  ball->add_option("--radius", opt.radius)->required()->check(CLI::NonNegativeNumber);
  ball->add_option("--dot", opt.dot_path, "write DOT text to this path");
  ball->add_option("--highlight", opt.highlight, "hyperplane ids to draw bold");

  auto* wmul = app.add_subcommand("wmul", "multiply two wreath-product elements");
  wmul->add_option("--wreath", opt.wreath_path, "wreath context JSON file")->required();
  wmul->add_option("expr", opt.exprs)->expected(2);

  auto* tf = app.add_subcommand("trunc-factor", "factor a morphism through a truncation");
  tf->add_option("--wreath", opt.wreath_path)->required();
  tf->add_option("--pres", opt.pres_path)->required();
  tf->add_option("--images", opt.images_path)->required();
  tf->add_option("--max-s", opt.max_s, "bound on |S|")->capture_default_str();

  auto* units = app.add_subcommand("units", "Laurent polynomial units");
  units->add_option("--invert", opt.invert_expr, "invert this Laurent expression");
  units->add_option("--trivial", opt.trivial_expr, "test triviality of this unit");
  units->add_option("--mod", opt.mod, "coefficient modulus (0 = Z)");

  auto* aut = app.add_subcommand("aut", "lamplighter automorphisms");
  aut->add_option("--lamp", opt.lamp_path, "lamp context JSON file")->required();
  aut->add_option("--word", opt.word_path, "automorphism word JSON file");
  aut->add_option("--apply", opt.apply_expr, "apply --word to this wreath expression");
  aut->add_option("--equal", opt.word2_path, "compare --word against this word file");
  aut->add_option("--trans-inner", opt.trans_inner, "lamp-map JSON for the inner test");

  auto* grig = app.add_subcommand("grig", "truncated Grigorchuk presentations");
  grig->add_option("--n", opt.grig_n)->required()->check(CLI::NonNegativeNumber);
  grig->add_flag("--text", opt.grig_text, "render as plain text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help lands here
      out << app.help() << "\n";
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    return dispatch(sub, opt, out);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace wf::cli
