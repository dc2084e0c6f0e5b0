#include "wf/trunc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wf/common.hpp"
#include "wf/sgraph.hpp"

namespace wf {

namespace {

GroupElem pos_of(const Syllable& s) { return s.vertex.elem(); }

Word shift_word(const TruncCtx& ctx, const GroupElem& b, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& s : w)
    out.push_back(Syllable{VertexRef::lazy(mul(ctx.B, b, pos_of(s))), s.elem});
  return out;
}

// Length-ish measure used to pick the "shortest" difference: favours small
// canonical encodings, deterministically.
std::pair<std::int64_t, GroupElem> diff_size(const GroupSpec& B, const GroupElem& d) {
  std::int64_t n = 0;
  if (d.is_int()) {
    n = d.as_int() < 0 ? -d.as_int() : d.as_int();
    if (B.kind == SpecKind::cyclic && B.m > 0) n = std::min(n, B.m - n);
  } else if (d.is_vec()) {
    for (auto c : d.as_vec()) n += c < 0 ? -c : c;
  } else {
    for (const auto& s : d.as_word()) n += 1 + (s.val < 0 ? -s.val : s.val);
  }
  return {n, d};
}

}  // namespace

TruncCtx make_trunc_ctx(GroupSpec A, GroupSpec B, const std::vector<GroupElem>& S) {
  if (auto d = validate_spec(A)) throw std::invalid_argument("invalid lamp spec: " + *d);
  if (auto d = validate_spec(B)) throw std::invalid_argument("invalid base spec: " + *d);
  LazyCayley cay(B, S);
  std::vector<GroupElem> sym = cay.connection();
  GPContext gp = GPContext::lazy(std::move(cay), A);
  return TruncCtx{std::move(A), std::move(B), std::move(sym), std::move(gp)};
}

TruncElem t_identity(const TruncCtx& ctx) { return TruncElem{Canon{}, identity(ctx.B)}; }

TruncElem t_lamp(const TruncCtx& ctx, const GroupElem& pos, const GroupElem& val) {
  Word w{Syllable{VertexRef::lazy(canonical(ctx.B, pos)), canonical(ctx.A, val)}};
  return TruncElem{canonicalize(ctx.gp, w), identity(ctx.B)};
}

TruncElem t_cursor(const TruncCtx& ctx, const GroupElem& b) {
  return TruncElem{Canon{}, canonical(ctx.B, b)};
}

TruncElem t_mul(const TruncCtx& ctx, const TruncElem& x, const TruncElem& y) {
  Word w = x.gp.word();
  for (const auto& s : shift_word(ctx, x.cursor, y.gp.word())) w = reduce_push(ctx.gp, std::move(w), s);
  return TruncElem{canonicalize(ctx.gp, w), mul(ctx.B, x.cursor, y.cursor)};
}

TruncElem t_inv(const TruncCtx& ctx, const TruncElem& x) {
  GroupElem binv = inv(ctx.B, x.cursor);
  Word w;
  const Word& xw = x.gp.word();
  for (auto it = xw.rbegin(); it != xw.rend(); ++it)
    w.push_back(Syllable{it->vertex, inv(ctx.A, it->elem)});
  return TruncElem{canonicalize(ctx.gp, shift_word(ctx, binv, w)), binv};
}

TruncElem t_pow(const TruncCtx& ctx, const TruncElem& x, std::int64_t n) {
  TruncElem base = n < 0 ? t_inv(ctx, x) : x;
  std::int64_t k = n < 0 ? -n : n;
  TruncElem acc = t_identity(ctx);
  while (k > 0) {
    if (k & 1) acc = t_mul(ctx, acc, base);
    base = t_mul(ctx, base, base);
    k >>= 1;
  }
  return acc;
}

bool is_trivial(const TruncCtx& ctx, const TruncElem& x) {
  return x.gp.empty() && x.cursor == identity(ctx.B);
}

WreathElem pi_S(const TruncCtx& ctx, const TruncElem& x) {
  WreathCtx wctx{ctx.A, ctx.B};
  WreathElem out = w_identity(wctx);
  for (const auto& s : x.gp.word()) {
    GroupElem pos = pos_of(s);
    auto it = out.lamps.find(pos);
    GroupElem cur = it == out.lamps.end() ? identity(ctx.A) : it->second;
    GroupElem next = mul(ctx.A, cur, s.elem);
    if (next == identity(ctx.A))
      out.lamps.erase(pos);
    else
      out.lamps[pos] = next;
  }
  out.cursor = x.cursor;
  return out;
}

TruncElem t_from_wreath(const TruncCtx& ctx, const WreathElem& w) {
  TruncElem out = t_identity(ctx);
  for (const auto& [k, v] : w.lamps) out = t_mul(ctx, out, t_lamp(ctx, k, v));
  return t_mul(ctx, out, t_cursor(ctx, w.cursor));
}

std::pair<std::string, std::int64_t> parse_letter(const std::string& letter) {
  auto caret = letter.find('^');
  if (caret == std::string::npos) return {letter, 1};
  std::string name = letter.substr(0, caret);
  std::string exp = letter.substr(caret + 1);
  if (name.empty() || exp.empty()) throw std::invalid_argument("malformed relator letter: " + letter);
  std::size_t used = 0;
  std::int64_t e = std::stoll(exp, &used);
  if (used != exp.size()) throw std::invalid_argument("malformed relator letter: " + letter);
  return {name, e};
}

void validate_presentation(const FinitePresentation& pres) {
  std::set<std::string> gens(pres.gens.begin(), pres.gens.end());
  if (gens.size() != pres.gens.size()) throw std::invalid_argument("duplicate generator name");
  for (const auto& rel : pres.rels)
    for (const auto& letter : rel) {
      auto [name, e] = parse_letter(letter);
      (void)e;
      if (!gens.count(name)) throw std::invalid_argument("relator references unknown generator: " + name);
    }
}

std::optional<RelatorFailure> check_hom(const FinitePresentation& pres, const WreathCtx& wctx,
                                        const std::map<std::string, WreathElem>& images) {
  validate_presentation(pres);
  for (const auto& g : pres.gens)
    if (!images.count(g)) throw std::invalid_argument("missing image for generator " + g);
  for (std::size_t i = 0; i < pres.rels.size(); ++i) {
    WreathElem acc = w_identity(wctx);
    for (const auto& letter : pres.rels[i]) {
      auto [name, e] = parse_letter(letter);
      acc = w_mul(wctx, acc, w_pow(wctx, images.at(name), e));
    }
    if (!(acc == w_identity(wctx))) return RelatorFailure{i, acc};
  }
  return std::nullopt;
}

namespace {

// Evaluates one relator in the truncation, collecting every lamp position
// contributed along the way (before any cancellation).
TruncElem eval_relator(const TruncCtx& ctx, const std::vector<std::string>& rel,
                       const std::map<std::string, TruncElem>& lifts, std::set<GroupElem>& visited) {
  TruncElem acc = t_identity(ctx);
  for (const auto& letter : rel) {
    auto [name, e] = parse_letter(letter);
    TruncElem step = t_pow(ctx, lifts.at(name), e < 0 ? -1 : 1);
    std::int64_t reps = e < 0 ? -e : e;
    for (std::int64_t r = 0; r < reps; ++r) {
      for (const auto& s : step.gp.word()) visited.insert(mul(ctx.B, acc.cursor, pos_of(s)));
      acc = t_mul(ctx, acc, step);
    }
  }
  return acc;
}

}  // namespace

FactorResult factor_through_truncation(const FinitePresentation& pres, const WreathCtx& wctx,
                                       const std::map<std::string, WreathElem>& images,
                                       std::size_t max_S_size) {
  if (auto fail = check_hom(pres, wctx, images))
    throw std::invalid_argument("images do not define a morphism: relator " +
                                std::to_string(fail->index) + " survives in the wreath product");

  std::vector<GroupElem> S;
  std::vector<FactorTraceEntry> trace;
  for (;;) {
    TruncCtx ctx = make_trunc_ctx(wctx.A, wctx.B, S);
    std::map<std::string, TruncElem> lifts;
    for (const auto& g : pres.gens) lifts.emplace(g, t_from_wreath(ctx, images.at(g)));

    std::optional<std::size_t> failing;
    std::set<GroupElem> visited;
    for (std::size_t i = 0; i < pres.rels.size(); ++i) {
      visited.clear();
      TruncElem val = eval_relator(ctx, pres.rels[i], lifts, visited);
      if (!is_trivial(ctx, val)) {
        failing = i;
        break;
      }
    }
    if (!failing) return FactorResult{ctx.S, std::move(lifts), std::move(trace)};

    std::optional<std::pair<std::int64_t, GroupElem>> best;
    for (const auto& b1 : visited)
      for (const auto& b2 : visited) {
        if (b1 == b2) continue;
        GroupElem d = mul(wctx.B, inv(wctx.B, b1), b2);
        if (d == identity(wctx.B)) continue;
        if (std::binary_search(ctx.S.begin(), ctx.S.end(), d)) continue;
        auto key = diff_size(wctx.B, d);
        if (!best || key < *best) best = key;
      }
    if (!best)
      throw std::logic_error("relator fails with all visited differences adjoined");
    S = ctx.S;
    S.push_back(best->second);
    S.push_back(inv(wctx.B, best->second));
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    if (S.size() > max_S_size)
      throw limit_error("connection set exceeds max size " + std::to_string(max_S_size));
    trace.push_back(FactorTraceEntry{*failing, best->second, S.size()});
  }
}

int cayley_clique(const GroupSpec& B, const std::vector<GroupElem>& S) {
  LazyCayley cay(B, S);
  std::vector<GroupElem> verts{identity(B)};
  verts.insert(verts.end(), cay.connection().begin(), cay.connection().end());
  std::vector<std::string> names;
  names.reserve(verts.size());
  for (const auto& v : verts) names.push_back(enc_key(B, v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (cay.adjacent(verts[i], verts[j])) edges.emplace_back(names[i], names[j]);
  return clique_number(SimpGraph(std::move(names), edges));
}

}  // namespace wf
