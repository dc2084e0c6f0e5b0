#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wf/common.hpp"
#include "wf/graphprod.hpp"
#include "wf/wreath.hpp"

namespace wf {

// The truncated group A square_S B = Gamma_S A x| B, over the lazy Cayley
// graph Gamma_S = Cayl(B, S). S is symmetrized and identity-stripped.
struct TruncCtx {
  GroupSpec A;
  GroupSpec B;
  std::vector<GroupElem> S;  // canonical, symmetric, sorted
  GPContext gp;              // lazy context (Gamma_S, uniform A)
};

TruncCtx make_trunc_ctx(GroupSpec A, GroupSpec B, const std::vector<GroupElem>& S);

struct TruncElem {
  Canon gp;          // word over Gamma_S A; syllable positions are canonical B-elements
  GroupElem cursor;  // element of B
  bool operator==(const TruncElem&) const = default;
  auto operator<=>(const TruncElem&) const = default;
};

TruncElem t_identity(const TruncCtx& ctx);
TruncElem t_lamp(const TruncCtx& ctx, const GroupElem& pos, const GroupElem& val);
TruncElem t_cursor(const TruncCtx& ctx, const GroupElem& b);

// (w1, b1)(w2, b2) = (w1 * shift_{b1}(w2), b1 b2): B acts by relabelling
// syllable positions through left multiplication.
TruncElem t_mul(const TruncCtx& ctx, const TruncElem& x, const TruncElem& y);
TruncElem t_inv(const TruncCtx& ctx, const TruncElem& x);
TruncElem t_pow(const TruncCtx& ctx, const TruncElem& x, std::int64_t n);

bool is_trivial(const TruncCtx& ctx, const TruncElem& x);

// Canonical quotient onto A wr B: per-position ordered product of syllables.
WreathElem pi_S(const TruncCtx& ctx, const TruncElem& x);

// Lift of a wreath element along pi_S: one lamp syllable per support point,
// in canonical key order.
TruncElem t_from_wreath(const TruncCtx& ctx, const WreathElem& w);

// Generators with relator words; letters are "s", "s^-1" or "s^k".
struct FinitePresentation {
  std::vector<std::string> gens;
  std::vector<std::vector<std::string>> rels;
};

std::pair<std::string, std::int64_t> parse_letter(const std::string& letter);
void validate_presentation(const FinitePresentation& pres);

struct RelatorFailure {
  std::size_t index = 0;
  WreathElem residual;
};

// Evaluates every relator on the images; nullopt when all are trivial.
std::optional<RelatorFailure> check_hom(const FinitePresentation& pres, const WreathCtx& wctx,
                                        const std::map<std::string, WreathElem>& images);

struct FactorTraceEntry {
  std::size_t relator = 0;
  GroupElem added;           // the difference adjoined (with its inverse)
  std::size_t s_size = 0;    // |S| afterwards
};

struct FactorResult {
  std::vector<GroupElem> S;
  std::map<std::string, TruncElem> lifted;
  std::vector<FactorTraceEntry> trace;
};

// Grows S from the empty set until every relator dies in A square_S B:
// on failure the shortest pairwise difference of the lamp positions visited
// by the failing relator is adjoined (ties by canonical encoding order).
// Throws std::invalid_argument when check_hom fails and limit_error when |S|
// would exceed max_S_size.
FactorResult factor_through_truncation(const FinitePresentation& pres, const WreathCtx& wctx,
                                       const std::map<std::string, WreathElem>& images,
                                       std::size_t max_S_size);

// clique(Gamma_S), computed exactly on the finite graph S u {1}.
int cayley_clique(const GroupSpec& B, const std::vector<GroupElem>& S);

}  // namespace wf
