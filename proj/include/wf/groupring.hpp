#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace wf {

// An element of R[X, X^-1] with R = Z (k = 0) or Z/kZ: a finitely supported
// map degree -> nonzero coefficient, residues canonical in [0, k).
struct Laurent {
  std::int64_t k = 0;
  std::map<std::int64_t, std::int64_t> c;
  bool operator==(const Laurent&) const = default;
  auto operator<=>(const Laurent&) const = default;
};

// Canonicalizes (reduces residues, prunes zeros).
Laurent l_make(std::int64_t k, const std::map<std::int64_t, std::int64_t>& coeffs);
Laurent l_zero(std::int64_t k);
Laurent l_one(std::int64_t k);
Laurent l_mono(std::int64_t k, std::int64_t deg, std::int64_t coeff);

Laurent l_add(const Laurent& p, const Laurent& q);
Laurent l_neg(const Laurent& p);
Laurent l_sub(const Laurent& p, const Laurent& q);
Laurent l_mul(const Laurent& p, const Laurent& q);
Laurent l_pow(const Laurent& p, std::int64_t n);  // n >= 0

// Exact unit recognition and inversion. Over Z a unit is +-X^n. Over Z/kZ
// with k = prod p_i^{r_i}, p is a unit iff its reduction mod every p_i is a
// nonzero monomial; the inverse is assembled per prime power by the
// geometric series of the nilpotent part and recombined by CRT. The result
// q always satisfies l_mul(p, q) == 1 exactly.
std::optional<Laurent> unit_invert(const Laurent& p);

// p = c X^n with c an invertible scalar.
bool is_trivial_unit(const Laurent& p);

// Test-grade oracle: exhaustively solves l_mul(p, q) = 1 for q supported on
// degrees [lo, hi], per prime power with verified lifts, recombined by CRT.
// Requires k > 0.
std::optional<Laurent> brute_inverse(const Laurent& p, std::int64_t lo, std::int64_t hi);

// Exact prime factorization by trial division; requires k >= 2.
std::vector<std::pair<std::int64_t, int>> factor_modulus(std::int64_t k);

}  // namespace wf
