#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wf {

enum class SpecKind { cyclic, table, zd, freeprod };

// One syllable of a free-product-of-cyclics element: (factor index, residue).
struct FpSyllable {
  std::int32_t factor = 0;
  std::int64_t val = 0;
  auto operator<=>(const FpSyllable&) const = default;
};
using FpWord = std::vector<FpSyllable>;

// Description of a base group. Cyclic(0) is Z; FiniteTable has identity at
// index 0; FreeProductOfCyclics factors are cyclic groups given by moduli
// (0 again meaning Z).
struct GroupSpec {
  SpecKind kind = SpecKind::cyclic;
  std::int64_t m = 0;                          // cyclic modulus
  std::vector<std::vector<std::int64_t>> table;
  std::int64_t d = 0;                          // free-abelian rank
  std::vector<std::int64_t> moduli;            // free-product factors

  static GroupSpec cyclic(std::int64_t m);
  static GroupSpec finite_table(std::vector<std::vector<std::int64_t>> t);
  static GroupSpec free_abelian(std::int64_t d);
  static GroupSpec free_product_of_cyclics(std::vector<std::int64_t> moduli);

  bool operator==(const GroupSpec&) const = default;

  bool is_finite() const;
  // Group order; throws std::domain_error for infinite groups.
  std::uint64_t order() const;
  bool is_trivial() const;
};

// An element of some GroupSpec. The payload variant must match the spec kind:
// integer for cyclic/table, vector for zd, FpWord for freeprod. Payloads are
// kept canonical (reduced residues, canonical free-product words) so equality
// is payload equality.
class GroupElem {
 public:
  GroupElem() : v_(std::int64_t{0}) {}
  static GroupElem integer(std::int64_t n) { return GroupElem(Payload(n)); }
  static GroupElem vec(std::vector<std::int64_t> v) { return GroupElem(Payload(std::move(v))); }
  static GroupElem word(FpWord w) { return GroupElem(Payload(std::move(w))); }

  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_vec() const { return std::holds_alternative<std::vector<std::int64_t>>(v_); }
  bool is_word() const { return std::holds_alternative<FpWord>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const std::vector<std::int64_t>& as_vec() const { return std::get<std::vector<std::int64_t>>(v_); }
  const FpWord& as_word() const { return std::get<FpWord>(v_); }

  bool operator==(const GroupElem&) const = default;
  auto operator<=>(const GroupElem&) const = default;

 private:
  using Payload = std::variant<std::int64_t, std::vector<std::int64_t>, FpWord>;
  explicit GroupElem(Payload p) : v_(std::move(p)) {}
  Payload v_;
};

// nullopt means the spec is valid; otherwise a human-readable diagnostic
// naming the failing triple/element.
std::optional<std::string> validate_spec(const GroupSpec& spec);

GroupElem identity(const GroupSpec& spec);
bool is_identity(const GroupSpec& spec, const GroupElem& x);
// Reduces the payload to its canonical form (residue reduction, free-product
// normal form). Throws std::invalid_argument on kind mismatch.
GroupElem canonical(const GroupSpec& spec, const GroupElem& x);
GroupElem mul(const GroupSpec& spec, const GroupElem& x, const GroupElem& y);
GroupElem inv(const GroupSpec& spec, const GroupElem& x);
GroupElem power(const GroupSpec& spec, const GroupElem& x, std::int64_t n);
// Least r > 0 with x^r = 1, or nullopt for infinite order.
std::optional<std::uint64_t> elem_order(const GroupSpec& spec, const GroupElem& x);

// Canonical representative of the conjugacy class of x within its own
// group: the identity map for abelian kinds, the least conjugate for
// tables, the cyclic normal form for free products.
GroupElem conj_canonical(const GroupSpec& spec, const GroupElem& x);

// All elements of a finite spec, identity first, in a fixed enumeration
// order. Throws std::domain_error for infinite specs.
std::vector<GroupElem> all_elems(const GroupSpec& spec);
std::vector<GroupElem> nontrivial_elems(const GroupSpec& spec);

// Compact textual encoding used for lamp keys and lazy vertex names:
// integers for cyclic, "a,b" for zd, "z0^1*z1^2" for free products.
std::string enc_key(const GroupSpec& spec, const GroupElem& x);
GroupElem dec_key(const GroupSpec& spec, const std::string& s);

}  // namespace wf
