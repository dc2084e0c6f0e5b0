#include "wf/groups.hpp"

#include <numeric>
#include <stdexcept>

#include "wf/common.hpp"
#include "wf/graphprod.hpp"

namespace wf {

GroupSpec GroupSpec::cyclic(std::int64_t m) {
  GroupSpec s;
  s.kind = SpecKind::cyclic;
  s.m = m;
  return s;
}

GroupSpec GroupSpec::finite_table(std::vector<std::vector<std::int64_t>> t) {
  GroupSpec s;
  s.kind = SpecKind::table;
  s.table = std::move(t);
  return s;
}

GroupSpec GroupSpec::free_abelian(std::int64_t d) {
  GroupSpec s;
  s.kind = SpecKind::zd;
  s.d = d;
  return s;
}

GroupSpec GroupSpec::free_product_of_cyclics(std::vector<std::int64_t> moduli) {
  GroupSpec s;
  s.kind = SpecKind::freeprod;
  s.moduli = std::move(moduli);
  return s;
}

namespace {

// Number of nontrivial free-product factors (modulus != 1).
int effective_factors(const GroupSpec& s) {
  int n = 0;
  for (auto m : s.moduli)
    if (m != 1) ++n;
  return n;
}

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
  if (m <= 0) return x;
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

[[noreturn]] void mismatch() { throw std::invalid_argument("element does not match group spec"); }

void check_elem(const GroupSpec& spec, const GroupElem& x) {
  switch (spec.kind) {
    case SpecKind::cyclic:
    case SpecKind::table:
      if (!x.is_int()) mismatch();
      if (spec.kind == SpecKind::table) {
        auto n = static_cast<std::int64_t>(spec.table.size());
        if (x.as_int() < 0 || x.as_int() >= n) mismatch();
      }
      break;
    case SpecKind::zd:
      if (!x.is_vec() || static_cast<std::int64_t>(x.as_vec().size()) != spec.d) mismatch();
      break;
    case SpecKind::freeprod:
      if (!x.is_word()) mismatch();
      for (const auto& s : x.as_word())
        if (s.factor < 0 || s.factor >= static_cast<std::int32_t>(spec.moduli.size())) mismatch();
      break;
  }
}

// The free-product machinery delegates to the graph-product engine over an
// edgeless graph whose vertices are the cyclic factors.
GPContext freeprod_ctx(const GroupSpec& spec) {
  std::vector<std::string> names;
  std::vector<GroupSpec> specs;
  names.reserve(spec.moduli.size());
  for (std::size_t i = 0; i < spec.moduli.size(); ++i) {
    names.push_back("z" + std::to_string(i));
    specs.push_back(GroupSpec::cyclic(spec.moduli[i]));
  }
  return GPContext::finite(SimpGraph(std::move(names), {}), std::move(specs));
}

Word fp_to_word(const FpWord& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& s : w)
    out.push_back(Syllable{VertexRef::finite(s.factor), GroupElem::integer(s.val)});
  return out;
}

FpWord word_to_fp(const Word& w) {
  FpWord out;
  out.reserve(w.size());
  for (const auto& s : w)
    out.push_back(FpSyllable{s.vertex.index(), s.elem.as_int()});
  return out;
}

GroupElem fp_canonical(const GroupSpec& spec, const FpWord& w) {
  return GroupElem::word(word_to_fp(canonicalize(freeprod_ctx(spec), fp_to_word(w)).word()));
}

}  // namespace

bool GroupSpec::is_finite() const {
  switch (kind) {
    case SpecKind::cyclic: return m > 0;
    case SpecKind::table: return true;
    case SpecKind::zd: return d == 0;
    case SpecKind::freeprod: {
      if (effective_factors(*this) >= 2) return false;
      for (auto mm : moduli)
        if (mm == 0) return false;
      return true;
    }
  }
  return false;
}

std::uint64_t GroupSpec::order() const {
  if (!is_finite()) throw std::domain_error("infinite group has no order");
  switch (kind) {
    case SpecKind::cyclic: return static_cast<std::uint64_t>(m);
    case SpecKind::table: return table.size();
    case SpecKind::zd: return 1;
    case SpecKind::freeprod: {
      std::uint64_t n = 1;
      for (auto mm : moduli)
        if (mm != 1) n *= static_cast<std::uint64_t>(mm);
      return n;
    }
  }
  return 1;
}

bool GroupSpec::is_trivial() const { return is_finite() && order() == 1; }

std::optional<std::string> validate_spec(const GroupSpec& spec) {
  switch (spec.kind) {
    case SpecKind::cyclic:
      if (spec.m < 0) return "cyclic modulus must be >= 0";
      return std::nullopt;
    case SpecKind::zd:
      if (spec.d < 0) return "free-abelian rank must be >= 0";
      return std::nullopt;
    case SpecKind::freeprod:
      for (auto m : spec.moduli)
        if (m < 0) return "free-product factor modulus must be >= 0";
      return std::nullopt;
    case SpecKind::table: {
      const auto& t = spec.table;
      auto n = t.size();
      if (n == 0) return "empty table";
      for (std::size_t i = 0; i < n; ++i) {
        if (t[i].size() != n) return "non-square table (row " + std::to_string(i) + ")";
        for (auto v : t[i])
          if (v < 0 || static_cast<std::size_t>(v) >= n)
            return "table entry out of range in row " + std::to_string(i);
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (t[0][i] != static_cast<std::int64_t>(i)) return "index 0 is not a left identity at " + std::to_string(i);
        if (t[i][0] != static_cast<std::int64_t>(i)) return "index 0 is not a right identity at " + std::to_string(i);
      }
      for (std::size_t i = 0; i < n; ++i) {
        bool has_inv = false;
        for (std::size_t j = 0; j < n && !has_inv; ++j)
          if (t[i][j] == 0 && t[j][i] == 0) has_inv = true;
        if (!has_inv) return "no inverse for " + std::to_string(i);
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            auto ij = static_cast<std::size_t>(t[i][j]);
            auto jk = static_cast<std::size_t>(t[j][k]);
            if (t[ij][k] != t[i][jk])
              return "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                     std::to_string(k) + ")";
          }
      return std::nullopt;
    }
  }
  return "unknown spec kind";
}

GroupElem identity(const GroupSpec& spec) {
  switch (spec.kind) {
    case SpecKind::cyclic:
    case SpecKind::table: return GroupElem::integer(0);
    case SpecKind::zd: return GroupElem::vec(std::vector<std::int64_t>(static_cast<std::size_t>(spec.d), 0));
    case SpecKind::freeprod: return GroupElem::word({});
  }
  return GroupElem::integer(0);
}

bool is_identity(const GroupSpec& spec, const GroupElem& x) { return canonical(spec, x) == identity(spec); }

GroupElem canonical(const GroupSpec& spec, const GroupElem& x) {
  check_elem(spec, x);
  switch (spec.kind) {
    case SpecKind::cyclic: return GroupElem::integer(mod_reduce(x.as_int(), spec.m));
    case SpecKind::table: return x;
    case SpecKind::zd: return x;
    case SpecKind::freeprod: return fp_canonical(spec, x.as_word());
  }
  return x;
}

GroupElem mul(const GroupSpec& spec, const GroupElem& x, const GroupElem& y) {
  check_elem(spec, x);
  check_elem(spec, y);
  switch (spec.kind) {
    case SpecKind::cyclic: return GroupElem::integer(mod_reduce(x.as_int() + y.as_int(), spec.m));
    case SpecKind::table:
      return GroupElem::integer(spec.table[static_cast<std::size_t>(x.as_int())][static_cast<std::size_t>(y.as_int())]);
    case SpecKind::zd: {
      auto v = x.as_vec();
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += y.as_vec()[i];
      return GroupElem::vec(std::move(v));
    }
    case SpecKind::freeprod: {
      FpWord w = x.as_word();
      w.insert(w.end(), y.as_word().begin(), y.as_word().end());
      return fp_canonical(spec, w);
    }
  }
  return x;
}

GroupElem inv(const GroupSpec& spec, const GroupElem& x) {
  check_elem(spec, x);
  switch (spec.kind) {
    case SpecKind::cyclic: return GroupElem::integer(mod_reduce(-x.as_int(), spec.m));
    case SpecKind::table: {
      auto n = spec.table.size();
      auto i = static_cast<std::size_t>(x.as_int());
      for (std::size_t j = 0; j < n; ++j)
        if (spec.table[i][j] == 0) return GroupElem::integer(static_cast<std::int64_t>(j));
      throw std::invalid_argument("no inverse in table");
    }
    case SpecKind::zd: {
      auto v = x.as_vec();
      for (auto& c : v) c = -c;
      return GroupElem::vec(std::move(v));
    }
    case SpecKind::freeprod: {
      FpWord w;
      const auto& xs = x.as_word();
      w.reserve(xs.size());
      for (auto it = xs.rbegin(); it != xs.rend(); ++it)
        w.push_back(FpSyllable{it->factor, -it->val});
      return fp_canonical(spec, w);
    }
  }
  return x;
}

GroupElem power(const GroupSpec& spec, const GroupElem& x, std::int64_t n) {
  GroupElem base = n < 0 ? inv(spec, x) : canonical(spec, x);
  std::int64_t k = n < 0 ? -n : n;
  GroupElem acc = identity(spec);
  while (k > 0) {
    if (k & 1) acc = mul(spec, acc, base);
    base = mul(spec, base, base);
    k >>= 1;
  }
  return acc;
}

std::optional<std::uint64_t> elem_order(const GroupSpec& spec, const GroupElem& x) {
  GroupElem c = canonical(spec, x);
  switch (spec.kind) {
    case SpecKind::cyclic: {
      if (c.as_int() == 0) return 1;
      if (spec.m == 0) return std::nullopt;
      return static_cast<std::uint64_t>(spec.m / std::gcd(spec.m, c.as_int()));
    }
    case SpecKind::table: {
      std::uint64_t r = 1;
      GroupElem p = c;
      while (!(p == identity(spec))) {
        p = mul(spec, p, c);
        ++r;
      }
      return r;
    }
    case SpecKind::zd: return c == identity(spec) ? std::optional<std::uint64_t>(1) : std::nullopt;
    case SpecKind::freeprod: {
      // Torsion elements are conjugates of vertex-group elements: cyclically
      // reduce and read the order off a single-syllable core.
      auto ctx = freeprod_ctx(spec);
      auto cc = cyclic_reduce(ctx, canonicalize(ctx, fp_to_word(c.as_word())));
      const Word& core = cc.core.word();
      if (core.empty()) return 1;
      if (core.size() > 1) return std::nullopt;
      auto factor = core[0].vertex.index();
      return elem_order(GroupSpec::cyclic(spec.moduli[static_cast<std::size_t>(factor)]), core[0].elem);
    }
  }
  return std::nullopt;
}

GroupElem conj_canonical(const GroupSpec& spec, const GroupElem& x) {
  GroupElem c = canonical(spec, x);
  switch (spec.kind) {
    case SpecKind::cyclic:
    case SpecKind::zd: return c;
    case SpecKind::table: {
      GroupElem best = c;
      for (const auto& t : all_elems(spec)) {
        GroupElem conj = mul(spec, mul(spec, t, c), inv(spec, t));
        if (conj < best) best = conj;
      }
      return best;
    }
    case SpecKind::freeprod: {
      auto ctx = freeprod_ctx(spec);
      return GroupElem::word(word_to_fp(cyclic_canon(ctx, canonicalize(ctx, fp_to_word(c.as_word()))).word()));
    }
  }
  return c;
}

std::vector<GroupElem> all_elems(const GroupSpec& spec) {
  if (!spec.is_finite()) throw std::domain_error("cannot enumerate an infinite group");
  std::vector<GroupElem> out;
  switch (spec.kind) {
    case SpecKind::cyclic:
    case SpecKind::table:
      for (std::uint64_t i = 0; i < spec.order(); ++i) out.push_back(GroupElem::integer(static_cast<std::int64_t>(i)));
      break;
    case SpecKind::zd: out.push_back(identity(spec)); break;
    case SpecKind::freeprod: {
      out.push_back(identity(spec));
      for (std::size_t f = 0; f < spec.moduli.size(); ++f)
        for (std::int64_t v = 1; v < spec.moduli[f]; ++v)
          out.push_back(GroupElem::word({FpSyllable{static_cast<std::int32_t>(f), v}}));
      break;
    }
  }
  return out;
}

std::vector<GroupElem> nontrivial_elems(const GroupSpec& spec) {
  auto v = all_elems(spec);
  v.erase(v.begin());
  return v;
}

std::string enc_key(const GroupSpec& spec, const GroupElem& x) {
  GroupElem c = canonical(spec, x);
  switch (spec.kind) {
    case SpecKind::cyclic:
    case SpecKind::table: return std::to_string(c.as_int());
    case SpecKind::zd: {
      std::string s;
      const auto& v = c.as_vec();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
      }
      return s;
    }
    case SpecKind::freeprod: {
      const auto& w = c.as_word();
      if (w.empty()) return "1";
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '*';
        s += "z" + std::to_string(w[i].factor) + "^" + std::to_string(w[i].val);
      }
      return s;
    }
  }
  return "";
}

namespace {

std::int64_t parse_int(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) throw parse_error(start, "expected integer in element key");
  return std::stoll(s.substr(start, i - start));
}

}  // namespace

GroupElem dec_key(const GroupSpec& spec, const std::string& s) {
  std::size_t i = 0;
  switch (spec.kind) {
    case SpecKind::cyclic:
    case SpecKind::table: {
      auto n = parse_int(s, i);
      if (i != s.size()) throw parse_error(i, "trailing characters in element key");
      return canonical(spec, GroupElem::integer(n));
    }
    case SpecKind::zd: {
      std::vector<std::int64_t> v;
      if (!s.empty()) {
        v.push_back(parse_int(s, i));
        while (i < s.size()) {
          if (s[i] != ',') throw parse_error(i, "expected ',' in vector key");
          ++i;
          v.push_back(parse_int(s, i));
        }
      }
      return canonical(spec, GroupElem::vec(std::move(v)));
    }
    case SpecKind::freeprod: {
      if (s == "1") return identity(spec);
      FpWord w;
      while (i < s.size()) {
        if (s[i] != 'z') throw parse_error(i, "expected factor letter 'z'");
        ++i;
        auto f = parse_int(s, i);
        std::int64_t e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = parse_int(s, i);
        }
        w.push_back(FpSyllable{static_cast<std::int32_t>(f), e});
        if (i < s.size()) {
          if (s[i] != '*') throw parse_error(i, "expected '*' between syllables");
          ++i;
        }
      }
      return canonical(spec, GroupElem::word(std::move(w)));
    }
  }
  throw std::invalid_argument("unknown spec kind");
}

}  // namespace wf
