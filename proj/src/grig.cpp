#include "wf/grig.hpp"

#include <stdexcept>

namespace wf {

namespace {

void check_letters(const GWord& w) {
  for (char ch : w)
    if (ch != 'a' && ch != 'b' && ch != 'c' && ch != 'd')
      throw std::invalid_argument(std::string("letter outside {a,b,c,d}: '") + ch + "'");
}

GWord repeat(const GWord& w, int times) {
  GWord out;
  out.reserve(w.size() * static_cast<std::size_t>(times));
  for (int i = 0; i < times; ++i) out += w;
  return out;
}

}  // namespace

GWord sigma_sub(const GWord& w) {
  check_letters(w);
  GWord out;
  out.reserve(w.size() * 3);
  for (char ch : w) {
    switch (ch) {
      case 'a': out += "aca"; break;
      case 'b': out += 'd'; break;
      case 'c': out += 'b'; break;
      case 'd': out += 'c'; break;
    }
  }
  return out;
}

GWord u_word(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  GWord w = repeat("ad", 4);
  for (int i = 0; i < n; ++i) w = sigma_sub(w);
  return w;
}

GWord v_word(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  GWord w = repeat("adacac", 4);
  for (int i = 0; i < n; ++i) w = sigma_sub(w);
  return w;
}

namespace {

std::vector<std::string> letters_of(const GWord& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (char ch : w) out.emplace_back(1, ch);
  return out;
}

}  // namespace

FinitePresentation grig_presentation(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  FinitePresentation pres;
  pres.gens = {"a", "b", "c", "d"};
  for (const auto& g : pres.gens) pres.rels.push_back({g, g});
  pres.rels.push_back({"b", "c", "d"});
  for (int i = 0; i <= n; ++i) pres.rels.push_back(letters_of(u_word(i)));
  for (int i = 0; i < n; ++i) pres.rels.push_back(letters_of(v_word(i)));
  return pres;
}

std::string grig_presentation_text(int n) {
  FinitePresentation pres = grig_presentation(n);
  std::string out = "<a,b,c,d | a^2, b^2, c^2, d^2, bcd";
  for (int i = 0; i <= n; ++i) out += ", " + u_word(i);
  for (int i = 0; i < n; ++i) out += ", " + v_word(i);
  return out + ">";
}

GWord free_involutive_reduce(const GWord& w) {
  check_letters(w);
  GWord stack;
  for (char ch : w) {
    if (!stack.empty() && stack.back() == ch)
      stack.pop_back();
    else
      stack.push_back(ch);
  }
  return stack;
}

}  // namespace wf
