#pragma once

#include <string>

#include "wf/trunc.hpp"

namespace wf {

// Words over the alphabet {a, b, c, d}.
using GWord = std::string;

// Letterwise substitution a -> aca, b -> d, c -> b, d -> c, no reduction.
GWord sigma_sub(const GWord& w);

// u_0 = (ad)^4 and v_0 = (adacac)^4, pushed through sigma^n.
GWord u_word(int n);
GWord v_word(int n);

// Generators a,b,c,d; relators a^2, b^2, c^2, d^2, bcd, u_0..u_n, v_0..v_{n-1}.
FinitePresentation grig_presentation(int n);

// Plain-text rendering: <a,b,c,d | a^2, ..., u_n>.
std::string grig_presentation_text(int n);

// Cancels equal adjacent letters using the involution relators.
GWord free_involutive_reduce(const GWord& w);

}  // namespace wf
