#include "wf/groupring.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace wf {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t k) {
  if (k <= 0) return x;
  std::int64_t r = x % k;
  return r < 0 ? r + k : r;
}

void check_same_ring(const Laurent& p, const Laurent& q) {
  if (p.k != q.k) throw std::invalid_argument("Laurent moduli differ");
}

// Extended gcd inverse; m >= 2, gcd(a, m) must be 1.
std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, new_t = 1, r = m, new_r = mod_reduce(a, m);
  while (new_r != 0) {
    std::int64_t qt = r / new_r;
    t = std::exchange(new_t, t - qt * new_t);
    r = std::exchange(new_r, r - qt * new_r);
  }
  if (r != 1) throw std::invalid_argument("not invertible");
  return mod_reduce(t, m);
}

Laurent reduce_mod(const Laurent& p, std::int64_t m) {
  Laurent out = l_zero(m);
  for (const auto& [d, c] : p.c) {
    std::int64_t r = mod_reduce(c, m);
    if (r != 0) out.c[d] = r;
  }
  return out;
}

}  // namespace

Laurent l_make(std::int64_t k, const std::map<std::int64_t, std::int64_t>& coeffs) {
  if (k < 0) throw std::invalid_argument("modulus must be >= 0");
  Laurent out;
  out.k = k;
  for (const auto& [d, c] : coeffs) {
    std::int64_t r = mod_reduce(c, k);
    if (r != 0) out.c[d] = r;
  }
  return out;
}

Laurent l_zero(std::int64_t k) { return l_make(k, {}); }
Laurent l_one(std::int64_t k) { return l_make(k, {{0, 1}}); }
Laurent l_mono(std::int64_t k, std::int64_t deg, std::int64_t coeff) { return l_make(k, {{deg, coeff}}); }

Laurent l_add(const Laurent& p, const Laurent& q) {
  check_same_ring(p, q);
  Laurent out = p;
  for (const auto& [d, c] : q.c) {
    std::int64_t r = mod_reduce(out.c[d] + c, p.k);
    if (r == 0)
      out.c.erase(d);
    else
      out.c[d] = r;
  }
  return out;
}

Laurent l_neg(const Laurent& p) {
  Laurent out = l_zero(p.k);
  for (const auto& [d, c] : p.c) out.c[d] = mod_reduce(-c, p.k);
  return out;
}

Laurent l_sub(const Laurent& p, const Laurent& q) { return l_add(p, l_neg(q)); }

Laurent l_mul(const Laurent& p, const Laurent& q) {
  check_same_ring(p, q);
  Laurent out = l_zero(p.k);
  for (const auto& [d1, c1] : p.c)
    for (const auto& [d2, c2] : q.c) {
      std::int64_t d = d1 + d2;
      std::int64_t r = mod_reduce(out.c[d] + mod_reduce(c1 * c2, p.k), p.k);
      if (r == 0)
        out.c.erase(d);
      else
        out.c[d] = r;
    }
  return out;
}

Laurent l_pow(const Laurent& p, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("l_pow needs n >= 0");
  Laurent acc = l_one(p.k);
  Laurent base = p;
  while (n > 0) {
    if (n & 1) acc = l_mul(acc, base);
    base = l_mul(base, base);
    n >>= 1;
  }
  return acc;
}

std::vector<std::pair<std::int64_t, int>> factor_modulus(std::int64_t k) {
  if (k < 2) throw std::invalid_argument("factor_modulus needs k >= 2");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= k; ++p)
    if (k % p == 0) {
      int r = 0;
      while (k % p == 0) {
        k /= p;
        ++r;
      }
      out.emplace_back(p, r);
    }
  if (k > 1) out.emplace_back(k, 1);
  return out;
}

std::optional<Laurent> unit_invert(const Laurent& p) {
  if (p.k == 0) {
    // Integral domain: units are exactly +-X^n.
    if (p.c.size() != 1) return std::nullopt;
    auto [deg, coeff] = *p.c.begin();
    if (coeff != 1 && coeff != -1) return std::nullopt;
    return l_mono(0, -deg, coeff);
  }
  if (p.k == 1) return l_zero(1);  // the zero ring

  auto primes = factor_modulus(p.k);
  for (const auto& [pi, ri] : primes) {
    (void)ri;
    if (reduce_mod(p, pi).c.size() != 1) return std::nullopt;
  }

  // Per prime power: p = c X^n (1 + a) with a nilpotent, so
  // p^{-1} = (c X^n)^{-1} sum (-a)^j.
  std::vector<std::pair<std::int64_t, Laurent>> partial;  // (prime power, inverse mod it)
  for (const auto& [pi, ri] : primes) {
    std::int64_t q = 1;
    for (int j = 0; j < ri; ++j) q *= pi;
    Laurent pq = reduce_mod(p, q);
    auto mono = *reduce_mod(p, pi).c.begin();  // (n_i, c_i mod p_i)
    std::int64_t n = mono.first;
    std::int64_t chat = pq.c.at(n);  // lift of c_i, invertible mod q
    Laurent u0 = l_mono(q, -n, mod_inv(chat, q));
    Laurent a = l_sub(l_mul(u0, pq), l_one(q));
    Laurent series = l_one(q);
    Laurent apow = l_one(q);
    for (int j = 1; j < ri; ++j) {
      apow = l_mul(apow, a);
      series = (j % 2 == 1) ? l_sub(series, apow) : l_add(series, apow);
    }
    partial.emplace_back(q, l_mul(u0, series));
  }

  // CRT recombination, coefficient by coefficient.
  Laurent inv = l_zero(p.k);
  std::set<std::int64_t> degrees;
  for (const auto& [q, part] : partial)
    for (const auto& [d, c] : part.c) degrees.insert(d);
  for (std::int64_t d : degrees) {
    std::int64_t x = 0, m = 1;
    for (const auto& [q, part] : partial) {
      auto it = part.c.find(d);
      std::int64_t target = it == part.c.end() ? 0 : it->second;
      // solve x' = x mod m, x' = target mod q
      std::int64_t delta = mod_reduce(target - x, q);
      std::int64_t step = mod_reduce(delta * mod_inv(m % q, q), q);
      x = x + m * step;
      m *= q;
    }
    std::int64_t r = mod_reduce(x, p.k);
    if (r != 0) inv.c[d] = r;
  }

  if (!(l_mul(p, inv) == l_one(p.k))) throw std::logic_error("unit_invert produced a non-inverse");
  return inv;
}

bool is_trivial_unit(const Laurent& p) {
  if (p.k == 1) return true;
  if (p.c.size() != 1) return false;
  std::int64_t coeff = p.c.begin()->second;
  if (p.k == 0) return coeff == 1 || coeff == -1;
  return std::gcd(coeff, p.k) == 1;
}

namespace {

// All q with support in the window solving p q = 1 mod m, by raw
// enumeration with early abort; m prime here, so there is at most one.
std::vector<std::vector<std::int64_t>> window_solutions(const Laurent& p, std::int64_t m,
                                                        std::int64_t lo, std::int64_t hi) {
  std::vector<std::vector<std::int64_t>> sols;
  const std::size_t w = static_cast<std::size_t>(hi - lo + 1);
  Laurent pm = reduce_mod(p, m);
  if (pm.c.empty()) return sols;
  std::int64_t pmin = pm.c.begin()->first, pmax = pm.c.rbegin()->first;
  std::vector<std::int64_t> q(w, 0);
  for (;;) {
    bool ok = true;
    for (std::int64_t d = pmin + lo; d <= pmax + hi && ok; ++d) {
      std::int64_t acc = 0;
      for (const auto& [dp, cp] : pm.c) {
        std::int64_t j = d - dp - lo;
        if (j >= 0 && j < static_cast<std::int64_t>(w)) acc += cp * q[static_cast<std::size_t>(j)];
      }
      if (mod_reduce(acc, m) != (d == 0 ? 1 : 0)) ok = false;
    }
    if (ok) sols.push_back(q);
    // odometer
    std::size_t i = 0;
    while (i < w && ++q[i] == m) q[i++] = 0;
    if (i == w) break;
  }
  return sols;
}

// Solutions mod p^r via verified lifts of the mod-p solutions.
std::vector<std::vector<std::int64_t>> prime_power_solutions(const Laurent& p, std::int64_t prime,
                                                             int r, std::int64_t lo, std::int64_t hi) {
  auto sols = window_solutions(p, prime, lo, hi);
  const std::size_t w = static_cast<std::size_t>(hi - lo + 1);
  std::int64_t m = prime;
  for (int level = 1; level < r; ++level) {
    std::int64_t next_m = m * prime;
    Laurent pm = reduce_mod(p, next_m);
    std::vector<std::vector<std::int64_t>> lifted;
    std::vector<std::int64_t> e(w, 0);
    for (const auto& base : sols) {
      e.assign(w, 0);
      for (;;) {
        std::vector<std::int64_t> cand(w);
        for (std::size_t i = 0; i < w; ++i) cand[i] = base[i] + m * e[i];
        // verify p*cand = 1 mod next_m
        bool ok = true;
        if (pm.c.empty()) {
          ok = false;
        } else {
          std::int64_t pmin = pm.c.begin()->first, pmax = pm.c.rbegin()->first;
          for (std::int64_t d = pmin + lo; d <= pmax + hi && ok; ++d) {
            std::int64_t acc = 0;
            for (const auto& [dp, cp] : pm.c) {
              std::int64_t j = d - dp - lo;
              if (j >= 0 && j < static_cast<std::int64_t>(w)) acc += cp * cand[static_cast<std::size_t>(j)];
            }
            if (mod_reduce(acc, next_m) != (d == 0 ? 1 : 0)) ok = false;
          }
        }
        if (ok) lifted.push_back(cand);
        std::size_t i = 0;
        while (i < w && ++e[i] == prime) e[i++] = 0;
        if (i == w) break;
      }
    }
    sols = std::move(lifted);
    m = next_m;
  }
  return sols;
}

}  // namespace

std::optional<Laurent> brute_inverse(const Laurent& p, std::int64_t lo, std::int64_t hi) {
  if (p.k <= 0) throw std::invalid_argument("brute_inverse needs k > 0");
  if (lo > hi) throw std::invalid_argument("empty window");
  if (p.k == 1) return l_zero(1);
  const std::size_t w = static_cast<std::size_t>(hi - lo + 1);

  auto primes = factor_modulus(p.k);
  std::vector<std::int64_t> powers;
  std::vector<std::vector<std::vector<std::int64_t>>> per_prime;
  for (const auto& [pi, ri] : primes) {
    auto sols = prime_power_solutions(p, pi, ri, lo, hi);
    if (sols.empty()) return std::nullopt;
    std::int64_t q = 1;
    for (int j = 0; j < ri; ++j) q *= pi;
    powers.push_back(q);
    per_prime.push_back(std::move(sols));
  }

  // CRT every combination and verify exactly (solution sets are tiny).
  std::vector<std::size_t> pick(per_prime.size(), 0);
  for (;;) {
    std::map<std::int64_t, std::int64_t> coeffs;
    for (std::size_t i = 0; i < w; ++i) {
      std::int64_t x = 0, m = 1;
      for (std::size_t t = 0; t < per_prime.size(); ++t) {
        std::int64_t target = per_prime[t][pick[t]][i];
        std::int64_t delta = mod_reduce(target - x, powers[t]);
        std::int64_t step = mod_reduce(delta * mod_inv(m % powers[t], powers[t]), powers[t]);
        x += m * step;
        m *= powers[t];
      }
      coeffs[lo + static_cast<std::int64_t>(i)] = mod_reduce(x, p.k);
    }
    Laurent cand = l_make(p.k, coeffs);
    if (l_mul(p, cand) == l_one(p.k)) return cand;
    std::size_t t = 0;
    while (t < per_prime.size() && ++pick[t] == per_prime[t].size()) pick[t++] = 0;
    if (t == per_prime.size()) break;
  }
  return std::nullopt;
}

}  // namespace wf
