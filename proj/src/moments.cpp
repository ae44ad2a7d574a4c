#include "kmoments/moments.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kmoments {

std::vector<BigInt> stirling2_row(unsigned h) {
  std::vector<BigInt> row(h + 1, BigInt(0));
  row[0] = 1;
  for (unsigned n = 1; n <= h; ++n) {
    for (unsigned t = n; t >= 1; --t) row[t] = row[t] * t + row[t - 1];
    row[0] = 0;
  }
  return row;
}

BigInt stirling2(unsigned h, unsigned t) {
  if (t > h) return 0;
  return stirling2_row(h)[t];
}

BigInt stirling2_explicit(unsigned h, unsigned t) {
  BigInt sum = 0;
  for (unsigned j = 0; j <= t; ++j) {
    BigInt term = binom(t, j) * ipow(BigInt(j), h);
    if ((t - j) % 2)
      sum -= term;
    else
      sum += term;
  }
  return sum / factorial(t);
}

BigInt binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt pless_inner_sum(std::span<const BigInt> dist, std::size_t length, unsigned h, unsigned shift) {
  if (shift < h) throw std::invalid_argument("power-of-two shift must be at least h");
  const std::size_t j_top = std::min<std::size_t>(length, h);
  if (dist.size() < j_top + 1)
    throw std::invalid_argument("weight distribution prefix needs " + std::to_string(j_top + 1) + " entries, got " +
                                std::to_string(dist.size()));
  const auto s = stirling2_row(h);
  // coef[t] = t! S(h,t) 2^(shift-t)
  std::vector<BigInt> coef(h + 1);
  BigInt fact = 1;
  for (unsigned t = 0; t <= h; ++t) {
    if (t > 0) fact *= t;
    coef[t] = fact * s[t] * pow2(shift - t);
  }
  const auto n = static_cast<long long>(length);
  BigInt total = 0;
  for (std::size_t j = 0; j <= j_top; ++j) {
    if (dist[j].is_zero()) continue;
    BigInt inner = 0;
    for (unsigned t = static_cast<unsigned>(j); t <= h; ++t) {
      if (coef[t].is_zero()) continue;
      inner += coef[t] * binom(n - static_cast<long long>(j), n - static_cast<long long>(t));
    }
    if (j % 2)
      total -= dist[j] * inner;
    else
      total += dist[j] * inner;
  }
  return total;
}

void require_recursion_applies(const Field& f, Code c) {
  if (uses_theta(c) && f.degree() < 3)
    throw std::domain_error("the recursion for C" + std::to_string(code_number(c)) + " needs r >= 3");
}

PlessCheck pless_check(const Field& f, Code c, unsigned h, std::span<const int> dual_weights,
                       const WeightDistribution& dist) {
  require_recursion_applies(f, c);
  if (dual_weights.size() != f.size() - 1) throw std::invalid_argument("need one dual weight per nonzero a");

  PlessCheck out;
  out.lhs = h == 0 ? 1 : 0;  // zero codeword, 0^0 = 1
  for (int w : dual_weights) out.lhs += ipow(BigInt(w), h);

  const unsigned r = f.degree();
  const unsigned shift = std::max(h, r);
  const BigInt scaled = pless_inner_sum(dist.counts, dist.length, h, shift);
  const BigInt divisor = pow2(shift - r);
  out.rhs = scaled / divisor;
  out.rhs_integral = (scaled % divisor).is_zero();
  out.equal = out.rhs_integral && out.lhs == out.rhs;
  return out;
}

PlessCheck pless_check(const Field& f, Code c, unsigned h) {
  require_recursion_applies(f, c);
  std::vector<int> weights;
  weights.reserve(f.size() - 1);
  for (Element a = 1; a < f.size(); ++a) weights.push_back(static_cast<int>(dual_codeword(f, c, a).weight()));
  const auto n = code_length(f, c);
  return pless_check(f, c, h, weights, weight_distribution(f, c, std::min<std::size_t>(n, h)));
}

BigInt moment_recursive(const Field& f, Code c, unsigned h, std::span<const BigInt> lower,
                        const WeightDistribution& dist) {
  require_recursion_applies(f, c);
  if (h == 0) throw std::invalid_argument("the recursion starts at h = 1; MK^0 = q - 1 is a seed");
  if (lower.size() < h)
    throw std::invalid_argument("need MK^0..MK^" + std::to_string(h - 1) + ", got " + std::to_string(lower.size()) +
                                " moments");
  if (dist.code != c) throw std::invalid_argument("weight distribution belongs to a different code");

  const BigInt q = f.size();
  const bool theta_side = uses_theta(c);
  const BigInt base = theta_side ? q - 1 : q + 1;

  // Binomial expansion of sum_a (q -+ 1 -+ K(a))^h without the l = h term.
  BigInt lower_part = 0;
  for (unsigned l = 0; l < h; ++l) {
    BigInt term = binom(h, l) * ipow(base, h - l) * lower[l];
    if (theta_side && (h + l + 1) % 2) term = -term;
    lower_part += term;
  }
  if (!theta_side) lower_part = -lower_part;

  const unsigned shift = is_doubled(c) ? h : 2 * h;
  BigInt code_part = q * pless_inner_sum(dist.counts, dist.length, h, shift);
  if (theta_side && h % 2) code_part = -code_part;
  return lower_part + code_part;
}

MomentSequence moment_sequence(const Field& f, Code c, unsigned h_max) {
  require_recursion_applies(f, c);
  const auto n = code_length(f, c);
  const auto dist = weight_distribution(f, c, std::min<std::size_t>(n, h_max));
  MomentSequence out{c, h_max, {}};
  out.mk.reserve(h_max + 1);
  out.mk.emplace_back(f.size() - 1);
  for (unsigned h = 1; h <= h_max; ++h) out.mk.push_back(moment_recursive(f, c, h, out.mk, dist));
  return out;
}

}  // namespace kmoments
