#pragma once

// Power moments of Kloosterman sums from weight distributions.
//
// Pless's power moment identity applied to the dual of C_i, whose nonzero
// codewords c_i(a) have weight linear in K(a), expresses
// sum_a w(c_i(a))^h through C_{i,0..h}. Expanding the left side binomially
// gives MK^h in terms of MK^0..MK^{h-1} and that prefix of the weight
// distribution. All arithmetic is exact.

#include <cstddef>
#include <span>
#include <vector>

#include "kmoments/bigint.hpp"
#include "kmoments/codes.hpp"
#include "kmoments/gf2r.hpp"

namespace kmoments {

/// Stirling number of the second kind via S(h,t) = t S(h-1,t) + S(h-1,t-1).
BigInt stirling2(unsigned h, unsigned t);

/// S(h,t) from the alternating sum (1/t!) sum_j (-1)^(t-j) C(t,j) j^h.
BigInt stirling2_explicit(unsigned h, unsigned t);

/// S(h, 0..h).
std::vector<BigInt> stirling2_row(unsigned h);

/// C(n, k), zero when k < 0 or k > n (and for n < 0).
BigInt binom(long long n, long long k);

BigInt factorial(unsigned n);

/// sum_{j<=min(N,h)} (-1)^j C_{i,j} sum_{t=j}^{h} t! S(h,t) 2^(shift-t) C(N-j, N-t),
/// where every 2^(shift-t) must be integral (shift >= h). Shared by the
/// identity check and the recursions.
BigInt pless_inner_sum(std::span<const BigInt> dist, std::size_t length, unsigned h, unsigned shift);

struct PlessCheck {
  BigInt lhs;
  BigInt rhs;        // exact when rhs_integral
  bool rhs_integral = true;
  bool equal = false;
};

/// Pless's identity for the dual of C_i (binary, length N_i, dimension r).
/// lhs = sum over dual codewords of weight^h (the zero word counts once at h = 0).
/// Throws std::domain_error for C1, C2 with r < 3.
PlessCheck pless_check(const Field& f, Code c, unsigned h);
PlessCheck pless_check(const Field& f, Code c, unsigned h, std::span<const int> dual_weights,
                       const WeightDistribution& dist);

/// Throws std::domain_error if the recursion for code c does not apply to f.
void require_recursion_applies(const Field& f, Code c);

/// One step of the recursion for code c: MK^h from MK^0..MK^(h-1) (`lower`,
/// at least h entries) and C_{i,0..min(N_i,h)} (`dist`).
/// Throws std::invalid_argument for h = 0 or missing inputs.
BigInt moment_recursive(const Field& f, Code c, unsigned h, std::span<const BigInt> lower,
                        const WeightDistribution& dist);

struct MomentSequence {
  Code code = Code::c1;
  unsigned h_max = 0;
  std::vector<BigInt> mk;  // MK^0..MK^h_max
};

/// MK^0 = q - 1, then the recursion up to h_max with one distribution prefix.
MomentSequence moment_sequence(const Field& f, Code c, unsigned h_max);

}  // namespace kmoments
