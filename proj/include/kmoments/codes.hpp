#pragma once

// The four binary codes C1..C4 built from inverses of the Artin-Schreier
// image Theta and of its trace-one coset b + Theta:
//
//   C_i = { u in GF(2)^N_i : sum_l u_l * v_i[l] = 0 in GF(2^r) }
//
//   v1 = (1/g_1, ..., 1/g_{q/2-1}) twice        N1 = q - 2
//   v2 = (1/g_1, ..., 1/g_{q/2-1})              N2 = q/2 - 1
//   v3 = (1/(b+g_0), ..., 1/(b+g_{q/2-1})) twice N3 = q
//   v4 = (1/(b+g_0), ..., 1/(b+g_{q/2-1}))       N4 = q/2
//
// with g_0 = 0 < g_1 < ... the sorted elements of Theta. C1 and C2 need
// q >= 4; at q = 4 the map a -> c_i(a) onto their duals has kernel GF(2),
// so results for r = 2 are computed but the moment recursions reject them.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "kmoments/bigint.hpp"
#include "kmoments/gf2r.hpp"

namespace kmoments {

enum class Code : int { c1 = 1, c2 = 2, c3 = 3, c4 = 4 };

inline constexpr std::array<Code, 4> kAllCodes{Code::c1, Code::c2, Code::c3, Code::c4};

/// Throws std::invalid_argument outside 1..4.
Code code_from_int(int i);
inline int code_number(Code c) { return static_cast<int>(c); }

/// C1 and C2 built over Theta \ {0}; C3 and C4 over the trace-one coset.
inline bool uses_theta(Code c) { return c == Code::c1 || c == Code::c2; }
/// C1 and C3 repeat every coordinate twice.
inline bool is_doubled(Code c) { return c == Code::c1 || c == Code::c3; }

using BitVector = boost::dynamic_bitset<std::uint64_t>;

/// False only for C1, C2 over GF(2).
bool code_defined(const Field& f, Code c);

/// N_i. Throws std::domain_error when the code is not defined.
std::size_t code_length(const Field& f, Code c);

/// v_i in the doubled/single layout above.
std::vector<Element> build_vector(const Field& f, Code c);

/// Number of coordinates of v_i equal to beta, from the trace of 1/beta.
int multiplicity(const Field& f, Code c, Element beta);

/// u . v_i == 0. Throws std::invalid_argument on a length mismatch.
bool is_codeword(const Field& f, Code c, const BitVector& u);
bool is_codeword(std::span<const Element> v, const BitVector& u);

/// A basis of C_i obtained by Gaussian elimination on the columns of v_i.
std::vector<BitVector> code_basis(std::span<const Element> v);

struct DualCodeword {
  Element a = 0;
  BitVector bits;  // bit l = tr(a * v_i[l])

  std::size_t weight() const { return bits.count(); }
};

DualCodeword dual_codeword(const Field& f, Code c, Element a);

/// Hamming weight of c_i(a) from the Kloosterman sum K = K(a):
///   (q-1-K)/2, (q-1-K)/4, (q+1+K)/2, (q+1+K)/4  for i = 1..4.
/// Throws std::domain_error for a = 0.
unsigned dual_weight_closed_form(const Field& f, Code c, Element a);
unsigned dual_weight_from_kloosterman(const Field& f, Code c, int kloosterman);

struct WeightDistribution {
  Code code = Code::c1;
  std::size_t length = 0;      // N_i
  std::vector<BigInt> counts;  // counts[j] = C_{i,j}, j = 0..j_max

  bool is_full() const { return counts.size() == length + 1; }
  std::size_t j_max() const { return counts.size() - 1; }
  BigInt total() const;
  /// counts[j] == counts[N - j] for every j; false for prefixes.
  bool is_palindromic() const;
};

/// C_{i,0..j_max} via a subset-sum DP over the additive group of GF(2^r).
/// Throws std::invalid_argument for j_max > N_i.
WeightDistribution weight_distribution(const Field& f, Code c, std::size_t j_max);
WeightDistribution weight_distribution(const Field& f, Code c);

/// Largest N_i - r accepted by weight_distribution_exhaustive.
inline constexpr std::size_t kExhaustiveBudget = 24;

/// Full distribution by testing every u in GF(2)^N_i against u . v_i = 0.
/// Throws std::length_error when N_i - r exceeds kExhaustiveBudget.
WeightDistribution weight_distribution_exhaustive(const Field& f, Code c);

struct DualStructureReport {
  Code code = Code::c1;
  unsigned degree = 0;
  std::size_t length = 0;
  std::size_t code_dimension = 0;  // dim C_i
  std::size_t dual_size = 0;       // number of distinct c_i(a)
  std::size_t kernel_size = 0;     // #{a : c_i(a) = 0}
  bool orthogonal = false;         // every c_i(a) is orthogonal to a basis of C_i
  bool injective = false;
  bool injectivity_expected = false;
  bool kernel_as_expected = false;  // injective where expected, kernel {0,1} at q = 4
  bool cardinality_ok = false;      // dual_size * |C_i| == 2^N_i

  bool passed() const { return orthogonal && kernel_as_expected && cardinality_ok; }
};

DualStructureReport verify_dual_structure(const Field& f, Code c);

}  // namespace kmoments
