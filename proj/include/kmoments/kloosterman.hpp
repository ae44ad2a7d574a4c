#pragma once

// Kloosterman sums over GF(2^r) for the canonical additive character, the two
// exponential sums that relate them to the Artin-Schreier image, and
// brute-force power moments.

#include <cstdint>
#include <vector>

#include "kmoments/bigint.hpp"
#include "kmoments/gf2r.hpp"

namespace kmoments {

/// K(a) = sum over nonzero x of lambda(x + a/x). Throws std::domain_error for a = 0.
int kloosterman_sum(const Field& f, Element a);

/// K(a) for every nonzero a.
class KloostermanTable {
 public:
  KloostermanTable() = default;
  explicit KloostermanTable(std::vector<int> values) : values_(std::move(values)) {}

  /// K(a); throws std::out_of_range for a = 0 or a >= q.
  int at(Element a) const;

  /// Number of entries, q - 1.
  std::size_t size() const { return values_.empty() ? 0 : values_.size() - 1; }

  /// Indexed by a; slot 0 is unused and holds 0.
  const std::vector<int>& raw() const { return values_; }

  /// Values sorted ascending.
  std::vector<int> multiset() const;

 private:
  std::vector<int> values_;
};

/// Evaluates one representative per Frobenius orbit {a, a^2, a^4, ...}.
KloostermanTable kloosterman_table(const Field& f);

/// MK^h = sum over nonzero a of K(a)^h, with exact arithmetic.
BigInt moment_bruteforce(const KloostermanTable& table, unsigned h);
BigInt moment_bruteforce(const Field& f, unsigned h);

/// MK^0..MK^h_max from one table.
std::vector<BigInt> moments_bruteforce(const KloostermanTable& table, unsigned h_max);

/// Sum over x not in {0, 1} of lambda(a / (x^2 + x)). Equals K(a) - 1.
/// Throws std::domain_error for a = 0.
int expsum_theta_side(const Field& f, Element a);

/// Sum over all x of lambda(a / (x^2 + x + b)) for tr(b) = 1. Equals -K(a) - 1.
/// Throws std::domain_error for a = 0 or tr(b) = 0.
int expsum_coset_side(const Field& f, Element a, Element b);

}  // namespace kmoments
