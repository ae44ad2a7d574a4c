#include "kmoments/kloosterman.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kmoments {

int kloosterman_sum(const Field& f, Element a) {
  if (a == 0) throw std::domain_error("Kloosterman sum needs a nonzero argument");
  if (!f.contains(a)) throw std::invalid_argument("element out of range");
  int sum = 0;
  for (Element x = 1; x < f.size(); ++x) sum += f.lambda(x ^ f.mul(a, f.inv(x)));
  return sum;
}

int KloostermanTable::at(Element a) const {
  if (a == 0 || a >= values_.size()) throw std::out_of_range("no Kloosterman entry for " + to_hex(a));
  return values_[a];
}

std::vector<int> KloostermanTable::multiset() const {
  std::vector<int> out(values_.begin() + (values_.empty() ? 0 : 1), values_.end());
  std::sort(out.begin(), out.end());
  return out;
}

KloostermanTable kloosterman_table(const Field& f) {
  const std::uint32_t q = f.size();
  std::vector<int> values(q, 0);
  std::vector<bool> done(q, false);
  for (Element a = 1; a < q; ++a) {
    if (done[a]) continue;
    const int k = kloosterman_sum(f, a);
    // K(a^2) = K(a) since lambda is Frobenius invariant.
    for (Element c = a; !done[c]; c = f.square(c)) {
      values[c] = k;
      done[c] = true;
    }
  }
  return KloostermanTable(std::move(values));
}

std::vector<BigInt> moments_bruteforce(const KloostermanTable& table, unsigned h_max) {
  std::vector<BigInt> out(h_max + 1, 0);
  const auto& raw = table.raw();
  for (std::size_t a = 1; a < raw.size(); ++a) {
    BigInt p = 1;
    for (unsigned h = 0; h <= h_max; ++h) {
      out[h] += p;
      p *= raw[a];
    }
  }
  return out;
}

BigInt moment_bruteforce(const KloostermanTable& table, unsigned h) {
  BigInt sum = 0;
  const auto& raw = table.raw();
  for (std::size_t a = 1; a < raw.size(); ++a) sum += ipow(BigInt(raw[a]), h);
  return sum;
}

BigInt moment_bruteforce(const Field& f, unsigned h) { return moment_bruteforce(kloosterman_table(f), h); }

int expsum_theta_side(const Field& f, Element a) {
  if (a == 0) throw std::domain_error("exponential sum needs a nonzero argument");
  if (!f.contains(a)) throw std::invalid_argument("element out of range");
  int sum = 0;
  for (Element x = 2; x < f.size(); ++x) sum += f.lambda(f.mul(a, f.inv(f.square(x) ^ x)));
  return sum;
}

int expsum_coset_side(const Field& f, Element a, Element b) {
  if (a == 0) throw std::domain_error("exponential sum needs a nonzero argument");
  if (!f.contains(a) || !f.contains(b)) throw std::invalid_argument("element out of range");
  if (f.trace(b) != 1) throw std::domain_error("x^2 + x + b must be irreducible (need tr(b) = 1)");
  int sum = 0;
  for (Element x = 0; x < f.size(); ++x) sum += f.lambda(f.mul(a, f.inv(f.square(x) ^ x ^ b)));
  return sum;
}

}  // namespace kmoments
