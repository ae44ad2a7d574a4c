#include "kmoments/codes.hpp"

#include "kmoments/kloosterman.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace kmoments {

namespace {

std::size_t popcount_and(const BitVector& a, const BitVector& b) { return (a & b).count(); }

std::vector<std::uint64_t> histogram_to_counts(std::size_t n) { return std::vector<std::uint64_t>(n + 1, 0); }

WeightDistribution make_distribution(Code c, std::size_t length, const std::vector<std::uint64_t>& hist) {
  WeightDistribution d{c, length, {}};
  d.counts.assign(hist.begin(), hist.end());
  return d;
}

// Gray-code scan of every u in GF(2)^N; each step flips one coordinate.
std::vector<std::uint64_t> scan_all_vectors(std::span<const Element> v) {
  const std::size_t n = v.size();
  auto hist = histogram_to_counts(n);
  Element sum = 0;
  std::size_t weight = 0;
  std::uint64_t bits = 0;
  hist[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int l = std::countr_zero(step);
    sum ^= v[l];
    bits ^= std::uint64_t{1} << l;
    weight = ((bits >> l) & 1) ? weight + 1 : weight - 1;
    if (sum == 0) ++hist[weight];
  }
  return hist;
}

}  // namespace

Code code_from_int(int i) {
  if (i < 1 || i > 4) throw std::invalid_argument("code index must be 1..4, got " + std::to_string(i));
  return static_cast<Code>(i);
}

bool code_defined(const Field& f, Code c) { return !uses_theta(c) || f.size() >= 4; }

std::size_t code_length(const Field& f, Code c) {
  if (!code_defined(f, c))
    throw std::domain_error("code C" + std::to_string(code_number(c)) + " needs q >= 4");
  const std::size_t half = f.size() / 2;
  switch (c) {
    case Code::c1: return 2 * (half - 1);
    case Code::c2: return half - 1;
    case Code::c3: return 2 * half;
    case Code::c4: return half;
  }
  throw std::logic_error("unreachable");
}

std::vector<Element> build_vector(const Field& f, Code c) {
  code_length(f, c);
  std::vector<Element> block;
  const auto& theta = f.theta();
  if (uses_theta(c)) {
    for (std::size_t j = 1; j < theta.size(); ++j) block.push_back(f.inv(theta[j]));
  } else {
    for (Element g : theta) block.push_back(f.inv(f.b() ^ g));
  }
  if (!is_doubled(c)) return block;
  std::vector<Element> out(block);
  out.insert(out.end(), block.begin(), block.end());
  return out;
}

int multiplicity(const Field& f, Code c, Element beta) {
  if (beta == 0 || !code_defined(f, c)) return 0;
  const int wanted = uses_theta(c) ? 0 : 1;
  if (f.trace(f.inv(beta)) != wanted) return 0;
  return is_doubled(c) ? 2 : 1;
}

bool is_codeword(std::span<const Element> v, const BitVector& u) {
  if (u.size() != v.size())
    throw std::invalid_argument("word has length " + std::to_string(u.size()) + ", code has length " +
                                std::to_string(v.size()));
  Element sum = 0;
  for (std::size_t l = u.find_first(); l != BitVector::npos; l = u.find_next(l)) sum ^= v[l];
  return sum == 0;
}

bool is_codeword(const Field& f, Code c, const BitVector& u) {
  const auto v = build_vector(f, c);
  return is_codeword(v, u);
}

std::vector<BitVector> code_basis(std::span<const Element> v) {
  const std::size_t n = v.size();
  struct Pivot {
    Element value;
    BitVector combo;
  };
  std::vector<Pivot> pivots;  // distinct leading bits
  std::vector<BitVector> basis;
  for (std::size_t l = 0; l < n; ++l) {
    Element value = v[l];
    BitVector combo(n);
    combo.set(l);
    for (bool reduced = true; value && reduced;) {
      reduced = false;
      const auto lead = std::bit_width(value);
      for (const auto& p : pivots) {
        if (std::bit_width(p.value) == lead) {
          value ^= p.value;
          combo ^= p.combo;
          reduced = true;
          break;
        }
      }
    }
    if (value == 0)
      basis.push_back(std::move(combo));
    else
      pivots.push_back({value, std::move(combo)});
  }
  return basis;
}

DualCodeword dual_codeword(const Field& f, Code c, Element a) {
  if (!f.contains(a)) throw std::invalid_argument("element out of range");
  const auto v = build_vector(f, c);
  DualCodeword w{a, BitVector(v.size())};
  for (std::size_t l = 0; l < v.size(); ++l)
    if (f.trace(f.mul(a, v[l]))) w.bits.set(l);
  return w;
}

unsigned dual_weight_from_kloosterman(const Field& f, Code c, int kloosterman) {
  code_length(f, c);
  const long long q = f.size();
  const long long numerator = uses_theta(c) ? q - 1 - kloosterman : q + 1 + kloosterman;
  const long long denominator = is_doubled(c) ? 2 : 4;
  if (numerator < 0 || numerator % denominator != 0)
    throw std::logic_error("Kloosterman value " + std::to_string(kloosterman) + " gives no integral weight");
  return static_cast<unsigned>(numerator / denominator);
}

unsigned dual_weight_closed_form(const Field& f, Code c, Element a) {
  if (a == 0) throw std::domain_error("closed-form dual weight needs a nonzero argument");
  return dual_weight_from_kloosterman(f, c, kloosterman_sum(f, a));
}

BigInt WeightDistribution::total() const {
  BigInt s = 0;
  for (const auto& x : counts) s += x;
  return s;
}

bool WeightDistribution::is_palindromic() const {
  if (!is_full()) return false;
  for (std::size_t j = 0; j <= length; ++j)
    if (counts[j] != counts[length - j]) return false;
  return true;
}

WeightDistribution weight_distribution(const Field& f, Code c, std::size_t j_max) {
  const std::size_t n = code_length(f, c);
  if (j_max > n)
    throw std::invalid_argument("j_max " + std::to_string(j_max) + " exceeds code length " + std::to_string(n));

  // Coefficient of X^0 in prod_beta (1 + z X^beta)^n(beta), truncated at z^j_max.
  // A doubled coordinate contributes 1 + 2 z X^beta + z^2, since beta + beta = 0.
  const std::size_t q = f.size();
  std::vector<BigInt> dp((j_max + 1) * q, BigInt(0));
  auto at = [&](std::size_t j, Element x) -> BigInt& { return dp[j * q + x]; };
  at(0, 0) = 1;
  std::size_t reach = 0;  // largest weight with nonzero entries so far
  for (Element beta = 1; beta < q; ++beta) {
    const int mult = multiplicity(f, c, beta);
    if (mult == 0) continue;
    reach = std::min(j_max, reach + static_cast<std::size_t>(mult));
    for (std::size_t j = reach; j >= 1; --j) {
      for (Element x = 0; x < q; ++x) {
        const BigInt& one = at(j - 1, x ^ beta);
        if (!one.is_zero()) {
          if (mult == 2)
            at(j, x) += one * 2;
          else
            at(j, x) += one;
        }
        if (mult == 2 && j >= 2) {
          const BigInt& two = at(j - 2, x);
          if (!two.is_zero()) at(j, x) += two;
        }
      }
    }
  }

  WeightDistribution out{c, n, {}};
  out.counts.reserve(j_max + 1);
  for (std::size_t j = 0; j <= j_max; ++j) out.counts.push_back(at(j, 0));
  return out;
}

WeightDistribution weight_distribution(const Field& f, Code c) {
  return weight_distribution(f, c, code_length(f, c));
}

WeightDistribution weight_distribution_exhaustive(const Field& f, Code c) {
  const auto v = build_vector(f, c);
  const std::size_t n = v.size();
  if (n > f.degree() + kExhaustiveBudget)
    throw std::length_error("exhaustive enumeration of C" + std::to_string(code_number(c)) + " over GF(2^" +
                            std::to_string(f.degree()) + ") exceeds the 2^" +
                            std::to_string(kExhaustiveBudget) + " budget");
  return make_distribution(c, n, scan_all_vectors(v));
}

DualStructureReport verify_dual_structure(const Field& f, Code c) {
  const auto v = build_vector(f, c);
  const std::size_t n = v.size();
  const auto basis = code_basis(v);

  DualStructureReport rep;
  rep.code = c;
  rep.degree = f.degree();
  rep.length = n;
  rep.code_dimension = basis.size();
  rep.orthogonal = true;

  std::vector<BitVector> words;
  words.reserve(f.size());
  for (Element a = 0; a < f.size(); ++a) {
    BitVector w(n);
    for (std::size_t l = 0; l < n; ++l)
      if (f.trace(f.mul(a, v[l]))) w.set(l);
    for (const auto& u : basis)
      if (popcount_and(w, u) & 1) rep.orthogonal = false;
    if (w.none()) ++rep.kernel_size;
    words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end());
  rep.dual_size = static_cast<std::size_t>(std::unique(words.begin(), words.end()) - words.begin());

  rep.injective = rep.kernel_size == 1;
  rep.injectivity_expected = !uses_theta(c) || f.degree() >= 3;
  rep.kernel_as_expected = rep.injectivity_expected ? rep.injective : rep.kernel_size == 2;
  rep.cardinality_ok = std::has_single_bit(rep.dual_size) &&
                       static_cast<std::size_t>(std::countr_zero(rep.dual_size)) + rep.code_dimension == n;
  return rep;
}

}  // namespace kmoments
