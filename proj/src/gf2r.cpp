#include "kmoments/gf2r.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace kmoments {

namespace {

// Remainder of a modulo m over GF(2).
Polynomial poly_mod(Polynomial a, Polynomial m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Element clmul_pow(Element x, std::uint64_t e, Polynomial modulus) {
  Element acc = 1;
  while (e) {
    if (e & 1) acc = clmul_mod(acc, x, modulus);
    x = clmul_mod(x, x, modulus);
    e >>= 1;
  }
  return acc;
}

}  // namespace

int poly_degree(Polynomial p) { return p ? 31 - std::countl_zero(p) : -1; }

Element clmul_mod(Element x, Element y, Polynomial modulus) {
  const int r = poly_degree(modulus);
  const Element top = Element{1} << r;
  Element acc = 0;
  while (y) {
    if (y & 1) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= modulus;
  }
  return acc;
}

bool is_irreducible(Polynomial p) {
  const int d = poly_degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  for (Polynomial f = 2; poly_degree(f) <= d / 2; ++f)
    if (poly_mod(p, f) == 0) return false;
  return true;
}

std::vector<Polynomial> irreducible_polynomials(unsigned degree) {
  if (degree == 0 || degree > kMaxDegree) throw std::invalid_argument("degree out of range");
  std::vector<Polynomial> out;
  const Polynomial lo = Polynomial{1} << degree;
  for (Polynomial p = lo; p < (lo << 1); ++p)
    if (is_irreducible(p)) out.push_back(p);
  return out;
}

Polynomial smallest_irreducible(unsigned degree) {
  if (degree == 0 || degree > kMaxDegree) throw std::invalid_argument("degree out of range");
  const Polynomial lo = Polynomial{1} << degree;
  for (Polynomial p = lo; p < (lo << 1); ++p)
    if (is_irreducible(p)) return p;
  throw std::logic_error("no irreducible polynomial found");
}

std::string polynomial_to_string(Polynomial p) {
  if (p == 0) return "0";
  std::string out;
  for (int k = poly_degree(p); k >= 0; --k) {
    if (!((p >> k) & 1)) continue;
    if (!out.empty()) out += '+';
    if (k == 0)
      out += '1';
    else if (k == 1)
      out += 'x';
    else
      out += "x^" + std::to_string(k);
  }
  return out;
}

std::string to_hex(std::uint32_t value) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  do {
    out.insert(out.begin(), digits[value & 0xF]);
    value >>= 4;
  } while (value);
  return "0x" + out;
}

std::uint32_t parse_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty() || text.size() > 8) throw std::invalid_argument("malformed hex value");
  std::uint32_t v = 0;
  for (char c : text) {
    int d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'f')
      d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      d = c - 'A' + 10;
    else
      throw std::invalid_argument("malformed hex value");
    v = (v << 4) | static_cast<std::uint32_t>(d);
  }
  return v;
}

Polynomial parse_polynomial(std::string_view text) {
  if (text.find('x') == std::string_view::npos || text.starts_with("0x") || text.starts_with("0X"))
    return parse_hex(text);

  Polynomial p = 0;
  std::size_t pos = 0;
  auto fail = [] { throw std::invalid_argument("malformed polynomial"); };
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    unsigned k = 0;
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
    } else if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
      ++pos;
      k = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
        k = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          k = k * 10 + static_cast<unsigned>(text[pos] - '0');
          if (k > 31) fail();
          ++pos;
        }
      }
    } else {
      fail();
    }
    p ^= Polynomial{1} << k;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size()) {
      if (text[pos] != '+') fail();
      ++pos;
      if (pos >= text.size()) fail();
    }
  }
  return p;
}

Field Field::build(unsigned degree, std::optional<Polynomial> modulus) {
  if (degree == 0) throw std::invalid_argument("field degree must be at least 1");
  if (degree > kMaxDegree) throw std::invalid_argument("field degree exceeds 16");
  const Polynomial m = modulus ? *modulus : smallest_irreducible(degree);
  if (poly_degree(m) != static_cast<int>(degree))
    throw std::invalid_argument("modulus " + to_hex(m) + " does not have degree " +
                                std::to_string(degree));
  if (!is_irreducible(m))
    throw std::invalid_argument("modulus " + polynomial_to_string(m) + " is reducible");

  auto t = std::make_shared<Tables>();
  t->degree = degree;
  t->size = std::uint32_t{1} << degree;
  t->modulus = m;
  const std::uint32_t q = t->size;
  const std::uint32_t order = q - 1;

  // Primitive element: g^((q-1)/p) != 1 for every prime p | q-1.
  Element g = 1;
  if (order > 1) {
    const auto factors = prime_factors(order);
    for (g = 2; g < q; ++g) {
      bool primitive = std::all_of(factors.begin(), factors.end(),
                                   [&](std::uint32_t p) { return clmul_pow(g, order / p, m) != 1; });
      if (primitive) break;
    }
  }
  t->log.assign(q, 0);
  t->exp.assign(2 * order, 0);
  Element x = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    t->exp[k] = t->exp[k + order] = x;
    t->log[x] = k;
    x = clmul_mod(x, g, m);
  }

  // tr is GF(2)-linear: evaluate x + x^2 + ... + x^(2^(r-1)) on the basis x^k.
  std::uint32_t mask = 0;
  for (unsigned k = 0; k < degree; ++k) {
    Element c = Element{1} << k, s = 0;
    for (unsigned i = 0; i < degree; ++i) {
      s ^= c;
      c = clmul_mod(c, c, m);
    }
    if (s > 1) throw std::logic_error("trace left the prime field");
    mask |= s << k;
  }
  t->trace.resize(q);
  for (Element e = 0; e < q; ++e) t->trace[e] = static_cast<std::uint8_t>(std::popcount(e & mask) & 1);

  std::vector<bool> seen(q, false);
  for (Element a = 0; a < q; ++a) seen[clmul_mod(a, a, m) ^ a] = true;
  for (Element e = 0; e < q; ++e)
    if (seen[e]) t->theta.push_back(e);

  Field f(std::move(t), 0);
  f.b_ = pick_b(f);
  return f;
}

Field Field::with_b(Element b) const {
  if (!contains(b)) throw std::invalid_argument("b is not a field element");
  if (trace(b) != 1) throw std::invalid_argument("b = " + to_hex(b) + " has trace 0");
  return Field(data_, b);
}

Element Field::mul(Element x, Element y) const {
  if (x == 0 || y == 0) return 0;
  return data_->exp[data_->log[x] + data_->log[y]];
}

Element Field::pow(Element x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  const std::uint64_t order = data_->size - 1;
  return data_->exp[(data_->log[x] * (e % order)) % order];
}

Element Field::inv(Element x) const {
  if (x == 0) throw std::domain_error("zero has no inverse");
  const std::uint32_t order = data_->size - 1;
  const std::uint32_t l = data_->log[x];
  return data_->exp[l == 0 ? 0 : order - l];
}

Element pick_b(const Field& f) {
  for (Element x = 0; x < f.size(); ++x)
    if (f.trace(x) == 1) return x;
  throw std::logic_error("trace is not surjective");
}

}  // namespace kmoments
