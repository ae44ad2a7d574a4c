#pragma once

// Arithmetic in GF(2^r) for 1 <= r <= 16.
//
// Elements are integers in [0, 2^r) whose bit k is the coefficient of x^k in
// the polynomial-basis representative. Addition is XOR. Multiplication goes
// through exp/log tables built from a primitive element, and the absolute
// trace is a precomputed table.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kmoments {

using Element = std::uint32_t;

/// Binary polynomial, bit k = coefficient of x^k.
using Polynomial = std::uint32_t;

inline constexpr unsigned kMaxDegree = 16;

/// Degree of a nonzero binary polynomial; -1 for the zero polynomial.
int poly_degree(Polynomial p);

/// Carry-less product of x and y reduced modulo `modulus` (degree r).
/// Slow reference path; Field::mul is the table-driven version.
Element clmul_mod(Element x, Element y, Polynomial modulus);

/// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(Polynomial p);

/// All irreducible polynomials of the given degree, ascending.
std::vector<Polynomial> irreducible_polynomials(unsigned degree);

/// Irreducible polynomial of the given degree with the smallest encoding.
Polynomial smallest_irreducible(unsigned degree);

/// "x^3+x+1" style rendering, highest degree first.
std::string polynomial_to_string(Polynomial p);

/// "0xb" style rendering.
std::string to_hex(std::uint32_t value);

/// Accepts a hex bitmask ("0x0B", "b") or a polynomial string ("x^3+x+1").
/// Throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(std::string_view text);

/// Parses "0x..." or bare hex digits. Throws std::invalid_argument.
std::uint32_t parse_hex(std::string_view text);

/// Immutable description of GF(2^r) together with the fixed ordering of the
/// Artin-Schreier image Theta = {a^2 + a} and a fixed element b of trace one.
///
/// Copies share the underlying tables, so passing a Field by value is cheap
/// and safe across threads.
class Field {
 public:
  /// Builds GF(2^degree). Without a modulus, the smallest irreducible
  /// polynomial of that degree is used. Throws std::invalid_argument for
  /// degree 0, degree > kMaxDegree, wrong-degree or reducible moduli.
  static Field build(unsigned degree, std::optional<Polynomial> modulus = std::nullopt);

  /// Same field with a different trace-one element b.
  /// Throws std::invalid_argument if b is out of range or tr(b) = 0.
  Field with_b(Element b) const;

  unsigned degree() const { return data_->degree; }
  std::uint32_t size() const { return data_->size; }
  Polynomial modulus() const { return data_->modulus; }
  Element b() const { return b_; }

  /// Theta(F_q) sorted ascending; element 0 is gamma_0 = 0.
  const std::vector<Element>& theta() const { return data_->theta; }

  bool contains(Element x) const { return x < data_->size; }

  Element add(Element x, Element y) const { return x ^ y; }
  Element mul(Element x, Element y) const;
  Element square(Element x) const { return mul(x, x); }
  Element pow(Element x, std::uint64_t e) const;

  /// Multiplicative inverse. Throws std::domain_error for x = 0.
  Element inv(Element x) const;

  /// Absolute trace to GF(2), as 0 or 1.
  int trace(Element x) const { return data_->trace[x]; }

  /// Canonical additive character (-1)^tr(x).
  int lambda(Element x) const { return 1 - 2 * trace(x); }

 private:
  struct Tables {
    unsigned degree = 0;
    std::uint32_t size = 0;
    Polynomial modulus = 0;
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Element> exp;        // length 2(q-1), no reduction needed
    std::vector<std::uint8_t> trace;
    std::vector<Element> theta;
  };

  Field(std::shared_ptr<const Tables> data, Element b) : data_(std::move(data)), b_(b) {}

  std::shared_ptr<const Tables> data_;
  Element b_ = 0;
};

// Free-function forms of the field operations.

inline Field build_field(unsigned degree, std::optional<Polynomial> modulus = std::nullopt) {
  return Field::build(degree, modulus);
}
inline Element fe_mul(const Field& f, Element x, Element y) { return f.mul(x, y); }
inline Element fe_inv(const Field& f, Element x) { return f.inv(x); }
inline int trace(const Field& f, Element x) { return f.trace(x); }
inline int lambda_char(const Field& f, Element x) { return f.lambda(x); }
inline const std::vector<Element>& theta_image(const Field& f) { return f.theta(); }

/// Smallest element with trace one.
Element pick_b(const Field& f);

}  // namespace kmoments
