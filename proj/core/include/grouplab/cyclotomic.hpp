#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grouplab {

/// Exact rational; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

/// Always "num/den", e.g. "-3/1".
std::string rational_to_string(const Rational& q);
/// Accepts "n" or "n/d".
Rational parse_rational(std::string_view text);

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t m);

// Element of Q(zeta_m), stored as a residue modulo Phi_m in the power
// basis 1, zeta_m, ..., zeta_m^(phi(m)-1). Binary operations first lift
// both operands to the lcm of their conductors; nothing ever shrinks the
// conductor implicitly.
class Cyclotomic {
 public:
  /// Zero with conductor 1.
  Cyclotomic();

  static Cyclotomic zero(std::uint64_t m);
  static Cyclotomic embed(const Rational& q, std::uint64_t m = 1);
  static Cyclotomic zeta(std::uint64_t m, std::int64_t k);
  /// sum_k counts[k] * zeta_m^k, with counts.size() == m.
  static Cyclotomic from_root_counts(std::uint64_t m, std::span<const std::int64_t> counts);
  /// Coefficients must have length phi(m).
  static Cyclotomic from_coeffs(std::uint64_t m, std::vector<Rational> coeffs);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Cyclotomic change_conductor(std::uint64_t target) const;
  /// zeta_m -> zeta_m^r; r must be coprime to the conductor.
  Cyclotomic galois(std::int64_t r) const;
  Cyclotomic conjugate() const;

  bool is_rational() const;
  std::optional<Rational> rational_value() const;
  /// True iff the value lies in Q(zeta_p).
  bool lies_in_prime_cyclotomic(std::uint64_t p) const;
  /// True iff |a|^2 == c^2 exactly. c must be non-negative.
  bool modulus_equals(const Rational& c) const;

  /// Human-readable sum in GAP-like notation, e.g. "1 + 2*E(3)^1".
  std::string to_string() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  /// Field equality: compares after lifting to a common conductor.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::uint64_t m, std::vector<Rational> coeffs);

  std::uint64_t conductor_ = 1;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic zeta(std::uint64_t m, std::int64_t k) { return Cyclotomic::zeta(m, k); }
inline Cyclotomic embed(const Rational& q, std::uint64_t m = 1) { return Cyclotomic::embed(q, m); }

}  // namespace grouplab
