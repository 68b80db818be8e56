#include "grouplab/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "grouplab/arith.hpp"
#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

using Int128 = __int128;

std::vector<std::int64_t> exact_divide(const std::vector<std::int64_t>& num,
                                       const std::vector<std::int64_t>& den) {
  // den is monic.
  std::vector<std::int64_t> rem = num;
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = rem[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) {
      std::int64_t prod = 0;
      if (__builtin_mul_overflow(c, den[j], &prod) ||
          __builtin_sub_overflow(rem[i - dn + j], prod, &rem[i - dn + j])) {
        throw InternalError("cyclotomic polynomial coefficient overflow");
      }
    }
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (rem[i] != 0) throw InternalError("cyclotomic polynomial division is not exact");
  }
  return q;
}

const std::vector<std::int64_t>& compute_cyclotomic_polynomial(std::uint64_t m) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<const std::vector<std::int64_t>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return *it->second;
  }
  std::vector<std::int64_t> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (auto d : divisors(m)) {
    if (d == m) break;
    poly = exact_divide(poly, compute_cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] =
      cache.emplace(m, std::make_unique<const std::vector<std::int64_t>>(std::move(poly)));
  return *it->second;
}

mpz_class to_mpz(Int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return mpz_class(static_cast<long>(v));
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1U
                                 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64U));
  mpz_class lo(static_cast<unsigned long>(u & ~std::uint64_t{0}));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

// Folds exponents modulo m (zeta_m^m = 1) and reduces modulo Phi_m.
std::vector<Rational> reduce_integers(std::uint64_t m, std::vector<Int128> dense) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  if (dense.size() > m) {
    for (std::size_t i = m; i < dense.size(); ++i) dense[i % m] += dense[i];
    dense.resize(m);
  }
  for (std::size_t i = dense.size(); i-- > deg;) {
    const Int128 c = dense[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) dense[i - deg + j] -= c * phi[j];
    }
    dense[i] = 0;
  }
  dense.resize(deg, 0);
  std::vector<Rational> out(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    if (dense[i] != 0) out[i] = Rational(to_mpz(dense[i]));
  }
  return out;
}

std::vector<Rational> reduce_rationals(std::uint64_t m, std::vector<Rational> dense) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  if (dense.size() > m) {
    for (std::size_t i = m; i < dense.size(); ++i) {
      if (sgn(dense[i]) != 0) dense[i % m] += dense[i];
    }
    dense.resize(m);
  }
  Rational scratch;
  for (std::size_t i = dense.size(); i-- > deg;) {
    if (sgn(dense[i]) == 0) continue;
    const Rational c = dense[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] == 0) continue;
      scratch = c * phi[j];
      dense[i - deg + j] -= scratch;
    }
    dense[i] = 0;
  }
  dense.resize(deg);
  return dense;
}

// Coefficients as machine integers when every entry is an integer of
// magnitude below 2^31, so pairwise products fit comfortably in 128 bits.
bool small_integers(const std::vector<Rational>& coeffs, std::vector<std::int64_t>& out) {
  out.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& q = coeffs[i];
    if (mpz_cmp_ui(q.get_den_mpz_t(), 1) != 0) return false;
    if (!mpz_fits_sint_p(q.get_num_mpz_t())) return false;
    out[i] = mpz_get_si(q.get_num_mpz_t());
  }
  return true;
}

// Sends exponent i to exponent (i * scale) mod target and reduces.
std::vector<Rational> remap_exponents(const std::vector<Rational>& coeffs, std::uint64_t scale,
                                      std::uint64_t target) {
  std::vector<std::int64_t> ints;
  if (small_integers(coeffs, ints)) {
    std::vector<Int128> dense(target, 0);
    for (std::size_t i = 0; i < ints.size(); ++i) {
      if (ints[i] != 0) dense[(i * scale) % target] += ints[i];
    }
    return reduce_integers(target, std::move(dense));
  }
  std::vector<Rational> dense(target);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) dense[(i * scale) % target] += coeffs[i];
  }
  return reduce_rationals(target, std::move(dense));
}

std::uint64_t normalize_exponent(std::int64_t r, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((r % mm) + mm) % mm);
}

// Generators of { r in (Z/M)^* : r = 1 mod p }, chosen greedily.
const std::vector<std::uint64_t>& prime_field_fixers(std::uint64_t M, std::uint64_t p) {
  thread_local std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::uint64_t>> cache;
  auto key = std::make_pair(M, p);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<std::uint64_t> gens;
  std::vector<std::uint8_t> in(M, 0);
  std::vector<std::uint64_t> closure{1 % M};
  in[1 % M] = 1;
  for (std::uint64_t r = 1; r < M; ++r) {
    if (std::gcd(r, M) != 1 || r % p != 1 % p || in[r]) continue;
    gens.push_back(r);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (auto s : gens) {
        const std::uint64_t y = closure[i] * s % M;
        if (!in[y]) {
          in[y] = 1;
          closure.push_back(y);
        }
      }
    }
  }
  return cache.emplace(key, std::move(gens)).first->second;
}

}  // namespace

std::string rational_to_string(const Rational& q) {
  Rational r(q);
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  Rational q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw InputError("not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t m) {
  if (m == 0) throw InputError("cyclotomic_polynomial: m must be positive");
  thread_local std::unordered_map<std::uint64_t, const std::vector<std::int64_t>*> local;
  if (auto it = local.find(m); it != local.end()) return *it->second;
  const auto& poly = compute_cyclotomic_polynomial(m);
  local.emplace(m, &poly);
  return poly;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(std::uint64_t m, std::vector<Rational> coeffs)
    : conductor_(m), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::zero(std::uint64_t m) {
  return Cyclotomic(m, std::vector<Rational>(cyclotomic_polynomial(m).size() - 1));
}

Cyclotomic Cyclotomic::embed(const Rational& q, std::uint64_t m) {
  auto z = zero(m);
  z.coeffs_[0] = q;
  if (z.coeffs_[0].get_den() == 0) throw InputError("rational with zero denominator");
  z.coeffs_[0].canonicalize();
  return z;
}

Cyclotomic Cyclotomic::zeta(std::uint64_t m, std::int64_t k) {
  std::vector<Int128> dense(m, 0);
  dense[normalize_exponent(k, m)] = 1;
  return Cyclotomic(m, reduce_integers(m, std::move(dense)));
}

Cyclotomic Cyclotomic::from_root_counts(std::uint64_t m, std::span<const std::int64_t> counts) {
  if (counts.size() != m) throw InputError("from_root_counts: need exactly m counts");
  std::vector<Int128> dense(counts.begin(), counts.end());
  return Cyclotomic(m, reduce_integers(m, std::move(dense)));
}

Cyclotomic Cyclotomic::from_coeffs(std::uint64_t m, std::vector<Rational> coeffs) {
  if (coeffs.size() != cyclotomic_polynomial(m).size() - 1) {
    throw InputError("cyclotomic of conductor " + std::to_string(m) + " needs " +
                     std::to_string(euler_phi(m)) + " coefficients");
  }
  for (auto& c : coeffs) {
    if (c.get_den() == 0) throw InputError("rational with zero denominator");
    c.canonicalize();
  }
  return Cyclotomic(m, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Cyclotomic Cyclotomic::change_conductor(std::uint64_t target) const {
  if (target == 0 || target % conductor_ != 0) {
    throw InputError("change_conductor: " + std::to_string(target) + " is not a multiple of " +
                     std::to_string(conductor_));
  }
  if (target == conductor_) return *this;
  return Cyclotomic(target, remap_exponents(coeffs_, target / conductor_, target));
}

Cyclotomic Cyclotomic::galois(std::int64_t r) const {
  const std::uint64_t rr = normalize_exponent(r, conductor_);
  if (std::gcd(rr, conductor_) != 1 && conductor_ > 1) {
    throw InputError("galois: exponent " + std::to_string(r) + " is not coprime to conductor " +
                     std::to_string(conductor_));
  }
  if (rr == 1 % conductor_) return *this;
  return Cyclotomic(conductor_, remap_exponents(coeffs_, rr, conductor_));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (conductor_ <= 2) return *this;
  return galois(static_cast<std::int64_t>(conductor_) - 1);
}

bool Cyclotomic::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

std::optional<Rational> Cyclotomic::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

bool Cyclotomic::lies_in_prime_cyclotomic(std::uint64_t p) const {
  if (!is_prime(p)) throw InputError("lies_in_prime_cyclotomic: " + std::to_string(p) + " is not prime");
  if (is_rational()) return true;
  const std::uint64_t M = lcm_u64(conductor_, p);
  const auto lifted = change_conductor(M);
  // Q(zeta_p) is the fixed field of this subgroup; checking its generators suffices.
  for (auto r : prime_field_fixers(M, p)) {
    if (!(lifted.galois(static_cast<std::int64_t>(r)) == lifted)) return false;
  }
  return true;
}

bool Cyclotomic::modulus_equals(const Rational& c) const {
  if (sgn(c) < 0) throw InputError("modulus_equals: modulus must be non-negative");
  return (*this) * conjugate() == embed(c * c, conductor_);
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& q = coeffs_[i];
    if (sgn(q) == 0) continue;
    const bool negative = sgn(q) < 0;
    const Rational mag = abs(q);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "E(" + std::to_string(conductor_) + ")^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) {
    const auto m = lcm_u64(a.conductor_, b.conductor_);
    return a.change_conductor(m) + b.change_conductor(m);
  }
  Cyclotomic out = a;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) {
    const auto m = lcm_u64(a.conductor_, b.conductor_);
    return a.change_conductor(m) * b.change_conductor(m);
  }
  const std::uint64_t m = a.conductor_;
  const std::size_t n = a.coeffs_.size();
  std::vector<std::int64_t> ia, ib;
  if (small_integers(a.coeffs_, ia) && small_integers(b.coeffs_, ib)) {
    std::vector<Int128> dense(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (ia[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) dense[i + j] += static_cast<Int128>(ia[i]) * ib[j];
    }
    return Cyclotomic(m, reduce_integers(m, std::move(dense)));
  }
  std::vector<Rational> dense(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b.coeffs_[j]) != 0) dense[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Cyclotomic(m, reduce_rationals(m, std::move(dense)));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const auto m = lcm_u64(a.conductor_, b.conductor_);
  return a.change_conductor(m).coeffs_ == b.change_conductor(m).coeffs_;
}

}  // namespace grouplab
