#include <doctest.h>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

#include "grouplab/arith.hpp"
#include "grouplab/cyclotomic.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/report.hpp"

using namespace grouplab;
using Float = boost::multiprecision::cpp_bin_float_50;

namespace {

// Oracle tolerance for the 50-digit numerical embedding.
const Float kEmbeddingTolerance("1e-40");

struct Complex {
  Float re, im;
};

Float to_float(const Rational& q) {
  return Float(q.get_num().get_str()) / Float(q.get_den().get_str());
}

// Numerical value of a under zeta_m -> exp(2 pi i / m).
Complex embed_numerically(const Cyclotomic& a) {
  const Float two_pi = 2 * boost::math::constants::pi<Float>();
  Complex out{0, 0};
  const auto m = a.conductor();
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const Float angle = two_pi * Float(k) / Float(m);
    const Float c = to_float(a.coeffs()[k]);
    out.re += c * cos(angle);
    out.im += c * sin(angle);
  }
  return out;
}

bool close(const Complex& a, const Complex& b) {
  return abs(a.re - b.re) < kEmbeddingTolerance && abs(a.im - b.im) < kEmbeddingTolerance;
}

Complex mul(const Complex& a, const Complex& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

int mobius(std::uint64_t n) {
  int sign = 1;
  for (auto p : prime_divisors(n)) {
    if ((n / p) % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::mt19937_64& rng() {
  static std::mt19937_64 gen(987654321);
  return gen;
}

const std::uint64_t kConductors[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20, 21, 24, 27, 30, 36};

Cyclotomic random_element(std::uint64_t m) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), terms(0, 4);
  std::uniform_int_distribution<std::int64_t> exp(0, static_cast<std::int64_t>(m) - 1);
  auto out = Cyclotomic::zero(m);
  const int n = terms(rng());
  for (int i = 0; i < n; ++i) out += embed(Rational(num(rng()), den(rng())), m) * zeta(m, exp(rng()));
  return out;
}

std::uint64_t random_conductor() {
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kConductors) - 1);
  return kConductors[pick(rng())];
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(105).size() == 49);
  // Phi_105 is the first with a coefficient of absolute value 2.
  CHECK(cyclotomic_polynomial(105)[7] == -2);
}

TEST_CASE("property: Phi_m agrees with the Mobius product at integer points") {
  for (std::uint64_t m = 1; m <= 60; ++m) {
    const auto& phi = cyclotomic_polynomial(m);
    CHECK(phi.size() == euler_phi(m) + 1);
    for (long x : {2L, 3L, -2L, 5L}) {
      mpz_class value = 0;
      mpz_class power = 1;
      for (auto c : phi) {
        value += power * c;
        power *= x;
      }
      mpq_class expected = 1;
      for (auto d : divisors(m)) {
        const int mu = mobius(m / d);
        if (mu == 0) continue;
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), mpz_class(x).get_mpz_t(), d);
        term -= 1;
        if (mu > 0) {
          expected *= term;
        } else {
          expected /= term;
        }
      }
      CHECK(mpq_class(value) == expected);
    }
  }
}

TEST_CASE("roots of unity") {
  CHECK(zeta(1, 0) == embed(1));
  CHECK(zeta(3, 1) + zeta(3, 2) == embed(-1));
  CHECK(zeta(4, 2) == embed(-1));
  CHECK(zeta(5, 1) * zeta(5, 4) == embed(1));
  CHECK((embed(1) + zeta(3, 1)) * (embed(1) + zeta(3, 2)) == embed(1));
  CHECK(zeta(7, -1) == zeta(7, 6));
  CHECK(zeta(7, 15) == zeta(7, 1));

  SUBCASE("sum of primitive m-th roots is mu(m)") {
    for (std::uint64_t m = 1; m <= 40; ++m) {
      auto sum = Cyclotomic::zero(m);
      for (std::uint64_t k = 0; k < m; ++k) {
        if (gcd_u64(k, m) == 1) sum += zeta(m, static_cast<std::int64_t>(k));
      }
      CHECK(sum == embed(mobius(m)));
    }
  }

  SUBCASE("root counts") {
    std::vector<std::int64_t> counts(6, 0);
    counts[0] = 2;
    counts[3] = 1;
    CHECK(Cyclotomic::from_root_counts(6, counts) == embed(1));
    CHECK_THROWS_AS(Cyclotomic::from_root_counts(5, counts), InputError);
  }
}

TEST_CASE("field identities") {
  const auto a = zeta(12, 5) + embed(Rational(3, 7), 12);
  CHECK(a + Cyclotomic::zero(12) == a);
  CHECK(a * embed(1) == a);
  CHECK(a - a == Cyclotomic::zero(5));
  CHECK((-a) + a == Cyclotomic());
}

TEST_CASE("property: ring axioms") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_element(random_conductor());
    const auto b = random_element(random_conductor());
    const auto c = random_element(random_conductor());
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclotomic());
  }
}

TEST_CASE("property: arithmetic matches a 50-digit numerical embedding") {
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_element(random_conductor());
    const auto b = random_element(random_conductor());
    CHECK(close(embed_numerically(a * b), mul(embed_numerically(a), embed_numerically(b))));
    const auto sum = embed_numerically(a + b);
    const auto ea = embed_numerically(a);
    const auto eb = embed_numerically(b);
    CHECK(close(sum, {ea.re + eb.re, ea.im + eb.im}));
    const auto conj = embed_numerically(a.conjugate());
    CHECK(close(conj, {ea.re, -ea.im}));
  }
}

TEST_CASE("conductor changes") {
  CHECK(embed(-1, 2).change_conductor(6) == zeta(6, 3));
  CHECK(zeta(3, 1).change_conductor(6) == zeta(6, 2));
  CHECK(zeta(3, 1).change_conductor(6).conductor() == 6);
  CHECK_THROWS_AS(zeta(4, 1).change_conductor(6), InputError);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_conductor();
    const auto a = random_element(m);
    const auto lifted = a.change_conductor(m * 6);
    CHECK(lifted == a);
    CHECK(close(embed_numerically(lifted), embed_numerically(a)));
  }
}

TEST_CASE("galois action") {
  CHECK(zeta(8, 1).conjugate() == zeta(8, 7));
  CHECK_THROWS_AS(zeta(8, 1).galois(2), InputError);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_conductor();
    const auto a = random_element(m);
    CHECK(a.galois(1) == a);
    std::vector<std::int64_t> units;
    for (std::uint64_t r = 1; r < std::max<std::uint64_t>(m, 2); ++r) {
      if (gcd_u64(r, m) == 1) units.push_back(static_cast<std::int64_t>(r));
    }
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    const auto r = units[pick(rng())];
    const auto s = units[pick(rng())];
    CHECK(a.galois(r).galois(s) == a.galois((r * s) % static_cast<std::int64_t>(std::max<std::uint64_t>(m, 1))));
    const auto b = random_element(m);
    CHECK((a * b).galois(r) == a.galois(r) * b.galois(r));
  }
}

TEST_CASE("rationality") {
  CHECK((zeta(3, 1) + zeta(3, 2)).is_rational());
  CHECK((zeta(3, 1) + zeta(3, 2)).rational_value() == Rational(-1));
  CHECK_FALSE(zeta(3, 1).is_rational());
  CHECK_FALSE(zeta(3, 1).rational_value().has_value());
  CHECK(embed(Rational(7, 2), 12).is_rational());
  CHECK(embed(Rational(7, 2), 12).rational_value() == Rational(7, 2));
  // sqrt(2) = zeta_8 + zeta_8^7 is real but irrational.
  CHECK_FALSE((zeta(8, 1) + zeta(8, 7)).is_rational());
}

TEST_CASE("prime cyclotomic subfields") {
  CHECK(zeta(3, 1).lies_in_prime_cyclotomic(3));
  CHECK_FALSE(zeta(9, 1).lies_in_prime_cyclotomic(3));
  CHECK((zeta(9, 3)).lies_in_prime_cyclotomic(3));
  CHECK(zeta(6, 1).lies_in_prime_cyclotomic(3));  // -zeta_3^2
  CHECK_FALSE(zeta(4, 1).lies_in_prime_cyclotomic(2));
  CHECK(zeta(15, 5).lies_in_prime_cyclotomic(3));
  CHECK_FALSE(zeta(15, 3).lies_in_prime_cyclotomic(3));
  for (std::uint64_t p : {2, 3, 5, 7}) CHECK(embed(Rational(-5, 3), 60).lies_in_prime_cyclotomic(p));
  // Gauss sum: zeta_5 + zeta_5^4 - zeta_5^2 - zeta_5^3 = sqrt(5) lives in Q(zeta_5).
  const auto g5 = zeta(5, 1) + zeta(5, 4) - zeta(5, 2) - zeta(5, 3);
  CHECK(g5.change_conductor(20).lies_in_prime_cyclotomic(5));
  CHECK(g5 * g5 == embed(5));
}

TEST_CASE("moduli") {
  CHECK(zeta(5, 2).modulus_equals(1));
  CHECK(Cyclotomic().modulus_equals(0));
  CHECK_FALSE((embed(1) + zeta(4, 1)).modulus_equals(1));
  CHECK((embed(1) + zeta(4, 1)).modulus_equals(0) == false);
  CHECK((embed(3) * zeta(7, 3)).modulus_equals(3));
}

TEST_CASE("rational text") {
  CHECK(rational_to_string(Rational(-3)) == "-3/1");
  CHECK(rational_to_string(Rational(6, 4)) == "3/2");
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
}

TEST_CASE("serialization") {
  CHECK(cyclotomic_json(zeta(3, 1)) == R"({"conductor":3,"coeffs":["0/1","1/1"]})");
  CHECK(parse_cyclotomic_json(R"({"conductor":4,"coeffs":["1/2","-1"]})") ==
        embed(Rational(1, 2)) - zeta(4, 1));
  CHECK_THROWS_AS(parse_cyclotomic_json(R"({"conductor":4,"coeffs":["1"]})"), InputError);
  CHECK_THROWS_AS(parse_cyclotomic_json("[]"), InputError);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_element(random_conductor());
    CHECK(parse_cyclotomic_json(cyclotomic_json(a)) == a);
  }
}

TEST_CASE("text form") {
  CHECK(Cyclotomic().to_string() == "0");
  CHECK(embed(Rational(-1, 2)).to_string() == "-1/2");
  CHECK_FALSE(zeta(3, 1).to_string().empty());
}
