#include <gtest/gtest.h>

#include "canmap/arith/matrix.hpp"
#include "canmap/arith/prime_reduction.hpp"
#include "fixtures.hpp"

namespace canmap {
namespace {

using testing::kSeed;
using testing::tower_r;
using testing::tower_rmn;

TowerElement el(const std::string& s, const TowerPtr& t = tower_r()) { return parse_tower_element(s, t); }

// a + b*r in Q(r), r^2 = -15, multiplied by hand.
std::pair<Rational, Rational> mul_qr(std::pair<Rational, Rational> u, std::pair<Rational, Rational> v) {
  return {u.first * v.first - 15 * u.second * v.second, u.first * v.second + u.second * v.first};
}

TEST(Tower, Degrees) {
  EXPECT_EQ(FieldTower::rationals()->degree(), 1u);
  EXPECT_EQ(tower_r()->degree(), 2u);
  EXPECT_EQ(tower_rmn()->degree(), 8u);
}

TEST(Tower, RejectsBadSteps) {
  EXPECT_THROW(tower_from_text({{"r", "x", "2*x^2+15"}}), std::exception);
  EXPECT_THROW(tower_from_text({{"r", "x", "x+1"}}), std::exception);
  EXPECT_THROW(tower_from_text({{"r", "x", "x^2+q"}}), std::exception);
}

TEST(TowerElement, Products) {
  EXPECT_EQ(el("r") * el("r"), el("-15"));
  EXPECT_EQ(el("2+r") * el("2-r"), el("19"));
  EXPECT_EQ(el("r-5") + el("0"), el("r-5"));
}

TEST(TowerElement, Inverses) {
  EXPECT_EQ(inverse(el("1")), el("1"));
  EXPECT_EQ(inverse(el("r")), el("-1/15*r"));
  EXPECT_EQ(inverse(el("2+r")), el("1/19*(2-r)"));
  EXPECT_THROW(inverse(el("0")), std::domain_error);
}

TEST(TowerElement, MatchesHandMultiplication) {
  std::mt19937 rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const auto a = testing::random_element(rng, tower_r());
    const auto b = testing::random_element(rng, tower_r());
    const auto want = mul_qr({a.coeffs()[0], a.coeffs()[1]}, {b.coeffs()[0], b.coeffs()[1]});
    const auto got = a * b;
    EXPECT_EQ(got.coeffs()[0], want.first);
    EXPECT_EQ(got.coeffs()[1], want.second);
  }
}

TEST(TowerElement, FieldAxiomsInDegreeEight) {
  std::mt19937 rng(kSeed + 1);
  const auto t = tower_rmn();
  for (int i = 0; i < 30; ++i) {
    const auto a = testing::random_element(rng, t, 5);
    const auto b = testing::random_element(rng, t, 5);
    const auto c = testing::random_element(rng, t, 5);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_TRUE((a * inverse(a)).is_one());
  }
}

TEST(TowerElement, GeneratorsSatisfyMinimalPolynomials) {
  const auto t = tower_rmn();
  const TowerField k(t);
  const auto r = k.generator(0), m = k.generator(1), n = k.generator(2);
  EXPECT_TRUE((r * r + k.from_int(15)).is_zero());
  EXPECT_TRUE((m * m - k.from_rational(Rational(95, 42)) * m + k.from_rational(Rational(2855, 2646))).is_zero());
  EXPECT_TRUE((n * n + k.from_rational(Rational(443889677) / Rational("206391214080000")) * r -
               k.from_rational(Rational(46942774543) / Rational("619173642240000")))
                  .is_zero());
}

TEST(PrimeReduction, ImageOfR) {
  const auto red = PrimeReduction::create(tower_r(), 17, {6});
  EXPECT_EQ(red.reduce(el("1")).value(), 1u);
  EXPECT_EQ(red.reduce(el("r")).value(), 6u);
  EXPECT_EQ((red.reduce(el("r")) * red.reduce(el("r"))).value(), (17u * 2 - 15) % 17);
}

TEST(PrimeReduction, RejectsNonSquarefreeMinimalPolynomial) {
  EXPECT_THROW(PrimeReduction::create(tower_r(), 5), InvalidReduction);
  EXPECT_THROW(PrimeReduction::create(tower_r(), 3), InvalidReduction);
  EXPECT_THROW(PrimeReduction::create(tower_r(), 15), InvalidReduction);
}

TEST(PrimeReduction, RejectsNonRoot) {
  EXPECT_THROW(PrimeReduction::create(tower_r(), 17, {5}), InvalidReduction);
}

TEST(PrimeReduction, SelectsDistinctValidPrimes) {
  const auto reds = PrimeReduction::select(tower_rmn(), 1u << 30, 3);
  ASSERT_EQ(reds.size(), 3u);
  EXPECT_GE(reds[0].prime(), 1u << 30);
  EXPECT_LT(reds[0].prime(), reds[1].prime());
  EXPECT_LT(reds[1].prime(), reds[2].prime());
}

TEST(PrimeReduction, IsRingHomomorphism) {
  std::mt19937 rng(kSeed + 2);
  const auto t = tower_rmn();
  const auto red = PrimeReduction::select(t, 1u << 30, 1).front();
  for (int i = 0; i < 50; ++i) {
    const auto a = testing::random_element(rng, t, 7);
    const auto b = testing::random_element(rng, t, 7);
    EXPECT_EQ(red.reduce(a + b), red.reduce(a) + red.reduce(b));
    EXPECT_EQ(red.reduce(a * b), red.reduce(a) * red.reduce(b));
    if (!a.is_zero()) EXPECT_EQ(red.reduce(inverse(a)), inverse(red.reduce(a)));
  }
}

TEST(PrimeField, Basics) {
  const PrimeField f(101);
  EXPECT_EQ((f.from_int(-1) + f.one()).value(), 0u);
  EXPECT_EQ(f.from_rational(Rational(1, 2)).value(), 51u);
  EXPECT_EQ(inverse(f.from_int(3)) * f.from_int(3), f.one());
  EXPECT_THROW(PrimeField(100), std::invalid_argument);
  EXPECT_THROW(f.one() + PrimeField(103).one(), std::invalid_argument);
}

TEST(Matrix, KernelAndRank) {
  const PrimeField f(101);
  Matrix<PrimeField> m = {{f.from_int(1), f.from_int(2), f.from_int(3)}, {f.from_int(2), f.from_int(4), f.from_int(6)}};
  EXPECT_EQ(rank<PrimeField>(m), 1u);
  const auto k = kernel(f, m, 3);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) {
    for (const auto& x : apply(f, m, v)) EXPECT_TRUE(x.is_zero());
  }
}

TEST(Matrix, IncrementalSpanReportsRelations) {
  const PrimeField f(101);
  IncrementalSpan<PrimeField> span(f, 2);
  EXPECT_FALSE(span.add({f.from_int(1), f.from_int(2)}));
  EXPECT_FALSE(span.add({f.from_int(0), f.from_int(1)}));
  const auto rel = span.add({f.from_int(3), f.from_int(5)});
  ASSERT_TRUE(rel);
  // c0*(1,2) + c1*(0,1) + (3,5) = 0
  EXPECT_EQ((*rel)[0], f.from_int(-3));
  EXPECT_EQ((*rel)[1], f.from_int(1));
  EXPECT_EQ(span.rank(), 2u);
}

}  // namespace
}  // namespace canmap
