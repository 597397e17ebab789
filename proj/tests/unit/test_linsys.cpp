#include <gtest/gtest.h>

#include "canmap/cover/cover.hpp"
#include "canmap/linsys/linsys.hpp"
#include "fixtures.hpp"

namespace canmap {
namespace {

using testing::kI;
using testing::kQ;
using testing::poly_p4;
using testing::ring_p4;
using testing::x40_data;

RingPtr<PrimeField> fp_ring(std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
  return PolyRing<PrimeField>::make(PrimeField(32003), vars);
}

const ProjScheme<TowerField>& x40() {
  static const ProjScheme<TowerField> x(ring_p4(), {poly_p4(kQ), poly_p4(kI)});
  return x;
}

TEST(Complete, Dimensions) {
  EXPECT_EQ(complete_system(fp_ring(5), 2).dimension(), 15u);
  EXPECT_EQ(complete_system(fp_ring(2), 1).dimension(), 2u);
  EXPECT_EQ(complete_system(fp_ring(7), 2).dimension(), 28u);
  EXPECT_EQ(complete_system(fp_ring(3), 3).dimension(), 10u);
  EXPECT_THROW(complete_system(fp_ring(3), 0), std::invalid_argument);
}

TEST(ThroughScheme, Examples) {
  const auto ring = fp_ring(5);
  const auto all = complete_system(ring, 2);
  EXPECT_EQ(through_scheme(all, ProjScheme<PrimeField>(ring, {})).dimension(), 0u);
  std::vector<Poly<PrimeField>> point;
  for (std::size_t i = 0; i < 4; ++i) point.push_back(Poly<PrimeField>::variable(ring, i));
  EXPECT_EQ(through_scheme(all, ProjScheme<PrimeField>(ring, point)).dimension(), 14u);
  // Quadrics through a line of P^4: 15 - 3.
  EXPECT_EQ(through_scheme(all, ProjScheme<PrimeField>(ring, {point[0], point[1], point[2]})).dimension(), 12u);
}

TEST(ThroughScheme, MembersLieInTheIdeal) {
  const auto l = through_scheme(complete_system(ring_p4(), 2), x40());
  ASSERT_EQ(l.dimension(), 1u);
  EXPECT_EQ(l.members().front().monic(), poly_p4(kQ).monic());
}

TEST(ThroughPoints, Examples) {
  const auto ring = fp_ring(3);
  const auto all = complete_system(ring, 2);
  EXPECT_EQ(through_points(all, {}).dimension(), 6u);
  const auto& k = ring->field();
  std::vector<RationalPoint<PrimeField>> pts;
  for (long i = 1; i <= 5; ++i) pts.emplace_back(std::vector<Fp>{k.from_int(i), k.from_int(i * i), k.one()});
  // Five points of the conic x0^2 = x1*x2 determine it.
  const auto conic = through_points(all, pts);
  ASSERT_EQ(conic.dimension(), 1u);
  EXPECT_EQ(conic.members().front().monic(), parse_poly<PrimeField>("x0^2-x1*x2", ring).monic());
}

// dim = 15 - rank of the 16 x 15 evaluation matrix, computed directly.
TEST(ThroughPoints, SixteenNodesAgainstEvaluationRank) {
  const auto& d = x40_data();
  const auto nodes = d.nodes();
  const auto set = cover::branch_char_set(d.assignment(), cover::Character{0b111});
  ASSERT_EQ(set.size(), 16u);
  std::vector<RationalPoint<TowerField>> pts;
  for (auto i : set.members()) pts.push_back(nodes[i]);
  const auto monos = monomials_of_degree(5, 2);
  Matrix<TowerField> eval;
  for (const auto& p : pts) {
    Vec<TowerField> row;
    for (const auto& m : monos) row.push_back(Poly<TowerField>::monomial(ring_p4(), m, ring_p4()->field().one()).evaluate(p.coords()));
    eval.push_back(std::move(row));
  }
  const std::size_t expected = 15 - rank<TowerField>(eval);
  EXPECT_EQ(through_points(complete_system(ring_p4(), 2), pts).dimension(), expected);
}

TEST(Trace, Examples) {
  const auto zero = LinSys<TowerField>(ring_p4(), 2, {});
  EXPECT_EQ(trace_dimension(zero, x40()).dimension, 0u);
  const auto all = complete_system(ring_p4(), 2);
  const auto t = trace_dimension(all, x40());
  EXPECT_EQ(t.dimension, 14u);
  EXPECT_EQ(t.sections.size(), 14u);
  EXPECT_EQ(trace_dimension_by_slice(all, x40()), 14u);
  EXPECT_EQ(trace_dimension(complete_system(ring_p4(), 1), x40()).dimension, 5u);
}

TEST(Trace, QuadricsThroughTwoTropes) {
  const auto& d = x40_data();
  auto trope = [&](int id) {
    return reduced_subscheme(with_equations(x40(), {d.tropes.at(static_cast<std::size_t>(id - 1))}));
  };
  const auto u = scheme_union(trope(d.branch_tropes.first), trope(d.branch_tropes.second));
  const auto l = through_scheme(complete_system(ring_p4(), 2), u);
  EXPECT_EQ(trace_dimension(l, x40()).dimension, 2u);
  EXPECT_EQ(trace_dimension_by_slice(l, x40()), 2u);
}

TEST(Trace, RejectsForeignScheme) {
  EXPECT_THROW(trace_dimension(complete_system(fp_ring(5), 2), ProjScheme<PrimeField>(fp_ring(4), {})),
               std::invalid_argument);
}

}  // namespace
}  // namespace canmap
