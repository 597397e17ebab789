#include <gtest/gtest.h>

#include "canmap/scheme/scheme.hpp"
#include "fixtures.hpp"

namespace canmap {
namespace {

using testing::kI;
using testing::kQ;
using testing::poly_p4;
using testing::ring_p4;
using testing::x40_data;

using FpRing = RingPtr<PrimeField>;

FpRing fp_ring(std::vector<std::string> vars) { return PolyRing<PrimeField>::make(PrimeField(32003), std::move(vars)); }

ProjScheme<PrimeField> V(const FpRing& ring, const std::vector<std::string>& gens) {
  std::vector<Poly<PrimeField>> ps;
  for (const auto& g : gens) ps.push_back(parse_poly<PrimeField>(g, ring));
  return ProjScheme<PrimeField>(ring, ps);
}

RationalPoint<PrimeField> pt(const FpRing& ring, std::vector<long> cs) {
  std::vector<Fp> v;
  for (long c : cs) v.push_back(ring->field().from_int(c));
  return RationalPoint<PrimeField>(std::move(v));
}

const ProjScheme<TowerField>& x40() {
  static const ProjScheme<TowerField> x(ring_p4(), {poly_p4(kQ), poly_p4(kI)});
  return x;
}

const ProjScheme<TowerField>& sx40() {
  static const ProjScheme<TowerField> s = singular_subscheme(x40(), 2);
  return s;
}

TEST(ProjScheme, RejectsInhomogeneousIdeal) {
  const auto ring = fp_ring({"x", "y"});
  EXPECT_THROW(V(ring, {"x+y^2"}), std::invalid_argument);
}

TEST(RationalPoint, Normalization) {
  const auto ring = fp_ring({"x", "y", "z"});
  EXPECT_EQ(pt(ring, {2, 4, 2}), pt(ring, {1, 2, 1}));
  EXPECT_EQ(pt(ring, {3, 0, 0}), pt(ring, {1, 0, 0}));
  EXPECT_FALSE(pt(ring, {1, 2, 0}) == pt(ring, {1, 2, 1}));
  EXPECT_THROW(pt(ring, {0, 0, 0}), std::invalid_argument);
}

TEST(Singular, SmoothConicIsEmpty) {
  const auto ring = fp_ring({"x", "y", "z"});
  EXPECT_TRUE(singular_subscheme(V(ring, {"x^2+y^2+z^2"}), 1).is_empty());
  EXPECT_THROW(singular_subscheme(V(ring, {"x^2+y^2+z^2"}), 2), std::invalid_argument);
}

TEST(Singular, NodesOfTheSurface) {
  const auto dd = sx40().dim_degree();
  EXPECT_EQ(dd.dimension, 0);
  EXPECT_EQ(dd.degree, 40);
}

TEST(Reduced, DoublePoint) {
  const auto ring = fp_ring({"x", "y"});
  const auto r = reduced_subscheme(V(ring, {"x^2"}));
  EXPECT_TRUE(ideal_equal(r.ideal(), V(ring, {"x"}).ideal()));
}

TEST(Reduced, TropeIsAQuarticCurve) {
  const auto& d = x40_data();
  const auto t = with_equations(x40(), {d.tropes.front()});
  const auto dd = t.dim_degree();
  EXPECT_EQ(dd.dimension, 1);
  EXPECT_EQ(dd.degree, 8);
  const auto r = reduced_subscheme(t).dim_degree();
  EXPECT_EQ(r.dimension, 1);
  EXPECT_EQ(r.degree, 4);
}

TEST(UnionIntersection, PointsOfTheLine) {
  const auto ring = fp_ring({"x", "y"});
  const auto u = scheme_union(V(ring, {"x"}), V(ring, {"y"}));
  EXPECT_EQ(u.dimension(), 0);
  EXPECT_EQ(u.degree(), 2);
  EXPECT_TRUE(scheme_intersection(V(ring, {"x"}), V(ring, {"y"})).is_empty());
}

TEST(ContainsPoint, Examples) {
  const auto ring = fp_ring({"x", "y", "z"});
  EXPECT_TRUE(contains_point(ProjScheme<PrimeField>(ring, {}), pt(ring, {5, 7, 1})));
  EXPECT_TRUE(contains_point(sx40(), testing::point_p4({"4", "-r+1", "r-5", "-r+1", "4"})));
  EXPECT_FALSE(contains_point(x40(), testing::point_p4({"1", "0", "0", "0", "0"})));
  EXPECT_THROW(contains_point(x40(), testing::point_p4({"1", "0", "0", "0"})), std::invalid_argument);
}

TEST(Certificate, ListedNodesAreComplete) {
  const auto nodes = x40_data().nodes();
  const auto cert = certify_zero_dim_points(sx40(), nodes);
  EXPECT_TRUE(cert.complete);
  EXPECT_EQ(cert.points.size(), 40u);
  EXPECT_EQ(cert.reduced_degree, 40);
  const std::vector<RationalPoint<TowerField>> fewer(nodes.begin() + 1, nodes.end());
  const auto partial = certify_zero_dim_points(sx40(), fewer);
  EXPECT_FALSE(partial.complete);
  EXPECT_EQ(partial.reduced_degree, 40);
}

TEST(Certificate, EdgeCases) {
  const auto ring = fp_ring({"x", "y", "z"});
  EXPECT_TRUE(certify_zero_dim_points(V(ring, {"x", "y", "z"}), {}).complete);
  const auto two = V(ring, {"x*y", "z"});
  EXPECT_TRUE(certify_zero_dim_points(two, {pt(ring, {1, 0, 0}), pt(ring, {0, 1, 0})}).complete);
  EXPECT_THROW(certify_zero_dim_points(two, {pt(ring, {1, 1, 0})}), std::invalid_argument);
  EXPECT_THROW(certify_zero_dim_points(two, {pt(ring, {1, 0, 0}), pt(ring, {2, 0, 0})}), std::invalid_argument);
  // A double point is one point.
  EXPECT_TRUE(certify_zero_dim_points(V(ring, {"x^2", "y"}), {pt(ring, {0, 0, 1})}).complete);
}

TEST(SchemeEqual, Examples) {
  EXPECT_TRUE(scheme_equal(x40(), ProjScheme<TowerField>(ring_p4(), {poly_p4(kI), poly_p4(kQ)})));
  EXPECT_FALSE(scheme_equal(ProjScheme<TowerField>(ring_p4(), {poly_p4(kQ)}), x40()));
  const auto ring = fp_ring({"x", "y", "z"});
  // Ideals differing only in components supported at the irrelevant ideal.
  EXPECT_TRUE(scheme_equal(V(ring, {"x"}), V(ring, {"x^3", "x^2*y", "x^2*z", "x*y^2", "x*y*z", "x*z^2"})));
  // <x> meet <y,z>^2 has a fat point off the line.
  EXPECT_FALSE(scheme_equal(V(ring, {"x"}), V(ring, {"x*y^2", "x*z^2", "x*y*z"})));
  EXPECT_TRUE(scheme_equal(V(ring, {"x", "y", "z"}), V(ring, {"x", "y^3", "y^2*z^5", "z^7"})));
  EXPECT_FALSE(scheme_equal(V(ring, {"x"}), V(ring, {"x", "y"})));
  EXPECT_TRUE(scheme_equal(V(ring, {"x*y", "x*z", "x^2"}), V(ring, {"x"})));
}

TEST(Smooth, Examples) {
  const auto ring = fp_ring({"x", "y", "z"});
  const auto conic = V(ring, {"x*z-y^2"});
  EXPECT_TRUE(smooth_at_points(conic, {pt(ring, {1, 0, 0}), pt(ring, {1, 1, 1}), pt(ring, {4, 2, 1})}));
  EXPECT_FALSE(smooth_at_points(V(ring, {"x*y"}), {pt(ring, {0, 0, 1})}));
  EXPECT_TRUE(smooth_at_points(V(ring, {"x*y"}), {pt(ring, {1, 0, 1})}));
}

TEST(Smooth, TropeAtItsNodes) {
  const auto& d = x40_data();
  const auto t = reduced_subscheme(with_equations(x40(), {d.tropes.front()}));
  const auto nodes = points_on(with_equations(sx40(), {d.tropes.front()}), d.nodes());
  EXPECT_EQ(nodes.size(), 12u);
  EXPECT_TRUE(smooth_at_points(t, nodes));
}

TEST(Nodes, OrdinaryDoublePoints) {
  const auto ring = fp_ring({"x", "y", "z", "w"});
  EXPECT_TRUE(is_ordinary_double_point(V(ring, {"x^2+y^2+z^2"}), pt(ring, {0, 0, 0, 1})));
  EXPECT_TRUE(is_ordinary_double_point(V(ring, {"x*y*w-z^2*w+x^3"}), pt(ring, {0, 0, 0, 1})));
  EXPECT_FALSE(is_ordinary_double_point(V(ring, {"x^2*w+y^3+z^3"}), pt(ring, {0, 0, 0, 1})));
  EXPECT_FALSE(is_ordinary_double_point(V(ring, {"x^2+y^2-z^2"}), pt(ring, {1, 0, 1, 1})));
  EXPECT_TRUE(is_ordinary_double_point(x40(), x40_data().nodes().front()));
}

}  // namespace
}  // namespace canmap
