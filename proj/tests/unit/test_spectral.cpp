#include <gtest/gtest.h>

#include "builders.hpp"
#include "dense_oracle.hpp"
#include "s1calc/brieskorn.hpp"
#include "s1calc/errors.hpp"
#include "s1calc/spectral.hpp"

using namespace s1calc;
using testsupport::basis_vector;
using testsupport::make_complex;

namespace {

S1Complex trivial_complex() { return make_complex({{"a", 0}, {"b", 1}, {"c", -2}, {"d", 1}}, 4, {}); }

// a, b, c with delta^1 a = b and delta^0 c = b, so a is in Z_1 with alpha_1 = -c.
S1Complex hand_complex() {
  return make_complex({{"a", 2}, {"b", 1}, {"c", 0}}, 2, {{1, "a", "b"}, {0, "c", "b"}});
}

bool contains(const FiltrationSpace& space, int d, const SparseVector& v) {
  const SparseMatrix basis = space.in_degree(d);
  return basis.cols() > 0 && in_span(basis, v);
}

}  // namespace

TEST(ZSpace, LevelZeroIsKernel) {
  const S1Complex c = milnor_model(3, 4).complex();
  const FiltrationSpace z = z_space(c, 0);
  const GradedComplex g = c.zeroth();
  for (int d : g.degrees_present()) {
    ASSERT_EQ(z.dimension(d), g.cocycles(d).cols());
    if (z.dimension(d) > 0) ASSERT_TRUE(span_contains(z.in_degree(d), g.cocycles(d)));
  }
}

TEST(ZSpace, TrivialComplex) {
  const S1Complex c = trivial_complex();
  for (int k = 0; k <= 4; ++k) {
    const FiltrationSpace z = z_space(c, k), b = b_space(c, k);
    EXPECT_EQ(z.dimension(1), 2u);
    EXPECT_EQ(z.dimension(0) + z.dimension(-2), 2u);
    EXPECT_EQ(b.all().cols(), 0u);
  }
  EXPECT_THROW(z_space(c, 5), InputError);
  EXPECT_THROW(b_space(c, 5), InputError);
}

TEST(ZSpace, HandWitness) {
  const S1Complex c = hand_complex();
  const auto w = find_z_witness(c, 1, basis_vector(c, "a"));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->alpha()[1], basis_vector(c, "c", -1));
  EXPECT_TRUE(w->boundary().is_zero());
  EXPECT_FALSE(find_z_witness(c, 0, basis_vector(c, "c")));
}

// In the (3,3) model p_check_2 is delta^0-closed and delta^1 p_check_2 = p_hat_2 =
// delta^0 p_check_1, so p_check_2 is in Z_1 with alpha_1 = -p_check_1. It is not in
// Z_2, and p_check_0 is not even in Z_0.
TEST(ZSpace, MilnorModel33) {
  const S1Complex c = milnor_model(3, 3).complex();
  const auto w = find_z_witness(c, 1, basis_vector(c, "p_check_2"));
  ASSERT_TRUE(w);
  const auto image = apply_s1_differential(c, w->chain());
  for (const auto& v : image) EXPECT_TRUE(v.is_zero());
  const SparseVector diff = w->alpha()[1] + basis_vector(c, "p_check_1");
  EXPECT_TRUE(diff.is_zero() || (c.delta(0) * diff).is_zero());
  EXPECT_TRUE(contains(z_space(c, 1), 3, basis_vector(c, "p_check_2")));
  EXPECT_FALSE(find_z_witness(c, 2, basis_vector(c, "p_check_2")));
  EXPECT_FALSE(find_z_witness(c, 1, basis_vector(c, "p_check_0")));
  EXPECT_FALSE(find_z_witness(c, 0, basis_vector(c, "p_check_0")));
}

TEST(BSpace, LevelZeroIsImage) {
  const S1Complex c = milnor_model(2, 3).complex();
  const FiltrationSpace b = b_space(c, 0);
  const GradedComplex g = c.zeroth();
  for (int d : g.degrees_present()) ASSERT_EQ(b.dimension(d), g.coboundaries(d).cols());
}

TEST(BSpace, UnitPrimitiveInMilnorModels) {
  for (int k = 1; k <= 4; ++k) {
    for (int m = k; m <= 5; ++m) {
      const SplitS1Complex s = milnor_model(k, m);
      const S1Complex& c = s.complex();
      const auto image = apply_s1_differential(c, milnor_unit_primitive(s, k, m));
      ASSERT_EQ(image[0], s.unit());
      for (std::size_t i = 1; i < image.size(); ++i) ASSERT_TRUE(image[i].is_zero());
      ASSERT_TRUE(contains(b_space(c, k - 1), 0, s.unit()));
      ASSERT_TRUE(oracle::exact_in(c, k - 1, s.unit()));
      if (k >= 2) {
        ASSERT_FALSE(find_b_witness(c, k - 2, s.unit()));
        ASSERT_FALSE(oracle::exact_in(c, k - 2, s.unit()));
      }
    }
  }
}

TEST(BSpace, DimensionsMatchOracle) {
  for (const auto& [k, m] : {std::pair{2, 2}, {3, 3}, {2, 4}, {3, 4}}) {
    const S1Complex c = milnor_model(k, m, {.sphere_classes = false}).complex();
    for (int level = 0; level <= c.truncation(); ++level) {
      const FiltrationSpace z = z_space(c, level), b = b_space(c, level);
      for (int d = -2 * m; d <= 2 * m; ++d) {
        ASSERT_EQ(z.dimension(d), oracle::z_dim(c, level, d)) << k << m << level << d;
        ASSERT_EQ(b.dimension(d), oracle::b_dim(c, level, d)) << k << m << level << d;
      }
    }
  }
}

TEST(DeltaK, ZeroWhenDeltaOneVanishes) {
  const S1Complex c = make_complex({{"x", 0}, {"y", 1}, {"z", 3}}, 2, {{0, "x", "y"}});
  const DeltaKMap d = delta_k(c, 1);
  for (const auto& [deg, b] : d.blocks) EXPECT_TRUE(b.matrix.is_zero());
}

// Delta^1 [p_check_1] = [p_hat_1]. Since delta^0 p_check_0 = 2e + p_hat_1, this class
// equals -2[e] in Z_0/B_0, which is nonzero.
TEST(DeltaK, MilnorModel22) {
  const S1Complex c = milnor_model(2, 2).complex();
  const DeltaKMap d = delta_k(c, 1);
  ASSERT_TRUE(d.blocks.count(1));
  const auto& block = d.blocks.at(1);
  EXPECT_EQ(d.rank(1), 1u);
  const auto p = block.codomain.classify(basis_vector(c, "p_hat_1"));
  const auto e = block.codomain.classify(basis_vector(c, "e"));
  ASSERT_EQ(p.kind, Subquotient::Kind::Class);
  EXPECT_EQ(p.coordinates, Rational(-2) * e.coordinates);
  const auto w = find_z_witness(c, 0, basis_vector(c, "p_check_1"));
  ASSERT_TRUE(w);
  EXPECT_EQ(delta_k_value(c, *w), basis_vector(c, "p_hat_1"));
}

TEST(DeltaK, TruncationLimits) {
  const S1Complex c = milnor_model(2, 2).complex();
  EXPECT_NO_THROW(delta_k(c, 2));
  EXPECT_THROW(delta_k(c, 3), UnsupportedTruncation);
  EXPECT_THROW(delta_k(c, 0), InputError);
}

TEST(DeltaK, KernelImageCokernelIdentities) {
  for (const auto& [k, m] : {std::pair{2, 2}, {3, 3}, {3, 5}, {4, 4}}) {
    const S1Complex c = milnor_model(k, m, {.sphere_classes = false}).complex();
    for (int j = 1; 2 * j <= c.truncation(); ++j) {
      const DeltaKMap map = delta_k(c, j);
      for (int d = -2 * m - 2; d <= 2 * m + 2; ++d) {
        const int t = d + 1 - 2 * j;
        const std::size_t ker = map.blocks.count(d) ? map.kernel_dimension(d) : 0;
        const std::size_t rk = map.blocks.count(d) ? map.rank(d) : 0;
        ASSERT_EQ(ker, oracle::z_dim(c, j, d) - oracle::b_dim(c, 0, d));
        ASSERT_EQ(rk, oracle::b_dim(c, j, t) - oracle::b_dim(c, j - 1, t));
        if (map.blocks.count(d)) ASSERT_EQ(map.cokernel_dimension(d), oracle::z_dim(c, 0, t) - oracle::b_dim(c, j, t));
      }
    }
  }
}

TEST(DeltaK, WitnessIndependence) {
  // a is in Z_1 with alpha_1 = -c or alpha_1 = -c + z. The two values of Delta^2
  // differ by delta^1 z = w, which is exact in F^1 C^+.
  const S1Complex c = make_complex({{"a", 2}, {"b", 1}, {"c", 0}, {"z", 0}, {"w", -1}}, 4,
                                   {{1, "a", "b"}, {0, "c", "b"}, {1, "z", "w"}});
  ASSERT_TRUE(verify_s1_relations(c).valid());
  const DeltaKMap map = delta_k(c, 2);
  const WitnessedCycle w1(c, {basis_vector(c, "a"), basis_vector(c, "c", -1)}, SparseVector(c.size()));
  const WitnessedCycle w2(c, {basis_vector(c, "a"), basis_vector(c, "z") - basis_vector(c, "c")},
                          SparseVector(c.size()));
  EXPECT_NE(delta_k_value(c, w1), delta_k_value(c, w2));
  const auto& block = map.blocks.at(2);
  const auto x = block.codomain.classify(delta_k_value(c, w1));
  const auto y = block.codomain.classify(delta_k_value(c, w2));
  EXPECT_EQ(x.kind, y.kind);
  EXPECT_EQ(x.coordinates, y.coordinates);
}

TEST(Leray, FirstPageIsCohomology) {
  const S1Complex c = milnor_model(2, 3).complex();
  const LerayPage page = leray_page(c, c.truncation(), 0);
  const auto h = cohomology(c.zeroth());
  for (int i = 0; i <= c.truncation(); ++i) {
    for (const auto& [d, g] : h.groups) ASSERT_EQ(page.dimension(i, d), g.dimension());
  }
}

TEST(Leray, TrivialComplexPagesAreConstant) {
  const S1Complex c = trivial_complex();
  const LerayPage first = leray_page(c, 4, 0);
  for (int k = 1; k <= 4; ++k) {
    const LerayPage page = leray_page(c, 4, k);
    for (int i = 0; i <= 4; ++i)
      for (int d = -3; d <= 2; ++d) ASSERT_EQ(page.dimension(i, d), first.dimension(i, d));
  }
}

TEST(Leray, ConvergesToFilteredCohomology) {
  const S1Complex c = milnor_model(2, 2).complex();
  const int n = 2;
  const LerayPage last = leray_page(c, n, n);
  for (int t = -8; t <= 4; ++t) ASSERT_EQ(last.total_dimension(t), oracle::cohomology_dim(c, n, t)) << t;
  EXPECT_THROW(leray_page(c, 5, 0), InputError);
}
