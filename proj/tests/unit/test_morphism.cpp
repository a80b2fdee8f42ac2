#include <gtest/gtest.h>

#include "builders.hpp"
#include "s1calc/brieskorn.hpp"
#include "s1calc/dilation.hpp"
#include "s1calc/errors.hpp"
#include "s1calc/morphism.hpp"

using namespace s1calc;
using testsupport::basis_vector;
using testsupport::make_complex;

namespace {

SparseMatrix map_by_name(const S1Complex& from, const S1Complex& to,
                         const std::vector<std::tuple<std::string, std::string, Rational>>& pairs) {
  std::vector<MatrixEntry> entries;
  for (const auto& [a, b, v] : pairs) entries.push_back({to.index_of(b), from.index_of(a), v});
  return SparseMatrix::from_entries(to.size(), from.size(), entries);
}

// C: a2, b1, c0 with delta^1 a = b, delta^0 c = b. D: p2, q0 with no differential.
struct HandExample {
  S1Complex c = make_complex({{"a", 2}, {"b", 1}, {"c", 0}}, 1, {{1, "a", "b"}, {0, "c", "b"}});
  S1Complex d = make_complex({{"p", 2}, {"q", 0}}, 1, {});
  S1Morphism phi{c, d, {map_by_name(c, d, {{"a", "p", 1}, {"c", "q", 1}}), map_by_name(c, d, {{"a", "q", 3}})}};
};

S1Morphism inclusion_into_milnor22() {
  const S1Complex big = milnor_model(2, 2).complex();
  const Rational coeff = big.delta(1).at(big.index_of("p_hat_1"), big.index_of("p_check_1"));
  const S1Complex sub = make_complex({{"e", 0}, {"p_check_1", 1}, {"p_hat_1", 0}}, big.truncation(),
                                     {{1, "p_check_1", "p_hat_1", coeff}});
  std::vector<SparseMatrix> components(big.truncation() + 1, SparseMatrix(big.size(), sub.size()));
  components[0] = map_by_name(sub, big, {{"e", "e", 1}, {"p_check_1", "p_check_1", 1}, {"p_hat_1", "p_hat_1", 1}});
  return S1Morphism(sub, big, components);
}

}  // namespace

TEST(Morphism, IdentityIsValid) {
  const S1Complex c = milnor_model(2, 3).complex();
  EXPECT_TRUE(verify_morphism(identity_morphism(c)).valid());
  EXPECT_TRUE(verify_morphism(zero_morphism(c, c)).valid());
}

TEST(Morphism, NonChainMapFailsAtLevelZero) {
  const S1Complex c = make_complex({{"x", 0}, {"y", 1}}, 0, {{0, "x", "y"}});
  const S1Complex d = make_complex({{"x", 0}, {"y", 1}}, 0, {});
  const MorphismReport report = verify_morphism(S1Morphism(c, d, {SparseMatrix::identity(2)}));
  EXPECT_FALSE(report.valid());
  ASSERT_EQ(report.relations.size(), 1u);
  EXPECT_FALSE(report.relations[0].holds);
}

TEST(Morphism, DegreeViolation) {
  const S1Complex c = make_complex({{"x", 0}}, 0, {});
  const S1Complex d = make_complex({{"y", 1}}, 0, {});
  const MorphismReport report = verify_morphism(S1Morphism(c, d, {SparseMatrix::identity(1)}));
  EXPECT_FALSE(report.valid());
  EXPECT_EQ(report.degree_violations.size(), 1u);
}

TEST(Morphism, ShapeErrors) {
  const S1Complex c = make_complex({{"x", 0}}, 1, {});
  const S1Complex d = make_complex({{"y", 0}}, 0, {});
  EXPECT_THROW(S1Morphism(c, d, {SparseMatrix::identity(1)}), InputError);
  EXPECT_THROW(S1Morphism(c, c, {SparseMatrix(2, 1)}), InputError);
}

TEST(Morphism, InclusionOfSubcomplex) {
  const S1Morphism phi = inclusion_into_milnor22();
  EXPECT_TRUE(verify_s1_relations(phi.source()).valid());
  EXPECT_TRUE(verify_morphism(phi).valid());
  EXPECT_TRUE(verify_functoriality(phi).valid());
}

TEST(Morphism, Composition) {
  const S1Morphism phi = inclusion_into_milnor22();
  EXPECT_EQ(compose(identity_morphism(phi.target()), phi), phi);
  EXPECT_EQ(compose(phi, identity_morphism(phi.source())), phi);
  const S1Complex& big = phi.target();
  const S1Morphism zero = zero_morphism(big, big);
  EXPECT_EQ(compose(zero, zero), zero);
  EXPECT_THROW(compose(phi, phi), InputError);

  const HandExample h;
  const S1Morphism id = identity_morphism(h.c);
  for (int k = 0; k <= 1; ++k) EXPECT_EQ(plus_map(compose(h.phi, id), k), plus_map(h.phi, k) * plus_map(id, k));
}

TEST(Morphism, Homotopy) {
  const S1Complex c = make_complex({{"x", 0}, {"y", 1}}, 0, {{0, "x", "y"}});
  const S1Morphism id = identity_morphism(c);
  const S1Morphism zero = zero_morphism(c, c);
  const SparseMatrix h0 = map_by_name(c, c, {{"y", "x", 1}});
  EXPECT_TRUE(verify_homotopy({id, zero, {h0}}).valid());
  EXPECT_FALSE(verify_homotopy({id, zero, {SparseMatrix(2, 2)}}).valid());
}

TEST(PhiK, IdentityAtLevelZero) {
  const S1Complex c = make_complex({{"a", 0}, {"b", 2}, {"c", 2}}, 1, {});
  const PhiKMap map = phi_k(identity_morphism(c), 0);
  for (const auto& [d, block] : map.blocks) {
    EXPECT_EQ(block.matrix, SparseMatrix::identity(block.domain.dimension())) << d;
  }
  EXPECT_EQ(map.rank(2), 2u);
}

TEST(PhiK, HandExample) {
  const HandExample h;
  ASSERT_TRUE(verify_morphism(h.phi).valid());
  const auto w = find_z_witness(h.c, 1, basis_vector(h.c, "a"));
  ASSERT_TRUE(w);
  EXPECT_EQ(phi_k_value(h.phi, *w), basis_vector(h.d, "q", 2));

  const PhiKMap zero = phi_k(h.phi, 0);
  EXPECT_EQ(zero.rank(2), 1u);
  const PhiKMap one = phi_k(h.phi, 1);
  ASSERT_TRUE(one.blocks.count(2));
  const auto& block = one.blocks.at(2);
  EXPECT_EQ(one.rank(2), 1u);
  const auto q = block.codomain.classify(basis_vector(h.d, "q"));
  ASSERT_EQ(q.kind, Subquotient::Kind::Class);
  EXPECT_EQ(block.matrix.column(0), Rational(2) * q.coordinates);
  EXPECT_THROW(phi_k(h.phi, 2), InputError);
}

TEST(PhiK, ConnectingMorphismGivesConnectingMaps) {
  const SplitS1Complex s = milnor_model(3, 3);
  const S1Morphism delta = connecting_morphism(s);
  for (int k = 0; k <= s.truncation(); ++k) {
    const PhiKMap a = phi_k(delta, k), b = delta_plus0_k(s, k);
    ASSERT_EQ(a.blocks.size(), b.blocks.size());
    for (const auto& [d, block] : a.blocks) ASSERT_EQ(block.matrix, b.blocks.at(d).matrix);
  }
}

TEST(PhiK, TargetWithHigherOperators) {
  const S1Complex c = milnor_model(2, 2).complex();
  EXPECT_THROW(phi_k(identity_morphism(c), 1), InputError);
}

TEST(Functoriality, StandardMorphisms) {
  const S1Complex c = milnor_model(3, 4).complex();
  EXPECT_TRUE(verify_functoriality(identity_morphism(c)).valid());
  EXPECT_TRUE(verify_functoriality(zero_morphism(c, milnor_model(2, 4, {.truncation = 6}).complex())).valid());
  const HandExample h;
  EXPECT_TRUE(verify_functoriality(h.phi).valid());
}

TEST(Reconstruction, IdentityAndInclusion) {
  const S1Morphism phi = inclusion_into_milnor22();
  EXPECT_TRUE(reconstruction_diagnostic(phi).valid());
  const S1Complex& c = phi.target();
  EXPECT_TRUE(reconstruction_diagnostic(identity_morphism(c)).valid());
  for (const auto& [t, m] : induced_plus_cohomology_map(identity_morphism(c), c.truncation())) {
    EXPECT_EQ(m, SparseMatrix::identity(m.cols())) << t;
  }
}
