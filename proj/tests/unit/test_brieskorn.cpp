#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "s1calc/brieskorn.hpp"
#include "s1calc/errors.hpp"

using namespace s1calc;

namespace {

std::vector<std::int64_t> repeated(std::int64_t k, int count) { return std::vector<std::int64_t>(count, k); }

// Lower bounds for f(T+1) - f(T): T = 4..11, then by T mod 12.
constexpr int kSmallRow[] = {2, -2, 2, -2, 2, 0, 0, -2};
constexpr int kModRow[] = {4, -2, 0, 0, 2, -2, 2, -2, 2, 0, 0, -2};

}  // namespace

TEST(Brieskorn, InvalidExponents) {
  EXPECT_THROW(BrieskornData({2}), InputError);
  EXPECT_THROW(BrieskornData({2, 1, 3}), InputError);
  EXPECT_THROW(one_dilation_exponents(2), InputError);
}

TEST(Brieskorn, PrincipalPeriods) {
  const auto p22 = principal_periods(BrieskornData({2, 2}));
  ASSERT_EQ(p22.size(), 1u);
  EXPECT_EQ(p22[0], (PrincipalPeriod{2, {0, 1}}));

  const auto p = principal_periods(BrieskornData({2, 3, 3, 3}));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], (PrincipalPeriod{3, {1, 2, 3}}));
  EXPECT_EQ(p[1], (PrincipalPeriod{6, {0, 1, 2, 3}}));

  const auto k = principal_periods(BrieskornData(repeated(5, 4)));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0].period, 5);

  std::vector<std::int64_t> periods;
  for (const auto& q : principal_periods(BrieskornData({2, 3, 5}))) periods.push_back(q.period);
  EXPECT_EQ(periods, (std::vector<std::int64_t>{6, 10, 15, 30}));
}

TEST(Brieskorn, PrincipalPeriodsMatchOracle) {
  for (const auto& a : std::vector<std::vector<std::int64_t>>{
           {2, 3, 3, 3}, {2, 3, 4, 4, 4}, {2, 4, 6, 6}, {3, 3, 4, 6, 12}, {2, 3, 5, 5, 5, 5}, {4, 6, 10, 15}}) {
    const auto ours = principal_periods(BrieskornData(a));
    const auto theirs = oracle::principal_periods(a);
    ASSERT_EQ(ours.size(), theirs.size());
    for (std::size_t i = 0; i < ours.size(); ++i) {
      ASSERT_EQ(ours[i].period, theirs[i].t);
      ASSERT_EQ(ours[i].indices, theirs[i].indices);
    }
  }
}

TEST(Brieskorn, MinCz) {
  const BrieskornData a({2, 3, 3, 3});
  const PrincipalPeriod t3{3, {1, 2, 3}};
  EXPECT_EQ(min_cz(a, t3, 1), 2);
  const BrieskornData b({2, 3, 4, 4, 4});
  EXPECT_EQ(min_cz(b, PrincipalPeriod{4, b.divisors_of(4)}, 1), 3);
  const BrieskornData c({2, 2});
  EXPECT_EQ(min_cz(c, PrincipalPeriod{2, {0, 1}}, 1), 0);

  for (const auto& e : std::vector<std::vector<std::int64_t>>{{2, 3, 3, 3}, {2, 3, 4, 4, 4}, {3, 3, 4, 6, 12}}) {
    const BrieskornData d(e);
    for (const auto& p : principal_periods(d)) {
      for (std::int64_t n = 1; n <= 6; ++n) ASSERT_EQ(min_cz(d, p, n), oracle::min_cz(e, p.period, n));
    }
  }
}

TEST(Brieskorn, FAtFour) {
  EXPECT_EQ(f_of_t(one_dilation_exponents(3), 4), 6);
  for (int n = 4; n <= 10; ++n) EXPECT_EQ(f_of_t(one_dilation_exponents(n), 4), n - 1) << n;
  EXPECT_THROW(f_of_t(one_dilation_exponents(4), 0), InputError);
}

TEST(Brieskorn, FDifferences) {
  for (int n = 3; n <= 10; ++n) {
    const BrieskornData a = one_dilation_exponents(n);
    for (std::int64_t t = 1; t <= 200; ++t) {
      const auto size = static_cast<std::int64_t>(a.divisors_of(t).size());
      ASSERT_EQ(f_of_t(a, t + 1) - f_of_t(a, t), 2 * size - 2);
    }
  }
}

TEST(Brieskorn, DifferenceTables) {
  for (int n = 4; n <= 10; ++n) {
    const BrieskornData a = one_dilation_exponents(n);
    for (std::int64_t t = 4; t <= 500; ++t) {
      const std::int64_t diff = f_of_t(a, t + 1) - f_of_t(a, t);
      const int bound = t <= 11 ? kSmallRow[t - 4] : kModRow[t % 12];
      ASSERT_GE(diff, bound) << n << ' ' << t;
      ASSERT_GE(f_of_t(a, t + 1), f_of_t(a, 4));
    }
  }
}

TEST(Brieskorn, GlobalMinimum) {
  const GlobalMinimum g = global_min_cz(BrieskornData({2, 3, 3, 3}), 12);
  EXPECT_EQ(g.min_cz, 2);
  EXPECT_EQ(g.attained.total_period, 3);
  EXPECT_EQ(g.minimal_period, 3);
  EXPECT_TRUE(g.attained_at_minimal_period);
  EXPECT_THROW(global_min_cz(BrieskornData({2, 3, 3, 3}), 2), InputError);

  // Period 6 is covered once, by the maximal principal divisor 6 itself.
  int at_six = 0;
  for (const auto& f : g.families) at_six += f.total_period == 6;
  EXPECT_EQ(at_six, 1);

  for (int n = 4; n <= 10; ++n) {
    const BrieskornData a = one_dilation_exponents(n);
    const GlobalMinimum h = global_min_cz(a, default_period_bound(a));
    EXPECT_EQ(h.min_cz, n - 1) << n;
    EXPECT_EQ(h.minimal_period, 4);
    EXPECT_TRUE(h.attained_at_minimal_period);
  }
}

TEST(Brieskorn, AdcCertificates) {
  for (std::int64_t k : {2, 3}) {
    for (int r : {1, 2, 3}) {
      for (std::int64_t extra : {k, k + 1, k + 3}) {
        std::vector<std::int64_t> a = repeated(k, static_cast<int>(k) + 1);
        for (int j = 0; j < r; ++j) a.push_back(extra);
        const BrieskornData d(a);
        const AdcCertificate cert = is_adc_certified(d, default_period_bound(d) * 2);
        ASSERT_TRUE(cert.certified);
        ASSERT_EQ(cert.min_sft_degree, 2 * r) << k << ' ' << r << ' ' << extra;
      }
    }
  }
  EXPECT_FALSE(is_adc_certified(BrieskornData({2, 2}), 8).certified);
}

TEST(Brieskorn, Predictions) {
  for (int k = 2; k <= 6; ++k) {
    for (int m = k; m <= 6; ++m) {
      const BrieskornData a(repeated(k, m + 1));
      const OrderPrediction p = predicted_order(a, default_period_bound(a));
      ASSERT_EQ(p.order, k - 1) << k << ' ' << m;
      ASSERT_TRUE(p.existence_assumed);
    }
  }
  const OrderPrediction e8 = predicted_order(BrieskornData({2, 3, 7}), 84);
  EXPECT_TRUE(e8.kodaira_obstruction);
  EXPECT_FALSE(e8.order);
  for (int n = 4; n <= 8; ++n) {
    const BrieskornData a = one_dilation_exponents(n);
    EXPECT_EQ(predicted_order(a, default_period_bound(a)).order, 1) << n;
  }
}

TEST(Milnor, Model22) {
  const SplitS1Complex s = milnor_model(2, 2);
  const S1Complex& c = s.complex();
  EXPECT_EQ(s.truncation(), 4);
  std::vector<std::string> names;
  for (const auto& g : c.basis()) names.push_back(g.name);
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"e", "p_check_0", "p_check_1", "p_hat_0", "p_hat_1", "s_1"}));
  EXPECT_EQ(s.part_of(c.index_of("s_1")), Part::Zero);
  EXPECT_EQ(s.part_of(c.index_of("p_hat_0")), Part::Plus);
  EXPECT_EQ(c.degree_of(c.index_of("s_1")), 2);
  EXPECT_EQ(c.delta(0).at(c.index_of("e"), c.index_of("p_check_0")), 2);
}

TEST(Milnor, GradingsAndSizes) {
  for (int k = 1; k <= 4; ++k) {
    for (int m = k; m <= 5; ++m) {
      const SplitS1Complex s = milnor_model(k, m);
      const S1Complex& c = s.complex();
      std::size_t spheres = 1;
      for (int i = 0; i <= m; ++i) spheres *= static_cast<std::size_t>(k - 1);
      ASSERT_EQ(c.size(), 1 + spheres + 2 * static_cast<std::size_t>(k));
      for (int j = m - k; j < m; ++j) {
        ASSERT_EQ(c.degree_of(c.index_of("p_check_" + std::to_string(j))), 2 * k + 2 * j - 2 * m - 1);
        ASSERT_EQ(c.degree_of(c.index_of("p_hat_" + std::to_string(j))), 2 * k + 2 * j - 2 * m - 2);
      }
      ASSERT_TRUE(verify_splitting(s).valid());
    }
  }
  EXPECT_EQ(milnor_model(1, 1).complex().size(), 3u);
  EXPECT_EQ(milnor_model(3, 4, {.sphere_classes = false}).complex().size(), 7u);
  EXPECT_THROW(milnor_model(3, 2), InputError);
  EXPECT_THROW(milnor_model(0, 2), InputError);
  EXPECT_THROW(milnor_model(2, 2, {.truncation = 0}), InputError);
}
