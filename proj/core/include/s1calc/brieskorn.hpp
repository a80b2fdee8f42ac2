#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "s1calc/split.hpp"

namespace s1calc {

// Exponents a_0, ..., a_n (all >= 2, n >= 1) of sum x_i^{a_i} = 1.
class BrieskornData {
 public:
  // Throws InputError on invalid exponents.
  explicit BrieskornData(std::vector<std::int64_t> exponents);

  const std::vector<std::int64_t>& exponents() const { return a_; }
  int n() const { return static_cast<int>(a_.size()) - 1; }
  // {i : a_i divides t}
  std::vector<int> divisors_of(std::int64_t t) const;
  // sum 1/a_i <= 1
  bool kodaira_nonnegative() const;

 private:
  std::vector<std::int64_t> a_;
};

struct PrincipalPeriod {
  std::int64_t period = 0;
  std::vector<int> indices;  // I_T, ascending
  friend bool operator==(const PrincipalPeriod&, const PrincipalPeriod&) = default;
};

// All principal periods, ascending.
std::vector<PrincipalPeriod> principal_periods(const BrieskornData& a);

struct OrbitFamily {
  std::int64_t total_period = 0;  // A = multiple * T
  std::int64_t multiple = 0;      // N
  PrincipalPeriod principal;
  int dimension = 0;  // 2 |I_T| - 3
  std::int64_t min_cz = 0;
};

// Minimal Conley-Zehnder index of the family of period multiple * T.
std::int64_t min_cz(const BrieskornData& a, const PrincipalPeriod& t, std::int64_t multiple);

// 2 sum floor(T/a_i) + n + 3 - 2|I_T| - 2T, I_T = {i : a_i | T}, for any T >= 1.
std::int64_t f_of_t(const BrieskornData& a, std::int64_t t);

// Families of period A: one per principal period T | A that is maximal under
// divisibility among the principal divisors of A.
std::vector<OrbitFamily> families_of_period(const BrieskornData& a, const std::vector<PrincipalPeriod>& periods,
                                            std::int64_t total_period);

// 4 x the largest principal period.
std::int64_t default_period_bound(const BrieskornData& a);

struct GlobalMinimum {
  std::int64_t bound = 0;
  std::int64_t min_cz = 0;
  OrbitFamily attained;  // first family (by period) attaining the minimum
  std::int64_t minimal_period = 0;
  bool attained_at_minimal_period = false;
  std::vector<OrbitFamily> families;  // every family with A <= bound, by period
};

// Throws InputError if there is no principal period or the bound is below the minimal one.
GlobalMinimum global_min_cz(const BrieskornData& a, std::int64_t period_bound);

struct AdcCertificate {
  std::int64_t bound = 0;
  bool certified = false;  // every family with A <= bound has positive SFT degree
  std::int64_t min_sft_degree = 0;
  std::vector<std::int64_t> sft_degrees;  // per family, aligned with GlobalMinimum::families
};

// SFT degree = min_cz + n - 3. A bounded-period certificate, not a proof.
AdcCertificate is_adc_certified(const BrieskornData& a, std::int64_t period_bound);

struct OrderPrediction {
  std::optional<std::int64_t> order;  // (n - mu_min + 1) / 2 when the hypotheses hold
  std::int64_t min_cz = 0;
  bool attained_at_minimal_period = false;
  bool parity_ok = false;
  bool kodaira_obstruction = false;
  bool existence_assumed = true;  // the prediction presumes some dilation exists
};

OrderPrediction predicted_order(const BrieskornData& a, std::int64_t period_bound);

// Exponents (2, 3, ..., n, n, n) of the 1-dilation corollary (n >= 3).
BrieskornData one_dilation_exponents(int n);

struct MilnorOptions {
  std::optional<int> truncation;  // default 2k
  bool sphere_classes = true;     // include the (k-1)^{m+1} degree-m classes of C_0
};

// The split S1-complex of the Fermat Milnor fiber sum_{i=0}^m x_i^k = 1 at the
// first Reeb period: e, sphere classes s_1..., and pairs p_check_j, p_hat_j for
// j = m-k, ..., m-1. Requires 1 <= k <= m.
SplitS1Complex milnor_model(int k, int m, const MilnorOptions& options = {});

// sum_{i=0}^{k-1} (-1)^i / k! * p_check_{m-k+i} u^-i, as components by power.
std::vector<SparseVector> milnor_unit_primitive(const SplitS1Complex& model, int k, int m);

}  // namespace s1calc
