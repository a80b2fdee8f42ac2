#include "s1calc/brieskorn.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "s1calc/errors.hpp"

namespace s1calc {

BrieskornData::BrieskornData(std::vector<std::int64_t> exponents) : a_(std::move(exponents)) {
  if (a_.size() < 2) throw InputError("need at least two exponents");
  for (auto v : a_) {
    if (v < 2) throw InputError("exponents must be at least 2, got " + std::to_string(v));
  }
}

std::vector<int> BrieskornData::divisors_of(std::int64_t t) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(a_.size()); ++i) {
    if (t % a_[static_cast<std::size_t>(i)] == 0) out.push_back(i);
  }
  return out;
}

bool BrieskornData::kodaira_nonnegative() const {
  Rational sum = 0;
  for (auto v : a_) sum += Rational(1, static_cast<unsigned long>(v));
  return sum <= 1;
}

std::vector<PrincipalPeriod> principal_periods(const BrieskornData& a) {
  std::set<std::int64_t> lcms;
  for (auto v : a.exponents()) {
    std::set<std::int64_t> next = lcms;
    for (auto l : lcms) next.insert(std::lcm(l, v));
    next.insert(v);
    lcms = std::move(next);
  }
  std::vector<PrincipalPeriod> out;
  for (auto t : lcms) {
    auto idx = a.divisors_of(t);
    if (idx.size() >= 2) out.push_back({t, std::move(idx)});
  }
  return out;
}

std::int64_t min_cz(const BrieskornData& a, const PrincipalPeriod& t, std::int64_t multiple) {
  const std::int64_t total = multiple * t.period;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.exponents().size(); ++i) sum += 2 * (total / a.exponents()[i]);
  const auto size_i = static_cast<std::int64_t>(a.exponents().size());
  const auto size_t_ = static_cast<std::int64_t>(t.indices.size());
  return sum + size_i - 2 * size_t_ - 2 * total + 2;
}

std::int64_t f_of_t(const BrieskornData& a, std::int64_t t) {
  if (t < 1) throw InputError("f(T) needs T >= 1");
  std::int64_t sum = 0;
  for (auto v : a.exponents()) sum += 2 * (t / v);
  const auto divisors = static_cast<std::int64_t>(a.divisors_of(t).size());
  return sum + a.n() + 3 - 2 * divisors - 2 * t;
}

std::vector<OrbitFamily> families_of_period(const BrieskornData& a, const std::vector<PrincipalPeriod>& periods,
                                            std::int64_t total_period) {
  std::vector<const PrincipalPeriod*> divisors;
  for (const auto& p : periods) {
    if (total_period % p.period == 0) divisors.push_back(&p);
  }
  std::vector<OrbitFamily> out;
  for (const auto* p : divisors) {
    const bool maximal = std::none_of(divisors.begin(), divisors.end(), [&](const PrincipalPeriod* q) {
      return q->period != p->period && q->period % p->period == 0;
    });
    if (!maximal) continue;
    const std::int64_t multiple = total_period / p->period;
    out.push_back({total_period, multiple, *p, 2 * static_cast<int>(p->indices.size()) - 3, min_cz(a, *p, multiple)});
  }
  return out;
}

std::int64_t default_period_bound(const BrieskornData& a) {
  const auto periods = principal_periods(a);
  if (periods.empty()) throw InputError("no principal period");
  return 4 * periods.back().period;
}

GlobalMinimum global_min_cz(const BrieskornData& a, std::int64_t period_bound) {
  const auto periods = principal_periods(a);
  if (periods.empty()) throw InputError("no principal period");
  GlobalMinimum g;
  g.bound = period_bound;
  g.minimal_period = periods.front().period;
  if (period_bound < g.minimal_period) throw InputError("period bound is below the minimal principal period");
  std::set<std::int64_t> totals;
  for (const auto& p : periods) {
    for (std::int64_t t = p.period; t <= period_bound; t += p.period) totals.insert(t);
  }
  for (auto t : totals) {
    for (auto& f : families_of_period(a, periods, t)) g.families.push_back(std::move(f));
  }
  const auto best = std::min_element(g.families.begin(), g.families.end(),
                                     [](const OrbitFamily& x, const OrbitFamily& y) { return x.min_cz < y.min_cz; });
  g.min_cz = best->min_cz;
  g.attained = *best;
  g.attained_at_minimal_period = std::any_of(g.families.begin(), g.families.end(), [&](const OrbitFamily& f) {
    return f.total_period == g.minimal_period && f.min_cz == g.min_cz;
  });
  return g;
}

AdcCertificate is_adc_certified(const BrieskornData& a, std::int64_t period_bound) {
  const GlobalMinimum g = global_min_cz(a, period_bound);
  AdcCertificate cert;
  cert.bound = period_bound;
  for (const auto& f : g.families) cert.sft_degrees.push_back(f.min_cz + a.n() - 3);
  cert.min_sft_degree = *std::min_element(cert.sft_degrees.begin(), cert.sft_degrees.end());
  cert.certified = cert.min_sft_degree > 0;
  return cert;
}

OrderPrediction predicted_order(const BrieskornData& a, std::int64_t period_bound) {
  const GlobalMinimum g = global_min_cz(a, period_bound);
  OrderPrediction p;
  p.min_cz = g.min_cz;
  p.attained_at_minimal_period = g.attained_at_minimal_period;
  const std::int64_t twice = a.n() - g.min_cz + 1;
  p.parity_ok = twice >= 0 && twice % 2 == 0;
  p.kodaira_obstruction = a.kodaira_nonnegative();
  if (p.attained_at_minimal_period && p.parity_ok && !p.kodaira_obstruction) p.order = twice / 2;
  return p;
}

BrieskornData one_dilation_exponents(int n) {
  if (n < 3) throw InputError("the exponent family needs n >= 3");
  std::vector<std::int64_t> a;
  for (int i = 0; i <= n - 2; ++i) a.push_back(i + 2);
  a.push_back(n);
  a.push_back(n);
  return BrieskornData(std::move(a));
}

namespace {

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

SplitS1Complex milnor_model(int k, int m, const MilnorOptions& options) {
  if (k < 1) throw InputError("milnor model needs k >= 1");
  if (k > m) throw InputError("milnor model needs k <= m (monotonicity)");
  const int n = options.truncation.value_or(2 * k);
  if (n < 1) throw InputError("milnor model needs truncation >= 1");
  std::vector<Generator> basis{{"e", 0}};
  std::vector<Part> parts{Part::Zero};
  if (options.sphere_classes) {
    std::int64_t count = 1;
    for (int i = 0; i <= m; ++i) count *= k - 1;
    for (std::int64_t i = 1; i <= count; ++i) {
      basis.push_back({"s_" + std::to_string(i), m});
      parts.push_back(Part::Zero);
    }
  }
  std::map<int, Index> check, hat;
  for (int j = m - k; j <= m - 1; ++j) {
    check[j] = basis.size();
    basis.push_back({"p_check_" + std::to_string(j), 2 * k + 2 * j - 2 * m - 1});
    hat[j] = basis.size();
    basis.push_back({"p_hat_" + std::to_string(j), 2 * k + 2 * j - 2 * m - 2});
    parts.push_back(Part::Plus);
    parts.push_back(Part::Plus);
  }
  const Index size = basis.size();
  std::vector<MatrixEntry> d0, d1;
  for (int j = m - k; j <= m - 1; ++j) {
    if (j < m - 1) d0.push_back({hat[j + 1], check[j], Rational(1)});
    d1.push_back({hat[j], check[j], Rational(1)});
  }
  d0.push_back({0, check[m - k], factorial(k)});
  std::vector<SparseMatrix> ops{SparseMatrix::from_entries(size, size, d0), SparseMatrix::from_entries(size, size, d1)};
  while (static_cast<int>(ops.size()) <= n) ops.emplace_back(size, size);
  ops.resize(static_cast<std::size_t>(n + 1));
  return SplitS1Complex(S1Complex(std::move(basis), std::move(ops)), std::move(parts), SparseVector::unit(size, 0));
}

std::vector<SparseVector> milnor_unit_primitive(const SplitS1Complex& model, int k, int m) {
  const S1Complex& c = model.complex();
  const Rational scale = 1 / factorial(k);
  std::vector<SparseVector> chain;
  for (int i = 0; i < k; ++i) {
    const Rational sign = i % 2 == 0 ? 1 : -1;
    chain.push_back(SparseVector::unit(c.size(), c.index_of("p_check_" + std::to_string(m - k + i)), sign * scale));
  }
  return chain;
}

}  // namespace s1calc
