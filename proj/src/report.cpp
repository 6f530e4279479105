#include "sphdim/report.hpp"

#include <thread>

namespace sphdim {

Rational nest_factor(const PairAnalysis& a, const RestrictedRootDatum& d,
                     const ExactVector& lambda) {
  Rational lam_pair = a.rs.form(lambda + a.delta, d.xi);
  return nest_factor_from_shifts(lam_pair, d.delta_pairing, d.shifts);
}

DimensionReport dim_restricted(const PairAnalysis& a,
                               const std::vector<long>& coeffs) {
  DimensionReport r;
  r.lambda_coeffs = coeffs;
  r.lambda = a.weight_from_coeffs(coeffs);

  r.restricted_product = 1;
  for (const auto& d : a.data) {
    Rational f = nest_factor(a, d, r.lambda);
    r.factors.push_back(f);
    r.restricted_product *= f;
  }

  if (a.classified) {
    r.w_product = 1;
    for (const auto& d : a.data) {
      if (d.divisibility != 1) continue;
      Rational x = a.rs.form(r.lambda, d.xi);
      if (d.klass == Klass::Regular)
        r.w_product *= W_regular(x, d.delta_pairing, d.family_signature);
      else
        r.w_product *= W_singular(x, d.delta_pairing, d.family_signature);
    }
  } else {
    // Overridden form scale: the closed forms are tied to the normalized
    // scale, so only the shift products and the oracle are compared.
    r.w_product = r.restricted_product;
  }

  r.oracle = weyl_dimension(a.rs, r.lambda);
  r.matches = r.restricted_product == r.w_product &&
              r.restricted_product == Rational(r.oracle);
  return r;
}

SweepResult verify_sweep(const PairAnalysis& a, long max_total,
                         bool parallel) {
  SweepResult out;
  auto lambdas = enumerate_coefficients(a.pair.spherical_rank, max_total);
  out.reports.resize(lambdas.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < lambdas.size(); i += step)
      out.reports[i] = dim_restricted(a, lambdas[i]);
  };
  if (parallel && lambdas.size() > 1) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work, t, n);
    for (auto& t : pool) t.join();
  } else {
    work(0, 1);
  }
  for (const auto& r : out.reports) out.all_match = out.all_match && r.matches;
  return out;
}

}  // namespace sphdim
