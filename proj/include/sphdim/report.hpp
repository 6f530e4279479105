#pragma once

#include <vector>

#include "sphdim/restriction.hpp"

namespace sphdim {

struct DimensionReport {
  std::vector<long> lambda_coeffs;
  ExactVector lambda;
  // One factor per restricted positive root, in the order of analysis.data.
  std::vector<Rational> factors;
  Rational restricted_product;  // product of the nest factors
  Rational w_product;           // product of the closed W / W_sing forms
  Integer oracle;               // classical Weyl dimension
  bool matches = false;         // restricted == w_product == oracle
};

// d_xi(lambda) for one restricted root, via the shift form.
Rational nest_factor(const PairAnalysis& a, const RestrictedRootDatum& d,
                     const ExactVector& lambda);

// Evaluates the dimension three ways (nest products, closed forms, classical
// Weyl formula) and records whether they agree.  Throws std::invalid_argument
// when coeffs has the wrong arity or a negative entry.
DimensionReport dim_restricted(const PairAnalysis& a,
                               const std::vector<long>& coeffs);

struct SweepResult {
  std::vector<DimensionReport> reports;  // ordered by coefficient vector
  bool all_match = true;
};

// Runs dim_restricted over every lambda with coefficient sum <= max_total.
// With parallel=true the evaluations are distributed over hardware threads;
// the report order is by coefficient vector either way.
SweepResult verify_sweep(const PairAnalysis& a, long max_total,
                         bool parallel = false);

}  // namespace sphdim
