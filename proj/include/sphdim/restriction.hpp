#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphdim/catalog.hpp"
#include "sphdim/dimension.hpp"
#include "sphdim/root_system.hpp"

namespace sphdim {

// One restricted positive root with everything derived from its nest.
struct RestrictedRootDatum {
  ExactVector xi;                 // projection onto a, ambient coordinates
  Matrix nest;                    // positive roots restricting to xi
  std::vector<Rational> shifts;   // <rho_m | alpha> over the nest
  long k_xi = 0;                  // -min <h_m0 | alpha>
  Matrix basic_roots;             // argmin of <h_m0 | alpha>
  Rational delta_pairing;         // <delta | xi>
  int divisibility = 1;           // xi = d * (indivisible root), d in {1,2,3}
  Klass klass = Klass::Regular;   // class of the family head
  Signature family_signature;     // (m, m2, m3) of the family (heads only)
  std::vector<Rational> coords;   // coordinates in the report basis
  std::string label;

  long multiplicity() const { return static_cast<long>(nest.size()); }
};

struct SatakeMarking {
  std::size_t node = 0;  // 0-based simple root index
  bool black = false;
  Rational h_value;                  // <h_m0 | alpha>
  std::optional<Rational> pi_value;  // <pi_m0 | alpha>, two-length Delta_0
  std::optional<std::size_t> arrow;  // white partner with equal restriction
};

// Full derivation for one catalog pair.
struct PairAnalysis {
  SphericalPair pair;
  RootSystem rs;  // form_scale already normalized (or overridden)
  Matrix fundamental;           // fundamental weights
  Matrix mu;                    // spherical generators as vectors
  Matrix c_basis;               // common kernel of Delta_0 in span(simple)
  Matrix c0_basis;              // kernel of the generators inside c
  Matrix a_basis;               // orthogonal complement of c0 in c
  Matrix report_basis;          // pair.a_basis when present, else computed
  Matrix psi_plus;              // positive roots restricting to zero
  ExactVector rho_g, rho_m, delta, h_m0, pi_m0;
  std::vector<RestrictedRootDatum> data;  // ordered by divisibility, coords
  std::vector<SatakeMarking> satake;
  // False when the form scale was overridden: the shift patterns only match
  // the closed forms at the normalized scale, so classification is skipped.
  bool classified = true;

  ExactVector restrict(const ExactVector& v) const;
  ExactVector weight_from_coeffs(const std::vector<long>& coeffs) const;
  const RestrictedRootDatum* find(const ExactVector& xi) const;
  // Resolves a table key to the ambient restricted root it denotes.
  ExactVector resolve(const XiExpr& expr) const;
};

// Runs the whole derivation.  scale_override replaces the normalized form
// scale (used by the scale-invariance check).
PairAnalysis analyze(const SphericalPair& pair,
                     std::optional<Rational> scale_override = std::nullopt);

// Structural verifications; each returns a list of human-readable failures
// (empty = pass).
std::vector<std::string> check_excellence(const PairAnalysis& a);
std::vector<std::string> check_dimension_counts(const PairAnalysis& a);
std::vector<std::string> check_rho_decomposition(const PairAnalysis& a);
std::vector<std::string> check_nest_partition(const PairAnalysis& a);
std::vector<std::string> check_eigenvalue_structure(const PairAnalysis& a);
std::vector<std::string> check_shift_symmetry(const PairAnalysis& a);
std::vector<std::string> check_m_invariance(const PairAnalysis& a);
std::vector<std::string> check_pole_freedom(const PairAnalysis& a);
std::vector<std::string> check_expected_table(const PairAnalysis& a);
std::vector<std::string> check_all(const PairAnalysis& a);

bool verify_rho_decomposition(const PairAnalysis& a);

// Conjugation check: w must fix Delta_0 setwise and map the
// basic root of nest(xi) to the basic root of nest(eta); verifies that w
// carries nest(xi) onto nest(eta) preserving every <rho_m | .> value.
// Throws std::invalid_argument when the hypotheses fail.
bool verify_nest_conjugation(const PairAnalysis& a, const SignedPermutation& w,
                             const ExactVector& xi, const ExactVector& eta);

}  // namespace sphdim
