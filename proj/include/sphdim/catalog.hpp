#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphdim/dimension.hpp"
#include "sphdim/root_system.hpp"

namespace sphdim {

// A restricted root named the way the catalog tables print it: either an
// integer combination of the pair's a-basis vectors, or a multiple of the
// restriction of a simple root.
struct XiExpr {
  int simple_index = -1;        // 0-based; >= 0 selects restrict(alpha_i)
  std::vector<long> coeffs;     // else: sum coeffs[i] * a_basis[i]
  int multiplier = 1;
  std::string label;
};

// One table row as printed (fields absent from a table stay unset).
struct ExpectedRow {
  XiExpr xi;
  long multiplicity = 0;
  std::optional<long> basic_count;
  std::optional<Rational> delta_pairing;
  std::optional<Rational> h_basic;
  std::optional<Klass> klass;
};

struct SphericalPair {
  std::string id;       // instance id, e.g. "slpq(p=2,q=4)"
  std::string family;   // family id, e.g. "slpq"
  std::map<std::string, long> params;
  LieType type = LieType::A;
  std::size_t rank = 0;
  // Optional change of positive system applied to the planche coordinates.
  std::optional<SignedPermutation> twist;
  std::set<std::size_t> delta0;              // 0-based simple root indices
  std::vector<std::vector<long>> generators; // fundamental-weight coefficients
  std::size_t spherical_rank = 0;
  bool symmetric = false;
  Matrix a_basis;                            // ambient xi_i, may be empty
  std::vector<ExpectedRow> expected_table;
};

struct FamilyInfo {
  std::string id;
  std::string description;
  std::vector<std::string> param_names;  // empty for fixed pairs
  std::string constraints;
};

const std::vector<FamilyInfo>& families();

// Binds parameters to a concrete pair; throws std::invalid_argument naming
// the violated constraint.
SphericalPair instantiate(const std::string& family_id,
                          const std::map<std::string, long>& params);

// Default desk-scale instantiation list used by CI and the verify sweep.
std::vector<SphericalPair> catalog();

// All coefficient vectors (k_1..k_r) with sum <= max_total, in lexicographic
// order; the weights they denote are sum k_i mu_i.
std::vector<std::vector<long>> enumerate_coefficients(std::size_t rank,
                                                      long max_total);

}  // namespace sphdim
