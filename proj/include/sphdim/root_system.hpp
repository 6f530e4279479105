#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphdim/linalg.hpp"
#include "sphdim/vec.hpp"

namespace sphdim {

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

std::string lie_type_name(LieType t);
std::optional<LieType> lie_type_from_name(const std::string& name);

// Signed permutation of coordinate indices.  entry[i] = j means
// e_i -> e_j, entry[i] = ~j (stored as sign flag) means e_i -> -e_j.
class SignedPermutation {
 public:
  struct Image {
    std::size_t index;
    int sign;  // +1 or -1
  };

  explicit SignedPermutation(std::size_t dim);  // identity

  std::size_t dim() const { return images_.size(); }

  void map(std::size_t from, std::size_t to, int sign = 1) {
    images_[from] = {to, sign};
  }
  void swap(std::size_t a, std::size_t b) {
    map(a, b);
    map(b, a);
  }
  void flip(std::size_t i) { images_[i].sign = -images_[i].sign; }

  const Image& image(std::size_t i) const { return images_[i]; }

  bool is_valid() const;  // bijective on indices

  ExactVector apply(const ExactVector& v) const;

 private:
  std::vector<Image> images_;
};

// Root system in exact rational coordinates, simple and positive roots per
// the classical planche conventions (E6/E7 sit inside the 8-dimensional E8
// ambient space).
struct RootSystem {
  LieType type = LieType::A;
  std::size_t rank = 0;
  std::size_t ambient_dim = 0;
  Matrix simple_roots;
  Matrix positive_roots;
  // Multiplier applied to the standard dot product; set by normalized_form.
  Rational form_scale = Rational(1);

  Rational form(const ExactVector& a, const ExactVector& b) const {
    return form_scale * dot(a, b);
  }
  ExactVector coroot(const ExactVector& alpha) const;
  ExactVector rho() const;  // half sum of positive roots
  bool is_root(const ExactVector& v) const;
  bool is_positive_root(const ExactVector& v) const;

  // Basis of the span of the simple roots (the Cartan subalgebra, identified
  // with its dual through the form).
  const Matrix& cartan_span() const { return simple_roots; }
};

// Builds the root system; throws std::invalid_argument on a type/rank
// combination outside A>=1, B>=2, C>=2, D>=2, E6..E8, F4, G2.
RootSystem build_root_system(LieType type, std::size_t rank);

// Applies w to every simple and positive root (a change of positive system
// by an orthogonal symmetry of the root set).
RootSystem apply_signed_permutation(const SignedPermutation& w,
                                    const RootSystem& rs);

// Scale making the Delta_0 roots satisfy the squared-length-2 convention
// (long roots when a two-length component is of B kind, short roots for C
// kind; standard planche scale when Delta_0 is empty).
Rational normalized_form(const RootSystem& rs,
                         const std::set<std::size_t>& delta0_indices);

// Standard scale of the planche coordinates (1, except 1/3 for G2).
Rational standard_form_scale(LieType type);

// rho of an arbitrary root list: half the sum.
ExactVector half_sum(const Matrix& roots, std::size_t ambient_dim);

// Fundamental weights in span of the simple roots: <w_i | a_j^vee> = d_ij.
Matrix fundamental_weights(const RootSystem& rs);

// <lambda | alpha^vee> for all simple alpha; nonneg integers iff dominant.
bool is_dominant(const RootSystem& rs, const ExactVector& lambda);

// Classical Weyl dimension formula: prod <lambda+rho|alpha>/<rho|alpha>
// over positive roots.  Throws on non-dominant lambda; asserts the result is
// a positive integer.
Integer weyl_dimension(const RootSystem& rs, const ExactVector& lambda);

std::size_t expected_positive_root_count(LieType type, std::size_t rank);

}  // namespace sphdim
