#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sphdim/rational.hpp"

namespace sphdim {

// Vector with exact rational coordinates in a fixed ambient Euclidean space.
// Weights, roots and Cartan elements are all held in this form, identified
// through the invariant form.
class ExactVector {
 public:
  ExactVector() = default;
  explicit ExactVector(std::size_t dim) : coords_(dim, Rational(0)) {}
  ExactVector(std::initializer_list<Rational> init) : coords_(init) {}
  explicit ExactVector(std::vector<Rational> coords)
      : coords_(std::move(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  ExactVector& operator+=(const ExactVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o[i];
    return *this;
  }
  ExactVector& operator-=(const ExactVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o[i];
    return *this;
  }
  ExactVector& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend ExactVector operator+(ExactVector a, const ExactVector& b) {
    a += b;
    return a;
  }
  friend ExactVector operator-(ExactVector a, const ExactVector& b) {
    a -= b;
    return a;
  }
  friend ExactVector operator*(const Rational& s, ExactVector v) {
    v *= s;
    return v;
  }
  friend ExactVector operator-(ExactVector v) {
    for (auto& c : v.coords_) c = -c;
    return v;
  }

  friend bool operator==(const ExactVector& a, const ExactVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const ExactVector& a, const ExactVector& b) {
    return !(a == b);
  }
  // Lexicographic order; used for canonical sorting and as a map key.
  friend bool operator<(const ExactVector& a, const ExactVector& b) {
    return a.coords_ < b.coords_;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += to_string(coords_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<Rational> coords_;
};

// Standard dot product; callers apply the form scale themselves.
inline Rational dot(const ExactVector& a, const ExactVector& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline ExactVector unit_vector(std::size_t dim, std::size_t i,
                               const Rational& value = Rational(1)) {
  ExactVector v(dim);
  v[i] = value;
  return v;
}

}  // namespace sphdim
