#pragma once

#include <vector>

#include "sphdim/vec.hpp"

namespace sphdim {

// Dense exact linear algebra on small matrices (rows of ExactVector).
using Matrix = std::vector<ExactVector>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m);

// Basis of { x : rows . x = 0 }, dim = #columns of rows.
Matrix nullspace(const Matrix& rows, std::size_t dim);

// Solve square system a.x = rhs; throws on singular a.
ExactVector solve(const Matrix& a, const ExactVector& rhs);

// Orthogonal projection of v onto span(basis) w.r.t. the standard dot
// product (scale-invariant, so any positive multiple of the form gives the
// same projection).
ExactVector project_onto_span(const Matrix& basis, const ExactVector& v);

// Coefficients of v in the given (independent) basis; empty optional when v
// is outside the span.
std::optional<std::vector<Rational>> coordinates_in_basis(const Matrix& basis,
                                                          const ExactVector& v);

}  // namespace sphdim
