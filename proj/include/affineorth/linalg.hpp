#pragma once

// Dense matrix helpers shared by metrics, connections and frames.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <vector>

#include "affineorth/errors.hpp"
#include "affineorth/rng.hpp"

namespace affineorth {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Inverse with an explicit invertibility check; throws PreconditionError.
Matrix inverse_checked(const Matrix& a);

// Moduli of the (possibly complex) eigenvalues, sorted ascending.
std::vector<double> eigenvalue_moduli(const Matrix& a);

// Haar-ish random rotation: sign-fixed QR of a random matrix, determinant +1.
Matrix random_special_orthogonal(std::size_t n, Rng& rng);

// Random skew-symmetric matrix with entries uniform in [lo, hi].
Matrix random_skew(std::size_t n, Rng& rng, double lo = -1.0, double hi = 1.0);

double max_abs(const Matrix& a);

} // namespace affineorth
