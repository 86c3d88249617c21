// Copyright 2026 The z2qht developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

#include "z2qht/errors.hpp"

namespace z2qht::linalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerance for accepting a matrix as Hermitian: max |M(i,j) - conj(M(j,i))|.
inline constexpr double kHermitianTol = 1e-12;
/// Eigenpair residual bound, relative to the operator norm.
inline constexpr double kEigResidualTol = 1e-10;
/// Default cap on dense operator dimension (2^10).
inline constexpr std::size_t kDefaultDimCap = std::size_t{1} << 10;

/// Configured dense dimension cap. Reads Z2QHT_DENSE_CAP once at first call;
/// falls back to kDefaultDimCap when unset or unparseable.
std::size_t dense_dim_cap();

/// Full spectrum of a Hermitian matrix.
struct Spectrum {
  RealVector eigenvalues;  ///< ascending
  Matrix eigenvectors;     ///< orthonormal columns, col(k) pairs with eigenvalues(k)
};

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);

/// Throws ValidationError unless m is square and Hermitian within tol.
void require_hermitian(const Matrix& m, double tol = kHermitianTol,
                       const char* what = "matrix");

/// Dense Hermitian eigendecomposition (tridiagonalization + implicit QL).
Spectrum hermitian_eig(const Matrix& m);

/// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const Matrix& m);

/// Sum of the strictly positive eigenvalues of a Hermitian matrix.
double positive_part_trace(const Matrix& m);

/// (1/2) * trace_norm(a - b) for Hermitian a, b of equal dimension.
double trace_distance(const Matrix& a, const Matrix& b);

/// Kronecker product. The result dimension must stay within dim_cap
/// (0 selects the configured cap); otherwise ResourceLimitError.
Matrix kron(const Matrix& a, const Matrix& b, std::size_t dim_cap = 0);

/// n-fold Kronecker power, n >= 1. kron_power(a, 1) == a.
Matrix kron_power(const Matrix& a, long n, std::size_t dim_cap = 0);

}  // namespace z2qht::linalg
