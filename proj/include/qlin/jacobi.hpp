/*
   Copyright 2026 The qlin authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QLIN_JACOBI_HPP
#define QLIN_JACOBI_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qlin {

struct NumericalError : std::runtime_error {
    double residual;
    NumericalError(const std::string& msg, double res)
        : std::runtime_error(msg), residual(res) {}
};

/// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic
/// Jacobi rotations. Sweeps until the off-diagonal Frobenius norm drops
/// below rel_tol times the initial Frobenius norm; throws NumericalError
/// carrying the residual if max_sweeps is exhausted. Returns the
/// eigenvalues sorted ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double rel_tol = 1e-12, std::size_t max_sweeps = 64);

}  // namespace qlin

#endif  // QLIN_JACOBI_HPP
