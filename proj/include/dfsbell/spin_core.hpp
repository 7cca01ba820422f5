// Copyright 2026 The dfsbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DFSBELL_SPIN_CORE_HPP
#define DFSBELL_SPIN_CORE_HPP

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dfsbell/tolerances.hpp"

namespace dfsbell {

using cplx = std::complex<double>;
/// Operators on an n-spin register are plain 2^n x 2^n complex matrices.
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
/// Spins are numbered from 1. Spin 1 is the leftmost tensor factor.
using SpinSet = std::vector<int>;

/// Register size of a square operator. Throws if the dimension is not 2^n.
int n_spins_of(const Mat &m);
bool is_unitary(const Mat &m, double tol = default_tolerances().unitary);
bool is_hermitian(const Mat &m, double tol = default_tolerances().hermitian);
/// Throws std::invalid_argument unless every spin lies in [1, n] with no repeats.
void check_spins(int n, const SpinSet &spins);

/// 2x2 matrix for a label in {I, X, Y, Z, +, -}. Here + is |0><1|.
Mat pauli_matrix(char label);

/// coeff * (factor_1 (x) ... (x) factor_n), one label per spin.
Mat pauli_embed(std::string_view factors, cplx coeff = 1.0);
/// Short form: pauli_term(4, {{1, 'X'}, {3, 'Z'}}) is X (x) I (x) Z (x) I.
Mat pauli_term(int n, const std::vector<std::pair<int, char>> &factors, cplx coeff = 1.0);
/// Places 2x2 matrices on the listed spins and identities elsewhere.
Mat embed(int n, const std::vector<std::pair<int, Mat>> &factors);
/// Sum over the listed spins of the single-spin Pauli `label`.
Mat collective(int n, const SpinSet &spins, char label);

enum class Axis { X, Y, Z, XBar, YBar };

/// exp[-i (angle/2) sum_k sigma_axis^k]. Barred axes negate the generator.
Mat rotation(int n, const SpinSet &targets, Axis axis, double angle);
/// Same, with the axis cos(phase) X + sin(phase) Y in the transverse plane.
Mat rotation_phase(int n, const SpinSet &targets, double phase, double angle);

/// exp(-i H t) for Hermitian H via its eigendecomposition.
Mat expm_skew(const Mat &h, double t, double hermitian_tol = default_tolerances().hermitian);

/// |b_1 ... b_n> from a bit string such as "0101".
Vec basis_ket(std::string_view bits);
std::string basis_label(int index, int n);
Mat outer(const Vec &ket);

enum class Form { Normalized, Deviation };

/// Hermitian state matrix. Normalized states must have unit trace and no
/// negative eigenvalues; deviation-form states only need to be Hermitian.
class DensityMatrix {
   public:
    DensityMatrix(Mat m, Form form = Form::Normalized, const Tolerances &tol = default_tolerances());
    static DensityMatrix pure(const Vec &ket);

    const Mat &matrix() const { return m_; }
    Form form() const { return form_; }
    int n_spins() const { return n_; }
    int dim() const { return static_cast<int>(m_.rows()); }

   private:
    Mat m_;
    Form form_;
    int n_;
};

/// Reduced matrix on `keep` (kept spins stay in ascending order).
Mat partial_trace(const Mat &rho, const SpinSet &keep);
DensityMatrix partial_trace(const DensityMatrix &rho, const SpinSet &keep);

/// Coefficients c_P = Tr(P^dag rho) / 2^n over all 4^n Pauli strings.
/// Index digits are base 4 (I, X, Y, Z) with spin 1 most significant.
struct PauliTable {
    int n_spins = 0;
    std::vector<cplx> coeffs;

    std::string label(size_t index) const;
    Mat resynthesize() const;
};
PauliTable pauli_expand(const Mat &rho);

}  // namespace dfsbell

#endif
