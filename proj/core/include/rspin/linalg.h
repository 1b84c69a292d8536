// Copyright 2026 The rspin Authors
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

#ifndef RSPIN_LINALG_H
#define RSPIN_LINALG_H

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

namespace rspin {

using Complex = std::complex<double>;

/// Largest supported operator dimension (three qubits).
inline constexpr int kMaxDim = 8;

/// Max-entry tolerance used when accepting a matrix as Hermitian.
inline constexpr double kHermitianTolerance = 1e-12;

/// Eigenvalues of a density matrix in [-kPsdFloor, 0) are treated as roundoff.
inline constexpr double kPsdFloor = 1e-12;

/// Two lowest eigenvalues closer than this mark a ground state as degenerate.
inline constexpr double kDegeneracyGap = 1e-10;

/// Raised when the Jacobi iteration exhausts its sweep budget.
class ConvergenceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Dense square complex matrix of dimension 2, 4 or 8, stored row-major.
class ComplexMatrix {
   public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(std::span<const double> entries);
    static ComplexMatrix diagonal(std::initializer_list<double> entries);

    int dim() const { return dim_; }
    Complex &operator()(int row, int col) { return data_[row * kMaxDim + col]; }
    const Complex &operator()(int row, int col) const { return data_[row * kMaxDim + col]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conj() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend bool operator==(const ComplexMatrix &a, const ComplexMatrix &b);

    std::string str() const;

   private:
    int dim_;
    std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Largest |a_ij - b_ij|. Dimensions must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
bool is_hermitian(const ComplexMatrix &m, double tol = kHermitianTolerance);

class PureState;

/// A ComplexMatrix known to satisfy A = A^dagger within kHermitianTolerance.
///
/// Construction checks the property and rejects violations; the stored entries
/// are kept exactly as given.
class HermitianMatrix {
   public:
    explicit HermitianMatrix(ComplexMatrix m);

    static HermitianMatrix identity(int dim);
    static HermitianMatrix diagonal(std::initializer_list<double> entries);

    int dim() const { return m_.dim(); }
    const ComplexMatrix &matrix() const { return m_; }
    Complex operator()(int row, int col) const { return m_(row, col); }
    double trace() const { return m_.trace().real(); }

    HermitianMatrix &operator+=(const HermitianMatrix &other);
    HermitianMatrix &operator*=(double scale);
    friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix &b) { return a += b; }
    friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
    friend bool operator==(const HermitianMatrix &a, const HermitianMatrix &b) { return a.m_ == b.m_; }

   private:
    struct Unchecked {};
    HermitianMatrix(Unchecked, ComplexMatrix m) : m_(std::move(m)) {}
    friend HermitianMatrix kron(const HermitianMatrix &a, const HermitianMatrix &b);
    friend HermitianMatrix density_matrix(const PureState &state);

    ComplexMatrix m_;
};

/// Normalized complex amplitude vector of dimension 2, 4 or 8.
///
/// Basis index bits are read with qubit 1 as the most significant bit, so
/// amplitude(0b011) is the coefficient of |011>.
class PureState {
   public:
    /// Accepts amplitudes whose squared norm is 1 within kNormTolerance.
    explicit PureState(std::span<const Complex> amplitudes);
    PureState(std::initializer_list<Complex> amplitudes);

    /// Divides by the norm; rejects the zero vector.
    static PureState normalized(std::span<const Complex> amplitudes);
    static PureState normalized(std::initializer_list<Complex> amplitudes);
    static PureState basis(int dim, int index);

    static constexpr double kNormTolerance = 1e-12;

    int dim() const { return dim_; }
    int n_qubits() const;
    Complex operator[](int i) const { return amps_[i]; }
    std::span<const Complex> amplitudes() const { return {amps_.data(), static_cast<size_t>(dim_)}; }

   private:
    struct Unchecked {};
    PureState(Unchecked, int dim) : dim_(dim) {}
    friend class EigenDecomposition;

    int dim_;
    std::array<Complex, kMaxDim> amps_{};
};

Complex inner(const PureState &bra, const PureState &ket);
PureState kron(const PureState &a, const PureState &b);

/// u |state> for a unitary u of matching dimension, renormalized to absorb
/// roundoff. Rejects non-matching dimensions.
PureState apply(const ComplexMatrix &u, const PureState &state);

/// Kronecker product; the dimension of the result may not exceed 8.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
HermitianMatrix kron(const HermitianMatrix &a, const HermitianMatrix &b);

HermitianMatrix pauli_x();
HermitianMatrix pauli_y();
HermitianMatrix pauli_z();

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
///
/// Each eigenvector column has its largest-magnitude entry real and positive
/// (first such index on exact ties).
class EigenDecomposition {
   public:
    int dim() const { return vectors_.dim(); }
    double eigenvalue(int k) const { return values_[k]; }
    std::span<const double> eigenvalues() const { return {values_.data(), static_cast<size_t>(dim())}; }
    /// Columns are eigenvectors.
    const ComplexMatrix &vectors() const { return vectors_; }
    PureState eigenvector(int k) const;
    int sweeps() const { return sweeps_; }

    /// U diag(lambda) U^dagger.
    ComplexMatrix reconstruct() const;

   private:
    EigenDecomposition(int dim) : vectors_(dim) {}
    friend EigenDecomposition hermitian_eig(const HermitianMatrix &h);

    std::array<double, kMaxDim> values_{};
    ComplexMatrix vectors_;
    int sweeps_ = 0;
};

/// Cyclic complex Jacobi. Throws ConvergenceError if the off-diagonal mass is
/// not below 1e-14 (relative to the Frobenius norm) within 100 sweeps.
EigenDecomposition hermitian_eig(const HermitianMatrix &h);

struct GroundState {
    double energy;
    /// lambda_1 - lambda_0.
    double gap;
    /// gap < kDegeneracyGap; the state is then one arbitrary vector of the
    /// lowest eigenspace.
    bool degenerate;
    PureState state;
};

GroundState ground_state(const HermitianMatrix &h);

/// Singular values in descending order (entries past dim() are zero), by
/// one-sided Jacobi; small values are accurate to roundoff relative to the
/// largest one.
std::array<double, kMaxDim> singular_values(const ComplexMatrix &m);

/// |psi><psi|.
HermitianMatrix density_matrix(const PureState &state);

/// Reduced density matrix on the qubits listed in `keep` (1-based, any order;
/// the result orders them ascending).
HermitianMatrix partial_trace(const PureState &state, std::span<const int> keep, int n_qubits);
HermitianMatrix partial_trace(const PureState &state, std::initializer_list<int> keep, int n_qubits);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-kPsdFloor, 0) are clamped to zero; anything lower is rejected.
HermitianMatrix matrix_sqrt_psd(const HermitianMatrix &rho);

/// Determinant of a 2x2 Hermitian matrix (a d - |b|^2).
double det2(const HermitianMatrix &rho);

}  // namespace rspin

#endif
