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

#include "rspin/linalg.h"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rspin {

namespace {

void check_dim(int dim) {
    if (dim != 2 && dim != 4 && dim != 8) {
        throw std::invalid_argument("matrix dimension must be 2, 4 or 8, got " + std::to_string(dim));
    }
}

void check_same_dim(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

int log2_dim(int dim) {
    return dim == 2 ? 1 : dim == 4 ? 2 : 3;
}

constexpr double kJacobiTolerance = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    check_dim(dim);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(static_cast<int>(rows.size())) {
    check_dim(dim_);
    int r = 0;
    for (const auto &row : rows) {
        if (static_cast<int>(row.size()) != dim_) {
            throw std::invalid_argument("ComplexMatrix rows must all have length " + std::to_string(dim_));
        }
        int c = 0;
        for (const auto &v : row) {
            (*this)(r, c++) = v;
        }
        r++;
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
    ComplexMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim(); i++) {
        m(i, i) = entries[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> entries) {
    return diagonal(std::span<const double>(entries.begin(), entries.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            out(r, c) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (int i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    check_same_dim(dim_, other.dim_);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            (*this)(r, c) += other(r, c);
        }
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    check_same_dim(dim_, other.dim_);
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            (*this)(r, c) -= other(r, c);
        }
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            (*this)(r, c) *= scale;
        }
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    check_same_dim(a.dim_, b.dim_);
    ComplexMatrix out(a.dim_);
    for (int r = 0; r < a.dim_; r++) {
        for (int k = 0; k < a.dim_; k++) {
            Complex ark = a(r, k);
            for (int c = 0; c < a.dim_; c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

bool operator==(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim_ != b.dim_) {
        return false;
    }
    for (int r = 0; r < a.dim_; r++) {
        for (int c = 0; c < a.dim_; c++) {
            if (a(r, c) != b(r, c)) {
                return false;
            }
        }
    }
    return true;
}

std::string ComplexMatrix::str() const {
    std::ostringstream out;
    for (int r = 0; r < dim_; r++) {
        for (int c = 0; c < dim_; c++) {
            out << (c ? " " : "") << (*this)(r, c);
        }
        out << "\n";
    }
    return out.str();
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    check_same_dim(a.dim(), b.dim());
    double m = 0;
    for (int r = 0; r < a.dim(); r++) {
        for (int c = 0; c < a.dim(); c++) {
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
        }
    }
    return m;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    for (int r = 0; r < m.dim(); r++) {
        for (int c = r; c < m.dim(); c++) {
            Complex v = m(r, c);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                return false;
            }
            if (std::abs(v - std::conj(m(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!is_hermitian(m_)) {
        throw std::invalid_argument("matrix is not Hermitian:\n" + m_.str());
    }
}

HermitianMatrix HermitianMatrix::identity(int dim) {
    return HermitianMatrix(Unchecked{}, ComplexMatrix::identity(dim));
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> entries) {
    return HermitianMatrix(Unchecked{}, ComplexMatrix::diagonal(entries));
}

HermitianMatrix &HermitianMatrix::operator+=(const HermitianMatrix &other) {
    m_ += other.m_;
    return *this;
}

HermitianMatrix &HermitianMatrix::operator*=(double scale) {
    m_ *= scale;
    return *this;
}

PureState::PureState(std::span<const Complex> amplitudes) : dim_(static_cast<int>(amplitudes.size())) {
    check_dim(dim_);
    double n2 = 0;
    for (int i = 0; i < dim_; i++) {
        amps_[i] = amplitudes[i];
        n2 += std::norm(amplitudes[i]);
    }
    if (!(std::abs(n2 - 1) <= kNormTolerance)) {
        throw std::invalid_argument("state is not normalized: |psi|^2 = " + std::to_string(n2));
    }
}

PureState::PureState(std::initializer_list<Complex> amplitudes)
    : PureState(std::span<const Complex>(amplitudes.begin(), amplitudes.size())) {
}

PureState PureState::normalized(std::span<const Complex> amplitudes) {
    int dim = static_cast<int>(amplitudes.size());
    check_dim(dim);
    double n2 = 0;
    for (const auto &a : amplitudes) {
        n2 += std::norm(a);
    }
    if (!(n2 > 0) || !std::isfinite(n2)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    double inv = 1 / std::sqrt(n2);
    PureState s(Unchecked{}, dim);
    for (int i = 0; i < dim; i++) {
        s.amps_[i] = amplitudes[i] * inv;
    }
    return s;
}

PureState PureState::normalized(std::initializer_list<Complex> amplitudes) {
    return normalized(std::span<const Complex>(amplitudes.begin(), amplitudes.size()));
}

PureState PureState::basis(int dim, int index) {
    check_dim(dim);
    if (index < 0 || index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    PureState s(Unchecked{}, dim);
    s.amps_[index] = 1;
    return s;
}

int PureState::n_qubits() const {
    return log2_dim(dim_);
}

Complex inner(const PureState &bra, const PureState &ket) {
    check_same_dim(bra.dim(), ket.dim());
    Complex t = 0;
    for (int i = 0; i < bra.dim(); i++) {
        t += std::conj(bra[i]) * ket[i];
    }
    return t;
}

PureState kron(const PureState &a, const PureState &b) {
    if (a.dim() * b.dim() > kMaxDim) {
        throw std::invalid_argument("kron result exceeds dimension 8");
    }
    std::array<Complex, kMaxDim> out{};
    for (int i = 0; i < a.dim(); i++) {
        for (int j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return PureState::normalized(std::span<const Complex>(out.data(), a.dim() * b.dim()));
}

PureState apply(const ComplexMatrix &u, const PureState &state) {
    check_same_dim(u.dim(), state.dim());
    std::array<Complex, kMaxDim> out{};
    for (int i = 0; i < u.dim(); i++) {
        for (int j = 0; j < u.dim(); j++) {
            out[i] += u(i, j) * state[j];
        }
    }
    return PureState::normalized(std::span<const Complex>(out.data(), state.dim()));
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    int da = a.dim();
    int db = b.dim();
    if (da * db > kMaxDim) {
        throw std::invalid_argument("kron result exceeds dimension 8: " + std::to_string(da) + "x" + std::to_string(db));
    }
    ComplexMatrix out(da * db);
    for (int i = 0; i < da; i++) {
        for (int j = 0; j < da; j++) {
            Complex aij = a(i, j);
            for (int k = 0; k < db; k++) {
                for (int l = 0; l < db; l++) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

HermitianMatrix kron(const HermitianMatrix &a, const HermitianMatrix &b) {
    // conj(x) * conj(y) == conj(x * y) exactly in IEEE arithmetic.
    return HermitianMatrix(HermitianMatrix::Unchecked{}, kron(a.matrix(), b.matrix()));
}

HermitianMatrix pauli_x() {
    return HermitianMatrix(ComplexMatrix{{0, 1}, {1, 0}});
}

HermitianMatrix pauli_y() {
    return HermitianMatrix(ComplexMatrix{{0, Complex(0, -1)}, {Complex(0, 1), 0}});
}

HermitianMatrix pauli_z() {
    return HermitianMatrix::diagonal({1, -1});
}

PureState EigenDecomposition::eigenvector(int k) const {
    PureState s(PureState::Unchecked{}, dim());
    for (int i = 0; i < dim(); i++) {
        s.amps_[i] = vectors_(i, k);
    }
    return s;
}

ComplexMatrix EigenDecomposition::reconstruct() const {
    int n = dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            Complex t = 0;
            for (int k = 0; k < n; k++) {
                t += vectors_(r, k) * values_[k] * std::conj(vectors_(c, k));
            }
            out(r, c) = t;
        }
    }
    return out;
}

EigenDecomposition hermitian_eig(const HermitianMatrix &h) {
    const int n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    for (int i = 0; i < n; i++) {
        a(i, i) = a(i, i).real();
    }

    double frob2 = 0;
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            frob2 += std::norm(a(r, c));
        }
    }
    const double threshold = kJacobiTolerance * std::max(1.0, std::sqrt(frob2));

    auto off_mass = [&]() {
        double s = 0;
        for (int r = 0; r < n; r++) {
            for (int c = r + 1; c < n; c++) {
                s += 2 * std::norm(a(r, c));
            }
        }
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_mass() >= threshold) {
        if (sweep == kJacobiMaxSweeps) {
            throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(kJacobiMaxSweeps) +
                                   " sweeps");
        }
        sweep++;
        for (int p = 0; p < n - 1; p++) {
            for (int q = p + 1; q < n; q++) {
                Complex apq = a(p, q);
                double r = std::abs(apq);
                if (r == 0) {
                    continue;
                }
                // U = diag(1, d) * [[c, s], [-s, c]] on the (p, q) plane, with d
                // removing the phase of a_pq so the remaining rotation is real.
                Complex d = std::conj(apq) / r;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double theta = (aqq - app) / (2 * r);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                }
                double cs = 1 / std::sqrt(t * t + 1);
                double sn = t * cs;
                Complex sd = sn * d;
                Complex cd = cs * d;

                for (int k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = cs * akp - sd * akq;
                    a(k, q) = sn * akp + cd * akq;
                }
                Complex sdc = std::conj(sd);
                Complex cdc = std::conj(cd);
                for (int k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = cs * apk - sdc * aqk;
                    a(q, k) = sn * apk + cdc * aqk;
                }
                for (int k = 0; k < n; k++) {
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = cs * vkp - sd * vkq;
                    v(k, q) = sn * vkp + cd * vkq;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::array<int, kMaxDim> order{};
    std::iota(order.begin(), order.begin() + n, 0);
    std::stable_sort(order.begin(), order.begin() + n,
                     [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition out(n);
    out.sweeps_ = sweep;
    for (int k = 0; k < n; k++) {
        int src = order[k];
        out.values_[k] = a(src, src).real();
        int best = 0;
        double best_mag = -1;
        for (int i = 0; i < n; i++) {
            double m = std::abs(v(i, src));
            if (m > best_mag) {
                best_mag = m;
                best = i;
            }
        }
        Complex phase = std::conj(v(best, src)) / best_mag;
        for (int i = 0; i < n; i++) {
            out.vectors_(i, k) = v(i, src) * phase;
        }
        out.vectors_(best, k) = best_mag;
    }
    return out;
}

std::array<double, kMaxDim> singular_values(const ComplexMatrix &m) {
    const int n = m.dim();
    ComplexMatrix a = m;
    int sweep = 0;
    while (true) {
        bool rotated = false;
        for (int p = 0; p < n - 1; p++) {
            for (int q = p + 1; q < n; q++) {
                double alpha = 0;
                double beta = 0;
                Complex gamma = 0;
                for (int k = 0; k < n; k++) {
                    alpha += std::norm(a(k, p));
                    beta += std::norm(a(k, q));
                    gamma += std::conj(a(k, p)) * a(k, q);
                }
                double g = std::abs(gamma);
                if (g == 0 || g <= 1e-15 * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                // Same rotation as hermitian_eig applied to the Gram matrix.
                Complex d = std::conj(gamma) / g;
                double theta = (beta - alpha) / (2 * g);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                }
                double cs = 1 / std::sqrt(t * t + 1);
                double sn = t * cs;
                for (int k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = cs * akp - sn * d * akq;
                    a(k, q) = sn * akp + cs * d * akq;
                }
            }
        }
        if (!rotated) {
            break;
        }
        if (++sweep == kJacobiMaxSweeps) {
            throw ConvergenceError("one-sided Jacobi SVD did not converge");
        }
    }
    std::array<double, kMaxDim> out{};
    for (int c = 0; c < n; c++) {
        double s = 0;
        for (int k = 0; k < n; k++) {
            s += std::norm(a(k, c));
        }
        out[c] = std::sqrt(s);
    }
    std::sort(out.begin(), out.begin() + n, std::greater<>());
    return out;
}

GroundState ground_state(const HermitianMatrix &h) {
    EigenDecomposition eig = hermitian_eig(h);
    double gap = eig.eigenvalue(1) - eig.eigenvalue(0);
    return GroundState{
        .energy = eig.eigenvalue(0),
        .gap = gap,
        .degenerate = gap < kDegeneracyGap,
        .state = eig.eigenvector(0),
    };
}

HermitianMatrix density_matrix(const PureState &state) {
    ComplexMatrix m(state.dim());
    for (int r = 0; r < state.dim(); r++) {
        for (int c = 0; c < state.dim(); c++) {
            m(r, c) = state[r] * std::conj(state[c]);
        }
    }
    return HermitianMatrix(HermitianMatrix::Unchecked{}, m);
}

HermitianMatrix partial_trace(const PureState &state, std::span<const int> keep, int n_qubits) {
    if (n_qubits != 2 && n_qubits != 3) {
        throw std::invalid_argument("partial_trace supports 2 or 3 qubits");
    }
    if (state.dim() != (1 << n_qubits)) {
        throw std::invalid_argument("state dimension does not match qubit count");
    }
    int keep_mask = 0;
    for (int q : keep) {
        if (q < 1 || q > n_qubits) {
            throw std::invalid_argument("subsystem index " + std::to_string(q) + " out of range");
        }
        int bit = 1 << (n_qubits - q);
        if (keep_mask & bit) {
            throw std::invalid_argument("duplicate subsystem index " + std::to_string(q));
        }
        keep_mask |= bit;
    }
    int n_keep = static_cast<int>(keep.size());
    if (n_keep == 0 || n_keep == n_qubits) {
        throw std::invalid_argument("kept subsystems must be a nonempty proper subset");
    }

    // Qubit positions, most significant first.
    std::array<int, 3> kept_bits{};
    std::array<int, 3> traced_bits{};
    int nk = 0;
    int nt = 0;
    for (int q = 1; q <= n_qubits; q++) {
        int bit = 1 << (n_qubits - q);
        if (keep_mask & bit) {
            kept_bits[nk++] = bit;
        } else {
            traced_bits[nt++] = bit;
        }
    }
    auto expand = [](int compact, const std::array<int, 3> &bits, int count) {
        int full = 0;
        for (int i = 0; i < count; i++) {
            if (compact & (1 << (count - 1 - i))) {
                full |= bits[i];
            }
        }
        return full;
    };

    int dk = 1 << nk;
    int dt = 1 << nt;
    ComplexMatrix rho(dk);
    for (int r = 0; r < dk; r++) {
        int rf = expand(r, kept_bits, nk);
        for (int c = r; c < dk; c++) {
            int cf = expand(c, kept_bits, nk);
            Complex t = 0;
            for (int e = 0; e < dt; e++) {
                int ef = expand(e, traced_bits, nt);
                t += state[rf | ef] * std::conj(state[cf | ef]);
            }
            if (r == c) {
                t = t.real();
            }
            rho(r, c) = t;
            rho(c, r) = std::conj(t);
        }
    }
    return HermitianMatrix(rho);
}

HermitianMatrix partial_trace(const PureState &state, std::initializer_list<int> keep, int n_qubits) {
    return partial_trace(state, std::span<const int>(keep.begin(), keep.size()), n_qubits);
}

HermitianMatrix matrix_sqrt_psd(const HermitianMatrix &rho) {
    EigenDecomposition eig = hermitian_eig(rho);
    int n = rho.dim();
    std::array<double, kMaxDim> roots{};
    for (int k = 0; k < n; k++) {
        double lam = eig.eigenvalue(k);
        if (lam < -kPsdFloor) {
            throw std::invalid_argument("matrix is not positive semidefinite: eigenvalue " + std::to_string(lam));
        }
        roots[k] = lam > 0 ? std::sqrt(lam) : 0;
    }
    const ComplexMatrix &u = eig.vectors();
    ComplexMatrix out(n);
    for (int r = 0; r < n; r++) {
        for (int c = r; c < n; c++) {
            Complex t = 0;
            for (int k = 0; k < n; k++) {
                t += u(r, k) * roots[k] * std::conj(u(c, k));
            }
            if (r == c) {
                t = t.real();
            }
            out(r, c) = t;
            out(c, r) = std::conj(t);
        }
    }
    return HermitianMatrix(out);
}

double det2(const HermitianMatrix &rho) {
    if (rho.dim() != 2) {
        throw std::invalid_argument("det2 requires a 2x2 matrix");
    }
    Complex d = rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0);
    if (std::abs(d.imag()) >= 1e-12) {
        throw std::logic_error("determinant of Hermitian matrix has imaginary part");
    }
    return d.real();
}

}  // namespace rspin
