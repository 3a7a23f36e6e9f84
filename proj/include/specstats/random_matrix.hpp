#pragma once

#include "specstats/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace specstats {

// Hermitian matrix with structurally enforced symmetry: strictly lower
// triangle plus a real diagonal.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int order);
    // Validates finiteness and hermiticity of a (|a - a^dag| <= tol * scale).
    static HermitianMatrix from_dense(const Eigen::MatrixXcd& a, double tol = 1e-12);

    int order() const { return order_; }
    std::complex<double> entry(int row, int col) const;
    void set(int row, int col, std::complex<double> v);

    Eigen::MatrixXcd to_dense() const;
    double max_abs() const;

private:
    int order_;
    std::vector<double> diag_;
    std::vector<std::complex<double>> lower_;  // row-major, col < row

    std::size_t lower_index(int row, int col) const {
        return static_cast<std::size_t>(row) * (static_cast<std::size_t>(row) - 1) / 2 +
               static_cast<std::size_t>(col);
    }
};

// Haar-distributed unitary: QR of an n x n matrix of iid standard complex
// Gaussians, with each column of Q rescaled by the unit phase of the matching
// diagonal entry of R (removes the QR convention bias).
Eigen::MatrixXcd haar_unitary(int n, RngStream& rng);

// The leading m x m compression of U diag(x) U^dag, computed from the first
// m rows of u (the two constructions coincide entrywise).
HermitianMatrix leading_compression(const Eigen::MatrixXcd& u, const std::vector<double>& x,
                                    int m);

// All eigenvalues, ascending. Householder tridiagonalization with implicit
// shifts behind the scenes (Eigen's selfadjoint solver).
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a);

// Spectral sample of size m from x: eigenvalues of the leading m x m block
// of H diag(x) H^dag with H Haar on U(n). Ascending order.
std::vector<double> spectral_sample(const std::vector<double>& x, int m, RngStream& rng);

// Simple random sample: uniform without-replacement subset of x.
std::vector<double> srs_sample(const std::vector<double>& x, int m, RngStream& rng);

}  // namespace specstats
