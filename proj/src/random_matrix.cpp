#include "specstats/random_matrix.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace specstats {

HermitianMatrix::HermitianMatrix(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("HermitianMatrix: order must be >= 1");
    diag_.assign(static_cast<std::size_t>(order), 0.0);
    lower_.assign(static_cast<std::size_t>(order) * (static_cast<std::size_t>(order) - 1) / 2,
                  {0.0, 0.0});
}

HermitianMatrix HermitianMatrix::from_dense(const Eigen::MatrixXcd& a, double tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("from_dense: matrix not square");
    if (!a.allFinite()) throw std::invalid_argument("from_dense: non-finite entries");
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
        throw std::invalid_argument("from_dense: matrix is not Hermitian");
    HermitianMatrix h(static_cast<int>(a.rows()));
    for (int r = 0; r < h.order_; ++r) {
        h.diag_[static_cast<std::size_t>(r)] = a(r, r).real();
        for (int c = 0; c < r; ++c) h.lower_[h.lower_index(r, c)] = a(r, c);
    }
    return h;
}

std::complex<double> HermitianMatrix::entry(int row, int col) const {
    if (row == col) return {diag_[static_cast<std::size_t>(row)], 0.0};
    if (col < row) return lower_[lower_index(row, col)];
    return std::conj(lower_[lower_index(col, row)]);
}

void HermitianMatrix::set(int row, int col, std::complex<double> v) {
    if (row == col)
        diag_[static_cast<std::size_t>(row)] = v.real();
    else if (col < row)
        lower_[lower_index(row, col)] = v;
    else
        lower_[lower_index(col, row)] = std::conj(v);
}

Eigen::MatrixXcd HermitianMatrix::to_dense() const {
    Eigen::MatrixXcd a(order_, order_);
    for (int r = 0; r < order_; ++r)
        for (int c = 0; c < order_; ++c) a(r, c) = entry(r, c);
    return a;
}

double HermitianMatrix::max_abs() const {
    double m = 0.0;
    for (double d : diag_) m = std::max(m, std::abs(d));
    for (const auto& v : lower_) m = std::max(m, std::abs(v));
    return m;
}

Eigen::MatrixXcd haar_unitary(int n, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("haar_unitary: n must be >= 1");
    Eigen::MatrixXcd z(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            z(r, c) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < n; ++c) {
        const std::complex<double> d = r(c, c);
        q.col(c) *= d / std::abs(d);
    }
    return q;
}

HermitianMatrix leading_compression(const Eigen::MatrixXcd& u, const std::vector<double>& x,
                                    int m) {
    const int n = static_cast<int>(x.size());
    if (u.rows() < m || u.cols() != n)
        throw std::invalid_argument("leading_compression: unitary/spectrum size mismatch");
    if (m < 1 || m > n) throw std::invalid_argument("leading_compression: need 1 <= m <= n");
    const Eigen::MatrixXcd rows = u.topRows(m);
    const Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(x.data(), n);
    return HermitianMatrix::from_dense(rows * d.asDiagonal() * rows.adjoint(), 1e-10);
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.to_dense(),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: solver failed");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> spectral_sample(const std::vector<double>& x, int m, RngStream& rng) {
    const int n = static_cast<int>(x.size());
    if (m < 1 || m > n)
        throw std::invalid_argument("spectral_sample: need 1 <= m <= n");
    return hermitian_eigenvalues(leading_compression(haar_unitary(n, rng), x, m));
}

std::vector<double> srs_sample(const std::vector<double>& x, int m, RngStream& rng) {
    const int n = static_cast<int>(x.size());
    if (m < 1 || m > n) throw std::invalid_argument("srs_sample: need 1 <= m <= n");
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) idx[static_cast<std::size_t>(k)] = k;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const auto j = k + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - k)));
        std::swap(idx[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(j)]);
        out.push_back(x[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])]);
    }
    return out;
}

}  // namespace specstats
