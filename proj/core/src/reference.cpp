#include "sps/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sps {

namespace {

double spectral_norm(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 0.0;
    return Eigen::BDCSVD<Eigen::MatrixXd>(m).singularValues()(0);
}

bool full_rank_rows_or_cols(const Eigen::MatrixXd& m, int needed_rank, double tol) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() < needed_rank) return false;
    return sv(needed_rank - 1) > tol * sv(0);
}

}  // namespace

bool check_assumption1(const DenseProblem& p) {
    if (p.a_mat.size() == 0) throw std::invalid_argument("check_assumption1: empty matrix");
    return full_rank_rows_or_cols(p.a_mat, static_cast<int>(p.a_mat.rows()), p.tolerance);
}

bool check_assumption2(const DenseProblem& p) {
    Eigen::MatrixXd stacked(p.a_mat.rows() + p.l2_mat.rows(), p.n_signal);
    stacked << p.a_mat, p.l2_mat;
    return full_rank_rows_or_cols(stacked, p.n_signal, p.tolerance);
}

bool check_assumption3(const DenseProblem& p) {
    if (!check_assumption1(p))
        throw std::invalid_argument("check_assumption3: requires assumption 1");
    const Eigen::MatrixXd at = p.a_mat.transpose();
    const Eigen::MatrixXd gram = p.a_mat * at;
    const Eigen::MatrixXd proj = at * gram.ldlt().solve(p.a_mat);
    const Eigen::MatrixXd l2tl2_at = p.l2_mat.transpose() * (p.l2_mat * at);
    const Eigen::MatrixXd off = l2tl2_at - proj * l2tl2_at;
    const double scale = spectral_norm(l2tl2_at);
    if (scale == 0.0) return true;
    return spectral_norm(off) <= p.tolerance * scale;
}

Eigen::MatrixXd dense_lambda2(const DenseProblem& p) {
    const Eigen::MatrixXd gram = p.a_mat * p.a_mat.transpose();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    if (ldlt.info() != Eigen::Success || !check_assumption1(p))
        throw std::invalid_argument("dense_lambda2: A A^T singular");
    const Eigen::MatrixXd rhs =
        p.a_mat * (p.l2_mat.transpose() * (p.l2_mat * p.a_mat.transpose()));
    return ldlt.solve(rhs);
}

double decoupling_identity_residual(const DenseProblem& p, double lambda2) {
    const Eigen::MatrixXd at = p.a_mat.transpose();
    const Eigen::MatrixXd u = at * p.a_mat + lambda2 * p.l2_mat.transpose() * p.l2_mat;
    const Eigen::MatrixXd lhs = u.partialPivLu().solve(at);
    const Eigen::MatrixXd inner =
        p.a_mat * at + lambda2 * dense_lambda2(p);
    const Eigen::MatrixXd rhs = inner.transpose().partialPivLu().solve(p.a_mat).transpose();
    return spectral_norm(lhs - rhs) / std::max(spectral_norm(at), 1e-300);
}

Eigen::VectorXd dense_smooth_solve(const DenseProblem& p, double lambda2,
                                   const Eigen::VectorXd& x1, const Eigen::VectorXd& y) {
    const Eigen::MatrixXd u =
        p.a_mat.transpose() * p.a_mat + lambda2 * p.l2_mat.transpose() * p.l2_mat;
    const Eigen::VectorXd rhs = p.a_mat.transpose() * (y - p.a_mat * x1);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(u);
    if (ldlt.info() != Eigen::Success)
        throw std::invalid_argument("dense_smooth_solve: singular system");
    return ldlt.solve(rhs);
}

Eigen::MatrixXd dense_m_matrix(const DenseProblem& p, double lambda2) {
    const Eigen::MatrixXd lam2 = dense_lambda2(p);
    const Eigen::MatrixXd inner = p.a_mat * p.a_mat.transpose() + lambda2 * lam2;
    // M = l2 * Lambda2 * inner^{-1}, computed via inner^T X^T = l2 Lambda2^T.
    const Eigen::MatrixXd m =
        inner.transpose().partialPivLu().solve((lambda2 * lam2).transpose()).transpose();
    return m;
}

Eigen::MatrixXd dense_laplacian(int n) {
    if (n < 3) throw std::invalid_argument("dense_laplacian: n must be >= 3");
    const int N = n * n;
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(N, N);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const int i = r * n + c;
            d(i, i) = -4.0;
            d(i, ((r + n - 1) % n) * n + c) += 1.0;
            d(i, ((r + 1) % n) * n + c) += 1.0;
            d(i, r * n + (c + n - 1) % n) += 1.0;
            d(i, r * n + (c + 1) % n) += 1.0;
        }
    return d;
}

FourierDense fourier_dense_problem(const SamplingPattern& pattern) {
    const int n = pattern.n;
    if (n > 32) throw std::invalid_argument("fourier_dense_problem: n > 32 guard");
    // Requires mirror closure only (mirror_positions throws otherwise); DC
    // membership is deliberately not enforced so assumption-violating
    // patterns can be materialized for the checkers.
    const int N = n * n;
    const auto mirrors = pattern.mirror_positions();
    const double w = 2.0 * std::numbers::pi / n;
    const double root2 = std::sqrt(2.0);

    FourierDense fd;
    std::vector<Eigen::RowVectorXd> rows;
    for (int j = 0; j < pattern.size(); ++j) {
        const bool self = pattern.self_mirrored(j);
        if (!self && mirrors[j] < j) continue;  // one representative per pair
        auto [k, l] = pattern.indices[j];
        Eigen::RowVectorXd re(N), im(N);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const double phase = w * (static_cast<double>(k) * a + static_cast<double>(l) * b);
                re[a * n + b] = std::cos(phase);
                im[a * n + b] = -std::sin(phase);
            }
        if (self) {
            rows.push_back(re);
            fd.row_to_index.push_back(j);
            fd.row_is_imag.push_back(false);
        } else {
            rows.push_back(root2 * re);
            fd.row_to_index.push_back(j);
            fd.row_is_imag.push_back(false);
            rows.push_back(root2 * im);
            fd.row_to_index.push_back(j);
            fd.row_is_imag.push_back(true);
        }
    }
    fd.problem.a_mat.resize(static_cast<int>(rows.size()), N);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) fd.problem.a_mat.row(r) = rows[r];
    fd.problem.l2_mat = dense_laplacian(n);
    fd.problem.n_signal = N;
    return fd;
}

Eigen::VectorXd compress_measurement(const FourierDense& fd, const SamplingPattern& pattern,
                                     const Measurement& meas) {
    if (meas.n != pattern.n || meas.size() != pattern.size())
        throw std::invalid_argument("compress_measurement: alignment mismatch");
    const double root2 = std::sqrt(2.0);
    Eigen::VectorXd out(fd.problem.a_mat.rows());
    for (int r = 0; r < out.size(); ++r) {
        const Complex v = meas.values[fd.row_to_index[r]];
        const bool pair = !pattern.self_mirrored(fd.row_to_index[r]);
        if (fd.row_is_imag[r])
            out[r] = root2 * v.imag();
        else
            out[r] = pair ? root2 * v.real() : v.real();
    }
    return out;
}

}  // namespace sps
