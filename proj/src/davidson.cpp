#include "qdmet/davidson.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace qdmet {

namespace {

// Modified Gram-Schmidt, twice, against the first m columns of V.
// Returns the norm of the remainder (0 -> vector lies in the span).
double orthogonalize(const MatrixXd& V, int m, VectorXd& t) {
    for (int pass = 0; pass < 2; ++pass)
        for (int k = 0; k < m; ++k) t -= V.col(k).dot(t) * V.col(k);
    return t.norm();
}

}  // namespace

DavidsonResult davidson_ground_state(std::shared_ptr<const SubspaceBasis> basis,
                                     const MatrixXd& h, const Eri& eri,
                                     const DavidsonOptions& opts) {
    const auto d = static_cast<Eigen::Index>(basis->size());
    const VectorXd diag = hamiltonian_diagonal(*basis, h, eri);

    DavidsonResult res;
    if (d == 1) {
        res.energy = diag[0];
        res.ground_state = {basis, VectorXd::Ones(1)};
        return res;
    }

    const int mmax = static_cast<int>(std::min<Eigen::Index>(opts.max_subspace, d));
    MatrixXd V(d, mmax), W(d, mmax);

    // start from the unit vector at the lowest diagonal element
    Eigen::Index start;
    diag.minCoeff(&start);
    V.col(0).setZero();
    V(start, 0) = 1.0;
    int m = 1;
    int w_cols = 0;

    double best_rnorm = std::numeric_limits<double>::infinity();

    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        for (; w_cols < m; ++w_cols)
            W.col(w_cols) = apply_hamiltonian(*basis, h, eri, V.col(w_cols));

        MatrixXd G = V.leftCols(m).transpose() * W.leftCols(m);
        G = 0.5 * (G + G.transpose()).eval();
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(G);
        const double theta = es.eigenvalues()[0];
        const VectorXd s = es.eigenvectors().col(0);

        VectorXd x = V.leftCols(m) * s;
        VectorXd residual = W.leftCols(m) * s - theta * x;
        const double rnorm = residual.norm();
        best_rnorm = std::min(best_rnorm, rnorm);

        if (rnorm < opts.tol || m == d) {
            if (rnorm >= opts.tol)
                throw ConvergenceError("davidson: subspace exhausted at residual " +
                                           std::to_string(rnorm),
                                       rnorm);
            // fix the overall sign for reproducibility
            Eigen::Index imax;
            x.cwiseAbs().maxCoeff(&imax);
            if (x[imax] < 0.0) x = -x;
            res.energy = theta;
            res.ground_state = {basis, x / x.norm()};
            res.iterations = iter;
            res.residual_norm = rnorm;
            return res;
        }

        if (m == mmax) {
            // restart with the best few Ritz vectors
            const int keep = static_cast<int>(std::min<Eigen::Index>(4, d));
            const MatrixXd ritz = V.leftCols(m) * es.eigenvectors().leftCols(keep);
            V.leftCols(keep) = ritz;
            for (int k = 0; k < keep; ++k) {
                VectorXd t = V.col(k);
                const double nrm = orthogonalize(V, k, t);
                V.col(k) = t / nrm;
            }
            m = keep;
            w_cols = 0;
        }

        // diagonal preconditioner with a floored denominator
        VectorXd t(d);
        for (Eigen::Index i = 0; i < d; ++i) {
            double den = theta - diag[i];
            const double mag = std::max(std::abs(den), opts.precond_floor);
            t[i] = residual[i] / (den < 0 ? -mag : mag);
        }
        double tnorm = orthogonalize(V, m, t);
        if (tnorm < 1e-12) {
            // preconditioned residual already spanned; fall back to the raw one
            t = residual;
            tnorm = orthogonalize(V, m, t);
            if (tnorm < 1e-12)
                throw ConvergenceError("davidson: stagnation at residual " +
                                           std::to_string(rnorm),
                                       rnorm);
        }
        V.col(m) = t / tnorm;
        ++m;
    }
    throw ConvergenceError("davidson: no convergence in " + std::to_string(opts.max_iter) +
                               " iterations (best residual " + std::to_string(best_rnorm) + ")",
                           best_rnorm);
}

}  // namespace qdmet
