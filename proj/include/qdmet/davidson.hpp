#pragma once

#include <memory>

#include "qdmet/determinant.hpp"
#include "qdmet/slater_condon.hpp"

namespace qdmet {

struct DavidsonOptions {
    double tol = 1e-8;       // residual 2-norm
    int max_subspace = 24;   // restart size (collapses to the best 4 Ritz vectors)
    int max_iter = 200;
    double precond_floor = 1e-6;  // denominator floor in the diagonal preconditioner
};

struct DavidsonResult {
    double energy = 0.0;  // electronic (no nuclear repulsion)
    CiVector ground_state;
    int iterations = 0;
    double residual_norm = 0.0;
};

// Lowest eigenpair of the subspace Hamiltonian by Davidson iteration with a
// diagonal preconditioner. Deterministic for fixed basis and options. Throws
// ConvergenceError (carrying the best residual) if max_iter is exhausted.
DavidsonResult davidson_ground_state(std::shared_ptr<const SubspaceBasis> basis,
                                     const MatrixXd& h, const Eri& eri,
                                     const DavidsonOptions& opts = {});

}  // namespace qdmet
