#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdmet {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Unit conversions. All persisted quantities are in Hartree atomic units;
// geometry APIs take Angstrom.
inline constexpr double kBohrInAngstrom = 0.52917721092;
inline constexpr double kKcalPerHartree = 627.509474;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LinearDependenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative solver failed to reach its tolerance; carries the best residual.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), best_residual(residual) {}
    double best_residual = 0.0;
};

// Chemical-potential root finding failed; carries the (mu, g) scan trace.
struct OptimizationError : std::runtime_error {
    OptimizationError(const std::string& what, std::vector<std::pair<double, double>> t)
        : std::runtime_error(what), trace(std::move(t)) {}
    std::vector<std::pair<double, double>> trace;
};

// Two-electron integrals (pr|qs) in chemist notation, dense n^4 storage.
// set_symmetric writes all eight permutation images so the stored tensor is
// exactly 8-fold symmetric: (pr|qs)=(rp|qs)=(pr|sq)=(rp|sq)=(qs|pr)=...
class Eri {
  public:
    Eri() = default;
    explicit Eri(int n) : n_(n), v_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

    int n() const { return n_; }

    double operator()(int p, int r, int q, int s) const { return v_[flat(p, r, q, s)]; }

    void set_symmetric(int p, int r, int q, int s, double val) {
        v_[flat(p, r, q, s)] = val;
        v_[flat(r, p, q, s)] = val;
        v_[flat(p, r, s, q)] = val;
        v_[flat(r, p, s, q)] = val;
        v_[flat(q, s, p, r)] = val;
        v_[flat(s, q, p, r)] = val;
        v_[flat(q, s, r, p)] = val;
        v_[flat(s, q, r, p)] = val;
    }

    double& raw(int p, int r, int q, int s) { return v_[flat(p, r, q, s)]; }

    const std::vector<double>& data() const { return v_; }
    std::vector<double>& data() { return v_; }

  private:
    std::size_t flat(int p, int r, int q, int s) const {
        return ((static_cast<std::size_t>(p) * n_ + r) * n_ + q) * n_ + s;
    }

    int n_ = 0;
    std::vector<double> v_;
};

}  // namespace qdmet
