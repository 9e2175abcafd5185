#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qdmet/types.hpp"

namespace qdmet {

// Occupation bitstrings for one Slater determinant. Orbital 0 is the least
// significant bit; alpha (spin-up) and beta (spin-down) words are kept
// separate. At most 64 spatial orbitals.
struct Determinant {
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;

    int n_alpha() const { return std::popcount(alpha); }
    int n_beta() const { return std::popcount(beta); }

    friend bool operator==(const Determinant&, const Determinant&) = default;
    friend auto operator<=>(const Determinant& a, const Determinant& b) {
        if (auto c = a.alpha <=> b.alpha; c != 0) return c;
        return a.beta <=> b.beta;
    }
};

// An ordered, deduplicated determinant set within one (n_alpha, n_beta)
// sector. Lookup is binary search on the sorted storage.
class SubspaceBasis {
  public:
    SubspaceBasis(int n_orb, std::vector<Determinant> dets);

    int n_orb() const { return n_orb_; }
    int n_alpha() const { return n_alpha_; }
    int n_beta() const { return n_beta_; }
    std::size_t size() const { return dets_.size(); }

    const Determinant& operator[](std::size_t i) const { return dets_[i]; }
    const std::vector<Determinant>& determinants() const { return dets_; }

    std::optional<std::size_t> index_of(const Determinant& d) const;

  private:
    int n_orb_;
    int n_alpha_;
    int n_beta_;
    std::vector<Determinant> dets_;
};

// Sector dimension C(n_orb, n_alpha) * C(n_orb, n_beta); never allocates.
std::uint64_t full_space_dimension(int n_orb, int n_alpha, int n_beta);

// Materializes the full sector, sorted by (alpha, beta). Throws CapacityError
// above the cap (default 5e7 determinants).
SubspaceBasis enumerate_full_space(int n_orb, int n_alpha, int n_beta,
                                   std::uint64_t cap = 50'000'000);

// Expansion coefficients over a shared basis; eigenvectors are unit norm.
struct CiVector {
    std::shared_ptr<const SubspaceBasis> basis;
    VectorXd coefficients;
};

// Number of configurations with |c_m|^2 >= threshold.
std::size_t significant_config_count(const CiVector& c, double threshold = 1e-8);

}  // namespace qdmet
