#pragma once

#include "qdmet/determinant.hpp"
#include "qdmet/types.hpp"

namespace qdmet {

// Elementary fermionic operators on a single spin word. The returned sign is
// the Jordan-Wigner phase (-1)^(occupied below p); 0 means the operator
// annihilates the state. Canonical kets are creation products in ascending
// orbital order, alpha string applied before beta.
inline int annihilate(std::uint64_t& word, int p) {
    const std::uint64_t bit = std::uint64_t{1} << p;
    if (!(word & bit)) return 0;
    const int sign = (std::popcount(word & (bit - 1)) & 1) ? -1 : 1;
    word &= ~bit;
    return sign;
}

inline int create(std::uint64_t& word, int p) {
    const std::uint64_t bit = std::uint64_t{1} << p;
    if (word & bit) return 0;
    const int sign = (std::popcount(word & (bit - 1)) & 1) ? -1 : 1;
    word |= bit;
    return sign;
}

// <I|H|J> for H = sum t_pr E_pr + 1/2 sum (pr|qs) e_pq,rs via the
// Slater-Condon rules; zero when I and J differ by more than a double
// excitation.
double slater_condon_element(const Determinant& I, const Determinant& J, const MatrixXd& h,
                             const Eri& eri);

// <I|H|I> for every basis member (Davidson preconditioner, 1x1 cases).
VectorXd hamiltonian_diagonal(const SubspaceBasis& basis, const MatrixXd& h, const Eri& eri);

// y_i = sum_j <x_i|H|x_j> x_j, connection-driven: each row enumerates its
// single and double excitations and keeps the ones present in the basis.
// Rows are independent, so the loop parallelizes with bit-identical results.
VectorXd apply_hamiltonian(const SubspaceBasis& basis, const MatrixXd& h, const Eri& eri,
                           const VectorXd& x);

}  // namespace qdmet
