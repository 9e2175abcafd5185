#include "qdmet/determinant.hpp"

#include <algorithm>

namespace qdmet {

SubspaceBasis::SubspaceBasis(int n_orb, std::vector<Determinant> dets)
    : n_orb_(n_orb), dets_(std::move(dets)) {
    if (n_orb < 1 || n_orb > 64) throw CapacityError("n_orb must be in [1, 64]");
    if (dets_.empty()) throw IntegrityError("empty determinant set");
    std::sort(dets_.begin(), dets_.end());
    dets_.erase(std::unique(dets_.begin(), dets_.end()), dets_.end());
    n_alpha_ = dets_.front().n_alpha();
    n_beta_ = dets_.front().n_beta();
    const std::uint64_t window =
        n_orb == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_orb) - 1);
    for (const auto& d : dets_) {
        if ((d.alpha & ~window) != 0 || (d.beta & ~window) != 0)
            throw IntegrityError("determinant has bits above n_orb");
        if (d.n_alpha() != n_alpha_ || d.n_beta() != n_beta_)
            throw IntegrityError("determinants span more than one particle sector");
    }
}

std::optional<std::size_t> SubspaceBasis::index_of(const Determinant& d) const {
    auto it = std::lower_bound(dets_.begin(), dets_.end(), d);
    if (it == dets_.end() || !(*it == d)) return std::nullopt;
    return static_cast<std::size_t>(it - dets_.begin());
}

std::uint64_t full_space_dimension(int n_orb, int n_alpha, int n_beta) {
    if (n_orb < 0 || n_alpha < 0 || n_beta < 0 || n_alpha > n_orb || n_beta > n_orb)
        throw IntegrityError("invalid sector");
    auto binom = [](int n, int k) -> std::uint64_t {
        if (k > n - k) k = n - k;
        unsigned __int128 acc = 1;
        for (int i = 1; i <= k; ++i) {
            acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
            if (acc > ~std::uint64_t{0}) throw CapacityError("sector dimension overflows 64 bits");
        }
        return static_cast<std::uint64_t>(acc);
    };
    const unsigned __int128 d =
        static_cast<unsigned __int128>(binom(n_orb, n_alpha)) * binom(n_orb, n_beta);
    if (d > ~std::uint64_t{0}) throw CapacityError("sector dimension overflows 64 bits");
    return static_cast<std::uint64_t>(d);
}

namespace {

// All n_orb-bit masks with k bits set, ascending (Gosper's hack).
std::vector<std::uint64_t> combinations(int n_orb, int k) {
    std::vector<std::uint64_t> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    const std::uint64_t limit = (n_orb == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n_orb);
    std::uint64_t v = (std::uint64_t{1} << k) - 1;
    while (n_orb == 64 ? true : v < limit) {
        out.push_back(v);
        const std::uint64_t t = v | (v - 1);
        if (t == ~std::uint64_t{0}) break;
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
        if (n_orb == 64 && std::popcount(v) != k) break;
    }
    return out;
}

}  // namespace

SubspaceBasis enumerate_full_space(int n_orb, int n_alpha, int n_beta, std::uint64_t cap) {
    const std::uint64_t d = full_space_dimension(n_orb, n_alpha, n_beta);
    if (d > cap)
        throw CapacityError("sector of dimension " + std::to_string(d) +
                            " exceeds the materialization cap " + std::to_string(cap));
    const auto alphas = combinations(n_orb, n_alpha);
    const auto betas = combinations(n_orb, n_beta);
    std::vector<Determinant> dets;
    dets.reserve(static_cast<std::size_t>(d));
    for (const auto a : alphas)
        for (const auto b : betas) dets.push_back({a, b});
    return SubspaceBasis(n_orb, std::move(dets));
}

std::size_t significant_config_count(const CiVector& c, double threshold) {
    std::size_t count = 0;
    for (Eigen::Index i = 0; i < c.coefficients.size(); ++i)
        if (c.coefficients[i] * c.coefficients[i] >= threshold) ++count;
    return count;
}

}  // namespace qdmet
