#include "qdmet/slater_condon.hpp"

#include <array>

namespace qdmet {

namespace {

std::array<int, 64> occupied_list(std::uint64_t word, int& count) {
    std::array<int, 64> occ{};
    count = 0;
    while (word) {
        occ[count++] = std::countr_zero(word);
        word &= word - 1;
    }
    return occ;
}

double diagonal_element(const Determinant& d, const MatrixXd& h, const Eri& eri) {
    int na = 0, nb = 0;
    const auto occa = occupied_list(d.alpha, na);
    const auto occb = occupied_list(d.beta, nb);
    double e = 0.0;
    for (int i = 0; i < na; ++i) e += h(occa[i], occa[i]);
    for (int i = 0; i < nb; ++i) e += h(occb[i], occb[i]);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const int p = occa[i], q = occa[j];
            e += 0.5 * (eri(p, p, q, q) - eri(p, q, q, p));
        }
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            const int p = occb[i], q = occb[j];
            e += 0.5 * (eri(p, p, q, q) - eri(p, q, q, p));
        }
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) e += eri(occa[i], occa[i], occb[j], occb[j]);
    return e;
}

// Phase of a_h then a+_g applied to one spin word (h occupied, g empty).
int single_phase(std::uint64_t word, int h, int g) {
    const int s1 = annihilate(word, h);
    const int s2 = create(word, g);
    return s1 * s2;
}

// Single excitation h->g in the alpha word; other = full beta occupation.
double single_element(const Determinant& I, int h, int g, std::uint64_t same,
                      std::uint64_t other, const MatrixXd& hmat, const Eri& eri) {
    double e = hmat(h, g);
    std::uint64_t common = same & ~(std::uint64_t{1} << h);
    while (common) {
        const int r = std::countr_zero(common);
        common &= common - 1;
        e += eri(h, g, r, r) - eri(h, r, r, g);
    }
    std::uint64_t ob = other;
    while (ob) {
        const int r = std::countr_zero(ob);
        ob &= ob - 1;
        e += eri(h, g, r, r);
    }
    return single_phase(same, h, g) * e;
}

// Same-spin double: holes h1<h2 (in I), particles g1<g2 (in J).
double double_same_spin(std::uint64_t word, int h1, int h2, int g1, int g2, const Eri& eri) {
    int sign = annihilate(word, h1);
    sign *= annihilate(word, h2);
    sign *= create(word, g2);
    sign *= create(word, g1);
    return sign * (eri(h1, g1, h2, g2) - eri(h1, g2, h2, g1));
}

}  // namespace

double slater_condon_element(const Determinant& I, const Determinant& J, const MatrixXd& h,
                             const Eri& eri) {
    const std::uint64_t xa = I.alpha ^ J.alpha;
    const std::uint64_t xb = I.beta ^ J.beta;
    const int da = std::popcount(xa) / 2;
    const int db = std::popcount(xb) / 2;
    if (std::popcount(xa) % 2 || std::popcount(xb) % 2) return 0.0;  // different sectors
    const int degree = da + db;
    if (degree > 2) return 0.0;

    if (degree == 0) return diagonal_element(I, h, eri);

    if (degree == 1) {
        if (da == 1) {
            const int hole = std::countr_zero(I.alpha & xa);
            const int part = std::countr_zero(J.alpha & xa);
            return single_element(I, hole, part, I.alpha, I.beta, h, eri);
        }
        const int hole = std::countr_zero(I.beta & xb);
        const int part = std::countr_zero(J.beta & xb);
        return single_element(I, hole, part, I.beta, I.alpha, h, eri);
    }

    if (da == 2) {
        std::uint64_t holes = I.alpha & xa, parts = J.alpha & xa;
        const int h1 = std::countr_zero(holes);
        const int h2 = std::countr_zero(holes & (holes - 1));
        const int g1 = std::countr_zero(parts);
        const int g2 = std::countr_zero(parts & (parts - 1));
        return double_same_spin(I.alpha, h1, h2, g1, g2, eri);
    }
    if (db == 2) {
        std::uint64_t holes = I.beta & xb, parts = J.beta & xb;
        const int h1 = std::countr_zero(holes);
        const int h2 = std::countr_zero(holes & (holes - 1));
        const int g1 = std::countr_zero(parts);
        const int g2 = std::countr_zero(parts & (parts - 1));
        return double_same_spin(I.beta, h1, h2, g1, g2, eri);
    }
    // one alpha, one beta excitation; the cross-spin Jordan-Wigner strings
    // cancel pairwise, so the phase factorizes per spin
    const int ha = std::countr_zero(I.alpha & xa);
    const int ga = std::countr_zero(J.alpha & xa);
    const int hb = std::countr_zero(I.beta & xb);
    const int gb = std::countr_zero(J.beta & xb);
    return single_phase(I.alpha, ha, ga) * single_phase(I.beta, hb, gb) * eri(ha, ga, hb, gb);
}

VectorXd hamiltonian_diagonal(const SubspaceBasis& basis, const MatrixXd& h, const Eri& eri) {
    VectorXd diag(basis.size());
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < basis.size(); ++i)
        diag[static_cast<Eigen::Index>(i)] = diagonal_element(basis[i], h, eri);
    return diag;
}

VectorXd apply_hamiltonian(const SubspaceBasis& basis, const MatrixXd& h, const Eri& eri,
                           const VectorXd& x) {
    if (x.size() != static_cast<Eigen::Index>(basis.size()))
        throw IntegrityError("vector length does not match basis size");
    const int n = basis.n_orb();
    VectorXd y(basis.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Determinant I = basis[i];
        double yi = diagonal_element(I, h, eri) * x[static_cast<Eigen::Index>(i)];

        int na = 0, nav = 0, nb = 0, nbv = 0;
        const std::uint64_t window =
            n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        const auto occa = occupied_list(I.alpha, na);
        const auto vira = occupied_list(window & ~I.alpha, nav);
        const auto occb = occupied_list(I.beta, nb);
        const auto virb = occupied_list(window & ~I.beta, nbv);

        auto accumulate = [&](const Determinant& J) {
            if (auto j = basis.index_of(J))
                yi += slater_condon_element(I, J, h, eri) *
                      x[static_cast<Eigen::Index>(*j)];
        };

        for (int ih = 0; ih < na; ++ih)
            for (int ig = 0; ig < nav; ++ig) {
                const std::uint64_t flip =
                    (std::uint64_t{1} << occa[ih]) | (std::uint64_t{1} << vira[ig]);
                accumulate({I.alpha ^ flip, I.beta});
            }
        for (int ih = 0; ih < nb; ++ih)
            for (int ig = 0; ig < nbv; ++ig) {
                const std::uint64_t flip =
                    (std::uint64_t{1} << occb[ih]) | (std::uint64_t{1} << virb[ig]);
                accumulate({I.alpha, I.beta ^ flip});
            }
        for (int i1 = 0; i1 < na; ++i1)
            for (int i2 = i1 + 1; i2 < na; ++i2)
                for (int j1 = 0; j1 < nav; ++j1)
                    for (int j2 = j1 + 1; j2 < nav; ++j2) {
                        const std::uint64_t flip =
                            (std::uint64_t{1} << occa[i1]) | (std::uint64_t{1} << occa[i2]) |
                            (std::uint64_t{1} << vira[j1]) | (std::uint64_t{1} << vira[j2]);
                        accumulate({I.alpha ^ flip, I.beta});
                    }
        for (int i1 = 0; i1 < nb; ++i1)
            for (int i2 = i1 + 1; i2 < nb; ++i2)
                for (int j1 = 0; j1 < nbv; ++j1)
                    for (int j2 = j1 + 1; j2 < nbv; ++j2) {
                        const std::uint64_t flip =
                            (std::uint64_t{1} << occb[i1]) | (std::uint64_t{1} << occb[i2]) |
                            (std::uint64_t{1} << virb[j1]) | (std::uint64_t{1} << virb[j2]);
                        accumulate({I.alpha, I.beta ^ flip});
                    }
        for (int i1 = 0; i1 < na; ++i1)
            for (int j1 = 0; j1 < nav; ++j1) {
                const std::uint64_t flipa =
                    (std::uint64_t{1} << occa[i1]) | (std::uint64_t{1} << vira[j1]);
                for (int i2 = 0; i2 < nb; ++i2)
                    for (int j2 = 0; j2 < nbv; ++j2) {
                        const std::uint64_t flipb =
                            (std::uint64_t{1} << occb[i2]) | (std::uint64_t{1} << virb[j2]);
                        accumulate({I.alpha ^ flipa, I.beta ^ flipb});
                    }
            }
        y[static_cast<Eigen::Index>(i)] = yi;
    }
    return y;
}

}  // namespace qdmet
