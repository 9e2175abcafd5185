#include "qdmet/sto3g.hpp"

#include <array>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdmet {

namespace {

constexpr double kPi = std::numbers::pi;

// STO-3G hydrogen 1s: three primitives with zeta = 1.24 scaling.
constexpr std::array<double, 3> kHExp = {3.425250914, 0.6239137298, 0.1688554040};
constexpr std::array<double, 3> kHCoef = {0.1543289673, 0.5353281423, 0.4446345422};

// F0(x) = (1/2) sqrt(pi/x) erf(sqrt(x)); the series head covers the x->0 limit.
double boys0(double x) {
    if (x < 1e-12) return 1.0 - x / 3.0;
    return 0.5 * std::sqrt(kPi / x) * std::erf(std::sqrt(x));
}

struct Vec3 {
    double x, y, z;
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    double norm2() const { return x * x + y * y + z * z; }
};

Vec3 gaussian_center(double a, const Vec3& A, double b, const Vec3& B) {
    const double p = a + b;
    return {(a * A.x + b * B.x) / p, (a * A.y + b * B.y) / p, (a * A.z + b * B.z) / p};
}

}  // namespace

IntegralBundle compute_sto3g_h_integrals(const Geometry& geom) {
    geom.validate();
    for (const auto& a : geom.atoms)
        if (a.element != "H")
            throw IntegrityError("built-in integrals support hydrogen only, got " + a.element);

    const int n = static_cast<int>(geom.atoms.size());
    const int n_elec = geom.electron_count();
    if (n_elec % 2 != 0)
        throw IntegrityError("odd electron count (" + std::to_string(n_elec) +
                             "): restricted formalism requires a closed shell");

    std::vector<Vec3> R(n);
    for (int i = 0; i < n; ++i)
        R[i] = {geom.atoms[i].xyz[0] / kBohrInAngstrom, geom.atoms[i].xyz[1] / kBohrInAngstrom,
                geom.atoms[i].xyz[2] / kBohrInAngstrom};

    // Primitive-normalized contraction coefficients, then rescale so the
    // contracted function has unit self-overlap (the tabulated coefficients
    // are only good to ~1e-7 on their own).
    std::array<double, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = kHCoef[i] * std::pow(2.0 * kHExp[i] / kPi, 0.75);
    double self = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            self += c[i] * c[j] * std::pow(kPi / (kHExp[i] + kHExp[j]), 1.5);
    for (auto& ci : c) ci /= std::sqrt(self);

    IntegralBundle bundle;
    bundle.n_orb = n;
    bundle.n_elec = n_elec;
    bundle.e_nuc = nuclear_repulsion(geom);
    bundle.overlap = MatrixXd::Zero(n, n);
    bundle.hcore = MatrixXd::Zero(n, n);
    bundle.eri = Eri(n);
    bundle.orbital_to_atom.resize(n);
    for (int i = 0; i < n; ++i) bundle.orbital_to_atom[i] = i;

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b <= a; ++b) {
            const double rab2 = (R[a] - R[b]).norm2();
            double s = 0.0, t = 0.0, v = 0.0;
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    const double al = kHExp[i], be = kHExp[j];
                    const double p = al + be;
                    const double q = al * be / p;
                    const double pre = c[i] * c[j] * std::exp(-q * rab2);
                    const double s_prim = pre * std::pow(kPi / p, 1.5);
                    s += s_prim;
                    t += q * (3.0 - 2.0 * q * rab2) * s_prim;
                    const Vec3 P = gaussian_center(al, R[a], be, R[b]);
                    for (int k = 0; k < n; ++k)
                        v -= pre * (2.0 * kPi / p) * boys0(p * (P - R[k]).norm2());
                }
            }
            bundle.overlap(a, b) = bundle.overlap(b, a) = s;
            bundle.hcore(a, b) = bundle.hcore(b, a) = t + v;
        }
    }

    // Canonical quadruplets only; set_symmetric mirrors the other images so
    // the stored tensor is exactly 8-fold symmetric.
    std::vector<std::array<int, 4>> quads;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b <= a; ++b)
            for (int cc = 0; cc <= a; ++cc)
                for (int d = 0; d <= (cc == a ? b : cc); ++d)
                    quads.push_back({a, b, cc, d});

#pragma omp parallel for schedule(dynamic)
    for (std::size_t iq = 0; iq < quads.size(); ++iq) {
        const auto [a, b, cc, d] = quads[iq];
        const double rab2 = (R[a] - R[b]).norm2();
        const double rcd2 = (R[cc] - R[d]).norm2();
        double val = 0.0;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const double al = kHExp[i], be = kHExp[j];
                const double p = al + be;
                const Vec3 P = gaussian_center(al, R[a], be, R[b]);
                const double eab = c[i] * c[j] * std::exp(-al * be / p * rab2);
                for (int k = 0; k < 3; ++k) {
                    for (int l = 0; l < 3; ++l) {
                        const double ga = kHExp[k], de = kHExp[l];
                        const double qq = ga + de;
                        const Vec3 Q = gaussian_center(ga, R[cc], de, R[d]);
                        const double ecd = c[k] * c[l] * std::exp(-ga * de / qq * rcd2);
                        val += eab * ecd * 2.0 * std::pow(kPi, 2.5) /
                               (p * qq * std::sqrt(p + qq)) *
                               boys0(p * qq / (p + qq) * (P - Q).norm2());
                    }
                }
            }
        }
        // distinct canonical quadruplets write disjoint image sets
        bundle.eri.set_symmetric(a, b, cc, d, val);
    }

    return bundle;
}

}  // namespace qdmet
