#include "qdmet/bundle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qdmet {

namespace {

constexpr double kDuplicateTol = 1e-10;

[[noreturn]] void fail_line(const std::string& path, int lineno, const std::string& msg) {
    throw ParseError(path + ":" + std::to_string(lineno) + ": " + msg);
}

struct SymmetricAccumulator {
    MatrixXd values;
    Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic> seen;

    explicit SymmetricAccumulator(int n)
        : values(MatrixXd::Zero(n, n)), seen(decltype(seen)::Zero(n, n)) {}

    void set(int i, int j, double v, const std::string& what) {
        if (seen(i, j) && std::abs(values(i, j) - v) > kDuplicateTol)
            throw IntegrityError("inconsistent duplicate " + what + " entry (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        values(i, j) = values(j, i) = v;
        seen(i, j) = seen(j, i) = 1;
    }
};

}  // namespace

void IntegralBundle::validate() const {
    if (n_orb <= 0) throw IntegrityError("bundle has no orbitals");
    if (n_elec < 0 || n_elec > 2 * n_orb) throw IntegrityError("electron count out of range");
    if (n_elec % 2 != 0) throw IntegrityError("odd electron count: restricted formalism");
    if (overlap.rows() != n_orb || hcore.rows() != n_orb || eri.n() != n_orb)
        throw IntegrityError("bundle dimension mismatch");
    if ((overlap - overlap.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw IntegrityError("overlap matrix not symmetric");
    if ((hcore - hcore.transpose()).cwiseAbs().maxCoeff() > 1e-10)
        throw IntegrityError("hcore matrix not symmetric");
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(overlap, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw IntegrityError("overlap matrix not positive definite (min eigenvalue " +
                             std::to_string(es.eigenvalues().minCoeff()) + ")");
    if (static_cast<int>(orbital_to_atom.size()) != n_orb)
        throw IntegrityError("orbital-to-atom map has wrong length");
}

IntegralBundle read_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open bundle file: " + path);

    std::string line;
    int lineno = 0;

    // header
    if (!std::getline(in, line)) fail_line(path, 1, "missing header");
    ++lineno;
    IntegralBundle b;
    {
        int norb = -1, nelec = -1;
        double enuc = 0.0;
        bool have_enuc = false;
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            if (tok.rfind("NORB=", 0) == 0)
                norb = std::stoi(tok.substr(5));
            else if (tok.rfind("NELEC=", 0) == 0)
                nelec = std::stoi(tok.substr(6));
            else if (tok.rfind("ENUC=", 0) == 0) {
                enuc = std::stod(tok.substr(5));
                have_enuc = true;
            } else
                fail_line(path, lineno, "unexpected header token '" + tok + "'");
        }
        if (norb <= 0 || nelec < 0 || !have_enuc)
            fail_line(path, lineno, "header must declare NORB, NELEC and ENUC");
        b.n_orb = norb;
        b.n_elec = nelec;
        b.e_nuc = enuc;
    }

    const int n = b.n_orb;
    SymmetricAccumulator hcore(n), overlap(n);
    b.eri = Eri(n);
    Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic> eri_seen =
        Eigen::Matrix<char, Eigen::Dynamic, Eigen::Dynamic>::Zero(n * n, n * n);
    b.orbital_to_atom.assign(n, -1);

    enum class Section { None, Hcore, EriSec, Overlap, AtomMap };
    Section section = Section::None;

    auto check_index = [&](int idx, int limit) { return idx >= 1 && idx <= limit; };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;
        if (first[0] == '#') continue;
        if (first == "HCORE") { section = Section::Hcore; continue; }
        if (first == "ERI") { section = Section::EriSec; continue; }
        if (first == "OVERLAP") { section = Section::Overlap; continue; }
        if (first == "ATOMMAP") { section = Section::AtomMap; continue; }

        if (section == Section::AtomMap) {
            int orb = 0, atom = 0;
            try {
                orb = std::stoi(first);
            } catch (const std::exception&) {
                fail_line(path, lineno, "bad ATOMMAP record");
            }
            if (!(ss >> atom)) fail_line(path, lineno, "bad ATOMMAP record");
            if (!check_index(orb, n) || atom < 1) fail_line(path, lineno, "ATOMMAP index out of range");
            b.orbital_to_atom[orb - 1] = atom - 1;
            continue;
        }

        double value = 0.0;
        int i = 0, j = 0, k = 0, l = 0;
        try {
            value = std::stod(first);
        } catch (const std::exception&) {
            fail_line(path, lineno, "expected a numeric value");
        }
        if (!(ss >> i >> j >> k >> l)) fail_line(path, lineno, "expected 'value i j k l'");

        switch (section) {
            case Section::Hcore:
                if (!check_index(i, n) || !check_index(j, n) || k != 0 || l != 0)
                    fail_line(path, lineno, "bad HCORE indices");
                hcore.set(i - 1, j - 1, value, "HCORE");
                break;
            case Section::Overlap:
                if (!check_index(i, n) || !check_index(j, n) || k != 0 || l != 0)
                    fail_line(path, lineno, "bad OVERLAP indices");
                overlap.set(i - 1, j - 1, value, "OVERLAP");
                break;
            case Section::EriSec: {
                if (!check_index(i, n) || !check_index(j, n) || !check_index(k, n) ||
                    !check_index(l, n))
                    fail_line(path, lineno, "bad ERI indices");
                const int p = i - 1, r = j - 1, q = k - 1, s = l - 1;
                if (eri_seen(p * n + r, q * n + s) &&
                    std::abs(b.eri(p, r, q, s) - value) > kDuplicateTol)
                    throw IntegrityError("inconsistent duplicate ERI entry at " + path + ":" +
                                         std::to_string(lineno));
                b.eri.set_symmetric(p, r, q, s, value);
                // mark all eight images as seen
                for (auto [a0, a1, a2, a3] :
                     {std::array<int, 4>{p, r, q, s}, {r, p, q, s}, {p, r, s, q}, {r, p, s, q},
                      {q, s, p, r}, {s, q, p, r}, {q, s, r, p}, {s, q, r, p}})
                    eri_seen(a0 * n + a1, a2 * n + a3) = 1;
                break;
            }
            case Section::None:
                fail_line(path, lineno, "record before any section header");
            case Section::AtomMap:
                break;  // handled above
        }
    }

    for (int orb = 0; orb < n; ++orb)
        if (b.orbital_to_atom[orb] < 0)
            throw IntegrityError("ATOMMAP does not cover orbital " + std::to_string(orb + 1));

    b.hcore = hcore.values;
    b.overlap = overlap.values;
    b.validate();
    return b;
}

void write_bundle(const IntegralBundle& bundle, const std::string& path) {
    bundle.validate();
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write bundle file: " + path);
    const int n = bundle.n_orb;
    char buf[160];

    std::snprintf(buf, sizeof(buf), "NORB=%d NELEC=%d ENUC=%.17g\n", n, bundle.n_elec,
                  bundle.e_nuc);
    out << buf;

    out << "HCORE\n";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g %d %d 0 0\n", bundle.hcore(i, j), i + 1, j + 1);
            out << buf;
        }

    out << "ERI\n";
    for (int p = 0; p < n; ++p)
        for (int r = 0; r <= p; ++r)
            for (int q = 0; q <= p; ++q)
                for (int s = 0; s <= (q == p ? r : q); ++s) {
                    std::snprintf(buf, sizeof(buf), "%.17g %d %d %d %d\n", bundle.eri(p, r, q, s),
                                  p + 1, r + 1, q + 1, s + 1);
                    out << buf;
                }

    out << "OVERLAP\n";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g %d %d 0 0\n", bundle.overlap(i, j), i + 1,
                          j + 1);
            out << buf;
        }

    out << "ATOMMAP\n";
    for (int orb = 0; orb < n; ++orb)
        out << (orb + 1) << ' ' << (bundle.orbital_to_atom[orb] + 1) << '\n';

    if (!out) throw ParseError("write failed: " + path);
}

}  // namespace qdmet
