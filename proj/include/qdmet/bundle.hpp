#pragma once

#include <string>
#include <vector>

#include "qdmet/types.hpp"

namespace qdmet {

// Everything needed to define the electronic problem of one molecular system:
//   hcore  one-electron integrals t_pr (kinetic + nuclear attraction)
//   eri    two-electron integrals (pr|qs), chemist notation, 8-fold symmetric
//   overlap, nuclear repulsion, and the orbital -> atom assignment
// All values in Hartree atomic units.
struct IntegralBundle {
    int n_orb = 0;
    int n_elec = 0;
    double e_nuc = 0.0;
    MatrixXd overlap;
    MatrixXd hcore;
    Eri eri;
    std::vector<int> orbital_to_atom;

    // throws IntegrityError: overlap not SPD, asymmetric blocks, odd n_elec
    void validate() const;
};

// Plain-text bundle format. Header "NORB=<int> NELEC=<int> ENUC=<float>",
// then the sections HCORE, ERI, OVERLAP, ATOMMAP. HCORE/ERI/OVERLAP records
// are FCIDUMP-style "value i j k l" with 1-based indices (k=l=0 for the
// two-index sections); ATOMMAP records are "orbital atom" (1-based). Only one
// representative of each permutation-symmetry class needs to be listed; the
// reader populates all images and rejects inconsistent duplicates.
IntegralBundle read_bundle(const std::string& path);
void write_bundle(const IntegralBundle& bundle, const std::string& path);

}  // namespace qdmet
