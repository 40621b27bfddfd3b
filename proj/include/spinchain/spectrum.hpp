#pragma once

#include <array>

#include "spinchain/matrix4.hpp"
#include "spinchain/model.hpp"

namespace spinchain {

/// Full orthonormal eigendecomposition of a 4x4 Hermitian matrix.
struct EigenSystem {
    std::array<double, 4> eigenvalues;   // ascending
    Matrix4 eigenvectors;                // column i pairs with eigenvalues[i]
};

/// Closed-form spectral data shared by both axis variants. Either model
/// block-diagonalizes into two 2x2 sectors; the four levels in the paper's
/// family order are
///   E1 = exchange + w1,  E2 = exchange - w1,
///   E3 = -exchange + w2, E4 = -exchange - w2.
/// w1 pairs with the uniform field, w2 with the DM/nonuniform-field pair.
/// g1 and g2 are the corresponding sector off-diagonal magnitudes.
struct SectorData {
    double exchange;   // J_z (axis Z) or J_x (axis X)
    double w1, w2;
    double g1, g2;     // g1 = |coupling difference|, g2 = hypot(coupling sum, 2 dm)
};

SectorData sector_data(const ModelParams& p);

/// Family-ordered eigenvalues {E1, E2, E3, E4} from sector data.
std::array<double, 4> family_energies(const SectorData& s);

/// Closed-form eigensystem of the z-axis Hamiltonian. Degenerate sectors
/// fall back to a fixed in-sector basis so the result is always an
/// orthonormal basis (eigenvector phases are fixed only up to a unit factor).
EigenSystem analytic_spectrum_z(const ModelParams& p);

/// Closed-form eigensystem of the x-axis Hamiltonian (Bell-sector split).
EigenSystem analytic_spectrum_x(const ModelParams& p);

/// Dispatch on p.fields.axis.
EigenSystem analytic_spectrum(const ModelParams& p);

/// Numeric diagonalization by cyclic complex Jacobi rotations; the
/// brute-force cross-check for the closed forms. Deterministic for a fixed
/// input. Throws std::invalid_argument if the input is not Hermitian
/// within 1e-12.
EigenSystem hermitian_eigensolve(const Matrix4& h);

}  // namespace spinchain
