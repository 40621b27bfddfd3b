#pragma once

#include <utility>

#include "spinchain/matrix4.hpp"

namespace spinchain {

/// Direction of the DM vector and the external field. The two variants share
/// one parameter type so cross-axis identities can be tested without
/// conversions.
enum class FieldAxis { Z, X };

/// Exchange couplings of the XYZ model. Dimensionless, as is every other
/// model parameter here (k_B = 1).
struct CouplingTriple {
    double jx = 0.0;
    double jy = 0.0;
    double jz = 0.0;
};

/// DM strength plus uniform/nonuniform field magnitudes along `axis`.
struct AxisFields {
    FieldAxis axis = FieldAxis::Z;
    double dm = 0.0;           // D_z or D_x
    double uniform = 0.0;      // B_z or B_x (common mode)
    double nonuniform = 0.0;   // b_z or b_x (differential mode)
};

struct ModelParams {
    CouplingTriple couplings;
    AxisFields fields;
};

/// (J, Delta) parametrization of the YZ-plane couplings:
/// J = (J_y + J_z)/2, Delta = (J_y - J_z)/(J_y + J_z).
struct MeanAnisotropy {
    double mean = 0.0;
    double delta = 0.0;
};

/// Recovers (J_y, J_z) = (J(1+Delta), J(1-Delta)).
std::pair<double, double> couplings_from_mean_anisotropy(const MeanAnisotropy& m);

/// Inverse of the above; requires J_y + J_z != 0 for a meaningful Delta.
MeanAnisotropy mean_anisotropy(double jy, double jz);

/// H = Jx XX + Jy YY + Jz ZZ + D_z (XY - YX) + (B+b) Z1 + (B-b) Z2,
/// assembled from explicit Pauli tensor products.
/// Throws std::invalid_argument unless p.fields.axis == Z.
Matrix4 build_hamiltonian_z(const ModelParams& p);

/// The x-axis variant, written out directly in its closed 4x4 layout with
/// corner entries Jx -+ Jy and off-diagonal blocks +-iD_x + B_x +- b_x.
/// Throws std::invalid_argument unless p.fields.axis == X.
Matrix4 build_hamiltonian_x(const ModelParams& p);

/// Dispatch on p.fields.axis.
Matrix4 build_hamiltonian(const ModelParams& p);

}  // namespace spinchain
