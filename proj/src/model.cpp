#include "spinchain/model.hpp"

#include <stdexcept>

namespace spinchain {

std::pair<double, double> couplings_from_mean_anisotropy(const MeanAnisotropy& m) {
    return {m.mean * (1.0 + m.delta), m.mean * (1.0 - m.delta)};
}

MeanAnisotropy mean_anisotropy(double jy, double jz) {
    MeanAnisotropy m;
    m.mean = 0.5 * (jy + jz);
    m.delta = (jy - jz) / (jy + jz);
    return m;
}

Matrix4 build_hamiltonian_z(const ModelParams& p) {
    if (p.fields.axis != FieldAxis::Z)
        throw std::invalid_argument("build_hamiltonian_z: params carry x-axis fields");

    const auto& j = p.couplings;
    const double d = p.fields.dm;
    const double bu = p.fields.uniform;
    const double bn = p.fields.nonuniform;

    Matrix4 h = cplx(j.jx) * kron(pauli_x(), pauli_x());
    h += cplx(j.jy) * kron(pauli_y(), pauli_y());
    h += cplx(j.jz) * kron(pauli_z(), pauli_z());
    h += cplx(d) * (kron(pauli_x(), pauli_y()) - kron(pauli_y(), pauli_x()));
    h += cplx(bu + bn) * kron(pauli_z(), identity2());
    h += cplx(bu - bn) * kron(identity2(), pauli_z());
    return h;
}

Matrix4 build_hamiltonian_x(const ModelParams& p) {
    if (p.fields.axis != FieldAxis::X)
        throw std::invalid_argument("build_hamiltonian_x: params carry z-axis fields");

    const auto& j = p.couplings;
    const double d = p.fields.dm;
    const double bu = p.fields.uniform;
    const double bn = p.fields.nonuniform;

    const cplx g1(bu + bn, d);
    const cplx g2(bu - bn, d);
    const cplx g3(bu + bn, -d);
    const cplx g4(bu - bn, -d);
    const double sum = j.jx + j.jy;
    const double diff = j.jx - j.jy;

    Matrix4 h;
    h(0, 0) = j.jz;  h(0, 1) = g2;    h(0, 2) = g3;    h(0, 3) = diff;
    h(1, 0) = g4;    h(1, 1) = -j.jz; h(1, 2) = sum;   h(1, 3) = g1;
    h(2, 0) = g1;    h(2, 1) = sum;   h(2, 2) = -j.jz; h(2, 3) = g4;
    h(3, 0) = diff;  h(3, 1) = g3;    h(3, 2) = g2;    h(3, 3) = j.jz;
    return h;
}

Matrix4 build_hamiltonian(const ModelParams& p) {
    return p.fields.axis == FieldAxis::Z ? build_hamiltonian_z(p) : build_hamiltonian_x(p);
}

}  // namespace spinchain
