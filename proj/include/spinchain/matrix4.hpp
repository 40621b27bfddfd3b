#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace spinchain {

using cplx = std::complex<double>;

/// Dense 4x4 complex matrix over the two-qubit product basis
/// |00>, |01>, |10>, |11| with qubit 1 as the left tensor factor.
/// Row-major storage, value semantics.
class Matrix4 {
public:
    Matrix4() : a_{} {}

    static Matrix4 identity() {
        Matrix4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * 4 + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * 4 + c]; }

    Matrix4& operator+=(const Matrix4& o) {
        for (std::size_t i = 0; i < 16; ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix4& operator-=(const Matrix4& o) {
        for (std::size_t i = 0; i < 16; ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Matrix4& operator*=(cplx s) {
        for (std::size_t i = 0; i < 16; ++i) a_[i] *= s;
        return *this;
    }

    friend Matrix4 operator+(Matrix4 a, const Matrix4& b) { return a += b; }
    friend Matrix4 operator-(Matrix4 a, const Matrix4& b) { return a -= b; }
    friend Matrix4 operator*(cplx s, Matrix4 a) { return a *= s; }

    friend Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
        Matrix4 r;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    Matrix4 adjoint() const {
        Matrix4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    Matrix4 conjugate() const {
        Matrix4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(i, j));
        return r;
    }

    cplx trace() const { return a_[0] + a_[5] + a_[10] + a_[15]; }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    /// Largest entrywise deviation from the conjugate transpose.
    double hermiticity_defect() const {
        double d = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j)
                d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return d;
    }

    const std::array<cplx, 16>& data() const { return a_; }

private:
    std::array<cplx, 16> a_;
};

inline double max_abs_diff(const Matrix4& a, const Matrix4& b) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

/// Single-qubit operator, row-major 2x2.
using Mat2 = std::array<cplx, 4>;

inline Mat2 pauli_x() { return {cplx(0), cplx(1), cplx(1), cplx(0)}; }
inline Mat2 pauli_y() { return {cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)}; }
inline Mat2 pauli_z() { return {cplx(1), cplx(0), cplx(0), cplx(-1)}; }
inline Mat2 identity2() { return {cplx(1), cplx(0), cplx(0), cplx(1)}; }

/// Kronecker product a (x) b; qubit-1 operator goes first.
inline Matrix4 kron(const Mat2& a, const Mat2& b) {
    Matrix4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a[static_cast<std::size_t>(2 * i + j)] *
                                              b[static_cast<std::size_t>(2 * k + l)];
    return r;
}

using Vector4 = std::array<cplx, 4>;

inline cplx inner(const Vector4& a, const Vector4& b) {
    cplx s{};
    for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double norm2(const Vector4& a) { return std::sqrt(std::real(inner(a, a))); }

inline Vector4 apply(const Matrix4& m, const Vector4& v) {
    Vector4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m(i, j) * v[j];
    return r;
}

/// |v><v| projector.
inline Matrix4 outer(const Vector4& v) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = v[i] * std::conj(v[j]);
    return r;
}

}  // namespace spinchain
