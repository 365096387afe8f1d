// Copyright 2026 The Unsharp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNSHARP_LINALG_H
#define UNSHARP_LINALG_H

#include <array>
#include <complex>
#include <cstddef>

namespace unsharp {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Two-component complex vector in the {|g>, |e>} basis.
using Vec2 = std::array<Complex, 2>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
    std::array<Complex, 4> a{};

    Complex &operator()(size_t r, size_t c) {
        return a[2 * r + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return a[2 * r + c];
    }

    static Mat2 identity() {
        return Mat2{{1.0, 0.0, 0.0, 1.0}};
    }
    static Mat2 zero() {
        return Mat2{};
    }
    static Mat2 pauli_x() {
        return Mat2{{0.0, 1.0, 1.0, 0.0}};
    }
    static Mat2 pauli_y() {
        return Mat2{{0.0, -kI, kI, 0.0}};
    }
    static Mat2 pauli_z() {
        return Mat2{{1.0, 0.0, 0.0, -1.0}};
    }
    static Mat2 diag(Complex d0, Complex d1) {
        return Mat2{{d0, 0.0, 0.0, d1}};
    }

    Mat2 adjoint() const {
        return Mat2{{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}};
    }
    Complex trace() const {
        return a[0] + a[3];
    }
};

inline Mat2 operator+(const Mat2 &x, const Mat2 &y) {
    Mat2 r;
    for (size_t k = 0; k < 4; k++) {
        r.a[k] = x.a[k] + y.a[k];
    }
    return r;
}

inline Mat2 operator-(const Mat2 &x, const Mat2 &y) {
    Mat2 r;
    for (size_t k = 0; k < 4; k++) {
        r.a[k] = x.a[k] - y.a[k];
    }
    return r;
}

inline Mat2 operator*(Complex s, const Mat2 &x) {
    Mat2 r;
    for (size_t k = 0; k < 4; k++) {
        r.a[k] = s * x.a[k];
    }
    return r;
}

inline Mat2 operator*(const Mat2 &x, const Mat2 &y) {
    Mat2 r;
    r(0, 0) = x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0);
    r(0, 1) = x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1);
    r(1, 0) = x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0);
    r(1, 1) = x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1);
    return r;
}

inline Vec2 operator*(const Mat2 &m, const Vec2 &v) {
    return Vec2{m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

/// Largest elementwise modulus of x - y.
inline double max_abs_diff(const Mat2 &x, const Mat2 &y) {
    double m = 0.0;
    for (size_t k = 0; k < 4; k++) {
        m = std::max(m, std::abs(x.a[k] - y.a[k]));
    }
    return m;
}

inline Complex inner(const Vec2 &a, const Vec2 &b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

inline double norm_sq(const Vec2 &v) {
    return std::norm(v[0]) + std::norm(v[1]);
}

/// Exact exp(-i * (h . sigma)) for a real 3-vector h, i.e. the propagator of
/// H = h . sigma over unit time.
Mat2 exp_pauli(double hx, double hy, double hz);

/// Rotation of the Bloch vector by `angle` about the equatorial axis
/// (cos(phase), sin(phase), 0): exp(-i angle/2 (cos(phase) X + sin(phase) Y)).
Mat2 equatorial_rotation(double angle, double phase);

}  // namespace unsharp

#endif
