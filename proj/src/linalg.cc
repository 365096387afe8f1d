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

#include "unsharp/linalg.h"

#include <cmath>

namespace unsharp {

Mat2 exp_pauli(double hx, double hy, double hz) {
    double n = std::sqrt(hx * hx + hy * hy + hz * hz);
    if (n == 0.0) {
        return Mat2::identity();
    }
    double c = std::cos(n);
    double s = std::sin(n) / n;
    // cos|h| I - i sin|h| (h.sigma)/|h|
    return Mat2{{
        Complex{c, -s * hz},
        Complex{-s * hy, -s * hx},
        Complex{s * hy, -s * hx},
        Complex{c, s * hz},
    }};
}

Mat2 equatorial_rotation(double angle, double phase) {
    double h = angle / 2;
    return exp_pauli(h * std::cos(phase), h * std::sin(phase), 0.0);
}

}  // namespace unsharp
