// Copyright 2026 The Topogate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Unitary gate algebra: named gates, composition, global-phase-insensitive
 * comparison and ZYZ Euler decomposition.
 *
 * Rotation convention used throughout the project:
 *     R_a(theta) = exp(i * theta * sigma_a) = cos(theta) I + i sin(theta) sigma_a
 * Note the absence of the common factor 1/2 in the exponent and the positive
 * sign; R_x(pi/2) = i sigma_x.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "topogate/errors.hpp"

namespace topogate::gates {

using Complex = std::complex<double>;

inline constexpr double kUnitarityTol = 1e-12;

/// Dense complex square matrix with the unitarity invariant
/// U U^dagger = I enforced entrywise to 1e-12 at construction.
class Unitary {
  public:
    Unitary(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), entries_(std::move(entries)) {
        if (dim_ == 0 || (dim_ & (dim_ - 1)) != 0) {
            throw std::invalid_argument("Unitary: dim must be a power of two");
        }
        if (entries_.size() != dim_ * dim_) {
            throw std::invalid_argument("Unitary: entry count does not match dim");
        }
        check_unitarity();
    }

    static Unitary identity(std::size_t dim) {
        std::vector<Complex> e(dim * dim, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < dim; ++i) {
            e[i * dim + i] = 1.0;
        }
        return Unitary(unchecked_t{}, dim, std::move(e));
    }

    std::size_t dim() const { return dim_; }

    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    Unitary adjoint() const {
        std::vector<Complex> e(dim_ * dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                e[j * dim_ + i] = std::conj(entries_[i * dim_ + j]);
            }
        }
        return Unitary(unchecked_t{}, dim_, std::move(e));
    }

    friend Unitary operator*(const Unitary& a, const Unitary& b) {
        if (a.dim_ != b.dim_) {
            throw DimensionMismatch("Unitary product: dimensions " +
                                    std::to_string(a.dim_) + " and " +
                                    std::to_string(b.dim_));
        }
        const std::size_t d = a.dim_;
        std::vector<Complex> e(d * d, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                const Complex aik = a.entries_[i * d + k];
                if (aik == 0.0) {
                    continue;
                }
                for (std::size_t j = 0; j < d; ++j) {
                    e[i * d + j] += aik * b.entries_[k * d + j];
                }
            }
        }
        // Products of unitaries stay unitary; skip the O(d^3) recheck.
        return Unitary(unchecked_t{}, d, std::move(e));
    }

    friend Unitary operator*(Complex phase, const Unitary& u) {
        if (std::abs(std::abs(phase) - 1.0) > kUnitarityTol) {
            throw std::invalid_argument("Unitary scaling needs a unit phase");
        }
        std::vector<Complex> e = u.entries_;
        for (auto& x : e) {
            x *= phase;
        }
        return Unitary(unchecked_t{}, u.dim_, std::move(e));
    }

  private:
    struct unchecked_t {};
    Unitary(unchecked_t, std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), entries_(std::move(entries)) {}

    void check_unitarity() const {
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                Complex acc(0.0, 0.0);
                for (std::size_t k = 0; k < dim_; ++k) {
                    acc += entries_[i * dim_ + k] * std::conj(entries_[j * dim_ + k]);
                }
                const Complex expect = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
                if (std::abs(acc - expect) > kUnitarityTol) {
                    throw std::invalid_argument(
                        "Unitary: U U^dagger deviates from identity by " +
                        std::to_string(std::abs(acc - expect)) + " at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
                }
            }
        }
    }

    friend Unitary kron(const Unitary&, const Unitary&);

    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// P(phi) = diag(1, e^{i phi}).
inline Unitary phase_gate(double phi) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phase_gate: phi must be finite");
    }
    return Unitary(2, {1.0, 0.0, 0.0, std::polar(1.0, phi)});
}

/// H = 2^{-1/2} [[1, 1], [1, -1]].
inline Unitary hadamard() {
    const double s = std::sqrt(0.5);
    return Unitary(2, {s, s, s, -s});
}

/// C(phi) = diag(1, 1, 1, e^{i phi}).
inline Unitary cphase_gate(double phi) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("cphase_gate: phi must be finite");
    }
    std::vector<Complex> e(16, Complex(0.0, 0.0));
    e[0] = e[5] = e[10] = 1.0;
    e[15] = std::polar(1.0, phi);
    return Unitary(4, std::move(e));
}

/// R_x(theta) = exp(i theta sigma_x).
inline Unitary rx_gate(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rx_gate: theta must be finite");
    }
    const double c = std::cos(theta), s = std::sin(theta);
    return Unitary(2, {Complex(c, 0), Complex(0, s), Complex(0, s), Complex(c, 0)});
}

/// R_y(theta) = exp(i theta sigma_y).
inline Unitary ry_gate(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("ry_gate: theta must be finite");
    }
    const double c = std::cos(theta), s = std::sin(theta);
    return Unitary(2, {Complex(c, 0), Complex(s, 0), Complex(-s, 0), Complex(c, 0)});
}

/// R_z(theta) = exp(i theta sigma_z).
inline Unitary rz_gate(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rz_gate: theta must be finite");
    }
    return Unitary(2, {std::polar(1.0, theta), 0.0, 0.0, std::polar(1.0, -theta)});
}

/// Matrix product of the listed gates with the FIRST entry applied first,
/// i.e. compose({A, B, C}) = C * B * A.
inline Unitary compose(std::span<const Unitary> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("compose: empty gate list");
    }
    Unitary result = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        result = factors[i] * result;
    }
    return result;
}

inline Unitary compose(std::initializer_list<Unitary> factors) {
    return compose(std::span<const Unitary>(factors.begin(), factors.size()));
}

/// Kronecker product; the left factor owns the high-order index bits.
inline Unitary kron(const Unitary& a, const Unitary& b) {
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    std::vector<Complex> e(d * d);
    for (std::size_t ia = 0; ia < da; ++ia) {
        for (std::size_t ja = 0; ja < da; ++ja) {
            for (std::size_t ib = 0; ib < db; ++ib) {
                for (std::size_t jb = 0; jb < db; ++jb) {
                    e[(ia * db + ib) * d + (ja * db + jb)] = a(ia, ja) * b(ib, jb);
                }
            }
        }
    }
    return Unitary(Unitary::unchecked_t{}, d, std::move(e));
}

/// Largest entrywise deviation between two equal-sized matrices.
inline double max_abs_diff(const Unitary& a, const Unitary& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("max_abs_diff: dimensions differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

/**
 * Largest entrywise deviation between U and c V, where the unit phase c is
 * read off at V's largest-magnitude entry. This is the residual of the best
 * global-phase alignment, so it vanishes exactly when U and V agree up to a
 * phase.
 */
inline double phase_distance(const Unitary& u, const Unitary& v) {
    if (u.dim() != v.dim()) {
        throw DimensionMismatch("phase_distance: dimensions differ");
    }
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t i = 0; i < v.entries().size(); ++i) {
        const double m = std::abs(v.entries()[i]);
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    const Complex num = u.entries()[best];
    if (std::abs(num) == 0.0) {
        // No unit phase can match a zero against V's largest entry.
        return std::numeric_limits<double>::infinity();
    }
    Complex c = num / v.entries()[best];
    c /= std::abs(c);
    double worst = 0.0;
    for (std::size_t i = 0; i < u.entries().size(); ++i) {
        worst = std::max(worst, std::abs(u.entries()[i] - c * v.entries()[i]));
    }
    return worst;
}

/// True iff U = c V for some unit complex c, entrywise within tol.
inline bool equal_up_to_phase(const Unitary& u, const Unitary& v, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("equal_up_to_phase: tol must be positive");
    }
    return phase_distance(u, v) <= tol;
}

/// Angles of U = e^{i delta} R_z(alpha) R_y(theta) R_z(beta).
struct EulerZYZ {
    double alpha = 0.0;
    double theta = 0.0;
    double beta = 0.0;
    double delta = 0.0;
};

/// e^{i delta} R_z(alpha) R_y(theta) R_z(beta) as a matrix.
inline Unitary euler_reconstruct(const EulerZYZ& e) {
    return std::polar(1.0, e.delta) *
           (rz_gate(e.alpha) * ry_gate(e.theta) * rz_gate(e.beta));
}

namespace detail {

inline double wrap_pi(double angle) {
    // Into (-pi, pi].
    angle = std::remainder(angle, 2.0 * std::numbers::pi);
    if (angle <= -std::numbers::pi) {
        angle += 2.0 * std::numbers::pi;
    }
    return angle;
}

} // namespace detail

/**
 * ZYZ Euler decomposition of a 2x2 unitary.
 *
 * Canonical branch: theta in [0, pi/2]; when theta is 0 or pi/2 only one of
 * alpha+beta / alpha-beta is determined and the tie is broken with beta = 0;
 * the residual (delta, alpha) -> (delta - pi, alpha + pi) freedom is fixed by
 * requiring alpha in (-pi/2, pi/2]; delta is reported in (-pi, pi].
 * euler_reconstruct of the result reproduces the input to better than 1e-10.
 */
inline EulerZYZ euler_zyz(const Unitary& u) {
    if (u.dim() != 2) {
        throw DimensionMismatch("euler_zyz: need a 2x2 unitary");
    }
    const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    double delta = 0.5 * std::arg(det); // in (-pi/2, pi/2]
    const Complex inv_phase = std::polar(1.0, -delta);
    // V = e^{-i delta} U is special unitary: V = [[a, b], [-conj(b), conj(a)]]
    // with a = cos(theta) e^{i(alpha+beta)}, b = sin(theta) e^{i(alpha-beta)}.
    const Complex a = inv_phase * u(0, 0);
    const Complex b = inv_phase * u(0, 1);
    EulerZYZ result;
    result.theta = std::atan2(std::abs(b), std::abs(a));
    constexpr double kDegenerate = 1e-15;
    if (std::abs(b) <= kDegenerate) {
        result.alpha = std::arg(a);
        result.beta = 0.0;
    } else if (std::abs(a) <= kDegenerate) {
        result.alpha = std::arg(b);
        result.beta = 0.0;
    } else {
        const double sum = std::arg(a);
        const double diff = std::arg(b);
        result.alpha = 0.5 * (sum + diff);
        result.beta = 0.5 * (sum - diff);
    }
    if (result.alpha > 0.5 * std::numbers::pi) {
        result.alpha -= std::numbers::pi;
        delta += std::numbers::pi;
    } else if (result.alpha <= -0.5 * std::numbers::pi) {
        result.alpha += std::numbers::pi;
        delta -= std::numbers::pi;
    }
    result.delta = detail::wrap_pi(delta);
    return result;
}

} // namespace topogate::gates
