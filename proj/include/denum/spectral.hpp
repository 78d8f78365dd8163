/*
   Copyright 2026 The denum authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DENUM_SPECTRAL_HPP
#define DENUM_SPECTRAL_HPP

#include <functional>
#include <optional>

#include "denum/enumerator.hpp"
#include "denum/hp_poly.hpp"

namespace denum {

/// Whole-space enumerator callback: given the root values substituted for
/// the u- and v-variables (one per congruence) it returns the value of the
/// extended enumerator of the full space [r]^n as a polynomial in z.
/// Returned coefficients must be integer combinations of powers of the
/// roots, so conjugating every root conjugates the value.
using WholeSpaceEnumerator =
    std::function<HPPoly(const std::vector<BigComplex>& uroots, const std::vector<BigComplex>& vroots, Precision)>;

/// Character-sum membership indicator: evaluates, at precision p,
/// prod_i (1/m_i) sum_k e(-a_i k / m_i) e(k / m_i)^{rho_i(x)},
/// which is 1 when x lies in the code and 0 otherwise (up to 2^(-p/2)).
BigComplex membership_charsum(const Word& x, const SCSpec& spec, Precision p);

/// Extended Hamming enumerator of the full binary space for a weight
/// vector h, with unit-modulus values substituted for u and v:
/// prod_i (1 + u^{h_i} z + v^{h_i} z + (uv)^{h_i}).
HPPoly blc_whole_space(int n, const std::vector<long long>& h, const BigComplex& uroot, const BigComplex& vroot,
                       Precision p);

/// Iteration order over the (j, k) summation grid. Half orders pair each
/// cell with its conjugate mirror and add twice the real part; all orders
/// produce the same rounded output (covered by tests).
enum class GridOrder { forward_half, reverse_half, full };

struct SpectralOptions {
    std::optional<Precision> precision;  // default: 2n + 64 bits
    double grid_guard_log2 = 24.0;       // refuse grids beyond 2^24 cells
    GridOrder order = GridOrder::forward_half;
    int max_retries = 3;  // precision doublings on rounding failure
};

/// Root-of-unity identity for the distance enumerator of an SC code: sums
/// ws over the full residue grid with character weights, then rounds the
/// (provably integral) result. `kind` only labels the output.
Enumerator spectral_enumerator(const SCSpec& spec, const WholeSpaceEnumerator& ws, const SpectralOptions& opts = {},
                               const DistanceKind& kind = DistanceKind::hamming());

/// Closed-form Hamming distance enumerator for a BLC code: the identity
/// above specialized with the binary whole-space product.
Enumerator blc_hamming_enumerator(const BLCSpec& spec, const SpectralOptions& opts = {});

}  // namespace denum

#endif
