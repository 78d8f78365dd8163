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

#ifndef DENUM_CHEBYSHEV_HPP
#define DENUM_CHEBYSHEV_HPP

#include "denum/int_poly.hpp"

namespace denum {

/// Chebyshev polynomial of the second kind, U_k, with exact integer
/// coefficients: U_0 = 1, U_1 = 2x, U_k = 2x U_{k-1} - U_{k-2}.
IntPoly cheb_u(unsigned k);

/// U_k by the alternating binomial sum
/// sum_{i=0}^{floor(k/2)} (-1)^i C(k-i, i) (2x)^{k-2i}; agrees with the
/// recurrence coefficient-for-coefficient.
IntPoly cheb_u_explicit(unsigned k);

/// Chebyshev polynomial of the third kind, V_k, defined by the recurrence
/// V_0 = 1, V_1 = 2x - 1, V_k = 2x V_{k-1} - V_{k-2}; matches the product
/// form 2^k prod_{i=1}^{k} (x + cos(2 pi i / (2k+1))).
IntPoly cheb_v(unsigned k);

}  // namespace denum

#endif
