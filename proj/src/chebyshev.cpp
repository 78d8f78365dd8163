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

#include "denum/chebyshev.hpp"

namespace denum {

namespace {

IntPoly cheb_recurrence(unsigned k, const IntPoly& p1) {
    const IntPoly two_x{0, 2};
    IntPoly prev = IntPoly::constant(1);
    if (k == 0) return prev;
    IntPoly cur = p1;
    for (unsigned i = 2; i <= k; ++i) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

IntPoly cheb_u(unsigned k) { return cheb_recurrence(k, IntPoly{0, 2}); }

IntPoly cheb_v(unsigned k) { return cheb_recurrence(k, IntPoly{-1, 2}); }

IntPoly cheb_u_explicit(unsigned k) {
    std::vector<BigInt> c(k + 1, BigInt(0));
    for (unsigned i = 0; i <= k / 2; ++i) {
        BigInt term = binomial(k - i, i) << (k - 2 * i);  // C(k-i, i) * 2^(k-2i)
        if (i % 2 == 1) term = -term;
        c[k - 2 * i] = term;
    }
    return IntPoly(std::move(c));
}

}  // namespace denum
