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

#include "denum/precision.hpp"

namespace denum {

BigComplex BigComplex::unit_pow(long long e) const {
    if (e < 0) return conj().unit_pow(-e);
    Precision p(static_cast<unsigned>(std::max<mpfr_prec_t>(64, re.precision_bits())));
    BigComplex acc = BigComplex::one(p);
    BigComplex base = *this;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1ull) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

RootTable::RootTable(unsigned m, Precision p) : m_(m), prec_(p) {
    if (m == 0) throw std::invalid_argument("root table modulus must be positive");
    roots_.reserve(m);
    roots_.push_back({BigFloat(1, p), BigFloat(0, p)});
    if (m == 1) return;

    // Guard bits keep the power-recurrence error at ulp scale after the
    // final rounding to p.
    Precision guarded(p.bits() + 64);
    BigFloat angle = BigFloat::pi(guarded);
    angle *= 2;
    angle /= static_cast<long>(m);
    auto [s, c] = BigFloat::sin_cos(angle);
    BigComplex base{std::move(c), std::move(s)};

    unsigned half = m / 2;
    std::vector<BigComplex> lower;
    lower.reserve(half + 1);
    BigComplex cur = base;
    for (unsigned k = 1; k <= half; ++k) {
        if (k > 1) cur = cur * base;
        lower.push_back({cur.re.rounded_to(p), cur.im.rounded_to(p)});
    }
    // e(1/2) = -1 exactly; pinning it keeps the table self-conjugate at m/2.
    if (m % 2 == 0) lower[half - 1] = {BigFloat(-1, p), BigFloat(0, p)};

    for (unsigned k = 1; k <= half; ++k) roots_.push_back(lower[k - 1]);
    for (unsigned k = half + 1; k < m; ++k) roots_.push_back(roots_[m - k].conj());
}

}  // namespace denum
