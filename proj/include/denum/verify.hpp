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

#ifndef DENUM_VERIFY_HPP
#define DENUM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "denum/enumerator.hpp"

namespace denum {

/// Outcome of one cross-verification suite.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first mismatch, or a short summary on success
    double seconds = 0;
};

struct VerifyOptions {
    int jobs = 1;
    std::uint32_t seed = 20260810;
    EnumerationGuard guard;
};

/// "coefficient i: a vs b" for the first differing coefficient.
std::optional<std::string> first_coeff_mismatch(const IntPoly& a, const IntPoly& b);

/// Fast pipeline against the brute-force oracle for every residue a of
/// every length n <= n_max (exact equality; also checks the structural
/// enumerator invariants and D_1 = 0).
CheckResult verify_fast_vs_brute(int n_max, const VerifyOptions& opts = {});

/// Spectral closed form against the brute-force oracle on a seeded random
/// BLC corpus (n <= 12, m <= 12, weights in [-5, 5]).
CheckResult verify_spectral_vs_brute(int instances, const VerifyOptions& opts = {});

/// B-table property suite for every modulus up to m_max: optimized =
/// naive = entrywise direct product, the index symmetries, coprime
/// scaling, and first-pass rounding residuals within 2^(-p/2).
CheckResult verify_btable_properties(unsigned m_max, const VerifyOptions& opts = {});

}  // namespace denum

#endif
