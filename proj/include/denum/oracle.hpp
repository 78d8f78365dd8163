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

#ifndef DENUM_ORACLE_HPP
#define DENUM_ORACLE_HPP

#include "denum/enumerator.hpp"

namespace denum {

struct OracleOptions {
    EnumerationGuard guard;
    /// Count every ordered pair directly instead of halving the j < k
    /// triangle; output is identical, kept for timing comparisons.
    bool all_ordered_pairs = false;
    int jobs = 1;
};

/// Ground-truth distance enumerator: enumerate the codewords and count
/// every ordered pair by distance.
Enumerator brute_enumerator(const CodeSpec& code, const DistanceKind& kind, const OracleOptions& opts = {});

/// Ground-truth extended distance enumerator over the same pair sweep.
ExtEnum brute_extended_enumerator(const CodeSpec& code, const DistanceKind& kind, const OracleOptions& opts = {});

/// The pair-counting phase alone (enumeration excluded), exposed so the
/// benchmark can time the quadratic part by itself.
IntPoly pair_distance_counts(const std::vector<Word>& words, const DistanceKind& kind, bool all_ordered_pairs = false,
                             int jobs = 1);

}  // namespace denum

#endif
