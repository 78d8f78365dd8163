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

#ifndef DENUM_DISTANCES_HPP
#define DENUM_DISTANCES_HPP

#include <string>

#include "denum/codes.hpp"

namespace denum {

enum class DistanceId { hamming, insdel, levenshtein, lee };

/// Distance selector; Lee additionally carries the alphabet size.
struct DistanceKind {
    DistanceId id = DistanceId::hamming;
    int lee_r = 0;

    static DistanceKind hamming() { return {DistanceId::hamming, 0}; }
    static DistanceKind insdel() { return {DistanceId::insdel, 0}; }
    static DistanceKind levenshtein() { return {DistanceId::levenshtein, 0}; }
    static DistanceKind lee(int r);

    /// Parse a CLI name: "hamming" | "insdel" | "levenshtein" | "lee".
    /// Lee picks up its alphabet size from the code spec at use sites.
    static DistanceKind parse(const std::string& name, int r = 0);
    std::string name() const;

    friend bool operator==(const DistanceKind& a, const DistanceKind& b) noexcept {
        return a.id == b.id && (a.id != DistanceId::lee || a.lee_r == b.lee_r);
    }
};

int hamming_distance(const Word& x, const Word& y);
/// |x| + |y| - 2 LCS(x, y).
int insdel_distance(const Word& x, const Word& y);
int levenshtein_distance(const Word& x, const Word& y);
int lee_distance(const Word& x, const Word& y, int r);

int distance(const DistanceKind& kind, const Word& x, const Word& y);

/// Largest value distance() can return on [r]^n x [r]^n.
int max_distance(const DistanceKind& kind, int n);

}  // namespace denum

#endif
