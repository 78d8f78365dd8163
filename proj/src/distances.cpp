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

#include "denum/distances.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace denum {

DistanceKind DistanceKind::lee(int r) {
    if (r < 2) throw std::invalid_argument("Lee distance requires alphabet size >= 2");
    return {DistanceId::lee, r};
}

DistanceKind DistanceKind::parse(const std::string& name, int r) {
    if (name == "hamming") return hamming();
    if (name == "insdel") return insdel();
    if (name == "levenshtein") return levenshtein();
    if (name == "lee") return lee(r == 0 ? 2 : r);
    throw std::invalid_argument("unknown distance \"" + name + "\"");
}

std::string DistanceKind::name() const {
    switch (id) {
        case DistanceId::hamming: return "hamming";
        case DistanceId::insdel: return "insdel";
        case DistanceId::levenshtein: return "levenshtein";
        case DistanceId::lee: return "lee";
    }
    return "?";
}

int hamming_distance(const Word& x, const Word& y) {
    if (x.size() != y.size()) throw std::invalid_argument("Hamming distance requires equal lengths");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
    return d;
}

namespace {

int lcs_length(const Word& x, const Word& y) {
    std::vector<int> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        for (std::size_t j = 1; j <= y.size(); ++j) {
            if (x[i - 1] == y[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[y.size()];
}

}  // namespace

int insdel_distance(const Word& x, const Word& y) {
    return static_cast<int>(x.size() + y.size()) - 2 * lcs_length(x, y);
}

int levenshtein_distance(const Word& x, const Word& y) {
    std::vector<int> prev(y.size() + 1), cur(y.size() + 1);
    std::iota(prev.begin(), prev.end(), 0);
    for (std::size_t i = 1; i <= x.size(); ++i) {
        cur[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= y.size(); ++j) {
            int sub = prev[j - 1] + (x[i - 1] != y[j - 1]);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[y.size()];
}

int lee_distance(const Word& x, const Word& y, int r) {
    if (r < 2) throw std::invalid_argument("Lee distance requires alphabet size >= 2");
    if (x.size() != y.size()) throw std::invalid_argument("Lee distance requires equal lengths");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] >= r || y[i] < 0 || y[i] >= r)
            throw std::invalid_argument("Lee distance symbol outside [0, r)");
        int diff = std::abs(x[i] - y[i]);
        d += std::min(diff, r - diff);
    }
    return d;
}

int distance(const DistanceKind& kind, const Word& x, const Word& y) {
    switch (kind.id) {
        case DistanceId::hamming: return hamming_distance(x, y);
        case DistanceId::insdel: return insdel_distance(x, y);
        case DistanceId::levenshtein: return levenshtein_distance(x, y);
        case DistanceId::lee: return lee_distance(x, y, kind.lee_r);
    }
    throw std::logic_error("unreachable");
}

int max_distance(const DistanceKind& kind, int n) {
    switch (kind.id) {
        case DistanceId::hamming: return n;
        case DistanceId::insdel: return 2 * n;
        case DistanceId::levenshtein: return n;
        case DistanceId::lee: return n * (kind.lee_r / 2);
    }
    throw std::logic_error("unreachable");
}

}  // namespace denum
