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

#include "denum/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "denum/parallel.hpp"

namespace denum {

BigInt Enumerator::total_pairs() const {
    BigInt total = 0;
    for (const auto& c : poly.coeffs()) total += c;
    return total;
}

std::vector<std::string> enumerator_violations(const Enumerator& e, const BigInt& cardinality) {
    std::vector<std::string> out;
    if (e.cardinality() != cardinality)
        out.push_back("D_0 = " + e.cardinality().str() + " differs from |C| = " + cardinality.str());
    if (e.total_pairs() != cardinality * cardinality)
        out.push_back("sum of D_i = " + e.total_pairs().str() + " differs from |C|^2");
    const auto& c = e.poly.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0) out.push_back("D_" + std::to_string(i) + " negative");
        if (i >= 1 && c[i] % 2 != 0) out.push_back("D_" + std::to_string(i) + " odd");
    }
    return out;
}

std::vector<BigRational> average_enumerator(const Enumerator& e) {
    if (e.poly.is_zero() || e.cardinality() == 0) throw std::invalid_argument("empty code has no average enumerator");
    std::vector<BigRational> out;
    out.reserve(e.poly.coeffs().size());
    for (const auto& c : e.poly.coeffs()) out.emplace_back(BigRational(c, e.cardinality()));
    return out;
}

BigInt ExtEnum::total_mass() const {
    BigInt total = 0;
    for (const auto& [key, count] : counts) total += count;
    return total;
}

IntPoly ExtEnum::specialize_ones() const {
    std::vector<BigInt> c;
    for (const auto& [key, count] : counts) {
        if (c.size() <= static_cast<std::size_t>(key.d)) c.resize(static_cast<std::size_t>(key.d) + 1, BigInt(0));
        c[static_cast<std::size_t>(key.d)] += count;
    }
    return IntPoly(std::move(c));
}

namespace {

/// Packed binary codewords for the popcount fast path (bit i-1 holds x_i).
std::vector<std::uint64_t> pack_binary(const std::vector<Word>& words) {
    std::vector<std::uint64_t> packed;
    packed.reserve(words.size());
    for (const auto& w : words) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != 0) bits |= 1ull << i;
        packed.push_back(bits);
    }
    return packed;
}

std::vector<std::uint64_t> merge_counts(std::vector<std::vector<std::uint64_t>>& partials) {
    std::vector<std::uint64_t> total(partials.empty() ? 0 : partials[0].size(), 0);
    for (const auto& part : partials)
        for (std::size_t i = 0; i < part.size(); ++i) total[i] += part[i];
    return total;
}

}  // namespace

IntPoly pair_distance_counts(const std::vector<Word>& words, const DistanceKind& kind, bool all_ordered_pairs,
                             int jobs) {
    const std::size_t u = words.size();
    const int n = words.empty() ? 0 : static_cast<int>(words[0].size());
    const std::size_t buckets = static_cast<std::size_t>(max_distance(kind, n)) + 1;
    const bool binary_hamming = kind.id == DistanceId::hamming && n <= 64 && [&] {
        for (const auto& w : words)
            for (Sym s : w)
                if (s < 0 || s > 1) return false;
        return true;
    }();
    std::vector<std::uint64_t> packed;
    if (binary_hamming) packed = pack_binary(words);

    int workers = jobs < 2 ? 1 : jobs;
    std::vector<std::vector<std::uint64_t>> partials(static_cast<std::size_t>(workers),
                                                     std::vector<std::uint64_t>(buckets, 0));
    parallel_for(u, workers, [&](std::size_t begin, std::size_t end, int w) {
        auto& counts = partials[static_cast<std::size_t>(w)];
        for (std::size_t j = begin; j < end; ++j) {
            if (all_ordered_pairs) {
                for (std::size_t k = 0; k < u; ++k) {
                    int d = binary_hamming ? std::popcount(packed[j] ^ packed[k]) : distance(kind, words[j], words[k]);
                    counts[static_cast<std::size_t>(d)] += 1;
                }
            } else {
                // Ordered pairs come in swaps; count the upper triangle
                // twice and the diagonal once.
                counts[0] += 1;
                for (std::size_t k = j + 1; k < u; ++k) {
                    int d = binary_hamming ? std::popcount(packed[j] ^ packed[k]) : distance(kind, words[j], words[k]);
                    counts[static_cast<std::size_t>(d)] += 2;
                }
            }
        }
    });

    std::vector<std::uint64_t> total = merge_counts(partials);
    std::vector<BigInt> coeffs(total.size());
    for (std::size_t i = 0; i < total.size(); ++i) coeffs[i] = total[i];
    return IntPoly(std::move(coeffs));
}

Enumerator brute_enumerator(const CodeSpec& code, const DistanceKind& kind, const OracleOptions& opts) {
    SCSpec sc = to_sc(code);
    if (kind.id == DistanceId::lee && kind.lee_r != sc.r)
        throw std::invalid_argument("Lee distance alphabet differs from the code alphabet");
    std::vector<Word> words = enumerate_codewords(sc, opts.guard);
    IntPoly poly = pair_distance_counts(words, kind, opts.all_ordered_pairs, opts.jobs);
    return Enumerator{std::move(poly), code, kind, "brute"};
}

ExtEnum brute_extended_enumerator(const CodeSpec& code, const DistanceKind& kind, const OracleOptions& opts) {
    SCSpec sc = to_sc(code);
    std::vector<Word> words = enumerate_codewords(sc, opts.guard);

    // rho-value vectors per codeword, exact.
    std::vector<std::vector<BigInt>> rho_values;
    rho_values.reserve(words.size());
    for (const auto& w : words) {
        std::vector<BigInt> vals;
        vals.reserve(sc.congruences());
        for (const auto& rho : sc.rho) vals.push_back(rho(w));
        rho_values.push_back(std::move(vals));
    }

    ExtEnum ext;
    ext.code = code;
    ext.distance = kind;
    for (std::size_t j = 0; j < words.size(); ++j) {
        ext.counts[ExtKey{0, rho_values[j], rho_values[j]}] += 1;
        for (std::size_t k = j + 1; k < words.size(); ++k) {
            int d = distance(kind, words[j], words[k]);
            ext.counts[ExtKey{d, rho_values[j], rho_values[k]}] += 1;
            ext.counts[ExtKey{d, rho_values[k], rho_values[j]}] += 1;
        }
    }
    return ext;
}

}  // namespace denum
