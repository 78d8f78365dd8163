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

#include <map>
#include <random>

#include "doctest.h"

#include "denum/oracle.hpp"

using namespace denum;

TEST_SUITE_BEGIN("oracle");

namespace {

BLCSpec blc(int n, long long m, long long a, std::vector<long long> h) {
    BLCSpec spec;
    spec.n = n;
    spec.m = m;
    spec.a = a;
    spec.h = std::move(h);
    return spec;
}

ExtKey key(int d, BigInt ue, BigInt ve) { return ExtKey{d, {std::move(ue)}, {std::move(ve)}}; }

}  // namespace

TEST_CASE("distance enumerator of VT_0(5)") {
    Enumerator e = brute_enumerator(VTSpec{5, 0}, DistanceKind::hamming());
    CHECK(e.poly == IntPoly{6, 0, 8, 16, 6});
    CHECK(e.method == "brute");
    CHECK(e.cardinality() == 6);
    CHECK(e.total_pairs() == 36);
    CHECK(enumerator_violations(e, BigInt(6)).empty());
}

TEST_CASE("singleton and parity codes") {
    Enumerator singleton = brute_enumerator(blc(3, 7, 0, {1, 2, 3}), DistanceKind::hamming());
    CHECK(singleton.poly == IntPoly{1});

    Enumerator parity = brute_enumerator(blc(3, 2, 0, {1, 1, 1}), DistanceKind::hamming());
    CHECK(parity.poly == IntPoly{4, 0, 12});

    Enumerator lev = brute_enumerator(blc(3, 7, 0, {1, 2, 3}), DistanceKind::levenshtein());
    CHECK(lev.poly == IntPoly{1});
}

TEST_CASE("the literal double loop matches the halved pair sweep") {
    OracleOptions literal;
    literal.all_ordered_pairs = true;
    for (int n = 1; n <= 8; ++n) {
        for (long long a : {0ll, 1ll}) {
            if (a > n) continue;
            Enumerator fastpath = brute_enumerator(VTSpec{n, a}, DistanceKind::hamming());
            Enumerator paper = brute_enumerator(VTSpec{n, a}, DistanceKind::hamming(), literal);
            CHECK(fastpath.poly == paper.poly);
        }
    }
}

TEST_CASE("pair sweep is identical under parallel reduction") {
    OracleOptions threaded;
    threaded.jobs = 4;
    Enumerator seq = brute_enumerator(VTSpec{11, 3}, DistanceKind::hamming());
    Enumerator par = brute_enumerator(VTSpec{11, 3}, DistanceKind::hamming(), threaded);
    CHECK(seq.poly == par.poly);
}

TEST_CASE("packed-word fast path agrees with the generic distance loop") {
    // Insdel forces the generic path on the same binary code; Hamming takes
    // the popcount path. Compare Hamming against a spelled-out count.
    std::mt19937 rng(67);
    for (int it = 0; it < 10; ++it) {
        int n = std::uniform_int_distribution<int>(1, 9)(rng);
        long long m = std::uniform_int_distribution<long long>(1, 9)(rng);
        long long a = std::uniform_int_distribution<long long>(0, m - 1)(rng);
        std::vector<long long> h(static_cast<std::size_t>(n));
        for (auto& v : h) v = std::uniform_int_distribution<long long>(-4, 4)(rng);
        auto spec = blc(n, m, a, h);

        auto words = enumerate_codewords(spec.to_sc());
        std::map<int, BigInt> expect;
        for (const auto& x : words)
            for (const auto& y : words) expect[hamming_distance(x, y)] += 1;
        Enumerator e = brute_enumerator(spec, DistanceKind::hamming());
        for (const auto& [d, count] : expect) CHECK(e.poly.coeff(static_cast<std::size_t>(d)) == count);
    }
}

TEST_CASE("extended enumerator of VT_0(5) matches the worked expansion") {
    ExtEnum ext = brute_extended_enumerator(VTSpec{5, 0}, DistanceKind::hamming());

    // Frozen from the expansion of
    //   (1 + u^6 v^6)(1 + 2 u^6 v^6)
    //   + 2 (u^6 + v^6)(1 + u^6 v^6) z^2
    //   + (1 + u^6)(1 + v^6)(u^6 + v^6 + 2 u^6 v^6) z^3
    //   + (u^6 + v^6)(u^6 + v^6 + u^6 v^6) z^4.
    std::map<ExtKey, BigInt> expected;
    expected[key(0, 0, 0)] = 1;
    expected[key(0, 6, 6)] = 3;
    expected[key(0, 12, 12)] = 2;
    expected[key(2, 6, 0)] = 2;
    expected[key(2, 0, 6)] = 2;
    expected[key(2, 12, 6)] = 2;
    expected[key(2, 6, 12)] = 2;
    expected[key(3, 6, 0)] = 1;
    expected[key(3, 0, 6)] = 1;
    expected[key(3, 12, 0)] = 1;
    expected[key(3, 0, 12)] = 1;
    expected[key(3, 6, 6)] = 4;
    expected[key(3, 12, 6)] = 3;
    expected[key(3, 6, 12)] = 3;
    expected[key(3, 12, 12)] = 2;
    expected[key(4, 12, 0)] = 1;
    expected[key(4, 0, 12)] = 1;
    expected[key(4, 6, 6)] = 2;
    expected[key(4, 12, 6)] = 1;
    expected[key(4, 6, 12)] = 1;

    CHECK(ext.counts == expected);
    CHECK(ext.total_mass() == 36);
    CHECK(ext.specialize_ones() == IntPoly{6, 0, 8, 16, 6});
}

TEST_CASE("extended enumerator of a singleton code") {
    SCSpec sc = blc(4, 11, 10, {1, 2, 3, 4}).to_sc();
    // Only 1+2+3+4 = 10: codeword 1111.
    ExtEnum ext = brute_extended_enumerator(CodeSpec(sc), DistanceKind::hamming());
    REQUIRE(ext.counts.size() == 1);
    CHECK(ext.counts.begin()->first == key(0, 10, 10));
    CHECK(ext.counts.begin()->second == 1);
}

TEST_CASE("specializing u = v = 1 reproduces the plain enumerator") {
    std::mt19937 rng(71);
    for (int it = 0; it < 12; ++it) {
        int n = std::uniform_int_distribution<int>(1, 10)(rng);
        long long m = std::uniform_int_distribution<long long>(1, 8)(rng);
        long long a = std::uniform_int_distribution<long long>(0, m - 1)(rng);
        std::vector<long long> h(static_cast<std::size_t>(n));
        for (auto& v : h) v = std::uniform_int_distribution<long long>(-3, 5)(rng);
        auto spec = blc(n, m, a, h);
        auto kind = it % 2 == 0 ? DistanceKind::hamming() : DistanceKind::insdel();

        ExtEnum ext = brute_extended_enumerator(spec, kind);
        Enumerator plain = brute_enumerator(spec, kind);
        CHECK(ext.specialize_ones() == plain.poly);
        CHECK(ext.total_mass() == plain.total_pairs());
    }
}

TEST_CASE("average enumerator") {
    Enumerator e = brute_enumerator(VTSpec{5, 0}, DistanceKind::hamming());
    auto avg = average_enumerator(e);
    REQUIRE(avg.size() == 5);
    CHECK(avg[0] == 1);
    CHECK(avg[1] == 0);
    CHECK(avg[2] == BigRational(4, 3));
    CHECK(avg[3] == BigRational(8, 3));
    CHECK(avg[4] == 1);

    Enumerator singleton = brute_enumerator(blc(3, 7, 0, {1, 2, 3}), DistanceKind::hamming());
    auto unit = average_enumerator(singleton);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0] == 1);

    // Published n = 15 value: D_2 / D_0 at a = 0 reduces to 449/128.
    CHECK(BigRational(7184, 2048) == BigRational(449, 128));
}

TEST_CASE("structural invariants hold across kinds and specs") {
    std::mt19937 rng(73);
    for (int it = 0; it < 10; ++it) {
        int n = std::uniform_int_distribution<int>(1, 9)(rng);
        long long m = std::uniform_int_distribution<long long>(1, 9)(rng);
        long long a = std::uniform_int_distribution<long long>(0, m - 1)(rng);
        std::vector<long long> h(static_cast<std::size_t>(n));
        for (auto& v : h) v = std::uniform_int_distribution<long long>(-5, 5)(rng);
        auto spec = blc(n, m, a, h);
        BigInt card = enumerate_codewords(spec.to_sc()).size();
        for (auto kind : {DistanceKind::hamming(), DistanceKind::insdel(), DistanceKind::levenshtein()}) {
            Enumerator e = brute_enumerator(spec, kind);
            CHECK(enumerator_violations(e, card).empty());
        }
    }
}

TEST_SUITE_END();
