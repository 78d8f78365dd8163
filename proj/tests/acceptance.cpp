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

// Acceptance suite: ten end-to-end checks, one pass/fail line each.
// Every tolerance and time budget is pinned here; a nonzero exit means at
// least one check failed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "denum/chebyshev.hpp"
#include "denum/json_io.hpp"
#include "denum/oracle.hpp"
#include "denum/spectral.hpp"
#include "denum/verify.hpp"
#include "denum/vtfast.hpp"

using namespace denum;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<std::string()> run;  // empty string = pass, otherwise failure detail
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Published Hamming distance spectrum of the length-15 VT codes, one
// column per divisor class d = gcd(a, 16), rows i = 0..15.
const std::vector<long long> kColumnD16 = {2048, 0, 7184,  64496, 183488, 375616, 633152, 831168,
                                           828352, 635968, 382528, 176576, 58384, 13296, 2048, 0};
const std::vector<long long> kColumnD1 = {2048, 0, 7168,  64512, 183552, 375552, 632832, 831488,
                                          828736, 635584, 382400, 176704, 58368, 13312, 2048, 0};
const std::vector<long long> kColumnD2 = {2048, 0, 7168,  64512, 183456, 375648, 633280, 831040,
                                          828160, 636160, 382624, 176480, 58368, 13312, 2048, 0};
const std::vector<long long> kColumnD4 = {2048, 0, 7152,  64528, 183808, 375296, 631616, 832704,
                                          832704, 631616, 375296, 183808, 64528, 7152, 0, 2048};
const std::vector<long long> kColumnD8 = {2048, 0, 7184,  64496, 183488, 375616, 633152, 831168,
                                          828352, 635968, 382528, 176576, 58384, 13296, 2048, 0};

std::string poly_vs_column(const IntPoly& poly, const std::vector<long long>& column, const std::string& label) {
    for (std::size_t i = 0; i < column.size(); ++i)
        if (poly.coeff(i) != column[i])
            return label + ": D_" + std::to_string(i) + " = " + poly.coeff(i).str() + ", published " +
                   std::to_string(column[i]);
    if (poly.degree() >= static_cast<int>(column.size()))
        return label + ": unexpected coefficients beyond degree " + std::to_string(column.size() - 1);
    return {};
}

std::string check_example1() {
    auto t0 = Clock::now();
    const IntPoly expected{6, 0, 8, 16, 6};
    Enumerator brute = brute_enumerator(VTSpec{5, 0}, DistanceKind::hamming());
    Enumerator fast = vt_fast_enumerator(5, 0);
    Enumerator spectral = blc_hamming_enumerator(VTSpec{5, 0}.to_blc());
    if (brute.poly != expected) return "brute disagrees: " + brute.poly.str();
    if (fast.poly != expected) return "fast disagrees: " + fast.poly.str();
    if (spectral.poly != expected) return "spectral disagrees: " + spectral.poly.str();
    double dt = seconds_since(t0);
    if (dt >= 1.0) return "took " + std::to_string(dt) + " s (budget 1 s)";
    return {};
}

std::string check_table1() {
    auto t0 = Clock::now();
    const int n = 15;
    const long long m = 16;
    const std::map<long long, const std::vector<long long>*> published = {
        {16, &kColumnD16}, {1, &kColumnD1}, {2, &kColumnD2}, {4, &kColumnD4}, {8, &kColumnD8}};

    std::map<long long, IntPoly> columns;
    for (long long a = 0; a <= n; ++a) {
        long long d = std::gcd(a, m);
        IntPoly poly = vt_fast_enumerator(n, a).poly;
        auto [it, fresh] = columns.emplace(d, poly);
        if (!fresh && it->second != poly)
            return "class d=" + std::to_string(d) + " disagrees at a=" + std::to_string(a);
    }
    for (const auto& [d, column] : published) {
        if (auto msg = poly_vs_column(columns.at(d), *column, "d=" + std::to_string(d)); !msg.empty()) return msg;
    }
    // Brute-force cross-check of every divisor class at full length.
    for (const auto& [d, poly] : columns) {
        Enumerator brute = brute_enumerator(VTSpec{n, d == 16 ? 0 : d}, DistanceKind::hamming());
        if (brute.poly != poly) return "brute cross-check failed for class d=" + std::to_string(d);
    }
    double dt = seconds_since(t0);
    if (dt >= 30.0) return "took " + std::to_string(dt) + " s (budget 30 s)";
    return {};
}

std::string check_fast_oracle_equivalence() {
    auto t0 = Clock::now();
    CheckResult res = verify_fast_vs_brute(14);
    if (!res.pass) return res.detail;
    double dt = seconds_since(t0);
    if (dt >= 60.0) return "took " + std::to_string(dt) + " s (budget 60 s)";
    return {};
}

std::string check_spectral_oracle_equivalence() {
    CheckResult res = verify_spectral_vs_brute(100);
    if (!res.pass) return res.detail;
    // The rounded output must not depend on the order the grid is summed.
    BLCSpec spec;
    spec.n = 9;
    spec.m = 11;
    spec.a = 6;
    spec.h = {3, -2, 5, 1, -5, 2, 4, -1, 0};
    SpectralOptions forward, reverse, full;
    forward.order = GridOrder::forward_half;
    reverse.order = GridOrder::reverse_half;
    full.order = GridOrder::full;
    IntPoly f = blc_hamming_enumerator(spec, forward).poly;
    if (f != blc_hamming_enumerator(spec, reverse).poly) return "reverse-order sum differs";
    if (f != blc_hamming_enumerator(spec, full).poly) return "full-grid sum differs";
    return {};
}

std::string check_btable_suite() {
    CheckResult res = verify_btable_properties(24);
    return res.pass ? std::string{} : res.detail;
}

std::string check_chebyshev() {
    for (unsigned k = 0; k <= 64; ++k)
        if (cheb_u(k) != cheb_u_explicit(k)) return "U_" + std::to_string(k) + ": two routes disagree";

    Precision p(128);
    BigFloat tol = BigFloat::pow2(-64, p);
    std::mt19937 rng(20260810);
    std::uniform_real_distribution<double> xs(-1.0, 1.0);
    for (unsigned k = 0; k <= 32; ++k) {
        IntPoly v = cheb_v(k);
        RootTable roots(2 * (2 * k + 1), p);
        for (int it = 0; it < 10; ++it) {
            BigFloat x(xs(rng), p);
            BigFloat prod = BigFloat::pow2(static_cast<long>(k), p);
            for (unsigned i = 1; i <= k; ++i) prod *= x + roots.root(2 * static_cast<long long>(i)).re;
            if ((v.evaluate(x) - prod).abs() > tol)
                return "V_" + std::to_string(k) + ": recurrence vs product beyond 2^-64";
        }
    }
    return {};
}

std::string check_structural_invariants() {
    // Every enumerator computed here (all three methods, several codes)
    // must satisfy D_0 = |C|, sum = |C|^2, evenness, and D_1 = 0 for VT.
    std::vector<std::pair<Enumerator, BigInt>> computed;
    for (int n = 1; n <= 10; ++n) {
        for (long long a : {0ll, 1ll, static_cast<long long>(n / 2)}) {
            if (a > n) continue;
            VTSpec vt{n, a};
            BigInt card = enumerate_codewords(vt.to_sc()).size();
            computed.emplace_back(brute_enumerator(vt, DistanceKind::hamming()), card);
            computed.emplace_back(vt_fast_enumerator(n, a), card);
            computed.emplace_back(blc_hamming_enumerator(vt.to_blc()), card);
        }
    }
    std::mt19937 rng(4242);
    for (int it = 0; it < 10; ++it) {
        BLCSpec blc;
        blc.n = std::uniform_int_distribution<int>(1, 10)(rng);
        blc.m = std::uniform_int_distribution<long long>(1, 10)(rng);
        blc.a = std::uniform_int_distribution<long long>(0, blc.m - 1)(rng);
        blc.h.resize(static_cast<std::size_t>(blc.n));
        for (auto& h : blc.h) h = std::uniform_int_distribution<long long>(-5, 5)(rng);
        BigInt card = enumerate_codewords(blc.to_sc()).size();
        computed.emplace_back(brute_enumerator(blc, DistanceKind::hamming()), card);
        computed.emplace_back(blc_hamming_enumerator(blc), card);
    }
    for (const auto& [e, card] : computed) {
        auto violations = enumerator_violations(e, card);
        if (!violations.empty()) return e.method + ": " + violations.front();
        if (as_vt(e.code).has_value() && e.poly.coeff(1) != 0) return e.method + ": VT enumerator with D_1 != 0";
    }
    return {};
}

std::string check_extended_identity() {
    // Remark-level identity on random specs plus the worked extended table.
    std::mt19937 rng(515);
    for (int it = 0; it < 25; ++it) {
        BLCSpec blc;
        blc.n = std::uniform_int_distribution<int>(1, 10)(rng);
        blc.m = std::uniform_int_distribution<long long>(1, 10)(rng);
        blc.a = std::uniform_int_distribution<long long>(0, blc.m - 1)(rng);
        blc.h.resize(static_cast<std::size_t>(blc.n));
        for (auto& h : blc.h) h = std::uniform_int_distribution<long long>(-5, 5)(rng);
        auto kind = it % 2 == 0 ? DistanceKind::hamming() : DistanceKind::levenshtein();
        ExtEnum ext = brute_extended_enumerator(blc, kind);
        Enumerator plain = brute_enumerator(blc, kind);
        if (ext.specialize_ones() != plain.poly)
            return "specialization differs on instance " + std::to_string(it);
    }

    ExtEnum ext = brute_extended_enumerator(VTSpec{5, 0}, DistanceKind::hamming());
    std::map<ExtKey, BigInt> expected;
    auto add = [&expected](int d, long ue, long ve, long count) {
        expected[ExtKey{d, {BigInt(ue)}, {BigInt(ve)}}] = count;
    };
    add(0, 0, 0, 1);
    add(0, 6, 6, 3);
    add(0, 12, 12, 2);
    add(2, 6, 0, 2);
    add(2, 0, 6, 2);
    add(2, 12, 6, 2);
    add(2, 6, 12, 2);
    add(3, 6, 0, 1);
    add(3, 0, 6, 1);
    add(3, 12, 0, 1);
    add(3, 0, 12, 1);
    add(3, 6, 6, 4);
    add(3, 12, 6, 3);
    add(3, 6, 12, 3);
    add(3, 12, 12, 2);
    add(4, 12, 0, 1);
    add(4, 0, 12, 1);
    add(4, 6, 6, 2);
    add(4, 12, 6, 1);
    add(4, 6, 12, 1);
    if (ext.counts != expected) return "extended table of VT_0(5) differs from the worked expansion";
    return {};
}

std::string check_membership_charsum() {
    Precision p(96);
    BigFloat tol = BigFloat::pow2(-32, p);
    std::mt19937 rng(616);
    for (int it = 0; it < 8; ++it) {
        int n = std::uniform_int_distribution<int>(1, 10)(rng);
        long long m = std::uniform_int_distribution<long long>(1, 11)(rng);
        long long a = std::uniform_int_distribution<long long>(0, m - 1)(rng);
        std::vector<long long> h(static_cast<std::size_t>(n));
        for (auto& v : h) v = std::uniform_int_distribution<long long>(-5, 5)(rng);
        BLCSpec blc;
        blc.n = n;
        blc.m = m;
        blc.a = a;
        blc.h = h;
        SCSpec sc = blc.to_sc();
        std::string fail;
        for_each_word(n, 2, [&](const Word& x) {
            if (!fail.empty()) return;
            BigComplex ind = membership_charsum(x, sc, p);
            BigFloat expect(membership(x, sc) ? 1 : 0, p);
            if ((ind.re - expect).abs() > tol || ind.im.abs() > tol) fail = "indicator off beyond 2^-32";
        });
        if (!fail.empty()) return fail;
    }
    // VT spot checks from the worked example.
    SCSpec vt05 = VTSpec{5, 0}.to_sc();
    if ((membership_charsum({1, 0, 0, 0, 1}, vt05, p).re - BigFloat(1, p)).abs() > tol) return "codeword not at 1";
    if (membership_charsum({1, 0, 0, 0, 0}, vt05, p).re.abs() > tol) return "non-codeword not at 0";
    return {};
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

/// Median wall time of fn, with enough inner repetitions that one sample
/// is at least ~20 ms.
double timed(const std::function<void()>& fn, int samples = 5) {
    fn();  // warm-up
    int reps = 1;
    for (;;) {
        auto t0 = Clock::now();
        for (int i = 0; i < reps; ++i) fn();
        if (seconds_since(t0) >= 0.02) break;
        reps *= 4;
    }
    std::vector<double> times;
    for (int s = 0; s < samples; ++s) {
        auto t0 = Clock::now();
        for (int i = 0; i < reps; ++i) fn();
        times.push_back(seconds_since(t0) / reps);
    }
    return median(times);
}

std::string check_performance() {
    // Absolute budget for the fast pipeline at n = 63.
    auto t0 = Clock::now();
    Enumerator big = vt_fast_enumerator(63, 0);
    double t63_once = seconds_since(t0);
    if (t63_once >= 10.0) return "fast n=63 took " + std::to_string(t63_once) + " s (budget 10 s)";
    if (big.poly.coeff(1) != 0) return "fast n=63 has D_1 != 0";

    // Brute force grows at least 3x per n -> n+2 step (the pair count
    // roughly quadruples and the codebook doubles).
    std::map<int, double> brute_times;
    for (int n : {9, 11, 13}) {
        SCSpec sc = VTSpec{n, 0}.to_sc();
        brute_times[n] = timed([&] { brute_enumerator(VTSpec{n, 0}, DistanceKind::hamming()); });
        (void)sc;
    }
    double g1 = brute_times[11] / brute_times[9];
    double g2 = brute_times[13] / brute_times[11];
    if (g1 < 3.0 || g2 < 3.0)
        return "brute growth per step " + std::to_string(g1) + ", " + std::to_string(g2) + " (need >= 3)";

    // The fast pipeline stays polynomial: at most 1.5x per n -> n+2 step
    // measured across n = 31 .. 63 (16 steps).
    double t31 = timed([] { vt_fast_enumerator(31, 0); }, 3);
    double t63 = timed([] { vt_fast_enumerator(63, 0); }, 3);
    double per_step = std::pow(t63 / t31, 1.0 / 16.0);
    if (per_step > 1.5)
        return "fast growth per step " + std::to_string(per_step) + " (need <= 1.5)";
    return {};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Example reproduction: VT_0(5) by all three methods, < 1 s", check_example1},
        {2, "Published n=15 table, cell-for-cell, with brute cross-check, < 30 s", check_table1},
        {3, "Fast = brute for every (n, a), n <= 14, < 60 s", check_fast_oracle_equivalence},
        {4, "Spectral = brute on 100 random BLC instances", check_spectral_oracle_equivalence},
        {5, "B-table property suite for all m <= 24", check_btable_suite},
        {6, "Chebyshev routes: U exact to k=64, V within 2^-64 to k=32", check_chebyshev},
        {7, "Structural invariants on every computed enumerator", check_structural_invariants},
        {8, "Extended enumerator specializes to the plain one; worked table exact", check_extended_identity},
        {9, "Membership character sum within 2^-32 of the indicator, n <= 10", check_membership_charsum},
        {10, "Performance: fast n=63 < 10 s; brute >= 3x and fast <= 1.5x per step", check_performance},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double dt = seconds_since(t0);
        if (detail.empty()) {
            std::printf("[%2d] PASS  %s  (%.2f s)\n", c.id, c.name.c_str(), dt);
        } else {
            ++failures;
            std::printf("[%2d] FAIL  %s  (%.2f s)\n       %s\n", c.id, c.name.c_str(), dt, detail.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
                criteria.size());
    return failures == 0 ? 0 : 1;
}
