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

#include "denum/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "denum/oracle.hpp"
#include "denum/spectral.hpp"
#include "denum/vtfast.hpp"

namespace denum {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::optional<std::string> first_coeff_mismatch(const IntPoly& a, const IntPoly& b) {
    if (a == b) return std::nullopt;
    std::size_t top = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < top; ++i)
        if (a.coeff(i) != b.coeff(i))
            return "coefficient " + std::to_string(i) + ": " + a.coeff(i).str() + " vs " + b.coeff(i).str();
    return "length mismatch";  // unreachable for canonical polynomials
}

CheckResult verify_fast_vs_brute(int n_max, const VerifyOptions& opts) {
    auto start = Clock::now();
    CheckResult res;
    res.name = "fast = brute, n <= " + std::to_string(n_max);
    int cases = 0;
    for (int n = 1; n <= n_max; ++n) {
        for (long long a = 0; a <= n; ++a) {
            VTSpec vt{n, a};
            VTFastOptions fopts;
            fopts.jobs = opts.jobs;
            Enumerator fast = vt_fast_enumerator(n, a, fopts);
            OracleOptions oopts;
            oopts.guard = opts.guard;
            oopts.jobs = opts.jobs;
            Enumerator brute = brute_enumerator(vt, DistanceKind::hamming(), oopts);
            if (auto diff = first_coeff_mismatch(fast.poly, brute.poly)) {
                res.detail = "VT_" + std::to_string(a) + "(" + std::to_string(n) + "): " + *diff;
                res.seconds = seconds_since(start);
                return res;
            }
            auto violations = enumerator_violations(fast, brute.cardinality());
            if (fast.poly.coeff(1) != 0) violations.push_back("D_1 nonzero for a VT code");
            if (!violations.empty()) {
                res.detail = "VT_" + std::to_string(a) + "(" + std::to_string(n) + "): " + violations.front();
                res.seconds = seconds_since(start);
                return res;
            }
            ++cases;
        }
    }
    res.pass = true;
    res.detail = std::to_string(cases) + " (n, a) pairs equal";
    res.seconds = seconds_since(start);
    return res;
}

CheckResult verify_spectral_vs_brute(int instances, const VerifyOptions& opts) {
    auto start = Clock::now();
    CheckResult res;
    res.name = "spectral = brute, " + std::to_string(instances) + " random BLC";
    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<int> n_dist(1, 12), m_dist(1, 12), h_dist(-5, 5);
    for (int i = 0; i < instances; ++i) {
        BLCSpec blc;
        blc.n = n_dist(rng);
        blc.m = m_dist(rng);
        blc.a = std::uniform_int_distribution<long long>(0, blc.m - 1)(rng);
        blc.h.resize(static_cast<std::size_t>(blc.n));
        for (auto& h : blc.h) h = h_dist(rng);

        Enumerator spectral = blc_hamming_enumerator(blc);
        OracleOptions oopts;
        oopts.guard = opts.guard;
        oopts.jobs = opts.jobs;
        Enumerator brute = brute_enumerator(blc, DistanceKind::hamming(), oopts);
        if (auto diff = first_coeff_mismatch(spectral.poly, brute.poly)) {
            std::ostringstream os;
            os << "instance " << i << " (n=" << blc.n << ", m=" << blc.m << ", a=" << blc.a << "): " << *diff;
            res.detail = os.str();
            res.seconds = seconds_since(start);
            return res;
        }
    }
    res.pass = true;
    res.detail = std::to_string(instances) + " instances equal";
    res.seconds = seconds_since(start);
    return res;
}

CheckResult verify_btable_properties(unsigned m_max, const VerifyOptions& opts) {
    auto start = Clock::now();
    CheckResult res;
    res.name = "B-table properties, m <= " + std::to_string(m_max);
    auto fail = [&](std::string detail) {
        res.detail = std::move(detail);
        res.seconds = seconds_since(start);
        return res;
    };

    for (unsigned m = 1; m <= m_max; ++m) {
        Precision p(2 * m + 64);
        const double tol_log2 = -static_cast<double>(p.bits() / 2);
        const std::string tag = "m=" + std::to_string(m) + ": ";

        BTableOptions naive{p, BTableStrategy::naive, 3, opts.jobs};
        BTableOptions optim{p, BTableStrategy::optimized, 3, opts.jobs};
        BTable tn = build_btable(m, naive);
        BTable to = build_btable(m, optim);
        if (tn.escalations != 0 || to.escalations != 0)
            return fail(tag + "table build escalated precision at p = 2m + 64");
        if (tn.max_residual_log2 > tol_log2 || to.max_residual_log2 > tol_log2)
            return fail(tag + "table residual above 2^" + std::to_string(tol_log2));

        for (unsigned j = 0; j < m; ++j) {
            for (unsigned k = 0; k < m; ++k) {
                RoundedPoly direct = b_direct_rounded(m, j, k, p);
                BigFloat tol = BigFloat::pow2(static_cast<long>(tol_log2), p);
                if (direct.max_residual > tol)
                    return fail(tag + "direct residual above tolerance at (" + std::to_string(j) + "," +
                                std::to_string(k) + ")");
                const std::string at = "(" + std::to_string(j) + "," + std::to_string(k) + ")";
                if (auto diff = first_coeff_mismatch(tn.at(j, k), direct.poly))
                    return fail(tag + "naive vs direct at " + at + ": " + *diff);
                if (auto diff = first_coeff_mismatch(to.at(j, k), direct.poly))
                    return fail(tag + "optimized vs direct at " + at + ": " + *diff);
                // Index symmetry.
                if (tn.at(j, k) != tn.at(k, j)) return fail(tag + "(j,k) swap symmetry broken at " + at);
                // Reciprocal relations in each index.
                IntPoly rj = reciprocal(tn.at(static_cast<long long>(m) - j, k), m);
                if (m % 2 == 0 && j % 2 == 1) rj *= BigInt(-1);
                if (tn.at(j, k) != rj) return fail(tag + "j-reciprocal relation broken at " + at);
                IntPoly rk = reciprocal(tn.at(j, static_cast<long long>(m) - k), m);
                if (m % 2 == 0 && k % 2 == 1) rk *= BigInt(-1);
                if (tn.at(j, k) != rk) return fail(tag + "k-reciprocal relation broken at " + at);
                // Coprime scaling invariance.
                for (unsigned t = 2; t < m; ++t) {
                    if (std::gcd(t, m) != 1) continue;
                    if (tn.at(static_cast<long long>(j) * t, static_cast<long long>(k) * t) != tn.at(j, k))
                        return fail(tag + "coprime scaling broken at " + at + ", t=" + std::to_string(t));
                }
            }
        }
    }
    res.pass = true;
    res.detail = "all tables consistent";
    res.seconds = seconds_since(start);
    return res;
}

}  // namespace denum
