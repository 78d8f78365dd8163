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

#include "denum/spectral.hpp"

#include <cmath>

namespace denum {

BigComplex membership_charsum(const Word& x, const SCSpec& spec, Precision p) {
    spec.validate();
    BigComplex product = BigComplex::one(p);
    for (std::size_t i = 0; i < spec.congruences(); ++i) {
        const long long m = spec.m[i];
        RootTable roots(static_cast<unsigned>(m), p);
        BigInt rho = spec.rho[i](x);
        BigComplex sum = BigComplex::zero(p);
        for (long long k = 0; k < m; ++k) {
            sum += roots.root(-spec.a[i] * k) * roots.root(rho * k);
        }
        sum.re /= m;
        sum.im /= m;
        product = product * sum;
    }
    return product;
}

HPPoly blc_whole_space(int n, const std::vector<long long>& h, const BigComplex& uroot, const BigComplex& vroot,
                       Precision p) {
    if (static_cast<int>(h.size()) != n) throw std::invalid_argument("weight vector length differs from n");
    HPPoly acc = HPPoly::one(p);
    const BigComplex one = BigComplex::one(p);
    for (long long hi : h) {
        BigComplex up = uroot.unit_pow(hi);
        BigComplex vp = vroot.unit_pow(hi);
        acc.mul_linear(one + up * vp, up + vp);
    }
    return acc;
}

namespace {

/// Mixed-radix decoding of one grid cell: digit pairs (j_i, k_i), each in
/// [0, m_i), with the first congruence as the most significant position.
struct GridShape {
    std::vector<long long> m;
    unsigned long long total = 1;

    std::vector<std::pair<long long, long long>> decode(unsigned long long cell) const {
        std::vector<std::pair<long long, long long>> jk(m.size());
        for (std::size_t i = m.size(); i-- > 0;) {
            unsigned long long mi = static_cast<unsigned long long>(m[i]);
            long long k = static_cast<long long>(cell % mi);
            cell /= mi;
            long long j = static_cast<long long>(cell % mi);
            cell /= mi;
            jk[i] = {j, k};
        }
        return jk;
    }

    unsigned long long encode_mirror(const std::vector<std::pair<long long, long long>>& jk) const {
        unsigned long long cell = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            unsigned long long mi = static_cast<unsigned long long>(m[i]);
            long long j = (mi - static_cast<unsigned long long>(jk[i].first)) % mi;
            long long k = (mi - static_cast<unsigned long long>(jk[i].second)) % mi;
            cell = (cell * mi + static_cast<unsigned long long>(j)) * mi + static_cast<unsigned long long>(k);
        }
        return cell;
    }
};

IntPoly spectral_attempt(const SCSpec& spec, const WholeSpaceEnumerator& ws, const GridShape& grid, GridOrder order,
                         Precision p) {
    std::vector<RootTable> tables;
    tables.reserve(spec.congruences());
    for (long long m : spec.m) tables.emplace_back(static_cast<unsigned>(m), p);

    long long weight_denom = 1;
    for (long long m : spec.m) weight_denom *= m * m;

    HPPoly sum(p);
    std::vector<BigComplex> uroots(spec.congruences(), BigComplex(p)), vroots(spec.congruences(), BigComplex(p));
    const bool prune = order != GridOrder::full;

    for (unsigned long long step = 0; step < grid.total; ++step) {
        unsigned long long cell = order == GridOrder::reverse_half ? grid.total - 1 - step : step;
        auto jk = grid.decode(cell);
        unsigned long long mirror = grid.encode_mirror(jk);
        if (prune && mirror < cell) continue;

        BigComplex weight = BigComplex::one(p);
        for (std::size_t i = 0; i < jk.size(); ++i) {
            weight = weight * tables[i].root(-spec.a[i] * (jk[i].first + jk[i].second));
            uroots[i] = tables[i].root(jk[i].first);
            vroots[i] = tables[i].root(jk[i].second);
        }
        weight.re /= weight_denom;
        weight.im /= weight_denom;

        HPPoly term = ws(uroots, vroots, p).scaled(weight);
        if (prune && mirror != cell) {
            // The mirror cell contributes the conjugate term; together they
            // add twice the real part.
            std::vector<BigComplex> doubled;
            doubled.reserve(term.coeffs().size());
            for (const auto& c : term.coeffs()) {
                BigFloat re2 = c.re;
                re2 *= 2;
                doubled.push_back({std::move(re2), BigFloat(0, p)});
            }
            sum += HPPoly(std::move(doubled), p);
        } else {
            sum += term;
        }
    }

    BigFloat tol = BigFloat::pow2(-static_cast<long>(p.bits() / 2), p);
    return round_to_int_poly(sum, tol).poly;
}

}  // namespace

Enumerator spectral_enumerator(const SCSpec& spec, const WholeSpaceEnumerator& ws, const SpectralOptions& opts,
                               const DistanceKind& kind) {
    spec.validate();

    GridShape grid;
    grid.m = spec.m;
    double log2_cells = 0;
    for (long long m : spec.m) log2_cells += 2 * std::log2(static_cast<double>(m));
    if (log2_cells > opts.grid_guard_log2)
        throw GuardExceeded("summation grid of 2^" + std::to_string(log2_cells) +
                            " cells exceeds the guard bound 2^" + std::to_string(opts.grid_guard_log2));
    for (long long m : spec.m) grid.total *= static_cast<unsigned long long>(m) * static_cast<unsigned long long>(m);

    Precision p = opts.precision.value_or(Precision(2 * static_cast<unsigned>(spec.n) + 64));
    for (int attempt = 0;; ++attempt) {
        try {
            IntPoly poly = spectral_attempt(spec, ws, grid, opts.order, p);
            return Enumerator{std::move(poly), CodeSpec(spec), kind, "spectral"};
        } catch (const RoundingFailure&) {
            if (attempt >= opts.max_retries) throw;
            p = p.doubled();
        }
    }
}

Enumerator blc_hamming_enumerator(const BLCSpec& spec, const SpectralOptions& opts) {
    spec.validate();
    SpectralOptions local = opts;
    if (!local.precision) local.precision = Precision(2 * static_cast<unsigned>(spec.n) + 64);
    const int n = spec.n;
    const std::vector<long long> h = spec.h;
    WholeSpaceEnumerator ws = [n, h](const std::vector<BigComplex>& uroots, const std::vector<BigComplex>& vroots,
                                     Precision p) { return blc_whole_space(n, h, uroots[0], vroots[0], p); };
    Enumerator e = spectral_enumerator(spec.to_sc(), ws, local);
    e.code = CodeSpec(spec);
    return e;
}

}  // namespace denum
