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

#include "denum/vtfast.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "denum/chebyshev.hpp"
#include "denum/parallel.hpp"

namespace denum {

const char* provenance_name(BProvenance p) {
    switch (p) {
        case BProvenance::direct: return "direct";
        case BProvenance::boundary: return "boundary";
        case BProvenance::diag: return "diag";
        case BProvenance::antidiag: return "antidiag";
        case BProvenance::cosine: return "cosine";
        case BProvenance::power: return "power";
        case BProvenance::symmetry: return "symmetry";
        case BProvenance::scaling: return "scaling";
    }
    return "?";
}

const IntPoly& BTable::at(long long j, long long k) const {
    long long mj = floor_mod(j, m);
    long long mk = floor_mod(k, m);
    return entries[static_cast<std::size_t>(mj) * m + static_cast<std::size_t>(mk)];
}

namespace {

BigFloat default_tol(Precision p) { return BigFloat::pow2(-static_cast<long>(p.bits() / 2), p); }

Precision table_precision(unsigned m) { return Precision(2 * m + 64); }

void check_indices(unsigned m, unsigned j, unsigned k) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    if (j >= m || k >= m) throw std::invalid_argument("table indices must lie in [0, m)");
}

/// (1+z)^m with binomial coefficients, exact.
IntPoly one_plus_z_pow(unsigned m) {
    std::vector<BigInt> c(m + 1);
    for (unsigned i = 0; i <= m; ++i) c[i] = binomial(m, i);
    return IntPoly(std::move(c));
}

}  // namespace

RoundedPoly b_direct_rounded(unsigned m, unsigned j, unsigned k, Precision p) {
    check_indices(m, j, k);
    RootTable roots(m, p);
    HPPoly acc = HPPoly::one(p);
    const BigComplex one = BigComplex::one(p);
    for (unsigned i = 1; i <= m; ++i) {
        long long jk = static_cast<long long>(i) * (static_cast<long long>(j) + k);
        BigComplex c0 = one + roots.root(jk);
        BigComplex c1 = roots.root(static_cast<long long>(i) * j) + roots.root(static_cast<long long>(i) * k);
        acc.mul_linear(c0, c1);
    }
    return round_to_int_poly(acc, default_tol(p));
}

IntPoly b_direct(unsigned m, unsigned j, unsigned k, Precision p) { return b_direct_rounded(m, j, k, p).poly; }

IntPoly b_boundary(unsigned m, unsigned j) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    if (j >= m) throw std::invalid_argument("index must lie in [0, m)");
    unsigned d = j == 0 ? m : std::gcd(m, j);
    if ((m / d) % 2 == 0) return IntPoly::zero();
    IntPoly out = one_plus_z_pow(m);
    out *= BigInt(1) << d;
    return out;
}

IntPoly b_diag(unsigned m, unsigned j) {
    check_indices(m, j, j);
    if (j == 0) return b_boundary(m, 0);
    const unsigned d = std::gcd(m, j);
    const unsigned mp = m / d;
    const unsigned mbar = (mp - 1) / 2;
    if (mp % 2 == 0) {
        IntPoly out = IntPoly{-1, 0, 1}.pow(d) * cheb_u(mbar).pow(2 * d);
        out *= BigInt(1) << (2 * d);
        if (j % 2 == 1) out *= BigInt(-1);
        return out;
    }
    IntPoly out = IntPoly{1, 1}.pow(d) * cheb_v(mbar).pow(2 * d);
    out *= BigInt(1) << d;
    return out;
}

IntPoly b_antidiag(unsigned m, unsigned j) {
    check_indices(m, j, (m - j) % m);
    if (j == 0) return b_boundary(m, 0);
    const unsigned d = std::gcd(m, j);  // gcd(m, m-j) = gcd(m, j)
    const unsigned mp = m / d;
    const unsigned mbar = (mp - 1) / 2;
    if (mp % 2 == 0) {
        // Reciprocal image of the diagonal form; z^m (z^-2 - 1)^d picks up
        // a factor (-1)^d relative to (z^2 - 1)^d.
        IntPoly out = IntPoly{-1, 0, 1}.pow(d) * reciprocal(cheb_u(mbar), mbar).pow(2 * d);
        out *= BigInt(1) << (2 * d);
        if (d % 2 == 1) out *= BigInt(-1);
        return out;
    }
    IntPoly out = IntPoly{1, 1}.pow(d) * reciprocal(cheb_v(mbar), mbar).pow(2 * d);
    out *= BigInt(1) << d;
    return out;
}

RoundedPoly b_cosine_rounded(unsigned m, unsigned j, unsigned k, Precision p) {
    check_indices(m, j, k);
    unsigned g = std::gcd(std::gcd(m, j), k);  // gcd(m, 0, 0) = m rejects (0,0) except at m = 1
    if (g != 1) throw std::invalid_argument("cosine form requires gcd(m, j, k) = 1");

    const bool even = m % 2 == 0;
    if (even && (j % 2 == 0 || k % 2 == 0)) return {IntPoly::zero(), BigFloat(0, Precision(64))};

    // cos(pi t / m) is the real part of e(t / 2m).
    RootTable roots(2 * m, p);
    const long long sum_idx = static_cast<long long>(j) + k;
    const long long diff_idx = static_cast<long long>(j) - k;
    const unsigned factors = even ? m / 2 - 1 : (m - 1) / 2;

    std::vector<BigFloat> poly{BigFloat(1, p)};
    poly.reserve(m + 1);
    for (unsigned i = 1; i <= factors; ++i) {
        const BigFloat& c = roots.root(static_cast<long long>(i) * sum_idx).re;
        const BigFloat& d = roots.root(static_cast<long long>(i) * diff_idx).re;
        // Multiply by (c + d z)^2 = c^2 + 2cd z + d^2 z^2.
        BigFloat c2 = c * c, cd2 = c * d, d2 = d * d;
        cd2 *= 2;
        std::vector<BigFloat> next(poly.size() + 2, BigFloat(0, p));
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t] += poly[t] * c2;
            next[t + 1] += poly[t] * cd2;
            next[t + 2] += poly[t] * d2;
        }
        poly = std::move(next);
    }

    // Apply the exact outer factor: 2^m (1+z) for odd m, 2^m (1-z^2) for
    // even m.
    std::vector<BigFloat> out(poly.size() + (even ? 2 : 1), BigFloat(0, p));
    for (std::size_t t = 0; t < poly.size(); ++t) {
        out[t] += poly[t];
        if (even) {
            out[t + 2] -= poly[t];
        } else {
            out[t + 1] += poly[t];
        }
    }
    for (auto& c : out) c *= BigFloat(BigInt(1) << m, p);

    return round_to_int_poly(out, default_tol(p));
}

IntPoly b_cosine(unsigned m, unsigned j, unsigned k, Precision p) { return b_cosine_rounded(m, j, k, p).poly; }

namespace {

struct DispatchResult {
    RoundedPoly rounded;
    BProvenance prov;
};

DispatchResult dispatch_entry(unsigned m, unsigned j, unsigned k, Precision p) {
    BigFloat zero_res(0, Precision(64));
    if (j == 0 || k == 0) return {{b_boundary(m, std::max(j, k)), zero_res}, BProvenance::boundary};
    if (j == k) return {{b_diag(m, j), zero_res}, BProvenance::diag};
    if (j + k == m) return {{b_antidiag(m, j), zero_res}, BProvenance::antidiag};
    unsigned d = std::gcd(std::gcd(m, j), k);
    RoundedPoly base = b_cosine_rounded(m / d, j / d, k / d, p);
    if (d == 1) return {std::move(base), BProvenance::cosine};
    return {{base.poly.pow(d), base.max_residual}, BProvenance::power};
}

}  // namespace

IntPoly b_general(unsigned m, unsigned j, unsigned k, Precision p) {
    check_indices(m, j, k);
    return dispatch_entry(m, j, k, p).rounded.poly;
}

namespace {

struct CellOutcome {
    IntPoly poly;
    BProvenance prov = BProvenance::direct;
    double residual_log2 = -1e9;
    int escalations = 0;
};

CellOutcome compute_cell(unsigned m, unsigned j, unsigned k, Precision p, int max_retries) {
    for (int attempt = 0;; ++attempt) {
        try {
            DispatchResult r = dispatch_entry(m, j, k, p);
            double rl = r.rounded.max_residual.is_zero() ? -1e9 : std::log2(r.rounded.max_residual.to_double());
            return {std::move(r.rounded.poly), r.prov, rl, attempt};
        } catch (const RoundingFailure&) {
            if (attempt >= max_retries) throw;
            p = p.doubled();
        }
    }
}

}  // namespace

BTable build_btable(unsigned m, const BTableOptions& opts) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    Precision p = opts.precision.value_or(table_precision(m));

    BTable bt;
    bt.m = m;
    bt.precision_bits = p.bits();
    const std::size_t cells = static_cast<std::size_t>(m) * m;
    bt.entries.assign(cells, IntPoly());
    bt.prov.assign(cells, BProvenance::direct);
    auto cell = [m](unsigned j, unsigned k) { return static_cast<std::size_t>(j) * m + k; };

    if (opts.strategy == BTableStrategy::naive) {
        std::vector<double> residuals(cells, -1e9);
        std::vector<int> escalations(cells, 0);
        parallel_for(cells, opts.jobs, [&](std::size_t begin, std::size_t end, int) {
            for (std::size_t idx = begin; idx < end; ++idx) {
                unsigned j = static_cast<unsigned>(idx / m), k = static_cast<unsigned>(idx % m);
                CellOutcome out = compute_cell(m, j, k, p, opts.max_retries);
                bt.entries[idx] = std::move(out.poly);
                bt.prov[idx] = out.prov;
                residuals[idx] = out.residual_log2;
                escalations[idx] = out.escalations;
            }
        });
        for (std::size_t idx = 0; idx < cells; ++idx) {
            bt.max_residual_log2 = std::max(bt.max_residual_log2, residuals[idx]);
            bt.escalations += escalations[idx];
        }
        return bt;
    }

    // Optimized schedule. Fundamental region: 1 <= j <= k <= floor(m/2).
    // The half-open region of the reciprocal symmetries alone is short one
    // column when m is even (k = m/2 maps to itself), so the region extends
    // to m/2 inclusive.
    const unsigned half = m / 2;

    // Row and column zero.
    for (unsigned j = 0; j < m; ++j) {
        IntPoly b = b_boundary(m, j);
        bt.entries[cell(j, 0)] = b;
        bt.prov[cell(j, 0)] = BProvenance::boundary;
        bt.entries[cell(0, j)] = std::move(b);
        bt.prov[cell(0, j)] = BProvenance::boundary;
    }

    // Plan the fundamental region: pick representatives in lex order and
    // mark their coprime-scaled orbit images as copies.
    enum class Plan : unsigned char { none, compute, copy };
    std::vector<Plan> plan(static_cast<std::size_t>(m) * m, Plan::none);
    std::vector<std::size_t> copy_source(static_cast<std::size_t>(m) * m, 0);
    std::vector<std::pair<unsigned, unsigned>> reps;
    for (unsigned j = 1; j <= half; ++j) {
        for (unsigned k = j; k <= half; ++k) {
            if (plan[cell(j, k)] != Plan::none) continue;
            plan[cell(j, k)] = Plan::compute;
            reps.push_back({j, k});
            for (unsigned t = 2; t < m; ++t) {
                if (std::gcd(t, m) != 1) continue;
                unsigned jt = static_cast<unsigned>((static_cast<unsigned long long>(j) * t) % m);
                unsigned kt = static_cast<unsigned>((static_cast<unsigned long long>(k) * t) % m);
                if (jt > kt) std::swap(jt, kt);  // entries are (j,k)-symmetric
                if (jt < 1 || kt > half) continue;
                if (plan[cell(jt, kt)] == Plan::none) {
                    plan[cell(jt, kt)] = Plan::copy;
                    copy_source[cell(jt, kt)] = cell(j, k);
                }
            }
        }
    }

    std::vector<double> rep_residuals(reps.size(), -1e9);
    std::vector<int> rep_escalations(reps.size(), 0);
    parallel_for(reps.size(), opts.jobs, [&](std::size_t begin, std::size_t end, int) {
        for (std::size_t i = begin; i < end; ++i) {
            auto [j, k] = reps[i];
            CellOutcome out = compute_cell(m, j, k, p, opts.max_retries);
            bt.entries[cell(j, k)] = std::move(out.poly);
            bt.prov[cell(j, k)] = out.prov;
            rep_residuals[i] = out.residual_log2;
            rep_escalations[i] = out.escalations;
        }
    });
    for (std::size_t i = 0; i < reps.size(); ++i) {
        bt.max_residual_log2 = std::max(bt.max_residual_log2, rep_residuals[i]);
        bt.escalations += rep_escalations[i];
    }
    for (unsigned j = 1; j <= half; ++j)
        for (unsigned k = j; k <= half; ++k)
            if (plan[cell(j, k)] == Plan::copy) {
                bt.entries[cell(j, k)] = bt.entries[copy_source[cell(j, k)]];
                bt.prov[cell(j, k)] = BProvenance::scaling;
            }

    // Mirror across the diagonal inside the square block.
    for (unsigned j = 1; j <= half; ++j)
        for (unsigned k = j + 1; k <= half; ++k) {
            bt.entries[cell(k, j)] = bt.entries[cell(j, k)];
            bt.prov[cell(k, j)] = BProvenance::symmetry;
        }

    // Columns k > m/2 from the reciprocal relation in k:
    // B[j,k] = (-1)^{k(m+1)} * reciprocal(B[j, m-k]).
    for (unsigned j = 1; j <= half; ++j)
        for (unsigned k = half + 1; k < m; ++k) {
            IntPoly img = reciprocal(bt.entries[cell(j, m - k)], m);
            if ((m % 2 == 0) && (k % 2 == 1)) img *= BigInt(-1);
            bt.entries[cell(j, k)] = std::move(img);
            bt.prov[cell(j, k)] = BProvenance::symmetry;
        }

    // Rows j > m/2 from the reciprocal relation in j.
    for (unsigned j = half + 1; j < m; ++j)
        for (unsigned k = 1; k < m; ++k) {
            IntPoly img = reciprocal(bt.entries[cell(m - j, k)], m);
            if ((m % 2 == 0) && (j % 2 == 1)) img *= BigInt(-1);
            bt.entries[cell(j, k)] = std::move(img);
            bt.prov[cell(j, k)] = BProvenance::symmetry;
        }

    return bt;
}

FVector f_vector(const BTable& bt) {
    FVector fv;
    fv.m = bt.m;
    fv.polys.reserve(bt.m);
    for (unsigned j = 0; j < bt.m; ++j) {
        IntPoly sum;
        for (unsigned k = 0; k < bt.m; ++k)
            sum += bt.at(k, static_cast<long long>(j) - static_cast<long long>(k));
        fv.polys.push_back(divide_by_two_z_plus_two(sum));
    }
    return fv;
}

Enumerator vt_fast_enumerator(int n, long long a, const VTFastOptions& opts) {
    VTSpec vt{n, a};
    vt.validate();
    const unsigned m = static_cast<unsigned>(n) + 1;
    Precision p = opts.precision.value_or(table_precision(m));

    BTableOptions bopts;
    bopts.precision = p;
    bopts.strategy = opts.strategy;
    bopts.max_retries = opts.max_retries;
    bopts.jobs = opts.jobs;
    BTable bt = build_btable(m, bopts);
    FVector fv = f_vector(bt);

    // Character-weighted assembly; the F polynomials stay exact, so retries
    // after a rounding failure only repeat this cheap final sum.
    Precision q = p;
    for (int attempt = 0;; ++attempt) {
        try {
            RootTable roots(m, q);
            const BigFloat inv_m2 = BigFloat(1, q) / BigFloat(static_cast<long>(m) * m, q);
            HPPoly sum(q);
            for (unsigned j = 0; j < m; ++j) {
                BigComplex w = roots.root(-a * static_cast<long long>(j));
                w.re *= inv_m2;
                w.im *= inv_m2;
                sum += HPPoly::from_int_poly(fv.polys[j], q).scaled(w);
            }
            BigFloat tol = BigFloat::pow2(-static_cast<long>(q.bits() / 2), q);
            IntPoly poly = round_to_int_poly(sum, tol).poly;
            return Enumerator{std::move(poly), CodeSpec(vt), DistanceKind::hamming(), "fast"};
        } catch (const RoundingFailure&) {
            if (attempt >= opts.max_retries) throw;
            q = q.doubled();
        }
    }
}

}  // namespace denum
