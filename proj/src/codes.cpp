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

#include "denum/codes.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace denum {

long long floor_mod(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

BigInt floor_mod(const BigInt& v, long long m) {
    BigInt r = v % m;
    if (r < 0) r += m;
    return r;
}

ResidueFunctional ResidueFunctional::linear(std::vector<long long> h) {
    ResidueFunctional f;
    f.h_ = std::move(h);
    return f;
}

ResidueFunctional ResidueFunctional::opaque(Callable fn) {
    if (!fn) throw std::invalid_argument("opaque residue functional requires a callable");
    ResidueFunctional f;
    f.fn_ = std::move(fn);
    return f;
}

const std::vector<long long>& ResidueFunctional::weights() const {
    if (!is_linear()) throw std::invalid_argument("opaque residue functional has no weight vector");
    return h_;
}

BigInt ResidueFunctional::operator()(const Word& x) const {
    if (fn_) return fn_(x);
    if (x.size() != h_.size())
        throw std::invalid_argument("word length " + std::to_string(x.size()) + " does not match weight count " +
                                    std::to_string(h_.size()));
    BigInt acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += BigInt(h_[i]) * x[i];
    return acc;
}

BigInt evaluate_rho(const ResidueFunctional& rho, const Word& x) { return rho(x); }

void SCSpec::validate() const {
    if (n < 1) throw std::invalid_argument("code length must be positive");
    if (r < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (rho.size() != a.size() || a.size() != m.size())
        throw std::invalid_argument("rho, a, m must agree on the congruence count");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 1) throw std::invalid_argument("modulus m_" + std::to_string(i + 1) + " must be positive");
        if (a[i] < 0 || a[i] >= m[i])
            throw std::invalid_argument("residue a_" + std::to_string(i + 1) + " outside [0, m)");
        if (rho[i].is_linear() && rho[i].weights().size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("linear rho_" + std::to_string(i + 1) + " weight count differs from n");
    }
}

SCSpec BLCSpec::to_sc() const {
    SCSpec sc;
    sc.n = n;
    sc.r = 2;
    sc.rho.push_back(ResidueFunctional::linear(h));
    sc.a.push_back(a);
    sc.m.push_back(m);
    return sc;
}

void BLCSpec::validate() const {
    if (static_cast<int>(h.size()) != n) throw std::invalid_argument("BLC weight vector length differs from n");
    to_sc().validate();
}

BLCSpec VTSpec::to_blc() const {
    BLCSpec blc;
    blc.n = n;
    blc.m = modulus();
    blc.a = a;
    blc.h.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) blc.h[static_cast<std::size_t>(i)] = i + 1;
    return blc;
}

void VTSpec::validate() const {
    if (n < 1) throw std::invalid_argument("code length must be positive");
    if (a < 0 || a > n) throw std::invalid_argument("VT residue a outside [0, n]");
}

SCSpec to_sc(const CodeSpec& spec) {
    return std::visit([](const auto& s) { return s.to_sc(); }, spec);
}

const char* code_kind(const CodeSpec& spec) {
    switch (spec.index()) {
        case 0: return "vt";
        case 1: return "blc";
        default: return "sc";
    }
}

std::optional<BLCSpec> as_blc(const CodeSpec& spec) {
    if (const auto* vt = std::get_if<VTSpec>(&spec)) return vt->to_blc();
    if (const auto* blc = std::get_if<BLCSpec>(&spec)) return *blc;
    const auto& sc = std::get<SCSpec>(spec);
    if (sc.r != 2 || sc.congruences() != 1 || !sc.rho[0].is_linear()) return std::nullopt;
    BLCSpec blc;
    blc.n = sc.n;
    blc.m = sc.m[0];
    blc.a = sc.a[0];
    blc.h = sc.rho[0].weights();
    return blc;
}

std::optional<VTSpec> as_vt(const CodeSpec& spec) {
    if (const auto* vt = std::get_if<VTSpec>(&spec)) return *vt;
    auto blc = as_blc(spec);
    if (!blc) return std::nullopt;
    if (blc->m != static_cast<long long>(blc->n) + 1) return std::nullopt;
    for (int i = 0; i < blc->n; ++i)
        if (blc->h[static_cast<std::size_t>(i)] != i + 1) return std::nullopt;
    return VTSpec{blc->n, blc->a};
}

bool membership(const Word& x, const SCSpec& spec) {
    if (x.size() != static_cast<std::size_t>(spec.n))
        throw std::invalid_argument("word length does not match code length");
    for (Sym s : x)
        if (s < 0 || s >= spec.r) throw std::invalid_argument("word symbol outside [0, r)");
    for (std::size_t i = 0; i < spec.congruences(); ++i) {
        const long long m = spec.m[i];
        if (spec.rho[i].is_linear()) {
            // Residues accumulate mod m; weights are reduced first so the
            // intermediate products stay within 128 bits.
            const auto& h = spec.rho[i].weights();
            unsigned long long acc = 0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                unsigned long long hmod = static_cast<unsigned long long>(floor_mod(h[j], m));
                acc = static_cast<unsigned long long>(
                    (static_cast<unsigned __int128>(hmod) * static_cast<unsigned long long>(x[j]) + acc) %
                    static_cast<unsigned long long>(m));
            }
            if (acc != static_cast<unsigned long long>(spec.a[i])) return false;
        } else {
            if (floor_mod(spec.rho[i](x), m) != spec.a[i]) return false;
        }
    }
    return true;
}

namespace {

void check_guard(int n, int r, const EnumerationGuard& guard) {
    double log2_space = n * std::log2(static_cast<double>(r));
    if (log2_space > guard.log2_bound)
        throw GuardExceeded("enumeration space " + std::to_string(r) + "^" + std::to_string(n) + " (2^" +
                            std::to_string(log2_space) + " words) exceeds the guard bound 2^" +
                            std::to_string(guard.log2_bound));
}

}  // namespace

void for_each_word(int n, int r, const std::function<void(const Word&)>& fn) {
    Word x(static_cast<std::size_t>(n), 0);
    for (;;) {
        fn(x);
        int i = n - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == r - 1) {
            x[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
        ++x[static_cast<std::size_t>(i)];
    }
}

void for_each_codeword(const SCSpec& spec, const std::function<void(const Word&)>& fn,
                       const EnumerationGuard& guard) {
    spec.validate();
    check_guard(spec.n, spec.r, guard);
    for_each_word(spec.n, spec.r, [&](const Word& x) {
        if (membership(x, spec)) fn(x);
    });
}

std::vector<Word> enumerate_codewords(const SCSpec& spec, const EnumerationGuard& guard) {
    std::vector<Word> out;
    for_each_codeword(spec, [&](const Word& x) { out.push_back(x); }, guard);
    return out;
}

std::vector<BigInt> cardinality_profile(int n, const EnumerationGuard& guard) {
    if (n < 1) throw std::invalid_argument("code length must be positive");
    check_guard(n, 2, guard);
    const unsigned long long m = static_cast<unsigned long long>(n) + 1;
    std::vector<BigInt> sizes(m, BigInt(0));
    const unsigned long long space = 1ull << n;
    for (unsigned long long w = 0; w < space; ++w) {
        // Bit i-1 of w holds x_i.
        unsigned long long sum = 0;
        unsigned long long bits = w;
        while (bits != 0) {
            unsigned long long low = bits & (~bits + 1);
            sum += static_cast<unsigned long long>(__builtin_ctzll(bits)) + 1;
            bits ^= low;
        }
        ++sizes[sum % m];
    }
    return sizes;
}

}  // namespace denum
