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

#ifndef DENUM_CODES_HPP
#define DENUM_CODES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "denum/precision.hpp"

namespace denum {

using Sym = std::int32_t;
/// A word over the alphabet [0, r); positions are 1-based in all residue
/// functional semantics (position i multiplies weight h_i).
using Word = std::vector<Sym>;

/// Reduce v into [0, m). Works for negative v (mathematical modulo).
long long floor_mod(long long v, long long m);
BigInt floor_mod(const BigInt& v, long long m);

/// A residue functional rho: [r]^n -> Z. Either a linear form
/// x -> sum_i h_i x_i (1-based positions) or an opaque callable.
class ResidueFunctional {
   public:
    using Callable = std::function<BigInt(const Word&)>;

    static ResidueFunctional linear(std::vector<long long> h);
    static ResidueFunctional opaque(Callable f);

    bool is_linear() const noexcept { return fn_ == nullptr; }
    const std::vector<long long>& weights() const;

    BigInt operator()(const Word& x) const;

   private:
    ResidueFunctional() = default;

    std::vector<long long> h_;
    Callable fn_;
};

/// Exact value of rho(x); length mismatches are rejected for linear forms.
BigInt evaluate_rho(const ResidueFunctional& rho, const Word& x);

/// Simultaneous-congruence code over [r]^n: all words x with
/// rho_i(x) = a_i (mod m_i) for every congruence i.
struct SCSpec {
    int n = 0;
    int r = 2;
    std::vector<ResidueFunctional> rho;
    std::vector<long long> a;
    std::vector<long long> m;

    std::size_t congruences() const noexcept { return m.size(); }
    SCSpec to_sc() const { return *this; }
    void validate() const;
};

/// Binary linear congruence code: words x in {0,1}^n with
/// sum_i h_i x_i = a (mod m).
struct BLCSpec {
    int n = 0;
    long long m = 1;
    long long a = 0;
    std::vector<long long> h;

    SCSpec to_sc() const;
    void validate() const;
};

/// Varshamov-Tenengolts code: binary words with sum_i i*x_i = a (mod n+1).
struct VTSpec {
    int n = 0;
    long long a = 0;

    long long modulus() const noexcept { return static_cast<long long>(n) + 1; }
    BLCSpec to_blc() const;
    SCSpec to_sc() const { return to_blc().to_sc(); }
    void validate() const;
};

/// Tagged code description as it appears in configuration and JSON.
using CodeSpec = std::variant<VTSpec, BLCSpec, SCSpec>;

SCSpec to_sc(const CodeSpec& spec);
/// "vt", "blc" or "sc".
const char* code_kind(const CodeSpec& spec);
/// The BLC view of a spec, when one exists (vt and blc kinds, and sc kinds
/// with a single linear congruence over a binary alphabet).
std::optional<BLCSpec> as_blc(const CodeSpec& spec);
std::optional<VTSpec> as_vt(const CodeSpec& spec);

/// Enumeration guard: refuse whole-space scans larger than 2^log2_bound.
struct EnumerationGuard {
    double log2_bound = 34.0;
};

/// True iff x lies in the code (exact integer arithmetic throughout).
bool membership(const Word& x, const SCSpec& spec);

/// Visit all words of [r]^n in lexicographic order.
void for_each_word(int n, int r, const std::function<void(const Word&)>& fn);

/// Visit the codewords in lexicographic order; GuardExceeded if r^n is
/// beyond the guard bound.
void for_each_codeword(const SCSpec& spec, const std::function<void(const Word&)>& fn,
                       const EnumerationGuard& guard = {});

std::vector<Word> enumerate_codewords(const SCSpec& spec, const EnumerationGuard& guard = {});

/// |VT_a(n)| for a = 0..n; the sizes always sum to 2^n.
std::vector<BigInt> cardinality_profile(int n, const EnumerationGuard& guard = {});

}  // namespace denum

#endif
