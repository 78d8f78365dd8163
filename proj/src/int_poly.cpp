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

#include "denum/int_poly.hpp"

#include <stdexcept>

namespace denum {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    prune();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { prune(); }

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(BigInt c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, kZero);
        p.c_[k] = std::move(c);
    }
    return p;
}

const BigInt& IntPoly::coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : kZero; }

void IntPoly::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    prune();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    prune();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly acc = IntPoly::constant(1);
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

BigFloat IntPoly::evaluate(const BigFloat& x) const {
    Precision p(static_cast<unsigned>(x.precision_bits()));
    BigFloat acc(p);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += BigFloat(c_[i], p);
    }
    return acc;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt a = c_[i];
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += a < 0 ? " - " : " + ";
        }
        BigInt mag = a < 0 ? BigInt(-a) : a;
        if (i == 0 || mag != 1) out += mag.str();
        if (i >= 1) out += "z";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

IntPoly reciprocal(const IntPoly& p, std::size_t m) {
    if (p.degree() > static_cast<int>(m))
        throw std::invalid_argument("reciprocal: degree " + std::to_string(p.degree()) + " exceeds bound " +
                                    std::to_string(m));
    if (p.is_zero()) return IntPoly();
    std::vector<BigInt> out(m + 1, BigInt(0));
    for (std::size_t i = 0; i <= m; ++i) out[i] = p.coeff(m - i);
    return IntPoly(std::move(out));
}

IntPoly divide_by_two_z_plus_two(const IntPoly& p) {
    if (p.is_zero()) return IntPoly();
    const auto& c = p.coeffs();
    std::size_t d = c.size() - 1;
    if (d == 0) throw RoundingFailure("division by 2z+2: nonzero remainder (constant dividend)", 0.0);
    // Synthetic division by (z + 1), top down; then halve.
    std::vector<BigInt> q(d, BigInt(0));
    q[d - 1] = c[d];
    for (std::size_t i = d - 1; i >= 1; --i) q[i - 1] = c[i] - q[i];
    BigInt rem = c[0] - q[0];
    if (rem != 0) throw RoundingFailure("division by 2z+2: nonzero remainder " + rem.str(), 0.0);
    for (auto& v : q) {
        if (v % 2 != 0) throw RoundingFailure("division by 2z+2: odd intermediate coefficient " + v.str(), 0.0);
        v /= 2;
    }
    return IntPoly(std::move(q));
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

}  // namespace denum
