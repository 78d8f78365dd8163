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

#ifndef DENUM_ERRORS_HPP
#define DENUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace denum {

/// A requested computation would exceed a configured resource guard
/// (enumeration space too large, summation grid too large, ...).
class GuardExceeded : public std::runtime_error {
   public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A high-precision value failed to round to the nearest integer within
/// the requested tolerance. Callers may retry at higher precision.
class RoundingFailure : public std::runtime_error {
   public:
    RoundingFailure(const std::string& what, double residual_log2)
        : std::runtime_error(what), residual_log2_(residual_log2) {}

    /// log2 of the offending residual, for diagnostics.
    double residual_log2() const noexcept { return residual_log2_; }

   private:
    double residual_log2_;
};

}  // namespace denum

#endif
