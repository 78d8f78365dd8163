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

#ifndef DENUM_JSON_IO_HPP
#define DENUM_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "denum/enumerator.hpp"
#include "denum/vtfast.hpp"

namespace denum {

// All documents carry {"schema_version": 1}; readers reject other versions.
inline constexpr int kSchemaVersion = 1;

/// {"kind":"vt","n":5,"a":0} / {"kind":"blc","n":…,"m":…,"a":…,"h":[…]} /
/// {"kind":"sc","n":…,"r":…,"m":[…],"a":[…],"h":[[…],…]}. Weight vectors
/// use 1-based positions (h_i multiplies x_i), stated in the document.
nlohmann::json code_spec_to_json(const CodeSpec& spec);
CodeSpec code_spec_from_json(const nlohmann::json& j);

/// Coefficients serialize as decimal strings; counts overflow 64-bit
/// integers already at moderate code lengths.
nlohmann::json enumerator_to_json(const Enumerator& e);
Enumerator enumerator_from_json(const nlohmann::json& j);

nlohmann::json btable_to_json(const BTable& bt);
BTable btable_from_json(const nlohmann::json& j);

std::string distance_kind_to_string(const DistanceKind& kind);

}  // namespace denum

#endif
