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

#include "denum/json_io.hpp"

#include <stdexcept>

namespace denum {

using nlohmann::json;

namespace {

void check_schema(const json& j, const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
    if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument(std::string(what) + ": unsupported or missing schema_version");
}

void check_positions_field(const json& j) {
    if (j.contains("positions") && j.at("positions").get<std::string>() != "1-based")
        throw std::invalid_argument("code spec: only 1-based weight positions are supported");
}

json coeff_strings(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

IntPoly poly_from_strings(const json& arr) {
    std::vector<BigInt> c;
    c.reserve(arr.size());
    for (const auto& s : arr) c.emplace_back(s.get<std::string>());
    return IntPoly(std::move(c));
}

}  // namespace

json code_spec_to_json(const CodeSpec& spec) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = code_kind(spec);
    if (const auto* vt = std::get_if<VTSpec>(&spec)) {
        j["n"] = vt->n;
        j["a"] = vt->a;
    } else if (const auto* blc = std::get_if<BLCSpec>(&spec)) {
        j["n"] = blc->n;
        j["m"] = blc->m;
        j["a"] = blc->a;
        j["h"] = blc->h;
        j["positions"] = "1-based";
    } else {
        const auto& sc = std::get<SCSpec>(spec);
        j["n"] = sc.n;
        j["r"] = sc.r;
        j["m"] = sc.m;
        j["a"] = sc.a;
        json rows = json::array();
        for (const auto& rho : sc.rho) {
            if (!rho.is_linear())
                throw std::invalid_argument("opaque residue functionals cannot be serialized to JSON");
            rows.push_back(rho.weights());
        }
        j["h"] = std::move(rows);
        j["positions"] = "1-based";
    }
    return j;
}

CodeSpec code_spec_from_json(const json& j) {
    check_schema(j, "code spec");
    check_positions_field(j);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "vt") {
        VTSpec vt{j.at("n").get<int>(), j.at("a").get<long long>()};
        vt.validate();
        return vt;
    }
    if (kind == "blc") {
        BLCSpec blc;
        blc.n = j.at("n").get<int>();
        blc.m = j.at("m").get<long long>();
        blc.a = j.at("a").get<long long>();
        blc.h = j.at("h").get<std::vector<long long>>();
        blc.validate();
        return blc;
    }
    if (kind == "sc") {
        SCSpec sc;
        sc.n = j.at("n").get<int>();
        sc.r = j.at("r").get<int>();
        sc.m = j.at("m").get<std::vector<long long>>();
        sc.a = j.at("a").get<std::vector<long long>>();
        for (const auto& row : j.at("h")) sc.rho.push_back(ResidueFunctional::linear(row.get<std::vector<long long>>()));
        sc.validate();
        return sc;
    }
    throw std::invalid_argument("code spec: unknown kind \"" + kind + "\"");
}

std::string distance_kind_to_string(const DistanceKind& kind) { return kind.name(); }

json enumerator_to_json(const Enumerator& e) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["coeffs"] = coeff_strings(e.poly);
    j["code"] = code_spec_to_json(e.code);
    j["distance"] = e.distance.name();
    if (e.distance.id == DistanceId::lee) j["distance_r"] = e.distance.lee_r;
    j["method"] = e.method;
    return j;
}

Enumerator enumerator_from_json(const json& j) {
    check_schema(j, "enumerator");
    Enumerator e;
    e.poly = poly_from_strings(j.at("coeffs"));
    e.code = code_spec_from_json(j.at("code"));
    e.distance = DistanceKind::parse(j.at("distance").get<std::string>(),
                                     j.contains("distance_r") ? j.at("distance_r").get<int>() : 0);
    e.method = j.at("method").get<std::string>();
    return e;
}

json btable_to_json(const BTable& bt) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["m"] = bt.m;
    j["precision_bits"] = bt.precision_bits;
    json entries = json::array();
    json prov = json::array();
    for (unsigned row = 0; row < bt.m; ++row) {
        json erow = json::array();
        json prow = json::array();
        for (unsigned col = 0; col < bt.m; ++col) {
            std::size_t idx = static_cast<std::size_t>(row) * bt.m + col;
            erow.push_back(coeff_strings(bt.entries[idx]));
            prow.push_back(provenance_name(bt.prov[idx]));
        }
        entries.push_back(std::move(erow));
        prov.push_back(std::move(prow));
    }
    j["entries"] = std::move(entries);
    j["provenance"] = std::move(prov);
    return j;
}

BTable btable_from_json(const json& j) {
    check_schema(j, "btable");
    BTable bt;
    bt.m = j.at("m").get<unsigned>();
    bt.precision_bits = j.at("precision_bits").get<unsigned>();
    const auto& entries = j.at("entries");
    if (entries.size() != bt.m) throw std::invalid_argument("btable: row count differs from m");
    bt.entries.reserve(static_cast<std::size_t>(bt.m) * bt.m);
    for (const auto& row : entries) {
        if (row.size() != bt.m) throw std::invalid_argument("btable: column count differs from m");
        for (const auto& e : row) bt.entries.push_back(poly_from_strings(e));
    }
    bt.prov.assign(static_cast<std::size_t>(bt.m) * bt.m, BProvenance::direct);
    if (j.contains("provenance")) {
        std::size_t idx = 0;
        for (const auto& row : j.at("provenance"))
            for (const auto& name : row) {
                for (BProvenance p : {BProvenance::direct, BProvenance::boundary, BProvenance::diag,
                                      BProvenance::antidiag, BProvenance::cosine, BProvenance::power,
                                      BProvenance::symmetry, BProvenance::scaling})
                    if (name.get<std::string>() == provenance_name(p)) bt.prov[idx] = p;
                ++idx;
            }
    }
    return bt;
}

}  // namespace denum
