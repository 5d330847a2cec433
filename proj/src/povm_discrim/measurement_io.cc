// Copyright 2026 The povm_discrim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "povm_discrim/measurement_io.h"

#include <json.hpp>

namespace povm_discrim {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string &what) {
    throw SpecParseError("spec: " + what, 0, 0);
}

double number(const json &j, const std::string &where) {
    if (!j.is_number()) {
        schema_error(where + " must be a number");
    }
    return j.get<double>();
}

KrausMeasurement read_measurement(const json &j, size_t index) {
    std::string where = "measurement " + std::to_string(index);
    if (!j.is_object() || !j.contains("kraus")) {
        schema_error(where + " must be an object with a \"kraus\" array");
    }
    std::string name = j.value("name", "m" + std::to_string(index + 1));
    const json &kraus = j["kraus"];
    if (!kraus.is_array() || kraus.empty()) {
        schema_error(where + ": \"kraus\" must be a non-empty array");
    }
    size_t dim = kraus[0].is_array() ? kraus[0].size() : 0;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_unsigned()) {
            schema_error(where + ": \"dim\" must be a positive integer");
        }
        dim = j["dim"].get<size_t>();
    }
    if (dim == 0) {
        schema_error(where + ": dimension must be positive");
    }
    std::vector<Matrix> ops;
    for (size_t a = 0; a < kraus.size(); a++) {
        std::string op_where = where + ", Kraus operator " + std::to_string(a);
        const json &rows = kraus[a];
        if (!rows.is_array() || rows.size() != dim) {
            schema_error(op_where + " must have " + std::to_string(dim) + " rows");
        }
        Matrix f(dim);
        for (size_t r = 0; r < dim; r++) {
            if (!rows[r].is_array() || rows[r].size() != dim) {
                schema_error(op_where + ", row " + std::to_string(r) + " must have " + std::to_string(dim) +
                             " entries");
            }
            for (size_t c = 0; c < dim; c++) {
                const json &z = rows[r][c];
                if (z.is_array() && z.size() == 2) {
                    f(r, c) = Complex(number(z[0], op_where), number(z[1], op_where));
                } else {
                    f(r, c) = number(z, op_where);
                }
            }
        }
        ops.push_back(std::move(f));
    }
    return KrausMeasurement(std::move(name), std::move(ops));
}

std::pair<size_t, size_t> line_column(std::string_view text, size_t byte) {
    size_t line = 1, column = 1;
    for (size_t i = 0; i < byte && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

}  // namespace

MeasurementSet SetSpec::to_set() const {
    if (priors.empty()) {
        return MeasurementSet::uniform(measurements);
    }
    return MeasurementSet(measurements, priors);
}

SetSpec parse_set_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw SpecParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column),
                             line, column);
    }
    SetSpec spec;
    const json *list = nullptr;
    if (doc.is_array()) {
        list = &doc;
    } else if (doc.is_object() && doc.contains("measurements")) {
        list = &doc["measurements"];
        if (doc.contains("priors")) {
            if (!doc["priors"].is_array()) {
                schema_error("\"priors\" must be an array");
            }
            for (const auto &p : doc["priors"]) {
                spec.priors.push_back(number(p, "prior"));
            }
        }
    } else if (doc.is_object() && doc.contains("kraus")) {
        spec.measurements.push_back(read_measurement(doc, 0));
        return spec;
    } else {
        schema_error("expected an object with \"measurements\", an array of measurements, or one measurement");
    }
    if (!list->is_array() || list->empty()) {
        schema_error("\"measurements\" must be a non-empty array");
    }
    for (size_t i = 0; i < list->size(); i++) {
        spec.measurements.push_back(read_measurement((*list)[i], i));
    }
    return spec;
}

std::string write_set_spec(const SetSpec &spec) {
    json doc;
    doc["measurements"] = json::array();
    for (const auto &m : spec.measurements) {
        json kraus = json::array();
        for (const auto &f : m.kraus()) {
            json rows = json::array();
            for (size_t r = 0; r < f.dim(); r++) {
                json row = json::array();
                for (size_t c = 0; c < f.dim(); c++) {
                    row.push_back({f(r, c).real(), f(r, c).imag()});
                }
                rows.push_back(std::move(row));
            }
            kraus.push_back(std::move(rows));
        }
        doc["measurements"].push_back({{"name", m.name()}, {"dim", m.dim()}, {"kraus", std::move(kraus)}});
    }
    if (!spec.priors.empty()) {
        doc["priors"] = spec.priors;
    }
    return doc.dump(2) + "\n";
}

}  // namespace povm_discrim
