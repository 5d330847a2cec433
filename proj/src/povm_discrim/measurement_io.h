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

#ifndef POVM_DISCRIM_MEASUREMENT_IO_H
#define POVM_DISCRIM_MEASUREMENT_IO_H

#include <string>
#include <string_view>
#include <vector>

#include "povm_discrim/errors.h"
#include "povm_discrim/measurements.h"

namespace povm_discrim {

/// Malformed JSON or a schema violation. line/column are 1-based; 0 when unknown.
struct SpecParseError : ValidationError {
    SpecParseError(const std::string &what, size_t line, size_t column)
        : ValidationError(what), line(line), column(column) {}
    size_t line;
    size_t column;
};

/// Parsed but not yet validated measurement set. Empty priors mean uniform.
struct SetSpec {
    std::vector<KrausMeasurement> measurements;
    std::vector<double> priors;

    /// Throws ValidationError if the measurements do not form a valid set.
    MeasurementSet to_set() const;
};

/// Accepted documents:
///   {"measurements": [M, ...], "priors": [p, ...]}   priors optional
///   [M, ...]                                         uniform priors
///   M                                                a single measurement
/// with M = {"name": str, "dim": int, "kraus": [[[[re, im], ...], ...], ...]} (row-major).
SetSpec parse_set_spec(std::string_view text);

/// Writes the object form. Doubles are printed with round-trip precision,
/// so parse_set_spec(write_set_spec(s)) reproduces every entry bit for bit.
std::string write_set_spec(const SetSpec &spec);

}  // namespace povm_discrim

#endif
