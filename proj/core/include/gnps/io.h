// Copyright 2026 The gnps Authors
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


#ifndef GNPS_IO_H
#define GNPS_IO_H

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "gnps/engine.h"
#include "gnps/model.h"
#include "gnps/oplm.h"
#include "gnps/protocol.h"
#include "gnps/resources.h"

namespace gnps {

using Json = nlohmann::json;

/// Malformed or inconsistent JSON input.
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scalars. Exact reals are strings in the QScalar grammar and complex values
// are ["re", "im"]. Floating values are numbers, complex ones [re, im].
Json to_json(const QScalar &x);
Json to_json(const CScalar &x);
Json to_json(const FScalar &x);
Json real_to_json(double x);
CScalar exact_scalar_from_json(const Json &j);
FScalar float_scalar_from_json(const Json &j);

Json to_json(const PartyLayout &layout);
/// Accepts {party, dim, labels?, ancilla?} entries; dim defaults to 1.
PartyLayout layout_from_json(const Json &j);

/// {rows, cols, entries: [[r, c, scalar], ...]}.
Json to_json(const ExactMatrix &m);
/// Accepts the sparse form or dense rows [[scalar, ...], ...].
ExactMatrix matrix_from_json(const Json &j);

/// {name, note?, layout, members: [{label, locals} | {label, entries}]}.
Json to_json(const StateSet &set);
StateSet state_set_from_json(const Json &j);

/// {name, note, float, layout: [{party, ancilla}], dim, entries}.
Json to_json(const Resource &r);
Json to_json(const FloatResource &r);
Json to_json(const AnyResource &r);
AnyResource resource_from_json(const Json &j);

Json to_json(const LeafAction &a);
Json to_json(const ProtocolNode &node);
Json to_json(const ProtocolTree &p);
NodePtr node_from_json(const Json &j);
ProtocolTree protocol_from_json(const Json &j);

Json to_json(const ValidationReport &r);
template <class S>
Json to_json(const RunReportT<S> &r);
template <class S>
Json to_json(const SequentialReportT<S> &r);
Json to_json(const CutResult &c, bool include_basis = true);
Json to_json(const IrreducibilityReport &r, bool include_basis = true);

Json read_json_file(const std::filesystem::path &path);
/// Writes with two-space indentation; object keys are sorted.
void write_json_file(const std::filesystem::path &path, const Json &j);

}  // namespace gnps

#endif
