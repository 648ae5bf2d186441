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


#ifndef GNPS_RESOURCES_H
#define GNPS_RESOURCES_H

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gnps/model.h"

namespace gnps {

using FloatResource = ResourceT<FScalar>;

/// (|0..0> + |1..1> + ... + |d-1..d-1>) / sqrt(d), one ancilla factor of
/// dimension d per party. d = 2 gives |g_n>, d = 4 the ququad GHZ |g(4)>.
/// Exact for d in {1, 2, 4, 8, ...} up to powers of two; other d throw
/// ArithmeticError.
Resource ghz_resource(const std::vector<std::string> &parties, size_t d = 2);

/// alpha|0..0> + beta|1..1>, not renormalized.
Resource weighted_ghz_resource(const std::vector<std::string> &parties, const CScalar &alpha, const CScalar &beta);
FloatResource weighted_ghz_float(const std::vector<std::string> &parties, double alpha, double beta);

/// (|001> + |010> + |100>) / sqrt3 on three parties (floating path).
FloatResource w3_resource(const std::vector<std::string> &parties);

/// Two GHZ copies; every party holds ancilla factors [2, 2] (copy 1, copy 2).
Resource psi3_resource(const std::vector<std::string> &parties);

/// Three EPR pairs shared as phi+_{AB} phi+_{B'C} phi+_{A'C'}; party k holds
/// factors [2, 2] = (X, X').
Resource phi3_resource(const std::vector<std::string> &parties);

/// |0...0> with the given ancilla shape per party.
Resource product_resource(const std::vector<std::string> &parties, const std::vector<std::vector<size_t>> &shapes);

/// Per-party concatenation of ancilla factors: r's factors, then s's.
template <class S>
ResourceT<S> tensor_resources(const ResourceT<S> &r, const ResourceT<S> &s, std::string name);

/// Same amplitudes with each party's factors merged into one.
template <class S>
ResourceT<S> merge_ancilla_factors(const ResourceT<S> &r, std::string name);

using AnyResource = std::variant<Resource, FloatResource>;

struct ResourceEntry {
    std::string name;
    std::string description;
    bool exact = true;
};

const std::vector<ResourceEntry> &resource_catalog();

/// Builds a named resource for the given party names.
AnyResource build_resource(std::string_view name, const std::vector<std::string> &parties);

std::vector<std::string> party_names(const PartyLayout &layout);

}  // namespace gnps

#endif
