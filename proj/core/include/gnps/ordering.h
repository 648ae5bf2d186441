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


#ifndef GNPS_ORDERING_H
#define GNPS_ORDERING_H

#include <optional>
#include <string>
#include <vector>

#include "gnps/engine.h"
#include "gnps/io.h"
#include "gnps/resources.h"

namespace gnps {

/// A discrimination task: one state drawn from `set_ref` (single), or one
/// independent draw per round (sequential).
struct Task {
    enum class Kind { single, sequential };

    std::string name;
    std::string set_ref;
    Kind kind = Kind::single;
    size_t rounds = 1;
    /// Per-member prior; uniform when absent. Must sum to 1 exactly.
    std::optional<std::vector<QScalar>> prior;
    /// Sequential only: ancilla factor positions consumed per round.
    std::vector<std::vector<size_t>> partition;

    SequentialTask sequential() const;
};

Json to_json(const Task &t);
Task task_from_json(const Json &j);

/// Resolves a set reference: catalog names ("g3", "sigma", ...), display
/// names ("G3", "Sigma", "S_Ben", "H"), "G<n>" for the n-party family, or
/// a path to a StateSet JSON file. Sets read from files are checked with
/// StateSet::verify unless `verify` is false.
StateSet resolve_set_ref(const std::string &ref, bool verify = true);

/// Resolves a resource reference for the given parties: catalog names
/// ("ghz", "psi3", ...), "g<n>" (GHZ), "g(4)" (ququad GHZ), "phi+", or a
/// path to a Resource JSON file.
AnyResource resolve_resource_ref(const std::string &ref, const std::vector<std::string> &parties);

/// A protocol JSON file, or a catalog protocol ("theorem1", "prop3" with m,
/// "prop5").
ProtocolTree resolve_protocol_ref(const std::string &ref, size_t m = 2);

/// Protocol-relative success probability. Exact unless the resource is on
/// the floating path.
struct Payoff {
    bool exact = true;
    QScalar value;
    double approx = 0.0;

    std::string str() const;
    bool is_one() const;
};

/// Runs the task with the resource. Sequential tasks take one protocol per
/// round or a single protocol reused in every round.
Payoff payoff(const Task &task, const StateSet &set, const AnyResource &resource,
              const std::vector<ProtocolTree> &protocols);

struct Provenance {
    enum class Kind { achieved_by_protocol, protocol_relative_failure, cited_impossibility, checker_evidence };

    Kind kind;
    std::string resource;
    /// Protocol name for the two protocol kinds.
    std::string protocol;
    std::optional<Payoff> probability;
    /// Descriptive source of the statement.
    std::string reference;
    /// Epistemic status shown to the reader, e.g. "computed exactly",
    /// "published proof", "conjectured", "evidence only".
    std::string status;
    Json evidence;
};

std::string to_string(Provenance::Kind k);

struct OrderingClaim {
    enum class Relation { strict, weak, incomparable_evidence };

    std::string id;
    std::string task;
    std::string left;
    std::string right;
    Relation relation = Relation::weak;
    std::vector<Provenance> left_records;
    std::vector<Provenance> right_records;
    /// Supporting facts such as Schmidt ranks.
    Json facts = Json::object();
    std::string note;
};

std::string to_string(OrderingClaim::Relation r);
Json to_json(const Provenance &p);
Json to_json(const OrderingClaim &c);

/// The claim cannot be supported by the available provenance.
struct ClaimRefused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws ClaimRefused unless: a strict relation has an achieved record with
/// probability exactly 1 on the left and a failure or impossibility record on
/// the right; a weak relation has an achieved record on the left; every
/// record carries a status.
void check_claim(const OrderingClaim &c);

struct ClaimOptions {
    /// Family size for "ghzn-beats-partial" (G_{m+1}), 1..4.
    size_t m = 2;
    /// User-supplied protocol where the claim has no shipped one.
    std::optional<ProtocolTree> protocol;
    /// "reflexive": set, resource and protocol references.
    std::string set_ref = "g3";
    std::string resource_ref = "g3";
    std::string protocol_ref = "theorem1";
};

struct ClaimInfo {
    std::string id;
    std::string summary;
};

const std::vector<ClaimInfo> &claim_catalog();

/// Assembles a checked claim. Throws ClaimRefused on missing provenance and
/// std::invalid_argument on an unknown id.
OrderingClaim ordering_report(const std::string &id, const ClaimOptions &options = {});

}  // namespace gnps

#endif
