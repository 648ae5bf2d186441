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


#ifndef GNPS_PROTOCOLS_H
#define GNPS_PROTOCOLS_H

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gnps/protocol.h"

namespace gnps {

/// One term P[(sys levels); (ancilla values)] of a diagonal projector. An
/// empty ancilla list means the identity on the ancilla.
struct ProjectorBlock {
    std::vector<size_t> sys;
    std::vector<size_t> anc;
};

/// Sum of |s><s| (x) |a><a| over the blocks on a sys_dim x anc_dim local space.
ExactMatrix block_projector(size_t sys_dim, size_t anc_dim, const std::vector<ProjectorBlock> &blocks);
/// Identity minus the sum of the given operators.
ExactMatrix complement(const std::vector<ExactMatrix> &ops);
/// (I (x) X^k) op (I (x) X^-k) with X the cyclic shift |a> -> |a+1 mod anc_dim>.
ExactMatrix shift_conjugate(const ExactMatrix &op, size_t sys_dim, size_t anc_dim, size_t k);

/// Measures the system in the given orthonormal vectors (identity on the
/// ancilla); outcome t declares labels[t], the completion rejects.
NodePtr basis_measurement(const std::string &actor, size_t anc_dim, const std::vector<std::vector<CScalar>> &basis,
                          const std::vector<std::string> &labels);

/// GHZ-assisted tree on G_{m+1} with |g_{m+1}> (m = 2 is the
/// three-party case with parties A, B, C; m = 1 uses one EPR pair).
ProtocolTree build_prop3_protocol(size_t m);
ProtocolTree build_theorem1_protocol();
/// Protocol for Sigma with the ququad GHZ (or two GHZ copies).
ProtocolTree build_prop5_protocol();

struct ProtocolCatalogEntry {
    std::string name;
    std::string description;
};
const std::vector<ProtocolCatalogEntry> &protocol_catalog();
/// "theorem1", "prop3" (uses m), "prop5".
ProtocolTree build_catalog_protocol(const std::string &name, size_t m = 2);

/// Bob-1's two-outcome twist-breaking node {M^L1, I - M^L1} on Sigma with
/// ancilla factors [2, 2] (b1 first); both children reject.
NodePtr build_twistbreak_L1();

struct TwistBreakAnalysis {
    /// outcome -> member label -> set of b1 digits in the residual support.
    std::map<std::string, std::map<std::string, std::set<size_t>>> tags;
    /// Per outcome, every inspected member carries one and the same b1 digit.
    bool constant_tag = false;
};

/// Applies the twist-breaking node to `set` (x) `resource` and inspects the
/// b1 digit (first ancilla factor of B1) of the named members.
TwistBreakAnalysis analyze_twistbreak(const StateSet &set, const Resource &resource,
                                      const std::vector<std::string> &members);

/// Labels of the two-state tiles of the A-B1 slice of Sigma (Omega^1..Omega^4).
std::vector<std::string> sigma_inner_layer_labels();

}  // namespace gnps

#endif
