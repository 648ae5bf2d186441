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


#ifndef GNPS_OPLM_H
#define GNPS_OPLM_H

#include <optional>
#include <string>
#include <vector>

#include "gnps/model.h"

namespace gnps {

/// Acting group of a cut; the remaining parties form the other side.
struct Cut {
    std::vector<std::string> group;

    std::string str() const;
};

enum class CutMode {
    /// Every single party.
    singles,
    /// Every group of all parties but one.
    leave_one_out,
    /// Singles followed by the leave-one-out groups (deduplicated).
    standard,
    /// Every nonempty proper subset of the parties.
    all,
};

CutMode parse_cut_mode(const std::string &text);
std::vector<Cut> enumerate_cuts(const PartyLayout &layout, CutMode mode);

struct CutResult {
    Cut cut;
    /// Dimension D of the acting group's joint space (D^2 real unknowns).
    size_t group_dim = 0;
    /// Number of independent real constraints.
    size_t rank = 0;
    /// Dimension of the space of orthogonality-preserving Hermitian E.
    size_t dimension = 0;
    bool trivial = false;
    bool identity_in_span = false;
    std::vector<ExactMatrix> basis;
    /// A solution that is not a multiple of the identity (nontrivial cuts).
    std::optional<ExactMatrix> witness;
};

struct IrreducibilityReport {
    std::string set;
    std::vector<CutResult> cuts;

    bool all_trivial() const;
};

/// Real coordinates of a Hermitian D x D matrix: the D diagonal entries,
/// then (Re, Im) of entry (k, l) for k < l in row-major order.
std::vector<QScalar> hermitian_coordinates(const ExactMatrix &e);
ExactMatrix hermitian_from_coordinates(const std::vector<QScalar> &x, size_t d);

/// Solves <psi_i| E (x) I |psi_j> = 0 for all i != j over Hermitian E on the
/// acting group's joint space (group parties in layout order, row-major).
CutResult oplm_space(const StateSet &set, const Cut &cut);

/// oplm_space for every cut of the chosen mode.
IrreducibilityReport gnps_evidence(const StateSet &set, CutMode mode = CutMode::standard);

}  // namespace gnps

#endif
