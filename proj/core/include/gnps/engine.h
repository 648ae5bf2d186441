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


#ifndef GNPS_ENGINE_H
#define GNPS_ENGINE_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnps/model.h"
#include "gnps/protocol.h"

namespace gnps {

/// Sparse vector over a layout's global index: (index, amplitude) pairs with
/// strictly increasing indices and no zero amplitudes.
template <class S>
using Sparse = std::vector<std::pair<size_t, S>>;

template <class S>
Sparse<S> to_sparse(const std::vector<S> &dense);
template <class S>
std::vector<S> to_dense(const Sparse<S> &v, size_t dim);

/// Column-compressed local operator: cols[c] lists the nonzero (row, value)
/// entries of column c.
template <class S>
struct LocalOp {
    size_t dim = 0;
    std::vector<std::vector<std::pair<size_t, S>>> cols;

    static LocalOp from(const Matrix<S> &m);
};

/// Applies a party-local operator (identity elsewhere) to a sparse state.
template <class S>
Sparse<S> apply_local(const PartyLayout &layout, size_t party, const LocalOp<S> &op, const Sparse<S> &v);
template <class S>
Sparse<S> apply_local(const PartyLayout &layout, size_t party, const Matrix<S> &op, const Sparse<S> &v);

struct PairReadoutError : ProtocolError {
    enum class Kind { degenerate, not_branch_product, inexact };
    Kind kind;
    PairReadoutError(Kind k, const std::string &what) : ProtocolError(what), kind(k) {}
};

/// Local measurements that separate a residual pair of the form
/// X0 + X1 versus X0 - X1 with X0, X1 fully product and, party by party,
/// either proportional or orthogonal. Each party whose factors are
/// orthogonal measures {e_plus, e_minus, completion}.
template <class S>
struct PairReadoutPlan {
    PartyLayout layout;
    std::vector<size_t> parties;
    /// basis[k][0] and basis[k][1] are e_plus and e_minus of parties[k].
    std::vector<std::array<std::vector<S>, 2>> basis;
};

/// Throws PairReadoutError when the pair is degenerate (X0 or X1 vanishes,
/// or X0 is proportional to X1), when X0 or X1 is not fully product or a
/// party's factors are neither proportional nor orthogonal, or (exact path
/// only) when a normalization leaves Q(sqrt2).
template <class S>
PairReadoutPlan<S> plan_pair_readout(const PartyLayout &layout, const Sparse<S> &plus, const Sparse<S> &minus);

template <class S>
struct ReadoutOutcome {
    /// One character per measuring party: '+', '-'; "none" for the completion.
    std::string signs;
    /// True when the number of '-' is even (the "+" label is declared).
    bool declares_plus = false;
    bool completion = false;
    real_of_t<S> mass{};
};

/// Outcome masses (squared norms, not normalized) of `psi` under the plan.
/// The completion outcome collects everything outside the readout basis.
template <class S>
std::vector<ReadoutOutcome<S>> pair_readout_execute(const PairReadoutPlan<S> &plan, const Sparse<S> &psi);

template <class S>
struct RunReportT {
    using R = real_of_t<S>;
    struct Leaf {
        std::string path;
        /// Empty when the branch rejects.
        std::string declared;
        R probability{};
        bool correct = false;
    };
    struct StateResult {
        std::string label;
        R weight{};
        R success{};
        /// Sum over every leaf reached; equals 1 for a complete protocol.
        R total{};
        std::vector<Leaf> leaves;
    };
    struct AuditFailure {
        std::string path;
        std::string first;
        std::string second;
    };
    struct Issue {
        std::string path;
        std::string message;
    };

    std::string protocol;
    std::string set;
    std::string resource;
    bool exact = is_exact_v<S>;
    /// Prior-weighted probability of a correct declaration.
    R success{};
    std::vector<StateResult> states;
    std::vector<AuditFailure> audit_failures;
    std::vector<Issue> issues;
    size_t audited_nodes = 0;

    bool audit_passed() const { return audit_failures.empty(); }
    /// Every state's branch probabilities add up to 1.
    bool totals_ok() const;
};

using RunReport = RunReportT<CScalar>;

/// Runs every member of `set`, tensored with `resource`, through every
/// nonzero branch of the protocol. `prior` defaults to uniform.
template <class S>
RunReportT<S> run_exhaustive(const ProtocolTree &p, const StateSetT<S> &set, const ResourceT<S> &resource,
                             const std::optional<std::vector<real_of_t<S>>> &prior = std::nullopt);

/// Surviving (unnormalized) state of one candidate at one leaf.
template <class S>
struct Residual {
    std::string path;
    std::string label;
    Sparse<S> state;
};

/// Residuals reaching each leaf of a subtree when it is applied to every
/// member tensored with the resource. Leaf actions are not executed.
template <class S>
std::vector<Residual<S>> leaf_residuals(const ProtocolNode &root, const StateSetT<S> &set,
                                        const ResourceT<S> &resource);

struct SequentialTask {
    std::string name;
    std::string set_ref;
    size_t rounds = 1;
    /// partition[r] lists the ancilla factor positions (the same for every
    /// party) consumed in round r.
    std::vector<std::vector<size_t>> partition;
};

/// Splits a resource into per-round resources. Throws ProtocolError when the
/// partition overlaps, indexes a missing factor, or the resource does not
/// factor exactly across the rounds.
template <class S>
std::vector<ResourceT<S>> split_resource(const ResourceT<S> &resource, const SequentialTask &task);

template <class S>
struct SequentialReportT {
    std::vector<RunReportT<S>> rounds;
    /// Product of the per-round successes (draws are independent).
    real_of_t<S> success{};
};

using SequentialReport = SequentialReportT<CScalar>;

/// `protocols` holds one tree per round, or a single tree reused in every round.
template <class S>
SequentialReportT<S> run_sequential(const SequentialTask &task, const StateSetT<S> &set, const ResourceT<S> &resource,
                                    const std::vector<ProtocolTree> &protocols);

}  // namespace gnps

#endif
