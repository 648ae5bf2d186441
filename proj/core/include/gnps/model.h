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


#ifndef GNPS_MODEL_H
#define GNPS_MODEL_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnps/layout.h"
#include "gnps/matrix.h"
#include "gnps/qscalar.h"

namespace gnps {

struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// State vector over the full tensor space of a layout.
template <class S>
struct Ket {
    PartyLayout layout;
    std::vector<S> amplitudes;

    Ket() = default;
    Ket(PartyLayout l, std::vector<S> amps);

    /// Computational basis state over a system-only layout.
    static Ket basis(PartyLayout l, const std::vector<size_t> &digits);

    size_t dim() const { return amplitudes.size(); }
    real_of_t<S> norm2() const;
    bool is_normalized() const;
};

/// Tensor product of system-only kets; party lists are concatenated.
template <class S>
Ket<S> tensor(const std::vector<Ket<S>> &kets);

/// Hermitian inner product <x|y>; throws LayoutError on shape mismatch.
template <class S>
S inner(const Ket<S> &x, const Ket<S> &y);

/// Reduced density matrix on one party's local space (system then ancilla).
template <class S>
Matrix<S> single_party_marginal(const Ket<S> &state, std::string_view party);

/// Schmidt rank of a pure state across `group | rest`.
template <class S>
size_t schmidt_rank(const Ket<S> &state, const std::vector<std::string> &group);

/// True iff relabelling each party's local basis of x by perms[p] gives y.
/// perms[p][i] is the new index of old local index i.
template <class S>
bool lu_relabel_check(const Ket<S> &x, const Ket<S> &y, const std::vector<std::vector<size_t>> &perms);

/// Merge system parties into composite parties; each group lists component
/// party names, whose local indices combine row-major in the listed order.
template <class S>
Ket<S> group_parties(const Ket<S> &state,
                     const std::vector<std::pair<std::string, std::vector<std::string>>> &groups);

/// Exact positive-semidefiniteness test for Hermitian matrices via LDL*.
bool is_positive_semidefinite(const Matrix<CScalar> &m);
bool is_positive_semidefinite(const Matrix<FScalar> &m);

/// A fully product state: one local vector per party.
template <class S>
struct ProductState {
    PartyLayout layout;
    std::vector<std::vector<S>> locals;
    std::string label;

    Ket<S> flatten() const;
};

/// Member of a state set. `locals` is empty for general (entangled) members.
template <class S>
struct Member {
    std::string label;
    std::vector<std::vector<S>> locals;
    Ket<S> ket;

    bool is_product() const { return !locals.empty(); }
};

/// Ordered, labelled, pairwise-orthogonal set of normalized states.
template <class S>
struct StateSetT {
    std::string name;
    PartyLayout layout;
    std::vector<Member<S>> members;
    /// Free-form provenance of the set's nonlocality status. This is a
    /// recorded claim, never a verified property.
    std::string status_note;

    size_t size() const { return members.size(); }
    /// Index of a member by label, or nullopt.
    std::optional<size_t> find(std::string_view label) const;
    const Member<S> &member(std::string_view label) const;

    /// Throws InvariantError naming the first violation: duplicate label,
    /// layout mismatch, unnormalized member, or a non-orthogonal pair.
    void verify() const;
};

/// Builds a member from per-party local vectors.
template <class S>
Member<S> product_member(const PartyLayout &layout, std::string label, std::vector<std::vector<S>> locals);

/// Unordered label pairs with nonzero overlap.
template <class S>
std::vector<std::pair<std::string, std::string>> non_orthogonal_pairs(const StateSetT<S> &set);

/// Entangled (or product) ancilla state shared by the parties.
template <class S>
struct ResourceT {
    std::string name;
    /// Parties carry dim 1 and their ancilla factor dims.
    PartyLayout layout;
    std::vector<S> amplitudes;
    std::string note;

    /// Ket view over the ancilla space with each party's ancilla treated as
    /// its system (useful for marginals and Schmidt ranks).
    Ket<S> as_ket() const;
};

/// Turn a system-only ket into a resource. `shares` gives, per resulting
/// party, the component parties of `state` it holds (in order); these become
/// the party's ancilla factors.
template <class S>
ResourceT<S> make_resource(std::string name, const Ket<S> &state,
                           const std::vector<std::pair<std::string, std::vector<std::string>>> &shares,
                           std::string note = {});

/// member (system) tensor resource (ancilla) in canonical order. Party names
/// and order must agree.
template <class S>
Ket<S> attach_resource(const Ket<S> &member, const ResourceT<S> &resource);

using StateSet = StateSetT<CScalar>;
using Resource = ResourceT<CScalar>;
using ExactKet = Ket<CScalar>;

Ket<FScalar> to_float(const Ket<CScalar> &k);
StateSetT<FScalar> to_float(const StateSet &s);
ResourceT<FScalar> to_float(const Resource &r);

}  // namespace gnps

#endif
