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


#ifndef GNPS_CATALOG_H
#define GNPS_CATALOG_H

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "gnps/model.h"

namespace gnps {

/// Normalized (a + (-1)^i b + (-1)^j c + (-1)^k d) / 2 on four distinct
/// levels, with the parity constraint i xor j xor k = 0.
struct QuadSuperposition {
    std::array<size_t, 4> levels;
    std::array<int, 3> signs;

    /// The four admissible sign triples in lexicographic order:
    /// 000, 011, 101, 110.
    static std::vector<std::array<int, 3>> sign_triples();
    std::vector<CScalar> vector(size_t dim) const;
    std::string suffix() const;
};

/// (|a> + s|b>) / sqrt2 with s = +1 or -1.
std::vector<CScalar> pair_superposition(size_t dim, size_t a, size_t b, int sign);
std::vector<CScalar> basis_vector(size_t dim, size_t level);

// Constructors. Every returned set has passed StateSet::verify().

/// Eight domino states in C^3 (x) C^3.
StateSet build_s_ben();
/// Fourteen states in C^4 (x) C^3 (x) C^3 over parties A, B, C.
StateSet build_g3();
/// 6m + 2 states in C^(m+2) (x) (C^3)^m over parties A, B1..Bm.
StateSet build_g_general(size_t m);
/// Twenty-four layered-tile states in C^5 (x) C^5.
StateSet build_sg5();
/// Forty-two states in C^6 (x) C^5 (x) C^5 over parties A, B1, B2.
StateSet build_sigma();
/// Twenty-seven-state product basis of (C^3)^3 over parties A, B, C.
StateSet build_h();
/// Eight-member subset of H supported on the qubit levels {0, 1}.
StateSet build_h_prime();

/// Subset of a set by member labels, in the given order.
StateSet restrict_members(const StateSet &set, const std::vector<std::string> &labels, std::string name);

/// Concatenation of two mutually orthogonal sets on the same layout. Throws
/// InvariantError naming the first offending cross pair.
StateSet union_orthogonal(const StateSet &s, const StateSet &t);

/// A fixed local state appended to every member.
struct FixedFactor {
    /// Name of the new subsystem (becomes a party name when `holder` is new).
    std::string name;
    std::vector<CScalar> state;
    /// Party that holds the factor. An existing party absorbs it into its
    /// system (its local index becomes old * dim + new); any other name adds
    /// a new party.
    std::string holder;
};

StateSet append_fixed_local(const StateSet &s, const std::vector<FixedFactor> &fixed);

/// Inverse of append_fixed_local: contracts each member with the fixed
/// factors and returns a set on `original`.
StateSet contract_fixed_local(const StateSet &appended, const PartyLayout &original,
                              const std::vector<FixedFactor> &fixed);

struct CatalogEntry {
    std::string name;
    std::string description;
    bool takes_m = false;
};

const std::vector<CatalogEntry> &set_catalog();
/// Builds a catalog set by name; `m` is used by "g".
StateSet build_catalog_set(std::string_view name, size_t m = 2);

}  // namespace gnps

#endif
