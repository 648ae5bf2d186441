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


#ifndef GNPS_LAYOUT_H
#define GNPS_LAYOUT_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gnps {

struct LayoutError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Party {
    std::string name;
    /// Dimension of the party's share of the system being discriminated.
    size_t dim = 1;
    /// Dimensions of the ancilla factors (resource shares) held by the party.
    std::vector<size_t> ancilla;
    /// Optional names for the system basis levels, e.g. {"p", "q", "1", "2"}.
    std::vector<std::string> labels;

    size_t ancilla_dim() const;
    /// dim * ancilla_dim(); party-local index is sys * ancilla_dim() + anc.
    size_t local_dim() const { return dim * ancilla_dim(); }
};

/// Ordered parties over a tensor-product space.
///
/// Flattening is fixed: all system factors in party order, then all ancilla
/// factors in party order (a party's own ancilla factors stay contiguous).
/// A global index is therefore sys_index * ancilla_dim() + anc_index.
class PartyLayout {
   public:
    PartyLayout() = default;
    explicit PartyLayout(std::vector<Party> parties);

    /// System-only layout from (name, dim) pairs.
    static PartyLayout systems(const std::vector<std::pair<std::string, size_t>> &parties);

    const std::vector<Party> &parties() const { return parties_; }
    size_t size() const { return parties_.size(); }
    const Party &party(size_t p) const { return parties_.at(p); }
    /// Throws LayoutError on an unknown name.
    size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const;

    size_t system_dim() const { return system_dim_; }
    size_t ancilla_dim() const { return ancilla_dim_; }
    size_t total_dim() const { return system_dim_ * ancilla_dim_; }
    bool has_ancilla() const { return ancilla_dim_ > 1; }

    /// Copy with the ancilla shapes replaced (one entry per party).
    PartyLayout with_ancillas(const std::vector<std::vector<size_t>> &ancillas) const;
    PartyLayout without_ancillas() const;

    /// Stride of party p's system digit in the global index.
    size_t system_stride(size_t p) const { return sys_strides_[p] * ancilla_dim_; }
    /// Stride of party p's (combined) ancilla digit in the global index.
    size_t ancilla_stride(size_t p) const { return anc_strides_[p]; }

    size_t system_digit(size_t global, size_t p) const {
        return (global / system_stride(p)) % parties_[p].dim;
    }
    size_t ancilla_digit(size_t global, size_t p) const {
        return (global / anc_strides_[p]) % parties_[p].ancilla_dim();
    }
    size_t local_index(size_t global, size_t p) const {
        return system_digit(global, p) * parties_[p].ancilla_dim() + ancilla_digit(global, p);
    }
    /// Global index with party p's digits set to zero.
    size_t strip_party(size_t global, size_t p) const {
        return global - system_digit(global, p) * system_stride(p) - ancilla_digit(global, p) * anc_strides_[p];
    }
    /// Offset contributed by a party-local index.
    size_t local_offset(size_t local, size_t p) const {
        size_t ad = parties_[p].ancilla_dim();
        return (local / ad) * system_stride(p) + (local % ad) * anc_strides_[p];
    }

    /// Same party names and dimensions (labels ignored).
    bool same_shape(const PartyLayout &o) const;

   private:
    std::vector<Party> parties_;
    std::vector<size_t> sys_strides_;
    std::vector<size_t> anc_strides_;
    size_t system_dim_ = 1;
    size_t ancilla_dim_ = 1;
};

}  // namespace gnps

#endif
