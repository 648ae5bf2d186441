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


#include "gnps/resources.h"

#include <cmath>

namespace gnps {

namespace {

template <class S>
ResourceT<S> from_amplitudes(std::string name, const std::vector<std::string> &parties,
                             const std::vector<std::vector<size_t>> &shapes, std::vector<S> amps, std::string note) {
    std::vector<Party> ps;
    for (size_t p = 0; p < parties.size(); p++) {
        ps.push_back(Party{parties[p], 1, shapes[p], {}});
    }
    PartyLayout layout(std::move(ps));
    if (layout.ancilla_dim() != amps.size()) {
        throw LayoutError("resource '" + name + "' amplitude count does not match its shape");
    }
    return {std::move(name), std::move(layout), std::move(amps), std::move(note)};
}

/// Index of the state whose every party's factors equal `digits` (row-major).
size_t repeated_index(size_t parties, size_t local_dim, size_t local) {
    size_t g = 0;
    for (size_t p = 0; p < parties; p++) {
        g = g * local_dim + local;
    }
    return g;
}

size_t ipow(size_t b, size_t e) {
    size_t r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

CScalar inv_sqrt_exact(size_t d) {
    auto s = sqrt_exact(QScalar(static_cast<long>(d)));
    if (!s) {
        throw ArithmeticError("1/sqrt(" + std::to_string(d) + ") is outside Q(sqrt2)");
    }
    return CScalar(s->inv());
}

}  // namespace

Resource ghz_resource(const std::vector<std::string> &parties, size_t d) {
    size_t n = parties.size();
    std::vector<CScalar> amps(ipow(d, n));
    CScalar c = inv_sqrt_exact(d);
    for (size_t k = 0; k < d; k++) {
        amps[repeated_index(n, d, k)] = c;
    }
    std::string name = d == 2 ? "g" + std::to_string(n) : "g(" + std::to_string(d) + ")";
    return from_amplitudes(name, parties, std::vector<std::vector<size_t>>(n, {d}), std::move(amps),
                           std::to_string(n) + "-party GHZ state of local dimension " + std::to_string(d));
}

Resource weighted_ghz_resource(const std::vector<std::string> &parties, const CScalar &alpha, const CScalar &beta) {
    size_t n = parties.size();
    std::vector<CScalar> amps(ipow(2, n));
    amps[0] = alpha;
    amps[amps.size() - 1] = beta;
    return from_amplitudes("chi(" + alpha.str() + "," + beta.str() + ")", parties,
                           std::vector<std::vector<size_t>>(n, {2}), std::move(amps),
                           "weighted GHZ alpha|0..0> + beta|1..1>");
}

FloatResource weighted_ghz_float(const std::vector<std::string> &parties, double alpha, double beta) {
    size_t n = parties.size();
    std::vector<FScalar> amps(ipow(2, n));
    amps[0] = alpha;
    amps[amps.size() - 1] = beta;
    return from_amplitudes("chi(" + std::to_string(alpha) + "," + std::to_string(beta) + ")", parties,
                           std::vector<std::vector<size_t>>(n, {2}), std::move(amps),
                           "weighted GHZ alpha|0..0> + beta|1..1> (floating path)");
}

FloatResource w3_resource(const std::vector<std::string> &parties) {
    if (parties.size() != 3) {
        throw LayoutError("w3 needs three parties");
    }
    std::vector<FScalar> amps(8);
    double c = 1.0 / std::sqrt(3.0);
    amps[1] = amps[2] = amps[4] = c;
    return from_amplitudes("w3", parties, std::vector<std::vector<size_t>>(3, {2}), std::move(amps),
                           "W state (floating path)");
}

Resource psi3_resource(const std::vector<std::string> &parties) {
    Resource g = ghz_resource(parties, 2);
    Resource r = tensor_resources(g, g, "psi3");
    r.note = "two GHZ copies; each party holds one qubit of each copy";
    return r;
}

Resource phi3_resource(const std::vector<std::string> &parties) {
    if (parties.size() != 3) {
        throw LayoutError("phi3 needs three parties");
    }
    // Party digits (X, X'): Alice (A, A'), Bob (B, B'), Charlie (C, C').
    // Pairs: A-B, B'-C, A'-C'.
    std::vector<CScalar> amps(64);
    CScalar c(QScalar(0, mpq_class(1, 4)));  // 1 / (2 sqrt2)
    for (size_t x = 0; x < 2; x++) {
        for (size_t y = 0; y < 2; y++) {
            for (size_t z = 0; z < 2; z++) {
                size_t alice = 2 * x + z;
                size_t bob = 2 * x + y;
                size_t charlie = 2 * y + z;
                amps[alice * 16 + bob * 4 + charlie] = c;
            }
        }
    }
    return from_amplitudes("phi3", parties, std::vector<std::vector<size_t>>(3, {2, 2}), std::move(amps),
                           "three EPR pairs, one between each two parties");
}

Resource product_resource(const std::vector<std::string> &parties, const std::vector<std::vector<size_t>> &shapes) {
    size_t dim = 1;
    for (const auto &s : shapes) {
        for (size_t d : s) {
            dim *= d;
        }
    }
    std::vector<CScalar> amps(dim);
    amps[0] = CScalar(1);
    return from_amplitudes("product", parties, shapes, std::move(amps), "unentangled ancillas |0...0>");
}

template <class S>
ResourceT<S> tensor_resources(const ResourceT<S> &r, const ResourceT<S> &s, std::string name) {
    const auto &rl = r.layout;
    const auto &sl = s.layout;
    if (rl.size() != sl.size()) {
        throw LayoutError("tensor_resources: party counts differ");
    }
    std::vector<std::string> names;
    std::vector<std::vector<size_t>> shapes;
    for (size_t p = 0; p < rl.size(); p++) {
        if (rl.party(p).name != sl.party(p).name) {
            throw LayoutError("tensor_resources: party names differ");
        }
        names.push_back(rl.party(p).name);
        auto sh = rl.party(p).ancilla;
        sh.insert(sh.end(), sl.party(p).ancilla.begin(), sl.party(p).ancilla.end());
        shapes.push_back(std::move(sh));
    }
    size_t n = rl.size();
    std::vector<S> amps(r.amplitudes.size() * s.amplitudes.size());
    for (size_t i = 0; i < r.amplitudes.size(); i++) {
        if (is_zero(r.amplitudes[i])) {
            continue;
        }
        for (size_t j = 0; j < s.amplitudes.size(); j++) {
            if (is_zero(s.amplitudes[j])) {
                continue;
            }
            size_t g = 0;
            size_t ri = i;
            size_t sj = j;
            size_t stride = 1;
            for (size_t p = n; p-- > 0;) {
                size_t rd = rl.party(p).ancilla_dim();
                size_t sd = sl.party(p).ancilla_dim();
                g += ((ri % rd) * sd + (sj % sd)) * stride;
                stride *= rd * sd;
                ri /= rd;
                sj /= sd;
            }
            amps[g] = r.amplitudes[i] * s.amplitudes[j];
        }
    }
    return from_amplitudes(std::move(name), names, shapes, std::move(amps), r.note + "; " + s.note);
}

template <class S>
ResourceT<S> merge_ancilla_factors(const ResourceT<S> &r, std::string name) {
    std::vector<std::string> names;
    std::vector<std::vector<size_t>> shapes;
    for (const auto &p : r.layout.parties()) {
        names.push_back(p.name);
        shapes.push_back({p.ancilla_dim()});
    }
    return from_amplitudes(std::move(name), names, shapes, r.amplitudes, r.note);
}

template ResourceT<CScalar> tensor_resources(const ResourceT<CScalar> &, const ResourceT<CScalar> &, std::string);
template ResourceT<FScalar> tensor_resources(const ResourceT<FScalar> &, const ResourceT<FScalar> &, std::string);
template ResourceT<CScalar> merge_ancilla_factors(const ResourceT<CScalar> &, std::string);
template ResourceT<FScalar> merge_ancilla_factors(const ResourceT<FScalar> &, std::string);

const std::vector<ResourceEntry> &resource_catalog() {
    static const std::vector<ResourceEntry> entries{
        {"ghz", "GHZ state |g_n> over all parties", true},
        {"ghz4", "ququad GHZ |g(4)> over all parties", true},
        {"phi_plus", "EPR pair (two parties only)", true},
        {"psi3", "two GHZ copies, factors [2,2] per party", true},
        {"phi3", "three pairwise EPR pairs, factors [2,2] per party", true},
        {"product", "unentangled qubit ancilla |0...0>", true},
        {"degraded", "3/5|0..0> + 4/5|1..1>", true},
        {"chi", "sqrt(2/3)|0..0> + sqrt(1/3)|1..1> (floating path)", false},
        {"w3", "(|001>+|010>+|100>)/sqrt3 (floating path)", false},
    };
    return entries;
}

AnyResource build_resource(std::string_view name, const std::vector<std::string> &parties) {
    size_t n = parties.size();
    if (name == "ghz") return ghz_resource(parties, 2);
    if (name == "ghz4") return ghz_resource(parties, 4);
    if (name == "phi_plus") {
        if (n != 2) {
            throw LayoutError("phi_plus needs exactly two parties");
        }
        Resource r = ghz_resource(parties, 2);
        r.name = "phi+";
        r.note = "two-qubit maximally entangled state";
        return r;
    }
    if (name == "psi3") return psi3_resource(parties);
    if (name == "phi3") return phi3_resource(parties);
    if (name == "product") return product_resource(parties, std::vector<std::vector<size_t>>(n, {2}));
    if (name == "degraded") return weighted_ghz_resource(parties, CScalar(QScalar::ratio(3, 5)), CScalar(QScalar::ratio(4, 5)));
    if (name == "chi") return weighted_ghz_float(parties, std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 3.0));
    if (name == "w3") return w3_resource(parties);
    throw std::invalid_argument("unknown resource '" + std::string(name) + "'");
}

std::vector<std::string> party_names(const PartyLayout &layout) {
    std::vector<std::string> out;
    for (const auto &p : layout.parties()) {
        out.push_back(p.name);
    }
    return out;
}

}  // namespace gnps
