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


#include "gnps/io.h"

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "gnps/catalog.h"
#include "gnps/protocols.h"
#include "gnps/resources.h"

using namespace gnps;

namespace {

const std::filesystem::path kData = GNPS_DATA_DIR;

void expect_same_set(const StateSet &a, const StateSet &b) {
    EXPECT_EQ(a.name, b.name);
    EXPECT_TRUE(a.layout.same_shape(b.layout));
    ASSERT_EQ(a.size(), b.size());
    for (size_t k = 0; k < a.size(); k++) {
        EXPECT_EQ(a.members[k].label, b.members[k].label);
        EXPECT_EQ(a.members[k].ket.amplitudes, b.members[k].ket.amplitudes) << a.members[k].label;
    }
}

}  // namespace

TEST(Io, scalar_forms) {
    EXPECT_EQ(to_json(QScalar::parse("1/2*sqrt2")), Json("1/2*sqrt2"));
    EXPECT_EQ(to_json(CScalar(QScalar(1), QScalar::ratio(-1, 3))), (Json{"1", "-1/3"}));
    EXPECT_EQ(exact_scalar_from_json(Json("sqrt2")), CScalar(QScalar::sqrt2()));
    EXPECT_EQ(exact_scalar_from_json(Json{"0", "1"}), CScalar::i());
    EXPECT_EQ(float_scalar_from_json(Json(0.5)), FScalar(0.5, 0));
    EXPECT_EQ(float_scalar_from_json(Json{0.0, -2.0}), FScalar(0, -2));
    EXPECT_THROW(exact_scalar_from_json(Json{"1"}), FormatError);
    EXPECT_THROW(exact_scalar_from_json(Json(true)), FormatError);
}

TEST(Io, matrix_sparse_and_dense_forms) {
    ExactMatrix m(2, 2);
    m(0, 1) = CScalar::i();
    m(1, 0) = CScalar(QScalar::ratio(1, 2));
    EXPECT_EQ(matrix_from_json(to_json(m)), m);
    Json dense = Json::array({Json::array({"0", Json{"0", "1"}}), Json::array({"1/2", "0"})});
    EXPECT_EQ(matrix_from_json(dense), m);
    EXPECT_THROW(matrix_from_json(Json{{"rows", 2}, {"cols", 2}, {"entries", {{5, 0, "1"}}}}), FormatError);
}

TEST(Io, catalog_sets_round_trip) {
    for (const auto &name : {"s_ben", "g3", "sigma", "h"}) {
        auto s = build_catalog_set(name);
        expect_same_set(state_set_from_json(to_json(s)), s);
    }
}

TEST(Io, shipped_set_files_match_builders) {
    expect_same_set(state_set_from_json(read_json_file(kData / "sets" / "g3.json")), build_g3());
    expect_same_set(state_set_from_json(read_json_file(kData / "sets" / "h.json")), build_h());
}

TEST(Io, entangled_members_use_entries) {
    auto layout = PartyLayout::systems({{"A", 2}, {"B", 2}});
    CScalar h(QScalar::inv_sqrt2());
    StateSet s{"bell", layout, {}, "two Bell states"};
    s.members.push_back({"phi+", {}, Ket<CScalar>(layout, {h, CScalar(0), CScalar(0), h})});
    s.members.push_back({"phi-", {}, Ket<CScalar>(layout, {h, CScalar(0), CScalar(0), -h})});
    auto j = to_json(s);
    EXPECT_TRUE(j["members"][0].contains("entries"));
    EXPECT_EQ(j["note"], "two Bell states");
    expect_same_set(state_set_from_json(j), s);
}

TEST(Io, malformed_sets_are_rejected) {
    auto j = to_json(build_s_ben());
    auto missing = j;
    missing.erase("layout");
    EXPECT_THROW(state_set_from_json(missing), FormatError);
    auto short_local = j;
    short_local["members"][0]["locals"][0] = Json::array({"1", "0"});
    EXPECT_ANY_THROW(state_set_from_json(short_local));
    auto not_orthogonal = j;
    not_orthogonal["members"][1] = not_orthogonal["members"][0];
    not_orthogonal["members"][1]["label"] = "copy";
    // Loading is permissive so verify-orth can report the offending pair.
    auto loaded = state_set_from_json(not_orthogonal);
    EXPECT_THROW(loaded.verify(), InvariantError);
}

TEST(Io, resources_round_trip) {
    for (const auto &name : {"psi3", "phi3", "ghz4"}) {
        auto r = std::get<Resource>(build_resource(name, {"A", "B", "C"}));
        auto back = std::get<Resource>(resource_from_json(to_json(r)));
        EXPECT_EQ(back.amplitudes, r.amplitudes) << name;
        EXPECT_TRUE(back.layout.same_shape(r.layout)) << name;
    }
    auto f = weighted_ghz_float({"A", "B"}, 0.6, 0.8);
    auto fj = to_json(f);
    EXPECT_TRUE(fj["float"].get<bool>());
    auto fb = std::get<FloatResource>(resource_from_json(fj));
    EXPECT_EQ(fb.amplitudes, f.amplitudes);
    auto shipped = std::get<Resource>(resource_from_json(read_json_file(kData / "resources" / "psi3.json")));
    EXPECT_EQ(shipped.amplitudes, psi3_resource({"A", "B", "C"}).amplitudes);
}

TEST(Io, protocol_round_trip_preserves_validation_and_text) {
    auto p = build_theorem1_protocol();
    auto j = to_json(p);
    auto back = protocol_from_json(j);
    EXPECT_EQ(to_json(back), j);
    EXPECT_TRUE(validate(back, build_g3(), ghz_resource({"A", "B", "C"})).ok());
    EXPECT_EQ(read_json_file(kData / "protocols" / "theorem1.json"), j);
}

TEST(Io, malformed_protocols_are_rejected) {
    EXPECT_THROW(node_from_json(Json{{"leaf", {{"kind", "guess"}}}}), FormatError);
    EXPECT_THROW(node_from_json(Json{{"operators", Json::array()}}), FormatError);
    EXPECT_THROW(node_from_json(Json(3)), FormatError);
}

TEST(Io, reports_are_deterministic) {
    auto a = to_json(gnps_evidence(build_h()));
    auto b = to_json(gnps_evidence(build_h()));
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_TRUE(a.contains("interpretation"));
    auto lean = to_json(gnps_evidence(build_h()), false);
    EXPECT_FALSE(lean["cuts"][0].contains("basis"));
}

TEST(Io, file_round_trip) {
    auto dir = std::filesystem::temp_directory_path() / "gnps_io_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "g3.json";
    write_json_file(path, to_json(build_g3()));
    expect_same_set(state_set_from_json(read_json_file(path)), build_g3());
    std::ofstream(dir / "bad.json") << "{ not json";
    EXPECT_THROW(read_json_file(dir / "bad.json"), FormatError);
    EXPECT_ANY_THROW(read_json_file(dir / "absent.json"));
    std::filesystem::remove_all(dir);
}
