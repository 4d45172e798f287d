#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "support/fixtures.hpp"
#include "tms/errors.hpp"
#include "tms/generators.hpp"
#include "tms/json_io.hpp"

using namespace tms;

TEST_SUITE("io") {

TEST_CASE("rational spaces round-trip exactly") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto s = fixtures::random_space(seed * 19 + 1, 6);
        auto back = space_from_json_text(space_to_json_text(s));
        CHECK(back == s);
    }
}

TEST_CASE("float spaces round-trip") {
    auto exact = gen::zigzag(2);
    nlohmann::json j = nlohmann::json::parse(space_to_json_text(exact));
    j["scalar"] = "float";
    j["tolerance"] = 1e-9;
    auto s = space_from_json_text(j.dump());
    CHECK_FALSE(s.exact());
    auto back = space_from_json_text(space_to_json_text(s));
    CHECK(back == s);
}

TEST_CASE("meta entries are emitted and ignored on load") {
    auto s = gen::chain(3);
    std::string text = space_to_json_text(s, {{"seed", "7"}, {"kind", "chain"}});
    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j.at("meta").at("seed") == "7");
    CHECK(space_from_json_text(text) == s);
}

TEST_CASE("points format with the sup norm") {
    std::string text = R"({
      "labels": ["a", "b"],
      "metric": {"kind": "points", "coords": [["0", "0"], ["1/2", "1/4"]], "norm": "sup"},
      "tau": ["0", "1/2"],
      "scalar": "rational"
    })";
    auto s = space_from_json_text(text);
    CHECK(s.dist(0, 1) == Scalar::rational(1, 2));
    CHECK(validate(s).ok());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(space_from_json_text("not json"), ParseError);
    CHECK_THROWS_AS(space_from_json_text("[1,2]"), ParseError);
    SUBCASE("decimal literals are rejected in rational mode") {
        CHECK_THROWS_AS(space_from_json_text(R"({
          "labels": ["a"], "metric": {"kind": "matrix", "values": [[0.5]]}, "tau": [0]
        })"),
                        ParseError);
    }
    SUBCASE("euclidean norm needs float mode") {
        CHECK_THROWS_AS(space_from_json_text(R"({
          "labels": ["a"],
          "metric": {"kind": "points", "coords": [[1]], "norm": "euclidean"},
          "tau": [0]
        })"),
                        ParseError);
    }
    SUBCASE("shape mismatches") {
        CHECK_THROWS_AS(space_from_json_text(R"({
          "labels": ["a", "b"],
          "metric": {"kind": "matrix", "values": [[0]]},
          "tau": [0, 0]
        })"),
                        ParseError);
        CHECK_THROWS_AS(space_from_json_text(R"({
          "labels": ["a"], "metric": {"kind": "matrix", "values": [[0]]}, "tau": []
        })"),
                        ParseError);
    }
    SUBCASE("tolerance outside float mode") {
        CHECK_THROWS_AS(space_from_json_text(R"({
          "labels": ["a"], "metric": {"kind": "matrix", "values": [[0]]},
          "tau": [0], "tolerance": 0.1
        })"),
                        ParseError);
    }
}

TEST_CASE("certificates serialize with the documented fields") {
    auto x = fixtures::one_point("0");
    auto y = fixtures::one_point("5");
    BoundCertificate cert = certify_bounds(x, y);
    nlohmann::json j = nlohmann::json::parse(certificate_to_json_text(cert));
    CHECK(j.at("lower") == 5);
    CHECK(j.at("upper") == 5);
    CHECK(j.at("exact") == true);
    CHECK(j.at("lower_witness")[0] == nlohmann::json::array({0, 0}));
}

TEST_CASE("embeddings serialize their ordering and coordinates") {
    auto s = fixtures::two_points("1", "0", "1");
    FrechetEmbedding e = frechet_map(s, {0, 1}, true);
    nlohmann::json j = nlohmann::json::parse(embedding_to_json_text(e));
    CHECK(j.at("timed") == true);
    CHECK(j.at("ordering") == nlohmann::json::array({0, 1}));
    CHECK(j.at("coords").size() == 2);
}

TEST_CASE("null results serialize inf entries and witness chains") {
    auto s = fixtures::two_points("1", "0", "1/2");
    NullDistanceResult nd = null_distance(s);
    auto check = is_causally_null(s);
    auto comp = chain_connectivity(s);
    nlohmann::json j =
        nlohmann::json::parse(null_result_to_json_text(s, nd, check, comp, true));
    CHECK(j.at("dhat")[0][1] == "inf");
    CHECK(j.at("causally_null") == false);
    CHECK(j.at("components").size() == 2);
}

TEST_CASE("manifest paths resolve relative to the manifest file") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "tms_manifest_test";
    fs::create_directories(dir);
    save_space(gen::zigzag(1), (dir / "z1.json").string());
    save_space(gen::zigzag(2, true), (dir / "lim.json").string());
    std::ofstream out(dir / "m.json");
    out << R"({"spaces": ["z1.json"], "limit": "lim.json", "depth": 2})";
    out.close();
    Manifest m = load_manifest((dir / "m.json").string());
    CHECK(m.depth == 2);
    CHECK(load_space(m.spaces[0]) == gen::zigzag(1));
    CHECK(load_space(m.limit) == gen::zigzag(2, true));
}

}  // TEST_SUITE
