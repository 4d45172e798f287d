#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "support/fixtures.hpp"
#include "tms/generators.hpp"
#include "tms/json_io.hpp"

#ifndef TMS_CLI_PATH
#define TMS_CLI_PATH "tms"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;
};

fs::path work_dir() {
    fs::path dir = fs::temp_directory_path() / "tms_cli_test";
    fs::create_directories(dir);
    return dir;
}

RunResult run(const std::string& args) {
    fs::path out = work_dir() / "out.txt";
    std::string cmd = std::string(TMS_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buffer.str()};
}

std::string fixture(const std::string& name, const tms::TimedMetricSpace& space) {
    fs::path p = work_dir() / name;
    tms::save_space(space, p.string());
    return p.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate distinguishes valid, violating and malformed inputs") {
    std::string good = fixture("good.json", tms::gen::zigzag(2));
    CHECK(run("validate " + good).exit_code == 0);

    std::string bad = fixture("bad.json", [] {
        // bypass generation: hand-build a Lipschitz-violating file
        return fixtures::make_space({{"0", "1"}, {"1", "0"}}, {"0", "0"});
    }());
    {
        // corrupt tau beyond the Lipschitz bound
        std::ifstream in(bad);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();
        auto pos = text.find("\"tau\"");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, text.find(']', pos) - pos + 1, "\"tau\": [0, 2]");
        std::ofstream out(bad);
        out << text;
    }
    RunResult violation = run("validate " + bad);
    CHECK(violation.exit_code == 1);
    CHECK(contains(violation.output, "lipschitz"));

    fs::path malformed = work_dir() / "malformed.json";
    std::ofstream(malformed) << "{not json";
    RunResult parse = run("validate " + malformed.string());
    CHECK(parse.exit_code == 2);
    CHECK(contains(parse.output, "input error"));
}

TEST_CASE("generate writes validated fixtures that reload identically") {
    fs::path out = work_dir() / "z3.json";
    RunResult gen = run("generate zigzag --j 3 --seed 9 --out " + out.string());
    CHECK(gen.exit_code == 0);
    CHECK(contains(gen.output, "seed=9"));
    tms::TimedMetricSpace loaded = tms::load_space(out.string());
    CHECK(loaded == tms::gen::zigzag(3));
    CHECK(run("validate " + out.string()).exit_code == 0);

    RunResult null_run = run("null " + out.string());
    CHECK(null_run.exit_code == 0);
    CHECK(contains(null_run.output, "causally null: true"));
}

TEST_CASE("literal zigzag exposes the flat variant") {
    fs::path out = work_dir() / "zlit.json";
    REQUIRE(run("generate zigzag --j 3 --literal-paper --out " + out.string()).exit_code == 0);
    RunResult null_run = run("null " + out.string());
    CHECK(contains(null_run.output, "causally null: false"));
}

TEST_CASE("causal prints an order-clean relation for the chain fixture") {
    fs::path out = work_dir() / "chain3.json";
    REQUIRE(run("generate chain --n 3 --out " + out.string()).exit_code == 0);
    RunResult causal = run("causal " + out.string());
    CHECK(causal.exit_code == 0);
    CHECK(contains(causal.output, "partial order: ok"));
    // every point lies in the future of p0
    CHECK(contains(causal.output, "111"));

    RunResult csv = run("causal " + out.string() + " --format csv");
    CHECK(contains(csv.output, "1,1,1"));
    RunResult null_csv = run("null " + out.string() + " --format csv");
    CHECK(contains(null_csv.output, "# causally null: true"));
}

TEST_CASE("tgh certifies identical and one-point fixtures") {
    std::string z = fixture("same.json", tms::gen::zigzag(1));
    RunResult same = run("tgh " + z + " " + z + " --exact");
    CHECK(same.exit_code == 0);
    CHECK(contains(same.output, "lower 0"));
    CHECK(contains(same.output, "upper 0"));

    std::string p0 = fixture("pt0.json", fixtures::one_point("0"));
    std::string p5 = fixture("pt5.json", fixtures::one_point("5"));
    RunResult pts = run("tgh " + p0 + " " + p5 + " --exact --format json");
    CHECK(pts.exit_code == 0);
    CHECK(contains(pts.output, "\"lower\": 5"));
    CHECK(contains(pts.output, "\"upper\": 5"));
    CHECK(contains(pts.output, "\"exact\": true"));
}

TEST_CASE("tgh --exact refuses oversized instances") {
    std::string big_x = fixture("bigx.json", tms::gen::random_box(7, 2, 8, 3));
    std::string big_y = fixture("bigy.json", tms::gen::random_box(7, 2, 8, 4));
    RunResult refused = run("tgh " + big_x + " " + big_y + " --exact");
    CHECK(refused.exit_code == 2);
    CHECK(contains(refused.output, "refused"));
    // without --exact the command falls back to local search
    CHECK(run("tgh " + big_x + " " + big_y).exit_code == 0);
}

TEST_CASE("glue certifies the one-point triple") {
    std::string a = fixture("g0.json", fixtures::one_point("0"));
    std::string b = fixture("g2.json", fixtures::one_point("2"));
    std::string c = fixture("g5.json", fixtures::one_point("5"));
    RunResult glue = run("glue " + a + " " + b + " " + c);
    CHECK(glue.exit_code == 0);
    CHECK(contains(glue.output, "triangle holds: true"));
    CHECK(contains(glue.output, "u13 5"));
}

TEST_CASE("converge reports decreasing hausdorff values and the limit verdict") {
    fs::path dir = work_dir();
    for (int j : {1, 2, 3, 4})
        tms::save_space(tms::gen::zigzag(j), (dir / ("zz" + std::to_string(j) + ".json")).string());
    tms::save_space(tms::gen::zigzag(4, true), (dir / "zzlim.json").string());
    std::ofstream manifest(dir / "zz.json");
    manifest << R"({"spaces": ["zz1.json", "zz2.json", "zz3.json", "zz4.json"],)"
             << R"( "limit": "zzlim.json"})";
    manifest.close();
    RunResult converge = run("converge " + (dir / "zz.json").string());
    CHECK(converge.exit_code == 0);
    CHECK(contains(converge.output, "j,d_H,sup_A_tau,sup_A_d"));
    CHECK(contains(converge.output, "limit causally null: false"));
}

TEST_CASE("unknown generator kinds are usage errors") {
    CHECK(run("generate doughnut").exit_code == 2);
}

}  // TEST_SUITE
