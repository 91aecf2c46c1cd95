#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "hdx/json_io.hpp"

namespace fs = std::filesystem;

namespace {

const char* kCli = HDX_CLI_PATH;

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() / "hdx_cli_test";
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }
    std::string path(const std::string& name) const {
        return (dir / name).string();
    }
};

int run(const std::string& args, const std::string& log) {
    std::string cmd = std::string("\"") + kCli + "\" " + args + " >" + log +
                      ".out 2>" + log + ".err";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("pipeline: generate, validate, profile, mix") {
    Workspace ws;
    const std::string k4 = ws.path("k4.json");

    CHECK(run("gen --kind complete --m 4 --n 2 -o " + k4,
              ws.path("gen")) == 0);
    CHECK(run("validate " + k4 + " -o " + ws.path("val.json"),
              ws.path("val")) == 0);

    CHECK(run("spectra " + k4 + " -o " + ws.path("prof.json"),
              ws.path("prof")) == 0);
    hdx::Json prof = hdx::load_json_file(ws.path("prof.json"));
    CHECK(prof["profile"]["classification"]["lambda_one_sided"]
              .get<double>() == 0.0);
    CHECK(prof["manifest"]["tool_version"].is_string());

    // An opposite-edge matching: achieved 0.5774, bound 1.1547.
    hdx::Json match;
    match["k"] = 1;
    match["faces"] = hdx::Json::array();
    match["faces"].push_back({0, 1});
    match["faces"].push_back({2, 3});
    hdx::save_json_file(ws.path("matching.json"), match);

    CHECK(run("mixing " + k4 + " --theorems 7.3 --set " +
                  ws.path("matching.json") + " -o " + ws.path("mix.json"),
              ws.path("mix")) == 0);
    hdx::Json mix = hdx::load_json_file(ws.path("mix.json"));
    const double achieved =
        mix["indicator_bound"]["achieved"].get<double>();
    const double bound = mix["indicator_bound"]["bound"].get<double>();
    CHECK(achieved == doctest::Approx(0.5774).epsilon(1e-4));
    CHECK(bound == doctest::Approx(1.1547).epsilon(1e-4));
    CHECK(mix["indicator_bound"]["pass"].get<bool>());

    CHECK(run("mixing " + k4 + " -o " + ws.path("mix_all.json"),
              ws.path("mix_all")) == 0);
}

TEST_CASE("walk dumps and decomposition runs") {
    Workspace ws;
    const std::string k4 = ws.path("k4.json");
    REQUIRE(run("gen --kind complete --m 4 --n 2 -o " + k4,
                ws.path("gen")) == 0);

    CHECK(run("walk " + k4 + " --k 1 --op upper --dump " + ws.path("up") +
                  " -o " + ws.path("walk.json"),
              ws.path("walk")) == 0);
    CHECK(fs::exists(ws.path("up.matrix.csv")));
    CHECK(fs::exists(ws.path("up.rows.csv")));
    CHECK(fs::exists(ws.path("up.cols.csv")));

    CHECK(run("decompose " + k4 + " --k 1 --random 3 --seed 5 -o " +
                  ws.path("dec.json"),
              ws.path("dec")) == 0);
    hdx::Json dec = hdx::load_json_file(ws.path("dec.json"));
    CHECK(dec["runs"].size() == 3);
    for (const auto& row : dec["runs"]) {
        CHECK(row["pass"].get<bool>());
    }

    // A cochain file drives a single run.
    hdx::Json phi;
    phi["k"] = 1;
    phi["entries"] = hdx::Json::array();
    phi["entries"].push_back({{"vertices", {0, 1}}, {"value", 1.0}});
    phi["entries"].push_back({{"vertices", {2, 3}}, {"value", 1.0}});
    phi["entries"].push_back({{"vertices", {0, 2}}, {"value", -1.0}});
    phi["entries"].push_back({{"vertices", {1, 3}}, {"value", -1.0}});
    hdx::save_json_file(ws.path("phi.json"), phi);
    CHECK(run("decompose " + k4 + " --cochain " + ws.path("phi.json") +
                  " -o " + ws.path("dec2.json"),
              ws.path("dec2")) == 0);
}

TEST_CASE("sweep emits CSV") {
    Workspace ws;
    CHECK(run("spectra --sweep m=5..7 -o " + ws.path("sweep.csv"),
              ws.path("sweep")) == 0);
    std::ifstream in(ws.path("sweep.csv"));
    std::string header;
    std::getline(in, header);
    CHECK(header == "m,k,achieved,bound");
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 6);
}

TEST_CASE("usage and input failures exit with code two") {
    Workspace ws;
    CHECK(run("", ws.path("noargs")) == 2);
    CHECK(run("frobnicate", ws.path("unknown")) == 2);
    CHECK(run("validate " + ws.path("missing.json"), ws.path("missing")) ==
          2);

    hdx::Json bad;
    bad["n"] = 2;
    bad["top_faces"] = hdx::Json::array();
    bad["top_faces"].push_back(
        {{"vertices", {0, 1, 2}}, {"weight", -1.0}});
    hdx::save_json_file(ws.path("bad.json"), bad);
    CHECK(run("validate " + ws.path("bad.json"), ws.path("bad")) == 2);

    hdx::save_text_file(ws.path("broken.json"), "{ not json");
    CHECK(run("validate " + ws.path("broken.json"), ws.path("broken")) == 2);

    const std::string k4 = ws.path("k4.json");
    REQUIRE(run("gen --kind complete --m 4 --n 2 -o " + k4,
                ws.path("gen")) == 0);
    CHECK(run("mixing " + k4 + " --theorems 9.9", ws.path("badid")) == 2);
    CHECK(run("mixing " + k4 + " --theorems 7.3", ws.path("noset")) == 2);
    CHECK(run("decompose " + k4, ws.path("nosource")) == 2);
    CHECK(run("walk " + k4 + " --k 2 --op upper", ws.path("badk")) == 2);
    CHECK(run("--version", ws.path("version")) == 0);
}
