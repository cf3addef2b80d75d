#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string bin() {
    const char* b = std::getenv("LIOUVILLE_BIN");
    REQUIRE_MESSAGE(b != nullptr, "LIOUVILLE_BIN must point at the CLI binary");
    return b;
}

fs::path work_dir() {
    fs::path p = fs::temp_directory_path() / "liouville_cli_tests";
    fs::create_directories(p);
    return p;
}

int run(const std::string& args, std::string* output = nullptr) {
    fs::path out = work_dir() / "last_output.txt";
    std::string cmd = bin() + " " + args + " > " + out.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(out);
        std::ostringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    return WEXITSTATUS(rc);
}

json parse_json_file(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE_MESSAGE(in.good(), "missing json output: ", p.string());
    json j;
    in >> j;
    return j;
}

// the CLI tests share one tiny zero table
fs::path zeros_file() {
    static fs::path p = [] {
        fs::path file = work_dir() / "zeros64.txt";
        if (!fs::exists(file)) {
            std::string cmd = "zeros locate --count 64 --out " + file.string();
            REQUIRE(run(cmd) == 0);
        }
        return file;
    }();
    return p;
}

}  // namespace

TEST_CASE("version and usage errors") {
    std::string out;
    CHECK(run("--version", &out) == 0);
    CHECK(out.find("1.0.0") != std::string::npos);
    CHECK(run("definitely-not-a-subcommand") == 2);
    CHECK(run("") == 2);                      // subcommand required
    CHECK(run("sieve --alpha 0.2") == 2);     // missing required --xmax
    CHECK(run("--help") == 0);
}

TEST_CASE("computation errors exit with 1") {
    CHECK(run("dist --alpha 0.0 --zeros-file /does/not/exist.txt") == 1);
    CHECK(run("sieve --alpha 0.9 --xmax 100") == 1);  // alpha out of range
}

TEST_CASE("sieve emits CSV, sign log, JSON, and a resumable checkpoint") {
    fs::path csv = work_dir() / "sieve.csv";
    fs::path signs = work_dir() / "sieve.signs.jsonl";
    fs::path ckpt = work_dir() / "sieve.ckpt";
    fs::path rep = work_dir() / "sieve.json";
    std::string cmd = "sieve --alpha 0 --xmax 2000000 --checkpoint-stride 500000 --emit-csv " +
                      csv.string() + " --emit-signs " + signs.string() + " --checkpoint-file " +
                      ckpt.string() + " --out " + rep.string();
    REQUIRE(run(cmd) == 0);

    json j = parse_json_file(rep);
    CHECK(j["final_value_int"].get<long long>() == -708);  // L(2e6)
    CHECK(j["config"].contains("threads"));
    CHECK(j.contains("version"));

    std::ifstream c(csv);
    std::string header;
    std::getline(c, header);
    CHECK(header == "n,L_alpha,sign");
    int rows = 0;
    for (std::string line; std::getline(c, line);) ++rows;
    CHECK(rows == 4);

    std::ifstream s(signs);
    std::string first;
    std::getline(s, first);
    json ch = json::parse(first);
    CHECK(ch["n"] == 2);
    CHECK(ch["from"] == 1);
    CHECK(ch["to"] == -1);

    // resume from the checkpoint reproduces the full final value
    fs::path rep2 = work_dir() / "sieve_resume.json";
    std::string resume = "sieve --alpha 0 --xmax 2000000 --resume " + ckpt.string() + " --out " +
                         rep2.string();
    REQUIRE(run(resume) == 0);
    json j2 = parse_json_file(rep2);
    CHECK(j2["final_value_int"].get<long long>() == -708);
}

TEST_CASE("zeros locate, ingest, validate, enrich, moments") {
    fs::path zf = zeros_file();
    std::string out;
    REQUIRE(run("zeros ingest " + zf.string(), &out) == 0);
    json j = json::parse(out);
    CHECK(j["count"] == 64);
    CHECK(j["enriched"] == false);

    REQUIRE(run("zeros validate --tol 1e-4 --zeros-file " + zf.string(), &out) == 0);
    CHECK(json::parse(out)["valid"] == true);

    REQUIRE(run("zeros enrich --zeros-file " + zf.string(), &out) == 0);
    CHECK(json::parse(out)["count"] == 64);

    REQUIRE(run("moments --k -1 --zeros-file " + zf.string(), &out) == 0);
    json m = json::parse(out);
    CHECK(m["value"].get<double>() > 0.0);
    CHECK(m["value_over_T"].get<double>() > 0.0);

    // env-var zero source has lower precedence than flags but works alone
    std::string env_cmd = "LIOUVILLE_ZEROS=" + zf.string() + " " + bin() + " moments --k -0.5 > " +
                          (work_dir() / "env.json").string() + " 2>&1";
    REQUIRE(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
    CHECK(parse_json_file(work_dir() / "env.json")["k"] == -0.5);
}

TEST_CASE("config file is the lowest precedence source") {
    fs::path cfg = work_dir() / "config.json";
    {
        std::ofstream out(cfg);
        out << "{\"zeros\": \"" << zeros_file().string() << "\", \"threads\": 1}\n";
    }
    std::string out;
    REQUIRE(run("--config " + cfg.string() + " moments --k -1", &out) == 0);
    CHECK(json::parse(out)["config"]["zeros"] == zeros_file().string());
}

TEST_CASE("fawaz and ccoeffs") {
    std::string out;
    REQUIRE(run("fawaz --x 100 --n-terms 200000", &out) == 0);
    json j = json::parse(out);
    CHECK(j["value"].get<double>() == doctest::Approx(0.95975).epsilon(1e-3));
    CHECK(j["tail_estimate"].get<double>() < 1e-5);

    REQUIRE(run("fawaz --x 50 --alpha 0.25 --n-terms 100000", &out) == 0);
    CHECK(json::parse(out).contains("limit_constant"));

    fs::path csv = work_dir() / "c.csv";
    REQUIRE(run("ccoeffs --n 16 --emit-csv " + csv.string(), &out) == 0);
    json c = json::parse(out);
    CHECK(c["head"][0] == 1);
    CHECK(c["head"][3] == 2);
    std::ifstream f(csv);
    std::string header, row1;
    std::getline(f, header);
    std::getline(f, row1);
    CHECK(header == "n,c");
    CHECK(row1 == "1,1");
}

TEST_CASE("dist subcommands on the small table") {
    std::string zf = zeros_file().string();
    std::string out;
    // the 64-zero table cannot push |nu_hat| to 1e-12; that is the documented
    // "need more zeros" failure
    int rc = run("dist --alpha 0 --zeros-file " + zf, &out);
    if (rc == 0) {
        json j = json::parse(out);
        CHECK(j.contains("deltaP"));
    } else {
        CHECK(rc == 1);
        CHECK(out.find("need more zeros") != std::string::npos);
    }

    REQUIRE(run("dist mc --alpha 0 --draws 50000 --zeros-file " + zf, &out) == 0);
    json mc = json::parse(out);
    CHECK(mc["draws"] == 50000);
    CHECK(mc["p_nonpositive"].get<double>() > 0.9);

    REQUIRE(run("--seed 5 dist mc --alpha 0 --draws 50000 --zeros-file " + zf, &out) == 0);
    json mc5 = json::parse(out);
    CHECK(mc5["p_nonpositive"] != mc["p_nonpositive"]);
}

TEST_CASE("explicit subcommand emits the residual CSV") {
    fs::path csv = work_dir() / "explicit.csv";
    std::string out;
    REQUIRE(run("explicit --alpha 0 --x-min 1000 --x-max 100000 --samples 40 --zeros-file " +
                    zeros_file().string() + " --emit-csv " + csv.string(),
                &out) == 0);
    json j = json::parse(out);
    CHECK(j["zero_count"] == 64);
    CHECK(j["rms_residual"].get<double>() < 0.5);
    std::ifstream f(csv);
    std::string header;
    std::getline(f, header);
    CHECK(header == "x,truth,model,residual");
}
