#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

TEST_SUITE("cli") {

struct CliResult {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("neorl_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fresh_dir("io" + std::to_string(counter++));
    const fs::path out = dir / "stdout.txt";
    const fs::path err = dir / "stderr.txt";
    const std::string cmd = std::string(NEORL_CLI_PATH) + " " + args + " > " + out.string() +
                            " 2> " + err.string();
    const int rc = std::system(cmd.c_str());
    CliResult result;
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

int line_count(const std::string& text) {
    int lines = 0;
    for (const char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

TEST_CASE("--version prints the build identity") {
    const CliResult r = run_cli("--version");
    CHECK(r.status == 0);
    CHECK(r.out.find("neorl 0.1.0") != std::string::npos);
}

TEST_CASE("run writes one trace CSV with the sampled rows") {
    const fs::path dir = fresh_dir("run");
    const std::string args = "run --preset A --seed 1 --steps 3000 --out " + dir.string();
    CHECK(run_cli(args).status == 0);
    const fs::path csv = dir / "run_A_seed1.csv";
    REQUIRE(fs::exists(csv));
    const std::string first = slurp(csv);
    CHECK(line_count(first) == 11);  // header plus 3000/300 samples
    CHECK(first.rfind("run_id,step,minutes,accumulated_reward\n", 0) == 0);

    // Re-running with identical flags reproduces the bytes.
    CHECK(run_cli(args).status == 0);
    CHECK(slurp(csv) == first);
}

TEST_CASE("usage errors exit nonzero with a diagnostic") {
    const fs::path dir = fresh_dir("bad");
    const CliResult unknown_preset =
        run_cli("run --preset X --seed 1 --steps 300 --out " + dir.string());
    CHECK(unknown_preset.status == 1);
    CHECK_FALSE(unknown_preset.err.empty());

    const CliResult unknown_flag = run_cli("run --nope");
    CHECK(unknown_flag.status == 1);

    const CliResult unwritable = run_cli("run --preset A --steps 300 --out /dev/null/x");
    CHECK(unwritable.status == 1);

    const CliResult no_subcommand = run_cli("");
    CHECK(no_subcommand.status == 1);
}

TEST_CASE("batch emits per-seed, aggregate, comparison and plot files") {
    const fs::path dir = fresh_dir("batch");
    const CliResult r = run_cli("batch --preset A,B --seeds 2 --steps 1200 --workers 2 --plot --out " +
                                dir.string());
    CHECK(r.status == 0);
    for (const std::string name : {"run_A_seed1.csv", "run_A_seed2.csv", "run_B_seed1.csv",
                                   "run_B_seed2.csv", "aggregate_A.csv", "aggregate_B.csv",
                                   "comparison.csv", "curves.svg"}) {
        CHECK(fs::exists(dir / name));
    }
    const std::string agg = slurp(dir / "aggregate_A.csv");
    CHECK(agg.rfind("step,minutes,mean,stddev,n\n", 0) == 0);
    CHECK(line_count(agg) == 5);
    const std::string svg = slurp(dir / "curves.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);

    // Worker count does not change the bytes.
    const fs::path serial = fresh_dir("batch_serial");
    CHECK(run_cli("batch --preset A,B --seeds 2 --steps 1200 --workers 1 --out " + serial.string())
              .status == 0);
    CHECK(slurp(serial / "aggregate_A.csv") == slurp(dir / "aggregate_A.csv"));
    CHECK(slurp(serial / "run_B_seed2.csv") == slurp(dir / "run_B_seed2.csv"));
}

TEST_CASE("flags override the config file which overrides defaults") {
    const fs::path dir = fresh_dir("precedence");
    const fs::path config = dir / "config.json";
    std::ofstream(config) << R"({"steps": 600, "preset": "B"})";

    // File over defaults: 600/300 = 2 samples.
    CHECK(run_cli("--config " + config.string() + " run --seed 1 --out " + dir.string()).status ==
          0);
    CHECK(line_count(slurp(dir / "run_B_seed1.csv")) == 3);

    // Flag over file: 900/300 = 3 samples.
    CHECK(run_cli("--config " + config.string() + " run --seed 1 --steps 900 --out " +
                  dir.string())
              .status == 0);
    CHECK(line_count(slurp(dir / "run_B_seed1.csv")) == 4);
}

TEST_CASE("config dump round trips through itself") {
    const fs::path dir = fresh_dir("dump");
    const CliResult first = run_cli("config dump --preset D --steps 1200 --seeds 3 --epsilon 0.5");
    CHECK(first.status == 0);
    const fs::path file = dir / "dumped.json";
    std::ofstream(file, std::ios::binary) << first.out;
    const CliResult second = run_cli("--config " + file.string() + " config dump");
    CHECK(second.status == 0);
    CHECK(second.out == first.out);
    CHECK(first.out.find("\"preset\": \"D\"") != std::string::npos);
    CHECK(first.out.find("\"epsilon\": 0.5") != std::string::npos);
}

TEST_CASE("describe prints the adjacency listing") {
    const CliResult r = run_cli("describe --preset B");
    CHECK(r.status == 0);
    CHECK(r.out.find("pc/green -> ovc/main") != std::string::npos);
    CHECK(r.out.find("objects[red] -> pc/red") != std::string::npos);
}

TEST_CASE("run can dump the learned banks") {
    const fs::path dir = fresh_dir("banks");
    const CliResult r = run_cli("run --preset A --seed 2 --steps 600 --ovc-resolution 5 "
                                "--dump-banks --out " + dir.string());
    CHECK(r.status == 0);
    REQUIRE(fs::exists(dir / "run_A_seed2_bank_pc.csv"));
    REQUIRE(fs::exists(dir / "run_A_seed2_bank_ovc.csv"));
    const std::string bank = slurp(dir / "run_A_seed2_bank_ovc.csv");
    CHECK(bank.rfind("goal,state,action,value\n", 0) == 0);
    CHECK(line_count(bank) == 1 + 25 * 25 * 4);
}

TEST_CASE("verify reports the suites and exits zero") {
    const CliResult r = run_cli("verify");
    CHECK(r.status == 0);
    CHECK(r.out.find("[PASS] nres partition") != std::string::npos);
    CHECK(r.out.find("[PASS] gvf oracle equivalence") != std::string::npos);
    CHECK(r.out.find("[PASS] superposition linearity") != std::string::npos);
    CHECK(r.out.find("[PASS] desire arithmetic") != std::string::npos);
    CHECK(r.out.find("all suites passed") != std::string::npos);
}

}  // TEST_SUITE
