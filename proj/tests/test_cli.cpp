// Drives the installed `pepsi` binary through complete workflows. The binary
// path comes in via PEPSI_CLI_PATH from the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code;
    std::string output;  // stdout + stderr interleaved
};

CmdResult run(const std::string& args) {
    std::string cmd = std::string(PEPSI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("pepsi-cli-" + std::to_string(::getpid()) + "-" +
               std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string operator/(const char* name) const { return (dir / name).string(); }
};

std::vector<uint8_t> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::vector<uint8_t>((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("seeded setup emits identical master files") {
    TempDir tmp;
    auto r1 = run("ra setup --seed 42 --passphrase pw --out " + (tmp / "a.key"));
    REQUIRE(r1.exit_code == 0);
    auto r2 = run("ra setup --seed 42 --passphrase pw --out " + (tmp / "b.key"));
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp(tmp / "a.key") == slurp(tmp / "b.key"));

    auto r3 = run("ra setup --seed 43 --passphrase pw --out " + (tmp / "c.key"));
    REQUIRE(r3.exit_code == 0);
    CHECK(slurp(tmp / "a.key") != slurp(tmp / "c.key"));
}

TEST_CASE("full pipeline: register, report, subscribe, match, decrypt") {
    TempDir tmp;
    std::string master = tmp / "ra.key";
    REQUIRE(run("ra setup --seed 7 --passphrase pw --out " + master).exit_code == 0);

    auto reg_n = run("ra register-node --master " + master +
                     " --passphrase pw --label \"Temp|Irvine, CA\" --id node-1 "
                     "--out " + (tmp / "node.key") + " --ledger " + (tmp / "led.log"));
    REQUIRE(reg_n.exit_code == 0);
    CHECK(contains(reg_n.output, "label=irvine, ca|temp"));

    auto reg_q = run("ra register-querier --master " + master +
                     " --passphrase pw --label \"Irvine, CA|Temp\" --id q-1 "
                     "--out " + (tmp / "querier.key") + " --ledger " + (tmp / "led.log"));
    REQUIRE(reg_q.exit_code == 0);

    auto rep = run("node report --key " + (tmp / "node.key") +
                   " --payload \"74 F\" --out " + (tmp / "report.bin") + " --seed 5");
    REQUIRE(rep.exit_code == 0);
    CHECK(contains(rep.output, "overhead_bytes=57"));

    auto sub = run("querier subscribe --key " + (tmp / "querier.key") +
                   " --endpoint tcp://q1 --out " + (tmp / "sub.bin"));
    REQUIRE(sub.exit_code == 0);

    auto sp = run("sp run --subscription " + (tmp / "sub.bin") + " --report " +
                  (tmp / "report.bin") + " --out " + (tmp / "deliveries.bin"));
    REQUIRE(sp.exit_code == 0);
    CHECK(contains(sp.output, "matches_made=1"));
    CHECK(contains(sp.output, "deliveries=1"));

    // Delivery record: u64 id, u32 length, then the frame verbatim.
    auto blob = slurp(tmp / "deliveries.bin");
    auto report_bytes = slurp(tmp / "report.bin");
    REQUIRE(blob.size() == 12 + report_bytes.size());
    CHECK(blob[7] == 1);  // id 1
    CHECK(std::equal(report_bytes.begin(), report_bytes.end(), blob.begin() + 12));

    auto dec = run("querier decrypt --key " + (tmp / "querier.key") +
                   " --report " + (tmp / "report.bin"));
    REQUIRE(dec.exit_code == 0);
    CHECK(dec.output == "74 F");

    // Ledger picked up both issuances.
    std::ifstream led(tmp / "led.log");
    std::string line;
    int lines = 0;
    while (std::getline(led, line)) ++lines;
    CHECK(lines == 2);
}

TEST_CASE("wrong-label key fails decryption with exit 2") {
    TempDir tmp;
    std::string master = tmp / "ra.key";
    REQUIRE(run("ra setup --seed 9 --passphrase pw --out " + master).exit_code == 0);
    REQUIRE(run("ra register-node --master " + master +
                " --passphrase pw --label Temp --id n --out " + (tmp / "n.key"))
                .exit_code == 0);
    REQUIRE(run("ra register-querier --master " + master +
                " --passphrase pw --label Noise --id q --out " + (tmp / "q.key"))
                .exit_code == 0);
    REQUIRE(run("node report --key " + (tmp / "n.key") + " --payload hi --out " +
                (tmp / "r.bin") + " --seed 1")
                .exit_code == 0);
    auto dec = run("querier decrypt --key " + (tmp / "q.key") + " --report " +
                   (tmp / "r.bin"));
    CHECK(dec.exit_code == 2);
    CHECK(contains(dec.output, "error:"));
}

TEST_CASE("truncated key file exits 2") {
    TempDir tmp;
    std::string master = tmp / "ra.key";
    REQUIRE(run("ra setup --seed 3 --passphrase pw --out " + master).exit_code == 0);
    REQUIRE(run("ra register-node --master " + master +
                " --passphrase pw --label Temp --id n --out " + (tmp / "n.key"))
                .exit_code == 0);
    auto bytes = slurp(tmp / "n.key");
    bytes.resize(bytes.size() / 2);
    std::ofstream((tmp / "torn.key"), std::ios::binary)
        .write((const char*)bytes.data(), (std::streamsize)bytes.size());

    auto rep = run("node report --key " + (tmp / "torn.key") +
                   " --payload x --out " + (tmp / "r.bin"));
    CHECK(rep.exit_code == 2);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("node report").exit_code == 1);        // missing required options
    CHECK(run("no-such-command").exit_code == 1);
    CHECK(run("").exit_code == 1);                   // subcommand required
}

TEST_CASE("sim run on the minimal scenario prints one delivery") {
    TempDir tmp;
    std::ofstream cfg(tmp / "min.cfg");
    cfg << "seed = 1\nnodes = 1\nqueriers = 1\nreports_per_node = 1\n"
           "density = 1.0\npayload_size = 16\nlabel = Temp | Irvine, CA\n";
    cfg.close();
    auto res = run("sim run --config " + (tmp / "min.cfg"));
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "deliveries_made=1"));
    CHECK(contains(res.output, "decryptions_ok=1"));
    CHECK(contains(res.output, "sound=true"));

    auto par = run("sim run --parallel --config " + (tmp / "min.cfg"));
    CHECK(par.exit_code == 0);
    CHECK(contains(par.output, "deliveries_made=1"));

    auto loop = run("sim run --loopback-transport --config " + (tmp / "min.cfg"));
    CHECK(loop.exit_code == 0);
    CHECK(contains(loop.output, "deliveries_made=1"));
}

TEST_CASE("sim run with a bad config exits 2") {
    TempDir tmp;
    std::ofstream cfg(tmp / "bad.cfg");
    cfg << "seed = 1\nnodes = 0\nlabel = a\n";
    cfg.close();
    CHECK(run("sim run --config " + (tmp / "bad.cfg")).exit_code == 2);
    CHECK(run("sim run --config " + (tmp / "missing.cfg")).exit_code == 2);
}

TEST_CASE("bench report prints the frame constant") {
    auto res = run("bench report --trials 3 --payload-size 32");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "report_overhead_bytes=57"));
    CHECK(contains(res.output, "trials=3"));
}
