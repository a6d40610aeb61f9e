#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "dar/cli.hpp"
#include "dar/fisher.hpp"
#include "dar/tls.hpp"

using namespace dar;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("dar_cli_" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

bool contains(const std::string& s, const std::string& part) {
    return s.find(part) != std::string::npos;
}

} // namespace

TEST_CASE("cli: steady prints the closed-form populations") {
    const auto r = run({"steady", "--model", "tls", "--eps-d", "-5.4", "--eps-a", "-3.8", "--omega0", "0.091",
                        "--mu-l", "1", "--mu-r", "-1", "--t-l", "2", "--t-r", "1"});
    REQUIRE(r.code == 0);
    const auto ss = tls::tls_steady_state(tls::tls_rates(JunctionParams{}));
    std::istringstream lines(r.out);
    std::string units, header, p1, p2, extra;
    std::getline(lines, units);
    std::getline(lines, header);
    std::getline(lines, p1);
    std::getline(lines, p2);
    CHECK(header == "quantity,value");
    CHECK(std::stod(p1.substr(3)) == ss.p1);
    CHECK(std::stod(p2.substr(3)) == ss.p2);
    CHECK_FALSE(std::getline(lines, extra));
    CHECK(r.err.empty());
}

TEST_CASE("cli: steady with theta appends the information") {
    const auto r = run({"steady", "--theta", "omega0"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "I_omega0,"));
    CHECK(contains(r.out, "I=eV^-2"));
}

TEST_CASE("cli: parameter not defined for the model") {
    auto r = run({"fisher", "--theta", "gamma_hyb", "--model", "multilevel"});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "gamma_hyb"));
    CHECK(contains(r.err, "valid:"));
    CHECK(contains(r.err, "omega0"));
    CHECK(r.out.empty());

    r = run({"evolve", "--model", "multilevel", "--gamma", "0.3"});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "gamma_hyb"));

    r = run({"steady", "--t-l", "-2"});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "T_L must be > 0"));
}

TEST_CASE("cli: usage errors name the offending token") {
    auto r = run({"frobnicate"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "frobnicate"));

    r = run({"steady", "--bogus-flag", "1"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "--bogus-flag"));

    r = run({"figure", "fig9z"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "fig9z"));

    r = run({});
    CHECK(r.code == 2);

    r = run({"fisher"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "--theta"));

    r = run({"evolve", "--model", "quantum"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "quantum"));
}

TEST_CASE("cli: help and version exit cleanly") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "figure"));
    r = run({"--version"});
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
}

TEST_CASE("cli: rates covers both models") {
    const auto r = run({"rates", "--omega0", "0.196"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "tls,a_da_plus,0.066183639388872"));
    CHECK(contains(r.out, "multilevel,k_DA0,"));
    CHECK(contains(r.out, "multilevel,gamma_down,"));
}

TEST_CASE("cli: evolve and fisher write time tables") {
    auto r = run({"evolve", "--model", "multilevel", "--t-max", "5", "--points", "6"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "t,p_0,p_D0,p_D1,p_A0,p_A1\n0,1,0,0,0,0\n"));

    r = run({"fisher", "--theta", "eps_a", "--t-max", "60", "--points", "121", "--method", "analytic_chain"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "t,I_eps_a\n0,0\n"));
    CHECK(contains(r.err, "optimal time: interior"));

    r = run({"evolve", "--initial", "0.5,0.4"});
    CHECK(r.code == 1);
}

TEST_CASE("cli: figure output is deterministic across runs and thread counts") {
    TempDir dir;
    for (const char* id : {"fig1b", "fig3c", "fig4i", "fig5d"}) {
        CAPTURE(id);
        const auto a = dir.file(std::string(id) + "_a.csv");
        const auto b = dir.file(std::string(id) + "_b.csv");
        REQUIRE(run({"figure", id, "--out", a, "--threads", "1"}).code == 0);
        REQUIRE(run({"figure", id, "--out", b, "--threads", "4"}).code == 0);
        CHECK(slurp(a) == slurp(b));
        CHECK(fs::exists(dir.file(std::string(id) + "_a.meta")));
    }
    const auto text = slurp(dir.file("fig1b_a.csv"));
    CHECK(text.rfind("# units: t=hbar/eV, p=1, omega0=eV\n"
                     "t,p1_w0.091,p2_w0.091,p1_w0.139,p2_w0.139,p1_w0.196,p2_w0.196,status\n", 0) == 0);

    const auto list = run({"figure", "--list"});
    CHECK(list.code == 0);
    CHECK(contains(list.out, "fig4j:"));
}

TEST_CASE("cli: sweep runs a configuration file") {
    TempDir dir;
    const auto cfg = dir.file("scan.cfg");
    std::ofstream(cfg) << "system.eps_d = -5.4\nsystem.eps_a = -3.8\nleads.mu_L = 3.8\nleads.mu_R = -3.8\n"
                          "leads.T_L = 0.05\nleads.T_R = 0.05\naxis1.param = mu_R\naxis1.min = -4\n"
                          "axis1.max = -3.4\naxis1.count = 4\nobservable.kind = steady_fisher\n"
                          "observable.theta = omega0\n";
    auto r = run({"sweep", cfg});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "mu_R,I,status\n-4,"));
    CHECK(contains(r.err, "4 cells, 0 failed"));

    r = run({"sweep", cfg, "--p-floor", "0.5"});
    CHECK(r.code == 0);
    CHECK(contains(r.err, "small_probability"));

    std::ofstream(cfg, std::ios::app) << "leads.T_x = 1\n";
    r = run({"sweep", cfg});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "line 13"));

    r = run({"sweep", dir.file("missing.cfg")});
    CHECK(r.code == 1);
}
