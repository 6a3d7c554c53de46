// End-to-end checks of the hamsolve binary: exit codes, JSON schema shape,
// determinism of seeded runs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef HAMSOLVE_PATH
#error "HAMSOLVE_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args)
{
    std::string cmd = std::string(HAMSOLVE_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_file(const std::string& name, const std::string& contents)
{
    std::string path = std::string("/tmp/hamsolve_test_") + name;
    std::ofstream f(path);
    f << contents;
    return path;
}

const char* kTriangle = "3\n0 1\n1 2\n2 0\n";
const char* kPath4 = "4\n0 1\n1 2\n2 3\n";

std::string k33()
{
    std::string s = "6\n";
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v)
            s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

std::string k_19_21()
{
    std::string s = "40\n";
    for (int u = 0; u < 19; ++u)
        for (int v = 19; v < 40; ++v)
            s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

} // namespace

TEST_CASE("exit codes: 0 hamiltonian, 1 non-hamiltonian, 2 refused")
{
    std::string tri = tmp_file("tri.el", kTriangle);
    CHECK(run("solve " + tri + " --seed 1").exit_code == 0);

    std::string p4 = tmp_file("p4.el", kPath4);
    CHECK(run("solve " + p4 + " --seed 1").exit_code == 1);

    CHECK(run("solve /nonexistent.el --seed 1").exit_code == 2);
    CHECK(run("count " + tri + " --cap 2").exit_code == 2);
}

TEST_CASE("json report schema is pinned")
{
    std::string g = tmp_file("k33.el", k33());
    RunResult r = run("solve " + g + " --seed 7 --json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["outcome"] == "hamiltonian");
    CHECK(j["strategy"] == "kernel");
    CHECK(j["n"] == 6);
    CHECK(j["k_count"] == 0);
    CHECK(j["k_degree"] == 0);
    CHECK(j["seed"] == 7);
    CHECK(j["cycle"].is_array());
    CHECK(j["cycle"].size() == 6);
    CHECK(j.contains("wall_time_ms"));
    CHECK(j.contains("guard"));
    CHECK(!j.contains("certificate"));
}

TEST_CASE("non-hamiltonian json carries a typed certificate")
{
    std::string g = tmp_file("k1921.el", k_19_21());
    RunResult r = run("solve " + g + " --strategy mindeg --seed 11 --json");
    CHECK(r.exit_code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["outcome"] == "non-hamiltonian");
    CHECK(j["certificate"]["type"] == "cut");
    CHECK(j["certificate"]["deficiency"] == 2);
    CHECK(j["certificate"]["S"].size() == 19);
    CHECK(j["certificate"].contains("epsilon"));
    CHECK(j["certificate"].contains("seed"));
}

TEST_CASE("solve --json is deterministic given a seed, modulo wall time")
{
    std::string g = tmp_file("k33b.el", k33());
    auto norm = [](std::string s) {
        auto j = nlohmann::json::parse(s);
        j.erase("wall_time_ms");
        return j.dump();
    };
    RunResult a = run("solve " + g + " --seed 99 --json");
    RunResult b = run("solve " + g + " --seed 99 --json");
    CHECK(norm(a.out) == norm(b.out));
}

TEST_CASE("gen is reproducible and respects --planted")
{
    RunResult a = run("gen --model degree-relaxed --n 14 --k 1 --seed 5");
    RunResult b = run("gen --model degree-relaxed --n 14 --k 1 --seed 5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult c = run("gen --model count-relaxed --n 14 --k 2 --seed 5 "
                      "--planted --cycle-out /tmp/hamsolve_test_cycle.txt");
    CHECK(c.exit_code == 0);
    std::ifstream cyc("/tmp/hamsolve_test_cycle.txt");
    int count = 0, v;
    while (cyc >> v)
        ++count;
    CHECK(count == 14);
}

TEST_CASE("kernelize emits a kernel plus sidecar")
{
    // K6 plus a pendant: kernel has 3 vertices
    std::string s = "7\n";
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            s += std::to_string(u) + " " + std::to_string(v) + "\n";
    s += "0 6\n";
    std::string g = tmp_file("pendant.el", s);
    RunResult r = run("kernelize " + g + " --out-format edge-list --sidecar "
                      "/tmp/hamsolve_test_sidecar.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 2) == "3\n");
    std::ifstream sc("/tmp/hamsolve_test_sidecar.json");
    auto j = nlohmann::json::parse(sc);
    CHECK(j["vertex_map"].size() == 3);
    CHECK(j["C_prime"].size() == 2);
    CHECK(j["matching"].size() == 1);
}

TEST_CASE("pathcover finds and reports covers")
{
    std::string star = tmp_file("star.el", "4\n0 1\n0 2\n0 3\n");
    RunResult two = run("pathcover " + star + " --t 2 --seed 3 --json");
    CHECK(two.exit_code == 0);
    auto j = nlohmann::json::parse(two.out);
    CHECK(j["found"] == true);
    CHECK(j["paths"].size() == 2);

    RunResult three = run("pathcover " + star + " --t 3 --seed 3 --json");
    CHECK(three.exit_code == 1);
}

TEST_CASE("count prints exact cycle counts")
{
    std::string k4 = tmp_file("k4.el", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    RunResult r = run("count " + k4);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("verify supports honest certificates and refutes corrupted ones")
{
    std::string g = tmp_file("k1921v.el", k_19_21());
    std::string rep = run("solve " + g + " --strategy mindeg --seed 11 --json").out;
    std::string cert = tmp_file("cert.json", rep);
    RunResult ok = run("verify --graph " + g + " --cert " + cert);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.substr(0, 9) == "supported");

    // corrupt it: claim the cut on a Hamiltonian variant of the graph
    std::string ham = k_19_21();
    ham += "19 20\n21 22\n";
    std::string gh = tmp_file("k1921h.el", ham);
    RunResult refuted = run("verify --graph " + gh + " --cert " + cert);
    CHECK(refuted.exit_code == 1);
    CHECK(refuted.out.substr(0, 7) == "refuted");
}

TEST_CASE("kernelize can emit the clique-completion trace")
{
    // C4 inside a 4-clique region won't augment; use a graph whose C part
    // misses edges: K5 minus one C-C edge plus a pendant-ish low vertex
    std::string s = "6\n";
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 2 && v == 3))
                s += std::to_string(u) + " " + std::to_string(v) + "\n";
    s += "0 5\n1 5\n";
    std::string g = tmp_file("trace.el", s);
    RunResult r = run("kernelize " + g +
                      " --closure-log /tmp/hamsolve_test_trace.json --out "
                      "/dev/null");
    CHECK(r.exit_code == 0);
    std::ifstream tr("/tmp/hamsolve_test_trace.json");
    auto j = nlohmann::json::parse(tr);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0][0] == 2);
    CHECK(j[0][1] == 3);
}

TEST_CASE("mindeg refuses a --k hint below the measured parameter")
{
    std::string g = tmp_file("k1921k.el", k_19_21());
    RunResult r = run("solve " + g + " --strategy mindeg --seed 1 --k 0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("the developer extend flag exposes the raw engine")
{
    std::string g = tmp_file("k1921d.el", k_19_21());
    RunResult r = run("solve " + g + " --dev-extend");
    CHECK(r.exit_code == 1);
    CHECK(r.out.substr(0, 15) == "independent-set");

    std::string tri = tmp_file("tri2.el", kTriangle);
    RunResult c = run("solve " + tri + " --dev-extend");
    CHECK(c.exit_code == 0);
    CHECK(c.out.substr(0, 5) == "cycle");
}

TEST_CASE("bench writes the pinned CSV header even for an empty corpus")
{
    std::string dir = "/tmp/hamsolve_test_empty_corpus";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    RunResult r = run("bench --corpus " + dir);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "instance,n,k_count,k_degree,strategy,time_ms,outcome\n");
}

TEST_CASE("bench produces one row per instance and repeat")
{
    std::string dir = "/tmp/hamsolve_test_corpus";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    std::ofstream(dir + "/a.el") << kTriangle;
    std::ofstream(dir + "/b.el") << kPath4;
    std::ofstream(dir + "/broken.el") << "not a graph";
    RunResult r = run("bench --corpus " + dir + " --repeats 2");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n')
            ++lines;
    CHECK(lines == 1 + 2 * 2); // header + 2 instances x 2 repeats
}
