// End-to-end checks of the command-line interface: runs the built binary on
// the shipped fixture files and parses its JSON output.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kanloop/io.hpp"
#include "oracles.hpp"

using namespace kanloop;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

std::string temp_dir() {
    static int counter = 0;
    std::string dir = "cli_scratch_" + std::to_string(counter++);
    std::filesystem::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string out_file = "cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(KANLOOP_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.stdout_text = ss.str();
    std::filesystem::remove(out_file);
    return r;
}

Json parse_out(const RunResult& r) { return Json::parse(r.stdout_text); }

std::string data(const std::string& name) { return std::string(KANLOOP_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("cli homology") {
    RunResult r = run_cli("homology --complex " + data("surface2.json") + " --max-degree 1");
    REQUIRE(r.exit_code == 0);
    Json j = parse_out(r);
    CHECK(j["0"]["betti"] == 4);
    CHECK(j["1"]["betti"] == 1);

    RunResult rp3 = run_cli("homology --complex " + data("rp3like.json") + " --max-degree 2");
    REQUIRE(rp3.exit_code == 0);
    Json j2 = parse_out(rp3);
    CHECK(j2["0"]["betti"] == 0);
    CHECK(j2["0"]["torsion"] == Json::array({2}));
    CHECK(j2["2"]["betti"] == 1);
}

TEST_CASE("cli output is deterministic") {
    std::string args = "build-kan --complex " + data("cp2.json") + " --max-degree 4";
    RunResult a = run_cli(args), b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
    Json j = parse_out(a);
    CHECK(j["degrees"]["3"]["count"] == 4);  // 3l + 1 with l = 1
}

TEST_CASE("cli check-identity") {
    RunResult good = run_cli("check-identity --complex " + data("rp3like.json"));
    CHECK(good.exit_code == 0);
    CHECK(parse_out(good)["valid"] == true);

    std::string dir = temp_dir();
    std::string broken_path = dir + "/broken.json";
    {
        Json j;
        std::ifstream in(data("rp3like.json"));
        in >> j;
        j["attach3"]["sigma"] = Json::array({Json{{"z", "e"}, {"rel", 1}, {"sign", 1}}});
        std::ofstream out(broken_path);
        out << j.dump();
    }
    RunResult bad = run_cli("check-identity --complex " + broken_path);
    CHECK(bad.exit_code == 2);
    CHECK(parse_out(bad)["valid"] == false);
}

TEST_CASE("cli classify") {
    RunResult r = run_cli("classify --group u1 --genus 1 --winding 3 --grid 64 --seed 5");
    REQUIRE(r.exit_code == 0);
    CHECK(parse_out(r)["class"] == 3);
    RunResult s = run_cli("classify --group su2 --genus 2 --winding 0 --grid 64 --seed 6");
    REQUIRE(s.exit_code == 0);
    CHECK(parse_out(s)["class"] == 0);
    RunResult rot = run_cli("classify --group so3 --genus 1 --winding 1 --grid 64 --seed 7");
    REQUIRE(rot.exit_code == 0);
    CHECK(parse_out(rot)["class"] == 1);
}

TEST_CASE("cli intersection form") {
    RunResult r = run_cli("intersection-form --gamma-word v1");
    REQUIRE(r.exit_code == 0);
    Json j = parse_out(r);
    CHECK(j["matrix"] == Json::array({Json::array({1})}));
    CHECK(j["det"] == 1);
    CHECK(j["nondegenerate"] == true);

    RunResult s = run_cli("intersection-form --gamma-word w1_2 --ell 2");
    Json js = parse_out(s);
    CHECK(js["det"] == -1);
}

TEST_CASE("cli eval-word") {
    std::string dir = temp_dir();
    std::string assign_path = dir + "/assign.json";
    {
        GroupElement qi = from_quaternion(Group::SU2, {0, 1, 0, 0});
        GroupElement qj = from_quaternion(Group::SU2, {0, 0, 1, 0});
        Json j{{"a", element_to_json(qi)}, {"b", element_to_json(qj)}};
        std::ofstream out(assign_path);
        out << j.dump();
    }
    RunResult r =
        run_cli("eval-word --group su2 --word a*b*a^-1*b^-1 --assign " + assign_path);
    REQUIRE(r.exit_code == 0);
    GroupElement got = element_from_json(parse_out(r)["matrix"], Group::SU2);
    CHECK(distance(got, negate(GroupElement::identity(Group::SU2))) < 1e-12);
}

TEST_CASE("cli tau") {
    RunResult r = run_cli("tau --group su2 --gamma-word v1 --grid 16 --seed 3");
    REQUIRE(r.exit_code == 0);
    Json j = parse_out(r);
    CHECK(j["ell"] == 1);
    CHECK(j["max_boundary_violation"].get<double>() < 1e-10);
}

TEST_CASE("cli flow") {
    std::string dir = temp_dir();
    std::string trace_path = dir + "/trace.csv";
    RunResult r = run_cli(
        "flow --group u1 --genus 1 --winding 1 --grid 32 --steps 3000 --step-size 4.0 "
        "--stop-grad-norm 1e-5 --seed 11 --trace " +
        trace_path);
    REQUIRE(r.exit_code == 0);
    Json j = parse_out(r);
    CHECK(j["converged"] == true);
    CHECK(j["class_before"] == 1);
    CHECK(j["class_after"] == 1);
    double target = 4 * M_PI * M_PI;
    CHECK(std::abs(j["final_energy"].get<double>() - target) < 0.01 * target);
    std::ifstream trace(trace_path);
    std::string header;
    std::getline(trace, header);
    CHECK(header == "step,energy,grad_norm");
}

TEST_CASE("cli validate-point") {
    std::mt19937_64 rng(211);
    GroupSpec spec{Group::SU2, 1e-9};
    FreeSimplicialGroup k = kan_group(surface(2));
    std::vector<GroupElement> w;
    for (int j = 0; j < 4; ++j) w.push_back(random_element(spec, rng));
    RealizationPoint p = make_surface_point(k, spec, w, oracles::fibre_path(spec, w, 0, 16, rng));

    std::string dir = temp_dir();
    std::string point_path = dir + "/point.json";
    {
        std::ofstream out(point_path);
        out << point_to_json(p).dump();
    }
    RunResult good =
        run_cli("validate-point --complex " + data("surface2.json") + " --point " + point_path);
    REQUIRE(good.exit_code == 0);
    CHECK(parse_out(good)["pass"] == true);

    p.values[1][3][0] = mul(p.values[1][3][0], exp_alg(Group::SU2, {1e-3, 0, 0}));
    p.values[1][0][0] = mul(p.values[1][0][0], exp_alg(Group::SU2, {1e-3, 0, 0}));
    std::string bad_path = dir + "/bad.json";
    {
        std::ofstream out(bad_path);
        out << point_to_json(p).dump();
    }
    RunResult bad =
        run_cli("validate-point --complex " + data("surface2.json") + " --point " + bad_path);
    CHECK(bad.exit_code == 2);
    CHECK(parse_out(bad)["pass"] == false);
}

TEST_CASE("cli invalid input exits 1") {
    CHECK(run_cli("homology --complex does_not_exist.json").exit_code == 1);
    CHECK(run_cli("eval-word --group so5 --word x --assign nope.json").exit_code == 1);
}

TEST_CASE("cli matrix dump") {
    std::string dir = temp_dir();
    RunResult r = run_cli("homology --complex " + data("rp3like.json") +
                          " --max-degree 2 --dump-matrices " + dir + "/rp3");
    REQUIRE(r.exit_code == 0);
    std::ifstream d1(dir + "/rp3.d1.csv");
    std::string line;
    std::getline(d1, line);
    CHECK(line == "-2");  // boundary of the squaring relator
    std::ifstream d2(dir + "/rp3.d2.csv");
    std::getline(d2, line);
    CHECK(line == "0");
}

TEST_CASE("cli flow exports a valid realization point") {
    std::string dir = temp_dir();
    std::string point_path = dir + "/flowpoint.json";
    RunResult r = run_cli(
        "flow --group su2 --genus 1 --winding 0 --grid 24 --steps 500 --seed 9 "
        "--stop-grad-norm 1e-5 --out-point " +
        point_path);
    REQUIRE(r.exit_code == 0);
    std::string surf1 = dir + "/surface1.json";
    {
        std::ofstream out(surf1);
        out << complex_to_json(surface(1)).dump();
    }
    RunResult val = run_cli("validate-point --complex " + surf1 + " --point " + point_path);
    CHECK(val.exit_code == 0);
    CHECK(parse_out(val)["pass"] == true);
}
