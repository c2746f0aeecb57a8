#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "perron/cli.hpp"
#include "perron/errors.hpp"

using namespace perron;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "perron-forge");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("perron_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

}  // namespace

TEST_CASE("analyze") {
    Run plastic = run({"analyze", "--poly=-1,-1,0,1"});
    REQUIRE(plastic.code == 0);
    Json j = Json::parse(plastic.out);
    CHECK(j["degree"] == 3);
    CHECK(j["real_places"] == 1);
    CHECK(j["complex_pairs"] == 1);
    CHECK(j["pisot"] == true);
    CHECK(j["discriminant"] == "-23");

    Json golden = Json::parse(run({"analyze", "--poly=-1,-1,1"}).out);
    CHECK(golden["degree"] == 2);
    CHECK(golden["pisot"] == true);

    Run linear = run({"analyze", "--poly=-2,1"});
    REQUIRE(linear.code == 0);
    Json l = Json::parse(linear.out);
    CHECK(l["degree"] == 1);
    CHECK(rational_from_json(l["lambda"]["lo"]) == 2);
    CHECK(rational_from_json(l["rho"]["hi"]) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"analyze", "--poly=-2,0,1"}).code == 4);
    CHECK(run({"analyze", "--poly=1,x"}).code == 2);
    CHECK(run({"analyze", "--poly=2,-3,1"}).code == 3);
    Run budget = run({"search", "--poly=-1,-1,1", "--budget", "0"});
    CHECK(budget.code == 6);
    CHECK(Json::parse(budget.err)["partial"] == 1);
    CHECK(run({"construct", "--poly=-1,-1,1", "--mode", "sideways"}).code == 2);
    CHECK(run({"bound", "--poly=-1,-1,1", "--alpha", "optimize:x"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"search", "--poly=-1,-1,1", "--n-max", "9"}).code == 2);
    CHECK(run({"verify", "--out-dir", scratch("missing").string()}).code == 15);
    // A Perron cubic with negative trace has no 3 x 3 witness.
    IntPolynomial neg = find_negative_trace_cubic(5);
    CHECK(run({"search", "--poly=" + neg.to_csv(), "--n-max", "3", "--search-mode", "irreducible"}).code == 11);
}

TEST_CASE("construct, verify and tamper") {
    fs::path dir = scratch("construct");
    Run c = run({"construct", "--poly=-1,-1,0,1", "--out-dir", dir.string()});
    REQUIRE(c.code == 0);
    CHECK(fs::exists(dir / "matrix.json"));
    CHECK(fs::exists(dir / "certificate.json"));
    CHECK(fs::exists(dir / "graph.dot"));
    Run v = run({"verify", "--out-dir", dir.string()});
    CHECK(v.code == 0);
    CHECK(Json::parse(v.out)["ok"] == true);

    // A perturbed matrix fails.
    Json m = Json::parse(read_file(dir / "matrix.json"));
    m["entries"][0][0] = "5";
    atomic_write(dir / "bad_matrix.json", dump(m));
    Run bad = run({"verify", "--out-dir", dir.string(), "--matrix", (dir / "bad_matrix.json").string()});
    CHECK(bad.code == 14);

    // A forged invariance witness fails.
    Json cert = Json::parse(read_file(dir / "certificate.json"));
    cert["cone"]["witnesses"][0][0] = "7/3";
    atomic_write(dir / "bad_cert.json", dump(cert));
    CHECK(run({"verify", "--out-dir", dir.string(), "--certificate", (dir / "bad_cert.json").string()}).code == 14);
}

TEST_CASE("identical configurations give identical bytes") {
    for (const std::string cmd : {"construct", "bound", "search", "analyze"}) {
        fs::path a = scratch("det_a_" + cmd), b = scratch("det_b_" + cmd);
        Run ra = run({cmd, "--poly=-1,-1,0,1", "--out-dir", a.string()});
        Run rb = run({cmd, "--poly=-1,-1,0,1", "--out-dir", b.string()});
        REQUIRE(ra.code == 0);
        REQUIRE(rb.code == 0);
        CHECK(ra.out == rb.out);
        for (const auto& entry : fs::directory_iterator(a))
            CHECK(read_file(entry.path()) == read_file(b / entry.path().filename()));
    }
}

TEST_CASE("bound rendering") {
    Json q = Json::parse(run({"bound", "--poly=-1,-1,1"}).out);
    CHECK(q["exact_dpf"] == 2);
    CHECK(q["kappa"] == "not computed");
    Json p = Json::parse(run({"bound", "--poly=-1,-1,0,1"}).out);
    CHECK(p["pisot_note"]["holds"] == true);
    CHECK(p["bound_disc"]["log10"].get<double>() == doctest::Approx(17.27).epsilon(0.001));
    Run text = run({"bound", "--poly=-1,-1,0,1", "--text"});
    CHECK(text.out.find("irreducible bound/disc") != std::string::npos);
}

TEST_CASE("dot styles") {
    fs::path dir = scratch("dot");
    REQUIRE(run({"construct", "--poly=-1,-1,1", "--out-dir", dir.string(), "--dot-style", "parallel"}).code == 0);
    std::string dot = read_file(dir / "graph.dot");
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("label") == std::string::npos);
}
