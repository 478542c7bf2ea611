#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "zitterlab/scenario.hpp"

using namespace zitterlab;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "zitterlab_tests" / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<double>> csv_columns(const std::filesystem::path& p, size_t ncols) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::vector<double>> cols(ncols);
    while (std::getline(in, line)) {
        std::stringstream row(line);
        std::string cell;
        size_t i = 0;
        while (std::getline(row, cell, ',') && i < ncols) cols[i++].push_back(std::stod(cell));
    }
    return cols;
}

json canonical_config() {
    return {{"kind", "dirac"}, {"m", 1.0}, {"samples", 101}};
}

}  // namespace

TEST_CASE("canonical run writes the expected columns") {
    const auto dir = fresh_dir("dirac");
    const ScenarioResult res = run_scenario(canonical_config(), dir);
    REQUIRE(std::filesystem::exists(res.csv_path));
    REQUIRE(std::filesystem::exists(res.report_path));

    const auto cols = csv_columns(res.csv_path, 26);
    REQUIRE(cols[0].size() == 101);
    for (double v0 : cols[5]) CHECK(v0 == 1.0);  // times-ratio constant in the CMF
    for (double sz : cols[20]) CHECK(std::fabs(sz + 0.5) <= 1e-12);  // spin z slot constant
    for (double h : cols[17]) CHECK(std::fabs(h - 1.5) <= 1e-12);

    CHECK(res.report["spin"]["constant_v2"]["radius"].get<double>() == doctest::Approx(0.5));
    CHECK(res.report["constraints"]["dos_max"].get<double>() <= 1e-10);
}

TEST_CASE("stability scenario reports the frequency spectrum") {
    const auto dir = fresh_dir("stability");
    const json cfg = {{"kind", "stability"}, {"m", 1.0}, {"coeffs", {-0.25}}};
    const ScenarioResult res = run_scenario(cfg, dir);
    CHECK(res.csv_path.empty());
    const auto& spec = res.report["spectrum"];
    REQUIRE(spec["frequencies"].size() == 1);
    CHECK(spec["frequencies"][0].get<double>() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(spec["oscillatory"].get<bool>());
    CHECK(spec["descartes"].get<bool>());
}

TEST_CASE("malformed configs name the missing field") {
    const auto dir = fresh_dir("bad");
    CHECK_THROWS_WITH_AS(run_scenario(json{{"m", 1.0}}, dir), doctest::Contains("kind"),
                         ConfigParseError);
    CHECK_THROWS_WITH_AS(run_scenario(json{{"kind", "integrate"}, {"m", 1.0}}, dir),
                         doctest::Contains("init"), ConfigParseError);
    const json no_dtau = {{"kind", "integrate"},
                          {"m", 1.0},
                          {"coeffs", {-0.25}},
                          {"init_dirac", json::object()},
                          {"tau_end", 1.0}};
    CHECK_THROWS_WITH_AS(run_scenario(no_dtau, dir), doctest::Contains("dtau"), ConfigParseError);
    CHECK_THROWS_WITH_AS(run_scenario(json{{"kind", "warp"}}, dir), doctest::Contains("warp"),
                         ConfigParseError);
}

TEST_CASE("error records carry kind, category and message") {
    const auto dir = fresh_dir("errors");
    write_error_record(dir, ConfigParseError("missing numeric field 'dtau'"));
    const json rec = json::parse(slurp(dir / "error.json"));
    CHECK(rec["error"]["kind"] == "ConfigParseError");
    CHECK(rec["error"]["category"] == "config");
    CHECK(rec["error"]["exit_code"] == 2);
    CHECK(rec["error"]["message"].get<std::string>().find("dtau") != std::string::npos);
}

TEST_CASE("runs are deterministic byte for byte") {
    const auto dir1 = fresh_dir("det1");
    const auto dir2 = fresh_dir("det2");
    const json cfg = {{"kind", "dirac"}, {"m", 1.0}, {"boost", {0.3, 0.0, 0.4}}, {"samples", 64}};
    const ScenarioResult r1 = run_scenario(cfg, dir1);
    const ScenarioResult r2 = run_scenario(cfg, dir2);
    CHECK(slurp(r1.csv_path) == slurp(r2.csv_path));
    CHECK(slurp(r1.report_path) == slurp(r2.report_path));
}

TEST_CASE("integrate scenario produces a conservation report") {
    const auto dir = fresh_dir("integrate");
    const json cfg = {{"kind", "integrate"}, {"m", 1.0},       {"coeffs", {-0.25}},
                      {"init_dirac", json::object()},          {"dtau", M_PI / 500.0},
                      {"tau_end", 2.0 * M_PI}};
    const ScenarioResult res = run_scenario(cfg, dir);
    CHECK(res.report["conservation"]["p_drift"].get<double>() <= 1e-8);
    CHECK(res.report["conservation"]["h_drift"].get<double>() <= 1e-8);
    CHECK(res.report["conservation"]["j_drift"].get<double>() <= 1e-7);
}

TEST_CASE("spinless scenario recovers straight-line kinematics") {
    const auto dir = fresh_dir("spinless");
    const double g = 1.25;
    const json cfg = {{"kind", "integrate"},
                      {"m", 1.0},
                      {"coeffs", json::array()},
                      {"init_derivs", {{0, 0, 0, 0}, {g, g * 0.6, 0, 0}}},
                      {"dtau", 0.01},
                      {"tau_end", 2.0}};
    const ScenarioResult res = run_scenario(cfg, dir);
    const auto cols = csv_columns(res.csv_path, 26);
    for (double v2 : cols[21]) CHECK(std::fabs(v2 - 1.0) <= 1e-12);
    for (double tr : cols[22]) CHECK(std::fabs(tr - g) <= 1e-12);
    for (double s : cols[18]) CHECK(s == 0.0);
    CHECK(res.report["conservation"]["p_drift"].get<double>() <= 1e-14);
}

TEST_CASE("zerospin scenario flags the prefactor discrepancy") {
    const auto dir = fresh_dir("zerospin");
    const json cfg = {{"kind", "zerospin"}, {"m", 1.0},      {"k1", -0.25},
                      {"F", {0, 1, 0, 0}},  {"boost", {0.0, 0.6, 0.0}}, {"samples", 65}};
    const ScenarioResult res = run_scenario(cfg, dir);
    const auto& disc = res.report["discrepancies"]["mean_spin_squared"];
    CHECK(disc["implemented"].get<double>() == doctest::Approx(0.0703125).epsilon(1e-12));
    CHECK(disc["literature"].get<double>() == doctest::Approx(0.140625).epsilon(1e-12));
    CHECK(std::fabs(disc["quadrature"].get<double>() - disc["implemented"].get<double>()) <= 1e-9);
    CHECK(res.report["spin"]["max_helicity"].get<double>() <= 1e-12);
    CHECK(res.report["spin"]["max_pauli_lubanski_component"].get<double>() <= 1e-12);
}

TEST_CASE("cronon scenario keeps a free velocity fixed") {
    const auto dir = fresh_dir("cronon");
    const json cfg = {{"kind", "cronon"},
                      {"m", 1.0},
                      {"e", 1.0},
                      {"T", 0.01},
                      {"v0", {1.25, 0.75, 0, 0}},
                      {"steps", 32}};
    const ScenarioResult res = run_scenario(cfg, dir);
    const auto cols = csv_columns(res.csv_path, 26);
    for (double v1 : cols[6]) CHECK(v1 == 0.75);
    CHECK(res.report["conservation"]["v_normalization_drift"].get<double>() == 0.0);
    CHECK(res.report["spectrum"]["coefficient_signs_alternate_upto_20"].get<bool>());
}

TEST_CASE("audit scenario passes on valid params and rejects corrupted ones") {
    const auto dir = fresh_dir("audit");
    json cfg = canonical_config();
    cfg["kind"] = "audit";
    CHECK_NOTHROW(run_scenario(cfg, dir));

    // loosened tolerance also passes; an invalid E fails validation upstream
    ScenarioOptions loose;
    loose.tolerance = 1e-6;
    CHECK_NOTHROW(run_scenario(cfg, fresh_dir("audit_loose"), loose));

    json bad = cfg;
    bad["E"] = {0.3, 1, 0, 0};
    CHECK_THROWS_AS(run_scenario(bad, fresh_dir("audit_bad")), InvalidParams);
}

TEST_CASE("sweep over the step size shows the convergence trend") {
    const auto dir = fresh_dir("sweep_dtau");
    const json cfg = {{"kind", "integrate"}, {"m", 1.0},       {"coeffs", {-0.25}},
                      {"init_dirac", json::object()},          {"dtau", 0.01},
                      {"tau_end", 2.0 * M_PI}};
    const auto outcomes =
        run_sweep(cfg, "dtau", {M_PI / 500.0, M_PI / 1000.0, M_PI / 2000.0}, dir);
    REQUIRE(outcomes.size() == 3);
    std::vector<double> h_drifts, j_drifts;
    for (const auto& oc : outcomes) {
        REQUIRE(oc.ok);
        const json rep = json::parse(slurp(oc.out_dir / "report.json"));
        // the momentum functional is linear in the chain, so RK4 keeps it
        // exactly on this linear system; convergence shows in the quadratic
        // charges H and J
        CHECK(rep["conservation"]["p_drift"].get<double>() <= 1e-12);
        h_drifts.push_back(rep["conservation"]["h_drift"].get<double>());
        j_drifts.push_back(rep["conservation"]["j_drift"].get<double>());
    }
    CHECK(h_drifts[1] < h_drifts[0]);
    CHECK(h_drifts[2] < h_drifts[1]);
    CHECK(j_drifts[1] < j_drifts[0]);
    CHECK(j_drifts[2] < j_drifts[1]);
    CHECK(std::filesystem::exists(dir / "sweep_summary.json"));
}

TEST_CASE("sweep over the boost magnitude tracks the Lorentz factor") {
    const auto dir = fresh_dir("sweep_boost");
    json cfg = canonical_config();
    cfg["samples"] = 33;
    const std::vector<double> speeds{0.0, 0.3, 0.6};
    const auto outcomes = run_sweep(cfg, "boost", speeds, dir);
    for (size_t i = 0; i < speeds.size(); ++i) {
        REQUIRE(outcomes[i].ok);
        const json rep = json::parse(slurp(outcomes[i].out_dir / "report.json"));
        const double mean = rep["constraints"]["times_ratio"]["mean_measured"].get<double>();
        const double gamma = 1.0 / std::sqrt(1.0 - speeds[i] * speeds[i]);
        CHECK(mean == doctest::Approx(gamma).epsilon(1e-9));
    }
}

TEST_CASE("an empty sweep writes nothing and succeeds") {
    const auto dir = fresh_dir("sweep_empty");
    std::filesystem::remove_all(dir);
    const auto outcomes = run_sweep(canonical_config(), "m", {}, dir);
    CHECK(outcomes.empty());
    CHECK_FALSE(std::filesystem::exists(dir / "sweep_summary.json"));
}

TEST_CASE("sweep aggregates per-run failures") {
    const auto dir = fresh_dir("sweep_fail");
    json cfg = canonical_config();
    cfg["kind"] = "audit";
    // m <= 0 fails validation for one of the runs
    const auto outcomes = run_sweep(cfg, "m", {1.0, -1.0}, dir);
    REQUIRE(outcomes.size() == 2);
    CHECK(outcomes[0].ok);
    CHECK_FALSE(outcomes[1].ok);
    CHECK(outcomes[1].exit_code == 3);
    CHECK(std::filesystem::exists(outcomes[1].out_dir / "error.json"));
}

TEST_CASE("seed configs cover every scenario kind and run as-is") {
    const json seeds = seed_configs();
    for (const char* kind : {"dirac", "audit", "integrate", "stability", "zerospin", "cronon"}) {
        REQUIRE(seeds.contains(kind));
        CHECK(seeds[kind]["kind"] == kind);
    }
    // the lighter ones run directly; keep the long integrate out of unit tests
    for (const char* kind : {"dirac", "stability", "zerospin", "cronon"}) {
        const auto dir = fresh_dir(std::string("seed_") + kind);
        CHECK_NOTHROW(run_scenario(seeds[kind], dir));
    }
}

TEST_CASE("report json always carries the five fixed keys") {
    const auto dir = fresh_dir("keys");
    const ScenarioResult res = run_scenario(canonical_config(), dir);
    for (const char* key : {"conservation", "constraints", "spectrum", "spin", "discrepancies"})
        CHECK(res.report.contains(key));
}
