// Behaviour of the verification harness itself: determinism, rejection
// accounting, mutation sensitivity, report serialization, and error paths.

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <set>
#include <string>

#include "sl2k/sl2k.hpp"

using namespace sl2k;

TEST_CASE("reports are bitwise deterministic apart from wall time", "[harness]") {
    SamplerConfig cfg;
    cfg.trials = 300;
    VerificationReport a = run_suite("cocycle_N", "real", cfg);
    VerificationReport b = run_suite("cocycle_N", "real", cfg);
    REQUIRE(a.trials_requested == 300);
    REQUIRE(a.trials_run == 300);
    REQUIRE(a.passed());
    a.elapsed_ms = 0.0;
    b.elapsed_ms = 0.0;
    REQUIRE(to_json(a) == to_json(b));

    SamplerConfig other = cfg;
    other.seed = 43;
    VerificationReport c = run_suite("cocycle_N", "real", other);
    REQUIRE(c.seed == 43);
    REQUIRE(c.max_residual != a.max_residual);
}

TEST_CASE("every registered suite passes a short unmutated run", "[harness]") {
    SamplerConfig cfg;
    cfg.trials = 50;
    for (const SuiteDef& def : suite_registry()) {
        INFO(def.name);
        const VerificationReport r = run_suite(def.name, "real", cfg);
        REQUIRE(r.passed());
        REQUIRE(r.trials_run == 50);
        REQUIRE(r.max_residual <= r.tolerance);
        if (!def.real_only) {
            const VerificationReport rc = run_suite(def.name, "complex", cfg);
            REQUIRE(rc.passed());
            REQUIRE(rc.field == "complex");
        }
    }
}

TEST_CASE("the bias mutation is detected by every suite", "[harness]") {
    SamplerConfig cfg;
    cfg.trials = 50;
    cfg.mutation = Mutation::bias;
    for (const SuiteDef& def : suite_registry()) {
        INFO(def.name);
        const VerificationReport r = run_suite(def.name, "real", cfg);
        REQUIRE_FALSE(r.passed());
        REQUIRE(r.max_residual > r.tolerance);
        if (!def.real_only) {
            INFO("complex");
            REQUIRE_FALSE(run_suite(def.name, "complex", cfg).passed());
        }
    }
}

TEST_CASE("targeted mutations break exactly the suites that watch them", "[harness]") {
    SamplerConfig cfg;
    cfg.trials = 50;

    cfg.mutation = Mutation::flip_dright_sign;
    REQUIRE_FALSE(run_suite("differential_identity_N", "real", cfg).passed());
    REQUIRE_FALSE(run_suite("differential_identity_N", "complex", cfg).passed());
    REQUIRE_FALSE(run_suite("differential_identity_A", "real", cfg).passed());
    // suites that never evaluate the lifted differential stay green
    REQUIRE(run_suite("cocycle_N", "real", cfg).passed());
    REQUIRE(run_suite("iwasawa_roundtrip", "real", cfg).passed());

    cfg.mutation = Mutation::beta_a_half;
    REQUIRE_FALSE(run_suite("closed_vs_chase_A", "real", cfg).passed());
    REQUIRE(run_suite("closed_vs_chase_N", "real", cfg).passed());
    REQUIRE(run_suite("cocycle_A", "real", cfg).passed());
}

TEST_CASE("an unreachable margin exhausts the rejection budget", "[harness]") {
    SamplerConfig cfg;
    cfg.trials = 10;
    cfg.margin = 1.5;  // projective distances never exceed 1
    try {
        run_suite("cocycle_A", "real", cfg);
        FAIL("expected sampling_exhausted");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::sampling_exhausted);
    }
}

TEST_CASE("unknown suites and field mismatches are usage errors", "[harness]") {
    try {
        run_suite("nope", "real", {});
        FAIL("expected unknown_suite");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::unknown_suite);
    }
    try {
        run_suite("cocycle_A", "complex", {});
        FAIL("expected field_mismatch");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::field_mismatch);
    }
    try {
        run_suite("cocycle_N", "quaternion", {});
        FAIL("expected field_mismatch");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::field_mismatch);
    }
}

TEST_CASE("a tolerance override reaches the pass judgement", "[harness]") {
    SamplerConfig cfg;
    cfg.trials = 50;
    cfg.tol_override = 1e-30;
    const VerificationReport r = run_suite("iwasawa_roundtrip", "real", cfg);
    REQUIRE(r.tolerance == 1e-30);
    REQUIRE_FALSE(r.passed());
}

TEST_CASE("JSON output parses with the exact key set and exact numbers", "[harness]") {
    SamplerConfig cfg;
    cfg.trials = 40;
    std::vector<VerificationReport> reps;
    reps.push_back(run_suite("iwasawa_roundtrip", "real", cfg));
    reps.push_back(run_suite("cocycle_A", "real", cfg));

    const nlohmann::json parsed = nlohmann::json::parse(to_json(reps));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    const std::set<std::string> want = {"suite",        "field",     "trials_requested",
                                        "trials_run",   "rejected",  "max_residual",
                                        "tolerance",    "failures",  "seed",
                                        "elapsed_ms"};
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        std::set<std::string> got;
        for (auto it = parsed[i].begin(); it != parsed[i].end(); ++it) got.insert(it.key());
        REQUIRE(got == want);
        REQUIRE(parsed[i]["suite"].get<std::string>() == reps[i].suite);
        REQUIRE(parsed[i]["max_residual"].get<double>() == reps[i].max_residual);
        REQUIRE(parsed[i]["tolerance"].get<double>() == reps[i].tolerance);
        REQUIRE(parsed[i]["failures"].is_array());
        REQUIRE(parsed[i]["failures"].empty());
        REQUIRE(parsed[i]["trials_run"].get<std::uint64_t>() == 40);
    }
}

TEST_CASE("failure records carry the replayed inputs", "[harness]") {
    SamplerConfig cfg;
    cfg.trials = 20;
    cfg.mutation = Mutation::bias;
    const VerificationReport r = run_suite("projection_match_A", "real", cfg);
    REQUIRE_FALSE(r.passed());
    const nlohmann::json parsed = nlohmann::json::parse(to_json(r));
    REQUIRE(parsed["failures"].is_array());
    REQUIRE(parsed["failures"].size() == r.failures.size());
    for (const auto& rec : parsed["failures"]) {
        REQUIRE(rec["input"].is_string());
        REQUIRE(rec["residual"].is_number());
        REQUIRE(rec["input"].get<std::string>().find("attempt=") == 0);
        REQUIRE(rec["input"].get<std::string>().find("g=") != std::string::npos);
    }
}

TEST_CASE("CSV and text serializations keep their documented shapes", "[harness]") {
    REQUIRE(csv_header() ==
            "suite,field,trials_requested,trials_run,rejected,max_residual,"
            "tolerance,failures,seed,elapsed_ms\n");
    SamplerConfig cfg;
    cfg.trials = 30;
    std::vector<VerificationReport> reps;
    reps.push_back(run_suite("transporters", "real", cfg));
    reps.push_back(run_suite("transporters", "complex", cfg));

    const std::string csv = to_csv(reps);
    std::size_t lines = 0;
    for (char ch : csv)
        if (ch == '\n') ++lines;
    REQUIRE(lines == reps.size() + 1);
    REQUIRE(csv.rfind("suite,field,", 0) == 0);
    REQUIRE(csv.find("transporters,real,30,30,") != std::string::npos);
    REQUIRE(csv.find("transporters,complex,30,30,") != std::string::npos);

    for (const auto& r : reps) {
        const std::string line = to_text_line(r);
        REQUIRE(line.rfind("SUITE ", 0) == 0);
        REQUIRE(line.find(" field=" + r.field + " ") != std::string::npos);
        REQUIRE(line.substr(line.size() - 6) == " PASS\n");
    }
}
