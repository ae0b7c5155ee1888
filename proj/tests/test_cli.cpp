#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symch/commands.hpp"
#include "symch/jobspec.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace symch;

namespace {

std::string fixture(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(std::vector<std::string>(args), out, err);
    return Run{code, out.str(), err.str()};
}

} // namespace

TEST_CASE("charpoly on the 1x1 free job") {
    const Run r = run({"charpoly", fixture("job_free_n1.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "lambda_0 = -x1\nlambda_1 = 1\n");
}

TEST_CASE("preadjoint of the generic 2x2") {
    const Run r = run({"preadjoint", fixture("job_generic_free_n2.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "[ x4, -x2 ]\n[ -x3, x1 ]\n");
}

TEST_CASE("verify prop21 on the generic 3x3 prints term stats") {
    const Run r = run({"verify", "prop21", fixture("job_generic_free_n3.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: holds") != std::string::npos);
    CHECK(r.out.find("term_pairs: 36") != std::string::npos);
    CHECK(r.out.find("terms_per_diagonal_entry: 12") != std::string::npos);
}

TEST_CASE("verify thm31 on a U2 job reports c_nn = 4") {
    const Run r = run({"verify", "thm31", fixture("job_u2_n2.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: holds") != std::string::npos);
    CHECK(r.out.find("c_nn: 4") != std::string::npos);
}

TEST_CASE("verify thm31 on the generic free job exits 1 and prints the residual") {
    const Run r = run({"verify", "thm31", fixture("job_generic_free_n2.json")});
    CHECK(r.code == 1);
    CHECK(r.out.find("verdict: violated") != std::string::npos);
    CHECK(r.out.find("residual:") != std::string::npos);
}

TEST_CASE("verify thm22 and sandwich-product on a Grassmann job") {
    CHECK(run({"verify", "thm22", fixture("job_grass_n2.json")}).code == 0);
    CHECK(run({"verify", "sandwich-product", fixture("job_grass_n2.json")}).code == 0);
}

TEST_CASE("verify invariance uses the job's conjugator when present") {
    const Run r = run({"verify", "invariance", fixture("job_invariance.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: holds") != std::string::npos);
}

TEST_CASE("verify invariance falls back to seeded conjugators") {
    const Run r = run({"verify", "invariance", fixture("job_grass_n2.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("conjugator: permutation") != std::string::npos);
    CHECK(r.out.find("conjugator: unimodular") != std::string::npos);
}

TEST_CASE("parse errors exit 2 with a message") {
    const Run r = run({"charpoly", fixture("job_bad_entry.json")});
    CHECK(r.code == 2);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(run({"charpoly", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"verify", "everything", fixture("job_free_n1.json")}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("oracle commutative") {
    const Run r = run({"oracle", "commutative", "--n", "3", "--trials", "15", "--seed", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("failures = 0") != std::string::npos);
}

TEST_CASE("ideal-membership with explicit targets") {
    const Run r = run({"ideal-membership", fixture("job_ideal_targets.json"), "--certificates"});
    CHECK(r.code == 0);
    CHECK(r.out.find("target 1: member") != std::string::npos);
    CHECK(r.out.find("target 2: member") != std::string::npos);
    CHECK(r.out.find("expansion exact") != std::string::npos);
}

TEST_CASE("ideal-membership certifies the generic sandwich residual") {
    const Run r = run({"ideal-membership", fixture("job_generic_free_n2.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("non-member") == std::string::npos);
    CHECK(r.out.find("member") != std::string::npos);
}

TEST_CASE("gen emits a job file that reloads") {
    const Run r = run({"gen", "random", "--ring", "grassmann", "--n", "2", "--gens", "4",
                       "--seed", "13"});
    CHECK(r.code == 0);
    const JobSpec job = parse_jobspec(r.out);
    CHECK(job.n == 2);
    CHECK(job.ring.kind == RingKind::grassmann);
    CHECK(!build_matrix(job).is_zero());

    const Run g = run({"gen", "generic", "--n", "2"});
    CHECK(g.code == 0);
    const JobSpec gj = parse_jobspec(g.out);
    CHECK(gj.ring.generator_count == 4);
    CHECK(gj.entries[1][0] == "x3");
}

TEST_CASE("golden files match byte for byte") {
    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        REQUIRE(in.good());
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const struct {
        std::vector<std::string> args;
        std::string golden;
    } cases[] = {
        {{"charpoly", fixture("job_free_n1.json")}, "charpoly_free_n1.txt"},
        {{"preadjoint", fixture("job_generic_free_n2.json")}, "preadjoint_generic_n2.txt"},
        {{"verify", "thm31", fixture("job_u2_n2.json")}, "verify_thm31_u2_n2.txt"},
        {{"decompose", fixture("job_generic_free_n2.json")}, "decompose_generic_n2.txt"},
    };
    for (const auto& c : cases) {
        std::ostringstream out, err;
        run_command(c.args, out, err);
        CHECK(out.str() == slurp(fixture("golden/" + c.golden)));
    }
}

TEST_CASE("identical job and seed give byte-identical reports") {
    const Run a = run({"verify", "thm22", fixture("job_grass_n2.json")});
    const Run b = run({"verify", "thm22", fixture("job_grass_n2.json")});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    const Run c = run({"verify", "invariance", fixture("job_grass_n2.json")});
    const Run d = run({"verify", "invariance", fixture("job_grass_n2.json")});
    CHECK(c.out == d.out);
}

TEST_CASE("--json reports are machine readable") {
    const Run r = run({"verify", "thm31", fixture("job_u2_n2.json"), "--json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("claim") == "thm31");
    CHECK(j.at("verdict") == "holds");
    CHECK(j.at("details").at("c_nn") == "4");
    CHECK(j.at("lambda").size() == 3);
    CHECK(j.at("stats").contains("terms"));
    CHECK(!j.at("stats").contains("wall_ms"));   // only with --timings

    const Run t = run({"verify", "thm31", fixture("job_u2_n2.json"), "--json", "--timings"});
    const auto jt = nlohmann::json::parse(t.out);
    CHECK(jt.at("stats").contains("wall_ms"));
}

TEST_CASE("debug corrupt-lambda demonstrates the violation exit code") {
    const Run r = run({"debug", "corrupt-lambda", fixture("job_u2_n2.json")});
    CHECK(r.code == 1);
    CHECK(r.out.find("verdict: violated") != std::string::npos);
}

TEST_CASE("the n cap rejects oversized jobs unless overridden") {
    // n = 5 job, entries all zero
    std::ostringstream job;
    job << "{\"ring\": {\"kind\": \"rational\"}, \"n\": 5, \"entries\": [";
    for (int i = 0; i < 5; ++i) {
        job << (i ? "," : "") << "[\"0\",\"0\",\"0\",\"0\",\"0\"]";
    }
    job << "]}";
    const std::string path = "cap_test_tmp.json";
    {
        std::ofstream f(path);
        f << job.str();
    }
    CHECK(run({"charpoly", path}).code == 2);

    ::setenv("SYMCH_MAX_N", "5", 1);
    const Run r = run({"charpoly", path});
    ::unsetenv("SYMCH_MAX_N");
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.out.find("lambda_5 = 120") != std::string::npos);
}
