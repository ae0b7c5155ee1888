#include "symch/commands.hpp"

#include "symch/charpoly.hpp"
#include "symch/classical.hpp"
#include "symch/ideal.hpp"
#include "symch/jobspec.hpp"
#include "symch/parser.hpp"
#include "symch/randomgen.hpp"
#include "symch/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>

namespace symch {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitBadInput = 2;

unsigned n_cap() {
    if (const char* s = std::getenv("SYMCH_MAX_N")) {
        try {
            unsigned long v = std::stoul(s);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 4;
}

void enforce_cap(unsigned n, std::ostream& err) {
    const unsigned cap = n_cap();
    if (n > cap) {
        throw error("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                    " (set SYMCH_MAX_N to raise it)");
    }
    if (n > 4) {
        err << "warning: n = " << n << " makes the permutation sums expensive\n";
    }
}

json report_to_json(const VerificationReport& rep, bool timings) {
    json j;
    j["claim"] = rep.claim;
    j["verdict"] = rep.holds ? "holds" : "violated";
    json det = json::object();
    for (const auto& [k, v] : rep.details) det[k] = v;
    j["details"] = det;
    if (!rep.lambda.empty()) {
        j["lambda"] = json::array();
        for (const auto& l : rep.lambda) j["lambda"].push_back(l.str());
    }
    j["stats"] = {{"terms", rep.stats.terms}, {"checks", rep.stats.checks}};
    if (timings) j["stats"]["wall_ms"] = rep.stats.wall_ms;
    if (rep.residual_element) j["residual"] = rep.residual_element->str();
    if (rep.residual_matrix) j["residual"] = rep.residual_matrix->str();
    return j;
}

void print_report(const VerificationReport& rep, bool as_json, bool timings, std::ostream& out) {
    if (as_json) {
        out << report_to_json(rep, timings).dump(2) << "\n";
        return;
    }
    out << "claim: " << rep.claim << "\n";
    out << "verdict: " << (rep.holds ? "holds" : "violated") << "\n";
    for (const auto& [k, v] : rep.details) out << k << ": " << v << "\n";
    for (size_t i = 0; i < rep.lambda.size(); ++i) {
        out << "lambda_" << i << ": " << rep.lambda[i].str() << "\n";
    }
    out << "terms: " << rep.stats.terms << "\n";
    out << "checks: " << rep.stats.checks << "\n";
    if (timings) out << "wall_ms: " << rep.stats.wall_ms << "\n";
    if (rep.residual_element) out << "residual:\n" << rep.residual_element->str() << "\n";
    if (rep.residual_matrix) out << "residual:\n" << rep.residual_matrix->str() << "\n";
}

int cmd_charpoly(const JobSpec& job, bool as_json, std::ostream& out, std::ostream& err) {
    enforce_cap(job.n, err);
    const Matrix a = build_matrix(job);
    const auto lambda = symmetric_charpoly(a);
    if (as_json) {
        json j;
        j["lambda"] = json::array();
        for (const auto& l : lambda) j["lambda"].push_back(l.str());
        out << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < lambda.size(); ++i) {
            out << "lambda_" << i << " = " << lambda[i].str() << "\n";
        }
    }
    return kExitOk;
}

int cmd_preadjoint(const JobSpec& job, bool as_json, std::ostream& out, std::ostream& err) {
    enforce_cap(job.n, err);
    const Matrix a = build_matrix(job);
    const Matrix astar = preadjoint(a);
    if (as_json) {
        json j;
        j["preadjoint"] = json::array();
        for (unsigned i = 0; i < astar.n(); ++i) {
            json row = json::array();
            for (unsigned k = 0; k < astar.n(); ++k) row.push_back(astar.at(i, k).str());
            j["preadjoint"].push_back(row);
        }
        out << j.dump(2) << "\n";
    } else {
        out << astar.str() << "\n";
    }
    return kExitOk;
}

int cmd_decompose(const JobSpec& job, bool as_json, std::ostream& out, std::ostream& err) {
    enforce_cap(job.n, err);
    const Matrix a = build_matrix(job);
    const CharPolyResult dec = decompose_thm22(a);
    if (as_json) {
        json j;
        j["lambda"] = json::array();
        for (const auto& l : dec.lambda) j["lambda"].push_back(l.str());
        auto dump_side = [&](const std::vector<Matrix>& side) {
            json arr = json::array();
            for (const auto& m : side) {
                json rows = json::array();
                for (unsigned i = 0; i < m.n(); ++i) {
                    json row = json::array();
                    for (unsigned k = 0; k < m.n(); ++k) row.push_back(m.at(i, k).str());
                    rows.push_back(row);
                }
                arr.push_back(rows);
            }
            return arr;
        };
        j["C"] = dump_side(dec.C);
        j["D"] = dump_side(dec.D);
        out << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < dec.lambda.size(); ++i) {
            out << "lambda_" << i << " = " << dec.lambda[i].str() << "\n";
        }
        for (size_t i = 0; i < dec.C.size(); ++i) {
            out << "C[" << i << "] =\n" << dec.C[i].str() << "\n";
        }
        for (size_t i = 0; i < dec.D.size(); ++i) {
            out << "D[" << i << "] =\n" << dec.D[i].str() << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& claim, const JobSpec& job, bool as_json, bool timings,
               std::ostream& out, std::ostream& err) {
    enforce_cap(job.n, err);
    const Matrix a = build_matrix(job);

    std::vector<VerificationReport> reports;
    if (claim == "prop21") {
        reports.push_back(verify_prop21(a));
    } else if (claim == "thm22") {
        reports.push_back(verify_thm22(a));
    } else if (claim == "thm31") {
        reports.push_back(verify_thm31(a));
    } else if (claim == "sandwich-product") {
        reports.push_back(sandwich_product_identity(a));
    } else if (claim == "invariance") {
        if (auto g = build_conjugator(job)) {
            reports.push_back(verify_invariance(a, *g));
        } else {
            // no conjugator in the job: check a seeded permutation and a
            // seeded unimodular rational conjugator
            Rng rng(job.options.seed);
            VerificationReport r1 =
                verify_invariance(a, random_permutation_conjugator(rng, job.ring, job.n));
            r1.details.emplace_back("conjugator", "permutation");
            VerificationReport r2 =
                verify_invariance(a, random_unimodular_conjugator(rng, job.ring, job.n));
            r2.details.emplace_back("conjugator", "unimodular");
            reports.push_back(std::move(r1));
            reports.push_back(std::move(r2));
        }
    } else {
        throw error("unknown claim: " + claim);
    }

    bool all_hold = true;
    if (as_json && reports.size() > 1) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r, timings));
        out << arr.dump(2) << "\n";
    }
    for (const auto& r : reports) {
        if (!as_json || reports.size() == 1) print_report(r, as_json, timings, out);
        all_hold = all_hold && r.holds;
    }
    return all_hold ? kExitOk : kExitViolated;
}

int cmd_ideal_membership(const JobSpec& job, bool as_json, bool show_certificates,
                         std::ostream& out, std::ostream& err) {
    enforce_cap(job.n, err);
    if (job.ring.kind != RingKind::free_algebra) {
        throw error("ideal-membership requires a free-algebra job");
    }

    std::vector<Element> targets;
    std::vector<std::string> labels;
    if (!job.targets.empty()) {
        for (size_t i = 0; i < job.targets.size(); ++i) {
            targets.push_back(parse_element(job.targets[i], job.ring));
            labels.push_back("target " + std::to_string(i + 1));
        }
    } else {
        // certify the sandwich residual of the job's matrix, entry by
        // entry, multihomogeneous piece by piece
        const Matrix a = build_matrix(job);
        const auto lambda = symmetric_charpoly(a);
        std::vector<Matrix> powers = {Matrix::identity(job.ring, job.n)};
        for (unsigned k = 1; k <= job.n; ++k) powers.push_back(powers.back() * a);
        Matrix residual(job.ring, job.n);
        for (unsigned i = 0; i <= job.n; ++i) {
            for (unsigned j = 0; j <= job.n; ++j) {
                residual = residual + powers[i].scale_right(lambda[i] * lambda[j]) * powers[j];
            }
        }
        for (unsigned i = 0; i < job.n; ++i) {
            for (unsigned j = 0; j < job.n; ++j) {
                auto pieces = multihomogeneous_components(residual.at(i, j));
                for (size_t p = 0; p < pieces.size(); ++p) {
                    targets.push_back(pieces[p]);
                    labels.push_back("residual(" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + ") piece " + std::to_string(p + 1));
                }
            }
        }
    }

    bool all_member = true;
    json jout = json::array();
    for (size_t t = 0; t < targets.size(); ++t) {
        const IdealMembership r = ideal_membership(IdealMembershipInstance{targets[t]});
        bool sound = true;
        if (r.member) {
            sound = expand_certificate(job.ring, r.certificate) == targets[t];
        }
        all_member = all_member && r.member && sound;
        if (as_json) {
            json j;
            j["label"] = labels[t];
            j["member"] = r.member;
            j["span_size"] = r.span_size;
            j["component_dim"] = r.component_dim;
            j["certificate_terms"] = r.certificate.size();
            j["certificate_expands_exactly"] = sound;
            if (show_certificates) {
                json cert = json::array();
                for (const auto& term : r.certificate) {
                    cert.push_back(certificate_term_str(job.ring, term));
                }
                j["certificate"] = cert;
            }
            jout.push_back(j);
        } else {
            out << labels[t] << ": " << (r.member ? "member" : "non-member")
                << " (span " << r.span_size << ", dim " << r.component_dim;
            if (r.member) {
                out << ", certificate terms " << r.certificate.size()
                    << ", expansion " << (sound ? "exact" : "MISMATCH");
            }
            out << ")\n";
            if (show_certificates && r.member) {
                for (const auto& term : r.certificate) {
                    out << "  " << certificate_term_str(job.ring, term) << "\n";
                }
            }
        }
    }
    if (as_json) out << jout.dump(2) << "\n";
    return all_member ? kExitOk : kExitViolated;
}

int cmd_oracle_commutative(unsigned n, unsigned trials, uint64_t seed, bool as_json,
                           std::ostream& out, std::ostream& err) {
    enforce_cap(n, err);
    Rng rng(seed);
    const Rational nfact(BigInt::factorial(n), BigInt(1));
    const Rational nm1fact(BigInt::factorial(n - 1), BigInt(1));
    unsigned failures = 0;
    for (unsigned t = 0; t < trials; ++t) {
        const Matrix a = random_integer_matrix(rng, n);
        const Element fadj = Element::scalar(a.ring(), nm1fact);
        const Element fdet = Element::scalar(a.ring(), nfact);

        const bool adj_ok = preadjoint(a) == classical_adjugate(a).scale_left(fadj);
        const bool det_ok = sdet(a) == fdet * classical_det(a);
        const auto lambda = symmetric_charpoly(a);
        const auto classical = classical_charpoly(a);
        bool cp_ok = true;
        for (unsigned i = 0; i <= n; ++i) {
            cp_ok = cp_ok && lambda[i] == fdet * classical[i];
        }
        if (!(adj_ok && det_ok && cp_ok)) ++failures;
    }
    if (as_json) {
        json j;
        j["n"] = n;
        j["trials"] = trials;
        j["failures"] = failures;
        out << j.dump(2) << "\n";
    } else {
        out << "commutative oracle: n = " << n << ", trials = " << trials
            << ", failures = " << failures << "\n";
    }
    return failures == 0 ? kExitOk : kExitViolated;
}

int cmd_gen(const std::string& mode, const std::string& ring_name, unsigned n, unsigned gens,
            uint64_t seed, const std::string& out_path, std::ostream& out, std::ostream& err) {
    enforce_cap(n, err);
    JobSpec job;
    job.n = n;
    job.options.seed = seed;

    if (mode == "generic") {
        job.ring = RingDescriptor::free_algebra(n * n);
        for (unsigned i = 0; i < n; ++i) {
            std::vector<std::string> row;
            for (unsigned j = 0; j < n; ++j) {
                row.push_back("x" + std::to_string(i * n + j + 1));
            }
            job.entries.push_back(std::move(row));
        }
    } else if (mode == "random") {
        const RingKind kind = ring_kind_from_name(ring_name);
        switch (kind) {
            case RingKind::rational: job.ring = RingDescriptor::rationals(); break;
            case RingKind::upper_triangular2: job.ring = RingDescriptor::upper_triangular2(); break;
            case RingKind::grassmann: job.ring = RingDescriptor::grassmann(gens); break;
            case RingKind::commutative_poly: job.ring = RingDescriptor::commutative(gens); break;
            case RingKind::free_algebra: job.ring = RingDescriptor::free_algebra(gens); break;
        }
        Rng rng(seed);
        for (unsigned i = 0; i < n; ++i) {
            std::vector<std::string> row;
            for (unsigned j = 0; j < n; ++j) {
                row.push_back(random_element(rng, job.ring).str());
            }
            job.entries.push_back(std::move(row));
        }
    } else {
        throw error("gen mode must be generic or random");
    }

    const std::string text = jobspec_to_json_text(job);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw error("cannot write " + out_path);
        f << text;
    }
    return kExitOk;
}

// Deliberately corrupts lambda_0 and re-runs the right Cayley-Hamilton
// sum; exists to exercise the exit-code contract on a violating input.
int cmd_debug_corrupt_lambda(const JobSpec& job, bool as_json, std::ostream& out,
                             std::ostream& err) {
    enforce_cap(job.n, err);
    const Matrix a = build_matrix(job);
    CharPolyResult dec = decompose_thm22(a);
    dec.lambda[0] = dec.lambda[0] + Element::one(job.ring);

    Matrix right_sum(job.ring, job.n);
    Matrix power = Matrix::identity(job.ring, job.n);
    for (unsigned i = 0; i <= job.n; ++i) {
        right_sum = right_sum + power * (scalar_matrix(job.ring, job.n, dec.lambda[i]) + dec.C[i]);
        if (i < job.n) power = power * a;
    }

    VerificationReport rep;
    rep.claim = "debug-corrupt-lambda";
    rep.holds = right_sum.is_zero();
    if (!rep.holds) rep.residual_matrix = right_sum;
    print_report(rep, as_json, false, out);
    return rep.holds ? kExitOk : kExitViolated;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Cayley-Hamilton identity engine for matrices over noncommutative rings"};
    app.require_subcommand(1);

    std::string file;
    std::string claim;
    std::string gen_mode;
    std::string ring_name = "free-algebra";
    std::string out_path;
    unsigned n = 2;
    unsigned gens = 4;
    unsigned trials = 100;
    uint64_t seed = 1;
    bool as_json = false;
    bool timings = false;
    bool show_certificates = false;

    auto* charpoly_cmd = app.add_subcommand("charpoly", "print lambda_0 .. lambda_n");
    charpoly_cmd->add_option("file", file, "job file")->required();
    charpoly_cmd->add_flag("--json", as_json);

    auto* preadj_cmd = app.add_subcommand("preadjoint", "print the preadjoint matrix");
    preadj_cmd->add_option("file", file)->required();
    preadj_cmd->add_flag("--json", as_json);

    auto* decomp_cmd = app.add_subcommand("decompose", "print lambda, C_i and D_i");
    decomp_cmd->add_option("file", file)->required();
    decomp_cmd->add_flag("--json", as_json);

    auto* verify_cmd = app.add_subcommand("verify", "machine-verify one of the identities");
    verify_cmd->add_option("claim", claim, "prop21|thm22|thm31|invariance|sandwich-product")
        ->required()
        ->check(CLI::IsMember({"prop21", "thm22", "thm31", "invariance", "sandwich-product"}));
    verify_cmd->add_option("file", file)->required();
    verify_cmd->add_flag("--json", as_json);
    verify_cmd->add_flag("--timings", timings);

    auto* ideal_cmd = app.add_subcommand("ideal-membership",
                                         "certify sandwich-residual entries (or explicit targets) "
                                         "in the T-ideal of [x,y][u,v]");
    ideal_cmd->add_option("file", file)->required();
    ideal_cmd->add_flag("--json", as_json);
    ideal_cmd->add_flag("--certificates", show_certificates, "print full certificates");

    auto* oracle_cmd = app.add_subcommand("oracle", "cross-checks against classical routes");
    auto* oracle_comm = oracle_cmd->add_subcommand(
        "commutative", "preadjoint/sdet/charpoly vs cofactor expansion over the rationals");
    oracle_comm->add_option("--n", n)->required();
    oracle_comm->add_option("--trials", trials);
    oracle_comm->add_option("--seed", seed);
    oracle_comm->add_flag("--json", as_json);

    auto* gen_cmd = app.add_subcommand("gen", "emit a job file");
    gen_cmd->add_option("mode", gen_mode, "generic|random")
        ->required()
        ->check(CLI::IsMember({"generic", "random"}));
    gen_cmd->add_option("--ring", ring_name,
                        "rational|commutative-poly|free-algebra|grassmann|upper-triangular-2");
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--gens", gens, "generator count for generated rings");
    gen_cmd->add_option("--seed", seed);
    gen_cmd->add_option("-o,--output", out_path, "write to file instead of stdout");

    auto* debug_cmd = app.add_subcommand("debug", "internal checks");
    auto* corrupt_cmd =
        debug_cmd->add_subcommand("corrupt-lambda", "tamper with lambda_0 and report the violation");
    corrupt_cmd->add_option("file", file)->required();
    corrupt_cmd->add_flag("--json", as_json);

    std::vector<const char*> argv;
    argv.push_back("symch");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (charpoly_cmd->parsed()) return cmd_charpoly(load_jobspec(file), as_json, out, err);
        if (preadj_cmd->parsed()) return cmd_preadjoint(load_jobspec(file), as_json, out, err);
        if (decomp_cmd->parsed()) return cmd_decompose(load_jobspec(file), as_json, out, err);
        if (verify_cmd->parsed()) {
            return cmd_verify(claim, load_jobspec(file), as_json, timings, out, err);
        }
        if (ideal_cmd->parsed()) {
            return cmd_ideal_membership(load_jobspec(file), as_json, show_certificates, out, err);
        }
        if (oracle_cmd->parsed() && oracle_comm->parsed()) {
            return cmd_oracle_commutative(n, trials, seed, as_json, out, err);
        }
        if (gen_cmd->parsed()) {
            return cmd_gen(gen_mode, ring_name, n, gens, seed, out_path, out, err);
        }
        if (debug_cmd->parsed() && corrupt_cmd->parsed()) {
            return cmd_debug_corrupt_lambda(load_jobspec(file), as_json, out, err);
        }
        err << "error: no subcommand\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

} // namespace symch
