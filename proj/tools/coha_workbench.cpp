// coha-workbench: batch front end for the quiver / path-algebra / Lie /
// character / counting modules.  Subcommand style; JSON reports; exit codes
// 0 = all checks pass, 1 = a mathematical check failed, 2 = input error,
// 3 = budget exceeded.

#include <coha/character.hpp>
#include <coha/counting.hpp>
#include <coha/current_algebra.hpp>
#include <coha/dn_check.hpp>
#include <coha/integrality.hpp>
#include <coha/io.hpp>
#include <coha/kac.hpp>
#include <coha/lie_presentation.hpp>
#include <coha/path_algebra.hpp>
#include <coha/quotient_dims.hpp>
#include <coha/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace coha;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;
constexpr int exit_budget = 3;

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::stoll(cur));
    if (out.empty()) throw parse_error("empty integer list");
    return out;
}

std::vector<std::uint32_t> parse_primes(const std::string& s) {
    std::vector<std::uint32_t> out;
    for (auto v : parse_int_list(s)) {
        if (v < 2) throw parse_error("invalid prime " + std::to_string(v));
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

void emit(run_report& rep, const std::string& out_path) {
    json j = rep.finalize();
    // human summary to stdout, full report to --out
    for (const auto& check : j["checks"])
        std::cout << "[" << check["status"].get<std::string>() << "] " << check["name"].get<std::string>() << "\n";
    if (j.contains("counts"))
        for (const auto& row : j["counts"]) std::cout << row.dump() << "\n";
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        os << j.dump(2) << "\n";
    }
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("COHA_WORKBENCH_BUDGET")) return std::strtoull(env, nullptr, 10);
    return count_options{}.max_configurations;
}

struct common_flags {
    std::string out;
    int jobs = 1;
    std::uint64_t budget = default_budget();
    std::uint64_t seed = 0;
    bool seed_set = false;
};

int run_quiver(const std::string& quiver_path, bool do_triple, bool do_psi, const std::string& psi_path,
               const common_flags& flags) {
    run_report rep("quiver");
    rep.config()["quiver"] = quiver_path;
    quiver q = load_quiver(quiver_path);

    auto form_json = [](const int_bilinear_form& f) {
        json m = json::array();
        for (int i = 0; i < f.size(); ++i) {
            json row = json::array();
            for (int j = 0; j < f.size(); ++j) row.push_back(f.at(i, j).str());
            m.push_back(row);
        }
        return m;
    };
    rep.set("euler_form", form_json(euler_form(q)));
    rep.set("symmetrized_euler", form_json(symmetrized_euler(q)));
    rep.add_check("euler forms computed", true);

    quiver target = q;
    if (do_triple) {
        target = build_triple(q);
        rep.set("triple", quiver_to_json(target));
        rep.add_check("triple constructed", true);
    }
    if (do_psi) {
        mod2_form psi = psi_path.empty() ? solve_psi(target) : [&] {
            json pj = load_json_file(psi_path);
            std::vector<std::vector<std::uint8_t>> m;
            for (const auto& row : pj) {
                std::vector<std::uint8_t> r;
                for (const auto& v : row) r.push_back(static_cast<std::uint8_t>(v.get<int>() & 1));
                m.push_back(std::move(r));
            }
            return mod2_form(std::move(m));
        }();
        json pj = json::array();
        for (int i = 0; i < psi.size(); ++i) {
            json row = json::array();
            for (int j = 0; j < psi.size(); ++j) row.push_back(static_cast<int>(psi.at(i, j)));
            pj.push_back(row);
        }
        rep.set("psi", pj);
        bool ok = verify_psi(target, psi);
        json witness;
        if (!ok) {
            mod2_form tau = tau_form(target);
            for (int i = 0; i < psi.size() && witness.is_null(); ++i)
                for (int j = 0; j < psi.size(); ++j)
                    if ((psi.at(i, j) ^ psi.at(j, i)) != tau.at(i, j)) {
                        witness = json{{"basis_pair", {i, j}}};
                        break;
                    }
        }
        rep.add_check("psi + psi^T == tau", ok, json::object(), witness);
    }
    emit(rep, flags.out);
    return rep.any_failed() ? exit_check_failed : exit_ok;
}

int run_check(const std::string& suite, const std::string& quiver_path, const std::string& presentation_path,
              const std::string& potential_path, const std::string& cutoff_str, int band, int upow,
              const std::string& r_str, const common_flags& flags) {
    run_report rep("check " + suite);
    rep.config()["suite"] = suite;

    if (suite == "dimred") {
        quiver q = load_quiver(quiver_path);
        rep.config()["quiver"] = quiver_path;
        auto r = verify_dimensional_reduction_relations(q);
        for (const auto& item : r.items) rep.add_check(item.name, item.pass);
    } else if (suite == "serre" || suite == "current" || suite == "pbw") {
        lie_presentation p = load_presentation(presentation_path);
        rep.config()["presentation"] = presentation_path;
        dim_vector cutoff(parse_int_list(cutoff_str));
        rep.config()["cutoff"] = dim_vector_to_json(cutoff);
        auto g = serre_quotient(p, cutoff);
        json dims = json::array();
        for (const auto& [d, idx] : g.by_degree)
            if (!idx.empty()) dims.push_back({{"d", dim_vector_to_json(d)}, {"dim", idx.size()}});
        rep.set("graded_dims", dims);

        if (suite == "serre") {
            rep.add_check("serre quotient computed (" + std::to_string(g.basis.size()) + " basis elements)", true);
        } else if (suite == "current") {
            if (r_str.empty()) throw parse_error("--r is required for the current suite");
            twist_weights w(parse_int_list(r_str));
            rep.config()["r"] = r_str;
            rep.config()["upow"] = upow;
            for (const auto& item : current_algebra_check(g, w, upow).items)
                rep.add_check(item.name, item.pass, json::object(), json(item.witness));
            for (const auto& item : heisenberg_check(g, w, upow).items)
                rep.add_check(item.name, item.pass, json::object(), json(item.witness));
        } else {
            rep.config()["band"] = band;
            auto nchar = lie_character(g, 0, band);
            auto pr = pbw_character_check(nchar);
            rep.add_check("PBW character identity (plethystic vs monomial enumeration)", pr.pass, json::object(),
                          json(pr.witness));
        }
    } else if (suite == "posweight") {
        if (potential_path.empty()) throw parse_error("--potential is required for the posweight suite");
        quiver base = load_quiver(quiver_path);
        rep.config()["quiver"] = quiver_path;
        rep.config()["potential"] = potential_path;
        auto qp = std::make_shared<const quiver>(base);
        potential w = potential_from_json(qp, load_json_file(potential_path));
        auto sol = solve_positive_weight(w);
        bool ok = sol.has_value();
        if (ok) {
            auto hw = homogeneous_weight(w.sum(), *sol, 1);
            ok = hw.has_value() && (*hw)[0] >= 1;
            json weights = json::object();
            for (const auto& [name, vec] : *sol) weights[name] = vec[0];
            rep.set("weights", weights);
            if (hw) rep.set("common_weight", (*hw)[0]);
        }
        rep.add_check("potential admits strictly positive weights", ok);
    } else {
        throw parse_error("unknown check suite '" + suite + "' (expected dimred|serre|current|pbw|posweight)");
    }
    emit(rep, flags.out);
    return rep.any_failed() ? exit_check_failed : exit_ok;
}

int run_count(const std::string& job, const std::string& quiver_path, const std::string& dim_str,
              const std::string& dmax_str, const std::string& primes_str, const std::string& mode_str, int n,
              int samples, const common_flags& flags) {
    run_report rep("count " + job);
    rep.config()["job"] = job;
    count_options opt;
    opt.max_configurations = flags.budget;
    opt.jobs = flags.jobs;

    if (job == "preproj" || job == "nilpotent") {
        quiver q = load_quiver(quiver_path);
        dim_vector d(parse_int_list(dim_str));
        rep.config()["dim"] = dim_vector_to_json(d);
        count_mode mode = (mode_str == "naive") ? count_mode::naive : count_mode::fast;
        rep.config()["mode"] = (mode == count_mode::naive) ? "naive" : "fast";
        for (auto p : parse_primes(primes_str)) {
            integer raw = (job == "preproj") ? count_preprojective(q, d, p, mode, opt)
                                             : count_nilpotent(q, d, p, opt);
            rep.add_count_row(make_count_row(d, p, raw));
        }
        rep.add_check(job + " rows computed", true);
    } else if (job == "kac") {
        quiver q = load_quiver(quiver_path);
        dim_vector d(parse_int_list(dim_str));
        rep.config()["dim"] = dim_vector_to_json(d);
        qpoly hua = kac_hua(q, d);
        json coeffs = json::array();
        for (int i = 0; i <= hua.degree(); ++i) coeffs.push_back(hua.coeff(i).str());
        rep.set("kac_polynomial_coeffs", coeffs);
        bool all = true;
        for (auto p : parse_primes(primes_str)) {
            kac_options kopt;
            kopt.max_orbit_space = flags.budget;
            integer bf = kac_bruteforce(q, d, p, kopt);
            bool ok = (bf == hua.eval(p));
            all = all && ok;
            rep.add_check("hua == bruteforce at q=" + std::to_string(p), ok, json::object(),
                          json("bruteforce " + bf.str() + " vs hua " + hua.eval(p).str()));
        }
        (void)all;
    } else if (job == "integrality") {
        quiver q = load_quiver(quiver_path);
        dim_vector dmax(parse_int_list(dmax_str));
        rep.config()["dmax"] = dim_vector_to_json(dmax);
        auto r = integrality_shadow(q, dmax, parse_primes(primes_str), std::nullopt, opt);
        rep.set("fitted_params",
                json{{"c", r.params.c}, {"e", r.params.e}, {"denominator", r.params.denom_name()}});
        json rows = json::array();
        for (const auto& row : r.rows) {
            rows.push_back({{"d", dim_vector_to_json(row.d)},
                            {"q", row.q},
                            {"raw", row.raw.str()},
                            {"gl", row.gl.str()},
                            {"stack", rational_str(row.stack)},
                            {"predicted", rational_str(row.predicted)},
                            {"training", row.training},
                            {"match", row.match}});
            if (!row.training)
                rep.add_check("prediction at d=" + dim_vector_to_json(row.d).dump() + " q=" + std::to_string(row.q),
                              row.match, json::object(),
                              json("stack " + rational_str(row.stack) + " vs predicted " +
                                   rational_str(row.predicted)));
        }
        rep.set("rows", rows);
    } else if (job == "dn") {
        if (!flags.seed_set) throw parse_error("--seed is required for the dn job");
        dn_options dopt{n, samples, flags.seed, false};
        rep.config()["n"] = n;
        rep.config()["samples"] = samples;
        rep.config()["seed"] = flags.seed;
        auto r = dn_singularity_check(dopt);
        rep.set("singular_values", json(r.singular_values));
        rep.set("sv_ratio", r.sv_ratio);
        rep.set("samples_kept", r.samples_kept);
        rep.add_check("third singular value ratio < 1e-6", r.pass, json::object(), json(r.sv_ratio));
    } else {
        throw parse_error("unknown count job '" + job + "' (expected preproj|kac|integrality|nilpotent|dn)");
    }
    emit(rep, flags.out);
    return rep.any_failed() ? exit_check_failed : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coha-workbench: quiver / BPS-algebra computational checks"};
    app.require_subcommand(1);

    common_flags flags;

    std::string quiver_path, presentation_path, potential_path, psi_path, mode = "fast";
    std::string dim_str, dmax_str = "2", primes_str = "2", cutoff_str = "2,2", r_str;
    std::string suite, job;
    bool do_triple = false, do_psi = false;
    int band = 8, upow = 3, n = 4, samples = 25;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", flags.out, "write the full JSON report here");
        cmd->add_option("--jobs", flags.jobs, "worker threads for counting kernels");
        cmd->add_option("--budget", flags.budget, "max enumerated configurations");
    };

    auto* cq = app.add_subcommand("quiver", "Euler forms, triple construction, psi solve/verify");
    cq->add_option("--quiver", quiver_path, "quiver JSON file")->required();
    cq->add_flag("--triple", do_triple, "build the triple quiver first");
    cq->add_flag("--psi", do_psi, "solve and verify psi");
    cq->add_option("--psi-file", psi_path, "verify this mod-2 matrix instead of the solved psi");
    add_common(cq);

    auto* cc = app.add_subcommand("check", "symbolic/algebraic check suites");
    cc->add_option("suite", suite, "dimred | serre | current | pbw | posweight")->required();
    cc->add_option("--quiver", quiver_path, "quiver JSON file (dimred/posweight)");
    cc->add_option("--presentation", presentation_path, "presentation JSON file (serre/current/pbw)");
    cc->add_option("--potential", potential_path, "potential JSON file (posweight)");
    cc->add_option("--cutoff", cutoff_str, "dimension-vector cutoff, comma separated");
    cc->add_option("--band", band, "cohomological band upper end (pbw)");
    cc->add_option("--upow", upow, "u-power sweep bound (current)");
    cc->add_option("--r", r_str, "determinant weights r_i, comma separated (current)");
    add_common(cc);

    auto* cn = app.add_subcommand("count", "finite-field counting jobs");
    cn->add_option("job", job, "preproj | kac | integrality | nilpotent | dn")->required();
    cn->add_option("--quiver", quiver_path, "quiver JSON file");
    cn->add_option("--dim", dim_str, "dimension vector, comma separated");
    cn->add_option("--dmax", dmax_str, "componentwise dimension bound (integrality)");
    cn->add_option("--q", primes_str, "comma separated list of primes");
    cn->add_option("--mode", mode, "fast | naive");
    cn->add_option("--n", n, "D_n index (dn)");
    cn->add_option("--samples", samples, "sample count (dn)");
    cn->add_option("--seed", flags.seed, "RNG seed (required for randomized checks)")
        ->each([&](const std::string&) { flags.seed_set = true; });
    add_common(cn);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (cq->parsed()) return run_quiver(quiver_path, do_triple, do_psi, psi_path, flags);
        if (cc->parsed())
            return run_check(suite, quiver_path, presentation_path, potential_path, cutoff_str, band, upow, r_str,
                             flags);
        if (cn->parsed()) return run_count(job, quiver_path, dim_str, dmax_str, primes_str, mode, n, samples, flags);
    } catch (const budget_exceeded_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_input_error;
}
