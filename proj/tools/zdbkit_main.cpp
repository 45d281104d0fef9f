// zdbkit command-line front end: build fields, run constructions from recipe
// files, verify claimed parameters, and print bound tables.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "zdbkit/construct.hpp"
#include "zdbkit/cwc.hpp"
#include "zdbkit/fhs.hpp"
#include "zdbkit/io.hpp"
#include "zdbkit/kernels.hpp"
#include "zdbkit/parallel.hpp"
#include "zdbkit/recipe.hpp"

namespace fs = std::filesystem;
using namespace zdbkit;

namespace {

struct GlobalOpts {
    std::string recipe_path;
    std::string out_dir;
    std::string format = "json";
    std::uint64_t seed = 0;
    int threads = 0;
    bool force = false;
    bool no_verify = false;
};

std::int64_t field_cap_from_env() {
    if (const char* env = std::getenv("ZDB_MAX_FIELD")) {
        char* end = nullptr;
        std::int64_t v = std::strtoll(env, &end, 10);
        if (end != env && v > 1) return v;
        std::cerr << "warning: ignoring unparsable ZDB_MAX_FIELD\n";
    }
    return FieldTable::kDefaultSizeCap;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open recipe file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream out(fs::path(dir) / name);
    if (!out) throw SchemaError("cannot write " + name + " under " + dir);
    return out;
}

ConstructionRun run_from_file(const GlobalOpts& opts) {
    Recipe recipe = parse_recipe_json(slurp(opts.recipe_path));
    RunOptions ro;
    ro.force = opts.force;
    ro.verify = !opts.no_verify;
    ro.field_cap = field_cap_from_env();
    ro.threads = opts.threads;
    ro.seed = opts.seed;
    return run_recipe(recipe, ro);
}

void write_selected_outputs(const ConstructionRun& run, const GlobalOpts& opts) {
    if (opts.out_dir.empty()) return;
    const auto& outs = run.recipe.outputs;
    auto wants = [&](const char* name) { return outs.empty() || outs.count(name) > 0; };

    {
        auto f = open_out(opts.out_dir, "field.json");
        io::write_field_spec_json(f, *run.field);
        auto c = open_out(opts.out_dir, "cosets.json");
        io::write_coset_json(c, *run.cosets);
        auto r = open_out(opts.out_dir, "recipe.json");
        r << recipe_to_json(run.recipe) << "\n";
    }
    if (wants("spectrum")) {
        for (std::size_t i = 0; i < run.functions.size(); ++i) {
            auto f = open_out(opts.out_dir, "spectrum_f" + std::to_string(i) + ".csv");
            io::write_spectrum_csv(f, difference_spectrum(run.functions[i], opts.threads),
                                   run.functions[i].codomain);
        }
        if (run.interleaved) {
            auto f = open_out(opts.out_dir, "spectrum_interleaved.csv");
            io::write_spectrum_csv(f, difference_spectrum(*run.interleaved, opts.threads),
                                   run.interleaved->codomain);
        }
    }
    if (wants("pdf")) {
        for (std::size_t i = 0; i < run.functions.size(); ++i) {
            PdfFamily pdf = to_pdf(run.functions[i]);
            auto chk = verify_pdf(pdf);
            pdf.lambda = chk.lambda;
            auto f = open_out(opts.out_dir, "pdf_f" + std::to_string(i) + ".json");
            io::write_pdf_json(f, pdf);
        }
    }
    if (wants("fhs")) {
        FhsReport rep = zdb_set_to_fhs(run.functions, opts.threads);
        auto f = open_out(opts.out_dir, "fhs.txt");
        io::write_fhs_txt(f, rep.set);
        auto c = open_out(opts.out_dir, "correlation.csv");
        io::write_correlation_csv(c, rep.set);
    }
    if (wants("lc") && run.v == 1) {
        for (std::size_t i = 0; i < run.functions.size(); ++i) {
            std::vector<Fe> seq;
            for (std::int32_t idx : run.functions[i].values)
                seq.push_back(run.functions[i].codomain.element(idx));
            auto f = open_out(opts.out_dir, "lc_f" + std::to_string(i) + ".json");
            io::write_lc_json(f, berlekamp_massey(*run.field, seq), *run.field);
        }
    }
    if (wants("cwc")) {
        ConstantWeightCode code = build_cwc(run.functions, opts.threads);
        FvsResult fvs = fvs_bound(code.n, code.d, code.w, code.ell, code.N);
        auto f = open_out(opts.out_dir, "cwc.csv");
        io::write_cwc_csv(f, code, run.functions.front().codomain);
        auto r = open_out(opts.out_dir, "cwc_report.json");
        io::write_cwc_report_json(r, code, fvs);
    }
    if (wants("bounds")) {
        const ZdbFunction& f0 = run.primary();
        auto lb = lambda_lower_bound(f0.n, f0.ell());
        auto pf = peng_fan_bounds(f0.n, static_cast<std::int64_t>(run.functions.size()), f0.ell());
        if (opts.format == "json") {
            auto out = open_out(opts.out_dir, "bounds.json");
            out << "{\"lambda_lower_bound\": " << lb.bound
                << ", \"lempel_greenberger\": " << lempel_greenberger_bound(f0.n, f0.ell())
                << ", \"peng_fan\": [" << pf.bound1 << ", " << pf.bound2 << "]}\n";
        } else {
            auto out = open_out(opts.out_dir, "bounds.txt");
            out << "lambda_lower_bound " << lb.bound << "\n"
                << "lempel_greenberger " << lempel_greenberger_bound(f0.n, f0.ell()) << "\n"
                << "peng_fan " << pf.bound1 << " " << pf.bound2 << "\n";
        }
    }
}

int cmd_construct(const GlobalOpts& opts) {
    ConstructionRun run = run_from_file(opts);
    std::cout << "constructed " << run.functions.size() << " function(s) on Z_"
              << run.functions.front().n << ", alphabet " << run.functions.front().ell()
              << ", expected lambda " << run.expected_lambda
              << (opts.no_verify ? " (verification skipped)" : " (verified)") << "\n";
    write_selected_outputs(run, opts);
    return 0;
}

int cmd_verify(const GlobalOpts& opts) {
    GlobalOpts o = opts;
    o.no_verify = false;
    ConstructionRun run = run_from_file(o);
    const std::int64_t lam = run.expected_lambda;
    for (std::size_t i = 0; i < run.functions.size(); ++i) {
        const ZdbFunction& f = run.functions[i];
        std::int64_t flam = *is_zdb(f, opts.threads).lambda;
        auto ids = sum_identities_check(f, flam);
        if (!ids.pass) throw VerificationError("sum identities fail for member " + std::to_string(i));
        auto lb = lambda_lower_bound(f.n, f.ell());
        auto pb = preimage_size_bounds(f.n, f.ell(), flam);
        PdfFamily pdf = to_pdf(f);
        auto pchk = verify_pdf(pdf);
        if (!pchk.ok() || *pchk.lambda != flam)
            throw VerificationError("PDF verification disagrees for member " + std::to_string(i));
        for (std::int64_t tau : pdf.block_sizes)
            if (tau != 0 && (tau < pb.lo - 1e-9 || tau > pb.hi + 1e-9))
                throw VerificationError("preimage size " + std::to_string(tau) +
                                        " escapes its interval");
        std::cout << "member " << i << ": (" << f.n << ", " << f.ell() << ", " << flam
                  << ")-ZDB; lower bound " << lb.bound
                  << (lb.bound == flam ? " (met)" : "") << "; preimage interval [" << pb.lo
                  << ", " << pb.hi << "]; PDF lambda " << *pchk.lambda << "\n";
    }
    if (run.interleaved)
        std::cout << "interleaved: (" << run.interleaved->n << ", " << run.interleaved->ell()
                  << ", " << lam << ")-ZDB\n";
    std::cout << "all claims verified\n";
    return 0;
}

int cmd_bounds(std::int64_t n, std::int64_t ell, std::int64_t lambda, std::int64_t nseq) {
    auto lb = lambda_lower_bound(n, ell);
    std::cout << "lambda_lower_bound(" << n << ", " << ell << ") = " << lb.bound << "\n";
    std::cout << "  equality forces tau profile: " << lb.k << " x" << (ell - lb.eps) << ", "
              << (lb.k + 1) << " x" << lb.eps << (lb.exact ? " (bound is exact)" : "") << "\n";
    std::cout << "lempel_greenberger(" << n << ", " << ell
              << ") = " << lempel_greenberger_bound(n, ell) << "\n";
    if (lambda >= 0) {
        auto pb = preimage_size_bounds(n, ell, lambda);
        std::cout << "preimage sizes in [" << pb.lo << ", " << pb.hi << "]";
        if (pb.special == PreimageCase::PerfectNonlinear) std::cout << " (lambda = n/ell)";
        if (pb.special == PreimageCase::DifferenceBalanced) std::cout << " (lambda = (n+1)/ell - 1)";
        std::cout << "\n";
    }
    if (nseq >= 1) {
        auto pf = peng_fan_bounds(n, nseq, ell);
        std::cout << "peng_fan(" << n << ", " << nseq << ", " << ell << ") = (" << pf.bound1
                  << ", " << pf.bound2 << "), I = " << pf.I << "\n";
    }
    return 0;
}

int cmd_fhs(const GlobalOpts& opts) {
    ConstructionRun run = run_from_file(opts);
    FhsReport rep = zdb_set_to_fhs(run.functions, opts.threads);
    std::cout << "FHS set (" << rep.set.seqs.front().n << ", " << rep.set.seqs.size() << ", "
              << rep.M << "; " << rep.set.seqs.front().alphabet.size() << ")\n";
    std::cout << "per-sequence H: ";
    for (std::int64_t h : rep.per_seq_h) std::cout << h << " ";
    std::cout << "(bound " << rep.lg_bound << (rep.per_seq_optimal ? ", optimal" : "") << ")\n";
    std::cout << "M(F) = " << rep.M << ", Peng-Fan (" << rep.pf.bound1 << ", " << rep.pf.bound2
              << ")" << (rep.set_optimal ? ", optimal" : "") << "\n";
    if (!opts.out_dir.empty()) {
        auto f = open_out(opts.out_dir, "fhs.txt");
        io::write_fhs_txt(f, rep.set);
        auto c = open_out(opts.out_dir, "correlation.csv");
        io::write_correlation_csv(c, rep.set);
    }
    return 0;
}

int cmd_lc(const GlobalOpts& opts) {
    ConstructionRun run = run_from_file(opts);
    if (run.v != 1) throw PreconditionError("lc: requires scalar-valued sequences (v = 1)");
    auto rep = lc_bounds_check(*run.field, run.functions, run.cosets->l());
    const std::int64_t m = run.field->m();
    for (std::size_t i = 0; i < rep.lcs.size(); ++i)
        std::cout << "s_" << i << ": lc = " << rep.lcs[i] << " (bounds [" << m << ", "
                  << run.cosets->l() * m << "])\n";
    std::cout << (rep.all_in_range ? "all within bounds" : "BOUND VIOLATION") << "\n";
    if (!opts.out_dir.empty()) {
        for (std::size_t i = 0; i < run.functions.size(); ++i) {
            std::vector<Fe> seq;
            for (std::int32_t idx : run.functions[i].values)
                seq.push_back(run.functions[i].codomain.element(idx));
            auto f = open_out(opts.out_dir, "lc_f" + std::to_string(i) + ".json");
            io::write_lc_json(f, berlekamp_massey(*run.field, seq), *run.field);
        }
    }
    if (!rep.all_in_range) throw VerificationError("lc: bound violation");
    return 0;
}

int cmd_cwc(const GlobalOpts& opts) {
    ConstructionRun run = run_from_file(opts);
    ConstantWeightCode code = build_cwc(run.functions, opts.threads);
    FvsResult fvs = fvs_bound(code.n, code.d, code.w, code.ell, code.N);
    std::cout << "code (" << code.n << ", " << code.N << ", " << code.d << ", " << code.w << ")_"
              << code.ell << "\n";
    if (fvs.applicable)
        std::cout << "FVS bound " << fvs.bound.to_string() << (fvs.optimal ? " -> optimal" : "")
                  << "\n";
    else
        std::cout << "FVS bound not applicable (guard fails)\n";
    if (!opts.out_dir.empty()) {
        auto f = open_out(opts.out_dir, "cwc.csv");
        io::write_cwc_csv(f, code, run.functions.front().codomain);
        auto r = open_out(opts.out_dir, "cwc_report.json");
        io::write_cwc_report_json(r, code, fvs);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// reproduce: built-in recipes with frozen expected values
// ---------------------------------------------------------------------------

struct Checker {
    int failures = 0;
    void expect(bool ok, const std::string& what) {
        std::cout << (ok ? "  ok      " : "  MISMATCH") << "  " << what << "\n";
        if (!ok) ++failures;
    }
};

std::map<std::int64_t, std::int64_t> column_distribution(const DifferenceSpectrum& spec,
                                                         std::int64_t b) {
    std::map<std::int64_t, std::int64_t> dist;
    for (std::int64_t a = 1; a < spec.n; ++a) ++dist[spec.at(a, b)];
    return dist;
}

int reproduce_ex1(const GlobalOpts& opts) {
    std::cout << "reproduce ex1: GF(27) via x^3+2x+1, d = (1, theta^2)\n";
    FieldTable field = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
    Sc1Result res = construct_sc1(field, field.one(), field.from_log(2));
    Checker ck;

    auto add_chk = is_zdb(res.f, opts.threads);
    ck.expect(add_chk.ok() && *add_chk.lambda == 8, "additive lambda = 8");

    bool n0_nine = true;
    for (std::int64_t a = 1; a < res.multiplicative.n; ++a)
        n0_nine = n0_nine && res.multiplicative.at(a, res.multiplicative.zero_index) == 9;
    ck.expect(n0_nine, "N_0(delta) = 9 for all 25 shifts (x over GF(27))");

    const std::map<std::int64_t, std::int64_t> expected{{6, 4}, {9, 17}, {12, 4}};
    std::map<std::int64_t, std::int64_t> pooled;
    for (std::int64_t b = 0; b < res.multiplicative.ell; ++b) {
        if (b == res.multiplicative.zero_index) continue;
        auto dist = column_distribution(res.multiplicative, b);
        std::int64_t weighted = 0;
        for (auto [value, mult] : dist) weighted += value * mult;
        ck.expect(dist == expected,
                  "per-fixed-b distribution for b index " + std::to_string(b) + " is {6:4, 9:17, 12:4}");
        ck.expect(weighted == 225, "weighted sum for b index " + std::to_string(b) + " = 225");
        for (auto [value, mult] : dist) pooled[value] += mult;
    }
    const std::map<std::int64_t, std::int64_t> pooled_expected{{6, 8}, {9, 34}, {12, 8}};
    ck.expect(pooled == pooled_expected, "pooled (delta, b) tabulation is {6:8, 9:34, 12:8}");

    auto ids = sum_identities_check(res.f, 8);
    ck.expect(ids.pass && ids.sum_tau_sq == 226, "preimage identities: sum 26, squares 226");
    ck.expect(lambda_lower_bound(26, 3).bound == 8, "lower bound (26, 3) = 8, met");
    ck.expect(!res.difference_balanced, "f is not difference balanced");

    Sc1Result ctrl = construct_sc1(field, field.one(), field.one());
    ck.expect(ctrl.difference_balanced, "control d0 = d1 = 1 is difference balanced");
    return ck.failures ? 4 : 0;
}

int reproduce_ex2(const GlobalOpts& opts) {
    std::cout << "reproduce ex2: GF(3^6) as GF(9^3), e = 4, r = 2, d = (theta^4, theta^8)\n";
    FieldTable field = build_field(3, 6, 2, std::vector<int>{2, 2, 1, 0, 2, 0, 1});
    CosetSystem cs = build_cosets(field, 4, 2);
    Checker ck;

    auto value_set = [&](const std::vector<Fe>& d) {
        ZdbFunction f = construct_sc2(field, cs, d);
        DifferenceSpectrum spec = difference_spectrum(f, opts.threads);
        std::set<std::int64_t> values;
        for (std::int64_t a = 1; a < spec.n; ++a)
            for (std::int64_t b = 0; b < spec.ell; ++b)
                if (b != spec.zero_index) values.insert(spec.at(a, b));
        return std::pair{spec, values};
    };

    auto [spec, values] = value_set({field.from_log(4), field.from_log(8)});
    ck.expect(spec.lambda && *spec.lambda == 40, "lambda = 40");
    ck.expect(values == std::set<std::int64_t>{36, 45, 54}, "N_b value set {36, 45, 54}");

    ZdbFunction f = construct_sc2(field, cs, {field.from_log(4), field.from_log(8)});
    PdfFamily pdf = to_pdf(f);
    auto pchk = verify_pdf(pdf);
    ck.expect(pchk.ok() && *pchk.lambda == 40, "PDF on Z_364 with lambda = 40");

    auto [cspec, cvalues] = value_set({field.from_log(4), field.from_log(4)});
    ck.expect(cspec.lambda && *cspec.lambda == 40, "control lambda = 40");
    ck.expect(cvalues == std::set<std::int64_t>{36, 45}, "control value set {36, 45}");
    return ck.failures ? 4 : 0;
}

int reproduce_ex3(const GlobalOpts& opts) {
    std::cout << "reproduce ex3: pair (f_0, f_1) with g = (1, theta^91)\n";
    FieldTable field = build_field(3, 6, 2, std::vector<int>{2, 2, 1, 0, 2, 0, 1});
    CosetSystem cs = build_cosets(field, 4, 2);
    ConstructionParams p;
    p.field = &field;
    p.cosets = &cs;
    p.u = 1;
    p.d = {field.from_log(4), field.from_log(8)};
    p.g = std::vector<Fe>{field.one(), field.from_log(91)};
    auto set = construct_zdb_set(p);
    Checker ck;

    for (std::size_t i = 0; i < set.size(); ++i) {
        auto chk = is_zdb(set[i], opts.threads);
        ck.expect(chk.ok() && *chk.lambda == 40 && set[i].n == 364 && set[i].ell() == 9,
                  "f_" + std::to_string(i) + " is a (364, 9, 40)-ZDB function");
    }
    for (std::size_t i = 0; i < 2; ++i) {
        auto counts = cross_zero_counts(set[i], set[1 - i], opts.threads);
        bool all40 = true;
        for (std::int64_t c : counts) all40 = all40 && c == 40;
        ck.expect(all40, "cross zero-counts f_" + std::to_string(i) + " vs f_" +
                             std::to_string(1 - i) + " all equal 40 (364 shifts)");
    }
    FhsReport rep = zdb_set_to_fhs(set, opts.threads);
    ck.expect(rep.M == 40, "M(F) = 40");
    ck.expect(rep.pf.bound1 == 40 && rep.pf.bound2 == 40, "Peng-Fan bounds (40, 40)");
    ck.expect(rep.set_optimal && rep.per_seq_optimal, "set and members optimal");
    return ck.failures ? 4 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zdbkit: construct and exhaustively verify zero-difference balanced functions, "
                 "partitioned difference families, FH sequence sets and constant-weight codes"};
    app.require_subcommand(1);

    GlobalOpts opts;

    auto add_common = [&](CLI::App* cmd, bool with_recipe) {
        if (with_recipe)
            cmd->add_option("--recipe", opts.recipe_path, "construction recipe (JSON)")->required();
        cmd->add_option("--out-dir", opts.out_dir, "directory for exported artifacts");
        cmd->add_option("--format", opts.format, "preferred export format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--seed", opts.seed, "seed for randomized sweeps (default 0)");
        cmd->add_option("--threads", opts.threads, "worker threads (0 = auto)");
        cmd->add_flag("--force", opts.force, "build even when a sufficient condition fails");
        cmd->add_flag("--no-verify", opts.no_verify, "skip exhaustive verification");
    };

    // field build
    auto* field_cmd = app.add_subcommand("field", "field table operations");
    auto* field_build = field_cmd->add_subcommand("build", "build GF(p^s) and print its spec");
    std::int64_t fb_p = 0;
    int fb_s = 1, fb_k = 1;
    std::vector<int> fb_modulus;
    std::string fb_out;
    field_build->add_option("--p", fb_p, "characteristic (prime)")->required();
    field_build->add_option("--s", fb_s, "extension degree over GF(p)")->required();
    field_build->add_option("--k", fb_k, "base-field degree (divides s)");
    field_build->add_option("--modulus", fb_modulus, "modulus coefficients c0..cs (low first)");
    field_build->add_option("--out", fb_out, "write the field spec JSON here");

    auto* construct_cmd = app.add_subcommand("construct", "run a recipe and export artifacts");
    add_common(construct_cmd, true);
    auto* verify_cmd = app.add_subcommand("verify", "run a recipe and verify every claim");
    add_common(verify_cmd, true);

    auto* bounds_cmd = app.add_subcommand("bounds", "print the bound table for (n, ell[, lambda][, N])");
    std::int64_t b_n = 0, b_ell = 0, b_lambda = -1, b_nseq = -1;
    bounds_cmd->add_option("--n", b_n, "domain/sequence length")->required();
    bounds_cmd->add_option("--ell", b_ell, "alphabet size")->required();
    bounds_cmd->add_option("--lambda", b_lambda, "claimed lambda (enables preimage interval)");
    bounds_cmd->add_option("--nseq", b_nseq, "set size (enables Peng-Fan bounds)");

    auto* fhs_cmd = app.add_subcommand("fhs", "frequency-hopping reports for a recipe");
    add_common(fhs_cmd, true);
    auto* lc_cmd = app.add_subcommand("lc", "linear-complexity reports for a recipe");
    add_common(lc_cmd, true);
    auto* cwc_cmd = app.add_subcommand("cwc", "constant-weight code from a recipe");
    add_common(cwc_cmd, true);

    auto* repro_cmd = app.add_subcommand("reproduce", "re-run a built-in worked example");
    std::string example_id;
    repro_cmd->add_option("example", example_id, "ex1 | ex2 | ex3")->required();
    repro_cmd->add_option("--seed", opts.seed, "seed");
    repro_cmd->add_option("--threads", opts.threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        set_default_threads(opts.threads);
        if (field_build->parsed()) {
            std::optional<std::vector<int>> mod;
            if (!fb_modulus.empty()) mod = fb_modulus;
            FieldTable field = build_field(fb_p, fb_s, fb_k, mod, field_cap_from_env());
            if (fb_out.empty()) {
                io::write_field_spec_json(std::cout, field);
            } else {
                std::ofstream out(fb_out);
                io::write_field_spec_json(out, field);
            }
            std::cout << "GF(" << field.size() << ") ready; theta "
                      << (field.theta_is_modulus_root() ? "is" : "is not")
                      << " the modulus root; match kernel: " << kernels::active_impl() << "\n";
            return 0;
        }
        if (construct_cmd->parsed()) return cmd_construct(opts);
        if (verify_cmd->parsed()) return cmd_verify(opts);
        if (bounds_cmd->parsed()) return cmd_bounds(b_n, b_ell, b_lambda, b_nseq);
        if (fhs_cmd->parsed()) return cmd_fhs(opts);
        if (lc_cmd->parsed()) return cmd_lc(opts);
        if (cwc_cmd->parsed()) return cmd_cwc(opts);
        if (repro_cmd->parsed()) {
            if (example_id == "ex1") return reproduce_ex1(opts);
            if (example_id == "ex2") return reproduce_ex2(opts);
            if (example_id == "ex3") return reproduce_ex3(opts);
            throw SchemaError("unknown example id: " + example_id + " (use ex1|ex2|ex3)");
        }
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
