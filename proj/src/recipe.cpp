#include "zdbkit/recipe.hpp"

#include <json.hpp>

#include "zdbkit/errors.hpp"

namespace zdbkit {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownOutputs = {"spectrum", "pdf", "fhs", "lc", "cwc", "bounds"};

std::vector<std::int64_t> int_array(const json& j, const std::string& key) {
    if (!j.is_array()) throw SchemaError("recipe: " + key + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw SchemaError("recipe: " + key + " must contain integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

} // namespace

Recipe parse_recipe_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("recipe: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("recipe: top level must be an object");
    if (!j.contains("field") || !j["field"].is_object())
        throw SchemaError("recipe: missing field object");

    Recipe r;
    const json& f = j["field"];
    for (const char* key : {"p", "s", "k"})
        if (!f.contains(key) || !f[key].is_number_integer())
            throw SchemaError(std::string("recipe: field.") + key + " must be an integer");
    r.p = f["p"].get<std::int64_t>();
    r.s = f["s"].get<int>();
    r.k = f["k"].get<int>();
    if (f.contains("modulus")) {
        auto mod = int_array(f["modulus"], "field.modulus");
        r.modulus = std::vector<int>(mod.begin(), mod.end());
    }

    auto get_int = [&](const char* key, std::int64_t dflt) {
        if (!j.contains(key)) return dflt;
        if (!j[key].is_number_integer()) throw SchemaError(std::string("recipe: ") + key + " must be an integer");
        return j[key].get<std::int64_t>();
    };
    r.e = get_int("e", 1);
    r.r = get_int("r", 1);
    r.u = get_int("u", 1);
    if (!j.contains("d_logs")) throw SchemaError("recipe: missing d_logs");
    r.d_logs = int_array(j["d_logs"], "d_logs");
    if (j.contains("g_logs")) r.g_logs = int_array(j["g_logs"], "g_logs");
    if (j.contains("a_logs")) r.a_logs = int_array(j["a_logs"], "a_logs");
    if (j.contains("interleave_k")) {
        if (!j["interleave_k"].is_number_integer())
            throw SchemaError("recipe: interleave_k must be an integer");
        r.interleave_k = j["interleave_k"].get<std::int64_t>();
    }
    if (j.contains("v")) {
        if (!j["v"].is_number_integer()) throw SchemaError("recipe: v must be an integer");
        auto v = j["v"].get<std::int64_t>();
        if (r.a_logs && v != static_cast<std::int64_t>(r.a_logs->size()))
            throw SchemaError("recipe: v disagrees with a_logs length");
        if (!r.a_logs && v != 1) throw SchemaError("recipe: v > 1 requires a_logs");
    }
    if (j.contains("outputs")) {
        for (const auto& o : j["outputs"]) {
            if (!o.is_string()) throw SchemaError("recipe: outputs must be strings");
            std::string name = o.get<std::string>();
            if (!kKnownOutputs.count(name)) throw SchemaError("recipe: unknown output \"" + name + "\"");
            r.outputs.insert(name);
        }
    }
    return r;
}

std::string recipe_to_json(const Recipe& r) {
    json f{{"p", r.p}, {"s", r.s}, {"k", r.k}};
    if (r.modulus) f["modulus"] = *r.modulus;
    json j{{"field", f}, {"e", r.e}, {"r", r.r}, {"u", r.u}, {"d_logs", r.d_logs}};
    if (r.g_logs) j["g_logs"] = *r.g_logs;
    if (r.a_logs) {
        j["a_logs"] = *r.a_logs;
        j["v"] = r.a_logs->size();
    }
    if (r.interleave_k) j["interleave_k"] = *r.interleave_k;
    if (!r.outputs.empty()) j["outputs"] = r.outputs;
    return j.dump();
}

Recipe recipe_from_params(const ConstructionParams& p) {
    Recipe r;
    const FieldSpec& spec = p.field->spec();
    r.p = spec.p;
    r.s = spec.s;
    r.k = spec.k;
    r.modulus = spec.modulus;
    r.e = p.cosets->e();
    r.r = p.cosets->r();
    r.u = p.u;
    for (const Fe& d : p.d) r.d_logs.push_back(d.lg);
    if (p.g) {
        r.g_logs.emplace();
        for (const Fe& g : *p.g) r.g_logs->push_back(g.lg);
    }
    if (p.a_vec) {
        r.a_logs.emplace();
        for (const Fe& a : *p.a_vec) r.a_logs->push_back(a.lg);
    }
    r.interleave_k = p.interleave_k;
    return r;
}

ConstructionRun run_recipe(const Recipe& recipe, const RunOptions& options) {
    ConstructionRun run;
    run.recipe = recipe;
    run.field = std::make_unique<FieldTable>(
        build_field(recipe.p, recipe.s, recipe.k, recipe.modulus, options.field_cap));
    run.cosets = std::make_unique<CosetSystem>(
        build_cosets(*run.field, recipe.e, recipe.r, options.force));

    ConstructionParams params;
    params.field = run.field.get();
    params.cosets = run.cosets.get();
    params.u = recipe.u;
    params.force = options.force;
    for (std::int64_t lg : recipe.d_logs) params.d.push_back(run.field->from_log(lg));
    if (recipe.g_logs) {
        params.g.emplace();
        for (std::int64_t lg : *recipe.g_logs) params.g->push_back(run.field->from_log(lg));
    }
    if (recipe.a_logs) {
        params.a_vec.emplace();
        for (std::int64_t lg : *recipe.a_logs) params.a_vec->push_back(run.field->from_log(lg));
        run.v = static_cast<int>(recipe.a_logs->size());
    }
    params.interleave_k = recipe.interleave_k;

    if (recipe.g_logs) {
        run.functions = params.a_vec ? construct_vector_zdb_set(params) : construct_zdb_set(params);
    } else {
        run.functions.push_back(params.a_vec ? construct_vector_zdb(params)
                                             : construct_zdb(params));
    }
    if (recipe.interleave_k) {
        const std::int64_t k = *recipe.interleave_k;
        if (k > static_cast<std::int64_t>(run.functions.size()))
            throw PreconditionError("run_recipe: interleave_k exceeds the set size");
        std::vector<ZdbFunction> chosen(run.functions.begin(),
                                        run.functions.begin() + static_cast<std::ptrdiff_t>(k));
        run.interleaved = interleave(chosen, k);
    }

    std::int64_t q_pow = 1;
    for (int i = 0; i < run.field->m() - run.v; ++i) q_pow *= run.field->q();
    run.expected_lambda = (q_pow - 1) / recipe.r;
    if (run.interleaved) run.expected_lambda *= *recipe.interleave_k;

    if (options.verify) {
        const std::int64_t base_lambda = (q_pow - 1) / recipe.r;
        for (std::size_t i = 0; i < run.functions.size(); ++i) {
            auto chk = is_zdb(run.functions[i], options.threads);
            if (!chk.ok() || *chk.lambda != base_lambda)
                throw VerificationError(
                    "run_recipe: member " + std::to_string(i) + " lambda " +
                    (chk.ok() ? std::to_string(*chk.lambda) : std::string("non-constant")) +
                    " != " + std::to_string(base_lambda));
        }
        for (std::size_t i = 0; i < run.functions.size(); ++i) {
            for (std::size_t j = 0; j < run.functions.size(); ++j) {
                if (i == j) continue;
                auto counts = cross_zero_counts(run.functions[i], run.functions[j], options.threads);
                for (std::size_t a = 0; a < counts.size(); ++a)
                    if (counts[a] != base_lambda)
                        throw VerificationError("run_recipe: cross count (" + std::to_string(i) +
                                                "," + std::to_string(j) + ") at shift " +
                                                std::to_string(a) + " is " +
                                                std::to_string(counts[a]));
            }
        }
        if (run.interleaved) {
            auto chk = is_zdb(*run.interleaved, options.threads);
            if (!chk.ok() || *chk.lambda != run.expected_lambda)
                throw VerificationError("run_recipe: interleaved lambda mismatch");
        }
    }
    return run;
}

} // namespace zdbkit
