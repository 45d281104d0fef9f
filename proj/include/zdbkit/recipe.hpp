#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zdbkit/construct.hpp"
#include "zdbkit/field.hpp"

namespace zdbkit {

/// JSON-serializable description of one construction run, sufficient to
/// reproduce its value tables bit-exactly:
///   {"field": {"p":3,"s":3,"k":1,"modulus":[1,2,0,1]},
///    "e":2, "r":1, "u":1, "d_logs":[0,2],
///    "g_logs":[...], "a_logs":[...], "v":1, "interleave_k":k,
///    "outputs":["spectrum","pdf","fhs","lc","cwc","bounds"]}
/// modulus may be omitted to use the deterministic default; g_logs requests
/// the set construction; a_logs the vector-valued lift; weights and
/// representatives are given as discrete logs of theta.
struct Recipe {
    std::int64_t p = 0;
    int s = 0;
    int k = 0;
    std::optional<std::vector<int>> modulus;
    std::int64_t e = 1, r = 1, u = 1;
    std::vector<std::int64_t> d_logs;
    std::optional<std::vector<std::int64_t>> g_logs;
    std::optional<std::vector<std::int64_t>> a_logs;
    std::optional<std::int64_t> interleave_k;
    std::set<std::string> outputs;
};

Recipe parse_recipe_json(const std::string& text); ///< throws SchemaError
std::string recipe_to_json(const Recipe& recipe);

struct RunOptions {
    bool force = false;
    bool verify = true;
    std::int64_t field_cap = FieldTable::kDefaultSizeCap;
    int threads = 0;
    std::uint64_t seed = 0;
};

/// Everything one recipe produces. `functions` holds the constructed set
/// (a single entry when no g_logs were given); the field and coset tables
/// own the storage the functions reference.
struct ConstructionRun {
    std::unique_ptr<FieldTable> field;
    std::unique_ptr<CosetSystem> cosets;
    std::vector<ZdbFunction> functions;
    std::optional<ZdbFunction> interleaved;
    Recipe recipe;
    std::int64_t expected_lambda = 0; ///< (q^(m-v)-1)/r, scaled by k when interleaved
    int v = 1;

    const ZdbFunction& primary() const {
        return interleaved ? *interleaved : functions.front();
    }
};

/// Builds (and, when options.verify, exhaustively verifies) a recipe.
ConstructionRun run_recipe(const Recipe& recipe, const RunOptions& options = {});

/// Recipe equivalent of explicit params (used to stamp provenance).
Recipe recipe_from_params(const ConstructionParams& p);

} // namespace zdbkit
