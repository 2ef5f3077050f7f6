#include "hyperpend/tolerances.hpp"

#include <cstdlib>

#include <json.hpp>

#include "hyperpend/errors.hpp"

namespace hyperpend {

Tolerances apply_tolerance_override(Tolerances base, const std::string& json_fragment)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_fragment);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("tolerance override is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("tolerance override must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number()) throw ConfigError("tolerance '" + key + "' must be a number");
        const double v = value.get<double>();
        if (!(v > 0.0)) throw ConfigError("tolerance '" + key + "' must be positive");
        if (key == "constraint")
            base.constraint = v;
        else if (key == "identity")
            base.identity = v;
        else if (key == "degenerate")
            base.degenerate = v;
        else if (key == "drift")
            base.drift = v;
        else if (key == "rank")
            base.rank = v;
        else if (key == "case_boundary")
            base.case_boundary = v;
        else
            throw ConfigError("unknown tolerance '" + key + "'");
    }
    return base;
}

Tolerances tolerances_from_environment()
{
    const char* env = std::getenv("HYPERPEND_TOL_OVERRIDE");
    if (!env || !*env) return Tolerances{};
    return apply_tolerance_override(Tolerances{}, env);
}

}  // namespace hyperpend
