#include "cutstack/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cutstack/errors.hpp"

namespace cutstack {

using nlohmann::json;

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter_error("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_parameter_error(std::string("config parse error: ") + e.what());
    }
    ExperimentConfig c;
    if (j.contains("r")) c.r = Rat::from_string(j.at("r").get<std::string>());
    if (j.contains("sigma")) c.sigma_spec = j.at("sigma").get<std::string>();
    if (j.contains("stages")) c.stages = j.at("stages").get<long>();
    if (j.contains("horizon")) c.horizon = j.at("horizon").get<long>();
    if (j.contains("seed")) c.seed = j.at("seed").get<uint64_t>();
    if (j.contains("c_slack")) c.c_slack = j.at("c_slack").get<long>();
    if (j.contains("phase_plan")) c.phase_plan = j.at("phase_plan").get<std::vector<long>>();
    if (j.contains("checkpoint_every")) c.checkpoint_every = j.at("checkpoint_every").get<long>();
    if (j.contains("find_R_cap")) c.find_R_cap = j.at("find_R_cap").get<long>();
    if (j.contains("delta_scrambled")) c.delta_scrambled = j.at("delta_scrambled").get<bool>();
    if (j.contains("out_dir")) c.out_dir = j.at("out_dir").get<std::string>();
    if (c.stages < 1 || c.horizon < 1 || c.phase_plan.empty())
        throw invalid_parameter_error("config: stages, horizon, phase_plan must be positive");
    return c;
}

std::string ExperimentConfig::to_json() const {
    json j;
    j["r"] = r.str();
    j["sigma"] = sigma_spec;
    j["stages"] = stages;
    j["horizon"] = horizon;
    j["seed"] = seed;
    j["c_slack"] = c_slack;
    j["phase_plan"] = phase_plan;
    j["checkpoint_every"] = checkpoint_every;
    j["find_R_cap"] = find_R_cap;
    j["delta_scrambled"] = delta_scrambled;
    j["out_dir"] = out_dir;
    return j.dump(2);
}

} // namespace cutstack
