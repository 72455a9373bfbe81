#ifndef TAVC_EXPERIMENTS_HPP
#define TAVC_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tavc {

inline constexpr const char* kToolVersion = "0.1.0";

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunManifest {
    std::string tool_version;
    std::string kind;
    std::string config_hash;
    std::uint64_t master_seed = 0;
    std::vector<std::uint64_t> replicate_streams;
    std::vector<std::string> artifacts;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_json() const;
    std::string summary_text() const;
};

struct RunOptions {
    std::optional<std::uint64_t> seed_override;
    std::optional<std::string> out_override;
    std::optional<int> threads_override;
};

// Parse, validate and execute one experiment described by a JSON config.
// ConfigError (with the offending field path) on invalid configs; the
// manifest is also written to <out>/manifest.json.
RunManifest run_experiment(const std::string& config_json_text, const RunOptions& opts = {});
RunManifest run_experiment_file(const std::string& config_path, const RunOptions& opts = {});

// Static description of an experiment kind: inputs, oracles, pass criteria.
// UnknownKind for anything not in the registry.
std::string describe_experiment(const std::string& kind);

std::vector<std::string> experiment_kinds();

} // namespace tavc

#endif
