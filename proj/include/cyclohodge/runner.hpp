// Sweep orchestrator behind the command-line front end.
//
// run() executes one subcommand described by a RunConfig and returns a
// VerificationReport plus the serialized output. Reports are deterministic:
// identical config + seed give byte-identical output (per-check wall times
// are emitted only under the opt-in `timings` flag, since they cannot be
// deterministic). Every numeric value is exact; rationals serialize as
// "a/b" strings and cyclotomic values as {"modulus": m, "coeffs": [...]}.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclohodge {

struct RunConfig {
    std::string subcommand;
    std::uint64_t p = 0;
    unsigned r = 0;
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t p_max = 0;
    unsigned r_max = 0;
    std::uint64_t n_max = 0;
    std::string format = "json";  // json | csv | text
    std::string out_path;         // empty = stdout
    unsigned jobs = 1;
    bool assume_large_galois = false;
    std::uint64_t seed = 0;
    bool odd_only = false;
    bool timings = false;
};

struct CheckRecord {
    std::string name;
    std::string params;
    std::string status;  // pass | fail | skipped
    std::string witness; // non-empty iff status == fail (or skip reason)
    double wall_ms = 0.0;
};

struct VerificationReport {
    RunConfig config;
    std::vector<CheckRecord> checks;
    unsigned n_pass = 0;
    unsigned n_fail = 0;
    unsigned n_skip = 0;
    std::string version;
    std::string output;  // serialized report in config.format
    int exit_code = 0;   // 0 iff n_fail == 0
};

// Dispatches to the subcommand; throws std::invalid_argument on bad config.
VerificationReport run(const RunConfig& config);

}  // namespace cyclohodge
