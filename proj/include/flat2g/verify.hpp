#pragma once

// Named verification suites behind the CLI `verify` subcommand (and reused
// by the acceptance battery). Each suite sweeps one family of identities
// exhaustively (or with a seeded random sample where the space is infinite)
// and reports the first counterexample with full inputs.

#include <cstdint>
#include <string>
#include <vector>

#include "flat2g/two_group.hpp"

namespace flat2g {

struct RunConfig {
    std::string group = "Z2";
    std::string cocycle = "trivial";
    int64_t modulus = 1;  // user N; the ambient modulus is lcm(|G|, N, ...)
    int genus = 1;
    std::string nerve;                 // builtin name or path; "" = all builtins
    std::string source_group = "Z2";   // Q for the representation suites
    std::uint64_t seed = 0;
    int64_t budget = 100'000'000;
    unsigned workers = 1;
};

TwoGroup two_group_from_config(const RunConfig& cfg);

struct SuiteResult {
    std::string suite;
    bool pass = true;
    int64_t checks = 0;
    std::string counterexample;  // empty when pass
};

const std::vector<std::string>& suite_names();  // cocycle, pentagon, ...
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace flat2g
