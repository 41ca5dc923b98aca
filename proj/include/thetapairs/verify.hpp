#pragma once

#include "thetapairs/pair_catalog.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace thetapairs {

struct CheckResult {
    std::string subject; // "E6", "G2" or a pair id
    std::string claim;
    bool pass = false;
    std::string topic;   // what the check validates
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::vector<PairSpec> pairs = default_catalog();
};

const std::vector<std::string>& suite_names(); // weyl, borels, nilcone, slice, fibers, stabilizers, all
bool known_suite(const std::string& name);

// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);

std::string format_check(const CheckResult& r); // "E6: [W:W^θ]=45 PASS (Weyl indices)"
std::string subject_label(const PairSpec& spec);

} // namespace thetapairs
