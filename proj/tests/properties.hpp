#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qgenus::test {

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
};

// Randomised invariants shared by the unit tests and the acceptance gate.
PropertyResult symbol_bilinearity(int cases, std::uint64_t seed);
PropertyResult wild_symbol_twist_stability(int cases, std::uint64_t seed);
PropertyResult norm_multiplicativity(int cases, std::uint64_t seed);
PropertyResult lambda_valuation_additivity(int cases, std::uint64_t seed);

std::vector<PropertyResult> all_properties(int cases, std::uint64_t seed);

}  // namespace qgenus::test
