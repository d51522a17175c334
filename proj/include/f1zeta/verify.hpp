#ifndef F1ZETA_VERIFY_HPP
#define F1ZETA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace f1zeta {

struct SuiteResult {
    std::string suite;
    std::size_t checks = 0;
    std::vector<std::string> failures;  // counterexample descriptions
    bool pass() const { return failures.empty(); }
};

/// Property suites behind `verify`: table1, moebius, lyndon, tensor, points,
/// limit. The seed feeds the randomized parts (tensor); the rest are fixed
/// exhaustive ranges.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

std::vector<std::string> suite_names();

}  // namespace f1zeta

#endif
