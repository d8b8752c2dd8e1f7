#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace anvm {
namespace verify {

struct CaseResult {
    std::string id;
    bool pass;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;
    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

struct Options {
    std::uint64_t seed = 7;
    int max_size = 0;  // 0 = the suite's specified size
    int rank = 0;      // 0 = the suite's specified rank
};

/// Suites, one per acceptance criterion:
///   ybe, weight-identity, dwpf-ik, dwpf-properties, lemma1, lemma2,
///   lemma3, slavnov, appendix, a2-degeneration, factorization, lemma5-7
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const Options& opts = {});
std::vector<SuiteResult> run_all(const Options& opts = {});

}  // namespace verify
}  // namespace anvm
