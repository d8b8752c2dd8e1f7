// Acceptance suite: runs every verification suite at its specified size and
// tolerance and prints one PASS/FAIL line per case.

#include <doctest.h>

#include <cstdio>

#include "anvm/verify.hpp"

using namespace anvm;

TEST_CASE("acceptance criteria") {
    verify::Options opts;
    opts.seed = 7;
    int criterion = 0;
    for (const auto& name : verify::suite_names()) {
        ++criterion;
        verify::SuiteResult suite = verify::run_suite(name, opts);
        for (const auto& c : suite.cases) {
            std::printf("%s criterion-%02d %s/%s: %s\n", c.pass ? "PASS" : "FAIL", criterion,
                        suite.suite.c_str(), c.id.c_str(), c.detail.c_str());
            CHECK_MESSAGE(c.pass, suite.suite, "/", c.id, ": ", c.detail);
        }
    }
    std::fflush(stdout);
}
