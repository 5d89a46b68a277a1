#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gf2g {

// Runs one command line (arguments after the program name).
// Exit codes: 0 success, 1 usage or input error, 2 negative answer.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FixtureResult {
    std::string name;
    std::string status;  // "pass", "fail" or "missing"
    std::string detail;
};

// The bundled worked examples, read from fixture files under dir.
std::vector<FixtureResult> run_fixture_suite(const std::string& dir);

}  // namespace gf2g
