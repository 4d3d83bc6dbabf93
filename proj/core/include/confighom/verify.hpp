#pragma once

#include <string>
#include <vector>

namespace confighom::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // empty on pass
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass = true;
    std::string to_string() const;
};

// Run the full deterministic corpus: known-values comparisons plus the
// cross-module identities. Reads data files from the corpus directory.
Report run_corpus();

} // namespace confighom::verify
