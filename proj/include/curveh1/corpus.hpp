#pragma once

#include <string>
#include <vector>

namespace curveh1 {

/// One golden-corpus entry outcome; `detail` is a deterministic one-line
/// summary used for output and cross-run comparison.
struct CorpusOutcome {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct CorpusResult {
    std::vector<CorpusOutcome> entries;
    bool all_ok = true;
};

/// Runs every *.curve and *.family file under `dir` (sorted by name,
/// concurrently) and verifies the identity and semicontinuity checks on
/// each. Any verdict mismatch marks the run failed.
CorpusResult run_corpus(const std::string& dir, long seed = 1);

}  // namespace curveh1
