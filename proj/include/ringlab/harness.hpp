#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlab/dsl.hpp"
#include "ringlab/fixtures.hpp"

namespace ringlab {

struct Verdict {
    std::string status;  // proved | refuted | vacuous_pass
    uint64_t instances = 0;
    uint64_t hypothesis_hits = 0;
    uint64_t skipped = 0;
    std::string witness;  // reproducible description when refuted
};

struct CheckResult {
    std::string id;
    std::string anchor;
    Verdict verdict;
    int64_t millis = 0;
    std::string note;  // extra reported statistics (table output only)
};

struct SuiteReport {
    std::string corpus_digest;
    std::vector<CheckResult> checks;  // sorted by id
};

// Deterministic corpus: a list of ring expressions plus the symbolic registry.
struct CorpusSpec {
    std::vector<std::string> exprs;
    bool include_symbolic = true;

    std::string digest() const;
};

CorpusSpec default_corpus();
CorpusSpec corpus_from_file(const std::string& path);

const std::vector<std::string>& all_check_ids();
bool is_check_id(const std::string& id);
std::string check_anchor(const std::string& id);

CheckResult run_check(const std::string& id, const CorpusSpec& corpus);
// ids empty = all checks; threads <= 0 = hardware (capped by RINGLAB_THREADS)
SuiteReport run_suite(const CorpusSpec& corpus, std::vector<std::string> ids = {},
                      int threads = 0);

struct SearchHit {
    std::string carrier;
    std::string object;
    std::string detail;
};
// predicate: boolean combination of ideal flag names (proper, prime, maximal,
// semiprime, r, pr, n, semi_n, semi_r) or submodule flag names (sub_prime,
// sub_semiprime, sub_r, sub_sr, sub_sr_alt, sub_semi_r, sub_d) with & | ! ().
std::vector<SearchHit> search_counterexamples(const std::string& predicate,
                                              const CorpusSpec& corpus, int max_order = 36);

}  // namespace ringlab
