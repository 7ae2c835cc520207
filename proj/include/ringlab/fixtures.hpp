#pragma once

#include <string>
#include <vector>

namespace ringlab {

// One named example with a concrete carrier, object, predicate and expected
// verdict. Running the fixture must reproduce the expected verdict exactly;
// refuting fixtures also validate the stored witness against the definitions.
struct FixtureRecord {
    std::string id;
    std::string carrier;    // ring/module expression in the DSL (extended with ZZ)
    std::string object;     // ideal or submodule description
    std::string predicate;  // property combination being checked
    std::string expected;   // "proved" | "refuted" | "out_of_scope"
    std::string witness;    // stored witness for refuted fixtures / certificates
    std::string anchor;     // the mathematical statement exercised
};

struct FixtureOutcome {
    std::string id;
    std::string status;  // "proved" | "refuted" | "out_of_scope" | "error"
    std::string witness;
    std::string detail;
    bool matches_expected = false;
};

const std::vector<FixtureRecord>& fixture_registry();
FixtureOutcome run_fixture(const FixtureRecord& rec);
FixtureOutcome run_fixture_by_id(const std::string& id);

// Serialized registry, the content of data/fixtures.json.
std::string fixtures_json();

}  // namespace ringlab
