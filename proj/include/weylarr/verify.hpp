#pragma once

#include "weylarr/root_system.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace weylarr {

// One verified identity. check_id is a stable handle of the form
// "<label>/<system>[/<instance>]"; status "fail" always carries a witness
// with the numbers needed to reproduce the comparison by hand.
struct CheckResult {
    std::string check_id;
    std::string citation; // human-readable statement of what was compared
    enum class Status { pass, fail, skipped } status = Status::pass;
    std::string skip_reason;
    nlohmann::json witness;

    std::string status_str() const {
        switch (status) {
            case Status::pass: return "pass";
            case Status::fail: return "fail";
            default: return "skipped";
        }
    }
    nlohmann::json to_json() const;
};

enum class Depth { exhaustive, representatives };

struct SuiteOptions {
    Depth depth = Depth::exhaustive;
    int max_lattice_rank = 6;
};

// Run every check for the given systems, in dependency order:
// root-system invariants, structural lemmas, pair classification and
// orbits, restriction cardinalities, K-sum identities, the top-root
// partition, local-global inequalities, theta-perp Coxeter numbers,
// characteristic polynomial factorization (rank-bounded), and the
// derivation-basis checks for the classical families.
// Failures are recorded, never thrown; output order is deterministic.
std::vector<CheckResult> run_suite(const std::vector<RootSystemId>& scope, const SuiteOptions& opt);

int count_failures(const std::vector<CheckResult>& results);

std::string render_table(const std::vector<CheckResult>& results);

} // namespace weylarr
