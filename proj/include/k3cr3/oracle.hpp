#pragma once

#include "k3cr3/abelian.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace k3cr3 {

struct OracleBoundExceeded : std::runtime_error {
    explicit OracleBoundExceeded(long long order, long long bound)
        : std::runtime_error("group order " + std::to_string(order) +
                             " exceeds oracle bound " + std::to_string(bound)) {}
};

// Exhaustive subgroup scan of an explicit model of g. One entry per subgroup
// (not per isomorphism class), carrying the classes of the subgroup and of
// the quotient by it.
struct SubgroupScan {
    struct Entry {
        AbelianGroup sub;
        AbelianGroup quot;
        auto operator<=>(const Entry&) const = default;
    };
    std::vector<Entry> entries;
};

SubgroupScan scan_subgroups(const AbelianGroup& g, long long max_order = 128);

struct OracleResult {
    bool exists = false;
    std::set<AbelianGroup> quotients;  // classes g/N over all N isomorphic to sub
};

// The brute-force side of the subgroup/extension checks: does g contain a
// subgroup isomorphic to sub, and what quotient classes arise?
OracleResult brute_force_subgroup_quotient(const AbelianGroup& g, const AbelianGroup& sub,
                                           long long max_order = 128);

bool brute_force_has_subgroup(const AbelianGroup& g, const AbelianGroup& sub,
                              long long max_order = 128);

// Extension check by exhaustion: total contains a subgroup isomorphic to sub
// with quotient isomorphic to quot. Works prime by prime so the bound applies
// to each p-part rather than to |total|.
bool brute_force_extension_exists(const AbelianGroup& sub, const AbelianGroup& quot,
                                  const AbelianGroup& total, long long max_order = 128);

}  // namespace k3cr3
