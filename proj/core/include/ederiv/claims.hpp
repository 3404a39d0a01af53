#ifndef EDERIV_CLAIMS_HPP
#define EDERIV_CLAIMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ederiv/mzlab.hpp"

namespace ederiv {

/// Parameter bundle for a registered verification case. Unset fields fall
/// back to per-case defaults; a session map, when present, overrides the
/// built-in instance.
struct ClaimParams {
    FieldPtr field;
    std::optional<MapVariant> map;
    std::vector<std::string> lambdas;   // scalar expressions, parsed on demand
    std::vector<std::string> generators;  // polynomial expressions (prop2.7)
    std::uint32_t degree = 6;
    std::uint32_t power = 6;
    std::uint32_t multiplier = 2;
    std::optional<std::uint32_t> nvars;
    std::uint64_t seed = 0x5eed0001u;
    /// Run the battery even when the hypothesis gate fails; the report is
    /// then marked exploratory instead of raising HypothesisError.
    bool exploratory = false;
};

struct ClaimCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct ClaimReport {
    std::string id;
    std::string instantiation;  // human-readable parameter record
    bool exploratory = false;
    std::vector<ClaimCheck> checks;

    /// Zero checks is an error, never a pass.
    bool pass() const {
        if (checks.empty()) return false;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Runs the registered battery for one claim id. Throws HypothesisError when
/// the parameters violate the case's hypotheses (unless exploratory) and
/// InputError for unknown ids.
ClaimReport verify_claim(const std::string& id, const ClaimParams& params);

std::vector<std::string> registered_claims();

}  // namespace ederiv

#endif
