#ifndef EDERIV_MZLAB_HPP
#define EDERIV_MZLAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ederiv/image.hpp"

namespace ederiv {

/// Bounded radical experiment: every monomial f of degree <= degree_bound
/// (plus optional user polynomials) is raised to the powers m = 1..power_bound
/// and tested for image membership at degree m*deg(f).
struct RadicalScan {
    enum class Verdict { Evidence, Excluded, Inconclusive };

    struct CandidateResult {
        Polynomial candidate;
        Verdict verdict;
        /// For Excluded: the power with a certified non-membership.
        /// For Inconclusive: the first undecided power.
        std::optional<std::uint32_t> failing_power;
        std::uint32_t tested_up_to = 0;  // largest power actually tested
        bool truncated = false;          // hit the hard cap
    };

    std::uint32_t degree_bound = 0;
    std::uint32_t power_bound = 0;
    std::uint32_t hard_cap = 0;
    bool any_truncation = false;
    std::vector<CandidateResult> results;

    std::vector<Monomial> evidence_monomials() const;
};

/// Default hard cap on the degree m * deg(f) of any tested power.
constexpr std::uint32_t kRadicalDegreeCap = 64;

RadicalScan radical_scan(const MapVariant& map, std::uint32_t degree_bound,
                         std::uint32_t power_bound,
                         std::uint32_t hard_cap = kRadicalDegreeCap,
                         const std::vector<Polynomial>& extra_candidates = {});

/// The sufficient condition for the Mathieu-Zhao property: the candidate
/// radical ideal is contained in the image at every degree <= d, and its
/// truncated slices are closed under multiplication by the variables.
struct SufficientConditionReport {
    bool satisfied = true;
    std::string witness;  // first violation, when not satisfied
    std::size_t containment_checks = 0;
    std::size_t closure_checks = 0;
    std::vector<Polynomial> generators_used;
};

SufficientConditionReport check_prop27(const MapVariant& map,
                                       std::vector<Polynomial> candidates,
                                       std::uint32_t degree_bound,
                                       std::uint32_t power_bound);

/// Spot check of the Mathieu-Zhao tail condition: for every monomial a whose
/// powers a^1..a^M all lie in the image and every monomial b of degree <= B,
/// verify b * a^m stays in the image for the tail window m = B+1 .. M.
struct SpotCheckReport {
    bool pass = true;
    bool empty_premise = false;
    std::size_t premise_count = 0;
    std::size_t pairs_checked = 0;
    std::size_t undecided = 0;  // non-certifying maps: tail tests that came back unfound
    std::string first_violation;
};

SpotCheckReport mz_spot_check(const MapVariant& map, std::uint32_t degree_bound,
                              std::uint32_t power_bound, std::uint32_t multiplier_bound);

/// Radical exploration for the three-variable Jordan chain: compares the
/// bounded radical evidence set against the monomial cone i3 >= i1 + 1.
struct ConjectureExplorerReport {
    std::vector<Monomial> evidence_minus_cone;  // open direction, reported only
    std::vector<Monomial> cone_minus_evidence;  // must be empty
    std::size_t scanned = 0;
    bool cone_contained() const { return cone_minus_evidence.empty(); }
};

ConjectureExplorerReport conjecture45_explore(const Scalar& lambda,
                                              std::uint32_t degree_bound,
                                              std::uint32_t power_bound);

/// The three-variable Jordan chain phi = (l x1 + x2, l x2 + x3, l x3).
EDerivation jordan_chain(const RingPtr& ring, const Scalar& lambda);

}  // namespace ederiv

#endif
