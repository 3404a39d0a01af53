#include "ederiv/mzlab.hpp"

#include <algorithm>
#include <set>

#include "ederiv/errors.hpp"

namespace ederiv {

std::vector<Monomial> RadicalScan::evidence_monomials() const {
    std::vector<Monomial> out;
    for (const auto& r : results) {
        if (r.verdict != Verdict::Evidence) continue;
        if (r.candidate.term_count() == 1 && r.candidate.leading_coeff().is_one())
            out.push_back(r.candidate.leading_monomial());
    }
    return out;
}

RadicalScan radical_scan(const MapVariant& map, std::uint32_t degree_bound,
                         std::uint32_t power_bound, std::uint32_t hard_cap,
                         const std::vector<Polynomial>& extra_candidates) {
    if (degree_bound < 1 || power_bound < 1)
        throw InputError("radical scan needs degree and power bounds >= 1");
    const RingPtr ring = map_ring(map);

    std::vector<Polynomial> candidates;
    for (const auto& m : monomials_up_to(ring->nvars, degree_bound, 1))
        candidates.push_back(Polynomial::monomial(ring, m, Scalar::one(ring->field)));
    for (const auto& p : extra_candidates) {
        if (p.is_zero() || p.degree() < 1)
            throw InputError("radical candidates must have degree >= 1");
        candidates.push_back(p);
    }

    // Only degrees of the form m * deg(f) are ever queried.
    std::set<std::uint32_t> degree_set;
    std::uint32_t needed = 0;
    for (const auto& c : candidates) {
        const auto fdeg = static_cast<std::uint64_t>(c.degree());
        for (std::uint32_t m = 1; m <= power_bound; ++m) {
            const auto e = fdeg * m;
            if (e > hard_cap) break;
            degree_set.insert(static_cast<std::uint32_t>(e));
            needed = std::max(needed, static_cast<std::uint32_t>(e));
        }
    }
    const std::vector<std::uint32_t> degrees(degree_set.begin(), degree_set.end());
    const ImageBasis basis = is_degree_preserving(map)
                                 ? ImageBasis(map, needed, degrees)
                                 : ImageBasis(map, needed);

    RadicalScan scan;
    scan.degree_bound = degree_bound;
    scan.power_bound = power_bound;
    scan.hard_cap = hard_cap;
    for (const auto& f : candidates) {
        RadicalScan::CandidateResult res;
        res.candidate = f;
        res.verdict = RadicalScan::Verdict::Evidence;
        const auto fdeg = static_cast<std::uint64_t>(f.degree());
        Polynomial fm = Polynomial::constant(ring, Scalar::one(ring->field));
        for (std::uint32_t m = 1; m <= power_bound; ++m) {
            if (fdeg * m > hard_cap) {
                res.truncated = true;
                scan.any_truncation = true;
                break;
            }
            fm = fm * f;
            res.tested_up_to = m;
            const auto verdict = member(basis, fm);
            if (verdict.status == MembershipVerdict::Status::In) continue;
            res.failing_power = m;
            res.verdict = verdict.status == MembershipVerdict::Status::NotInCertified
                              ? RadicalScan::Verdict::Excluded
                              : RadicalScan::Verdict::Inconclusive;
            break;
        }
        scan.results.push_back(std::move(res));
    }
    return scan;
}

namespace {

// Divisibility-minimal elements of a monomial set.
std::vector<Monomial> minimal_monomials(const std::vector<Monomial>& set) {
    std::vector<Monomial> out;
    for (const auto& m : set) {
        bool dominated = false;
        for (const auto& g : set) {
            if (g == m) continue;
            if (g.divides(m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(m);
    }
    return out;
}

}  // namespace

SufficientConditionReport check_prop27(const MapVariant& map,
                                       std::vector<Polynomial> candidates,
                                       std::uint32_t degree_bound,
                                       std::uint32_t power_bound) {
    const RingPtr ring = map_ring(map);
    SufficientConditionReport rep;
    if (candidates.empty()) {
        const auto scan = radical_scan(map, degree_bound, power_bound);
        for (const auto& m : minimal_monomials(scan.evidence_monomials()))
            candidates.push_back(Polynomial::monomial(ring, m, Scalar::one(ring->field)));
    }
    rep.generators_used = candidates;

    const ImageBasis image(map, degree_bound);
    const EchelonBasis ideal = ideal_truncation(ring, candidates, degree_bound);

    // (a) Candidate radical inside the image, degree by degree.
    for (const auto& row : ideal.rows()) {
        if (row.pivot.degree() > degree_bound) continue;
        ++rep.containment_checks;
        const auto verdict = member(image, row.vec);
        if (verdict.status != MembershipVerdict::Status::In) {
            rep.satisfied = false;
            rep.witness = "radical candidate element not in image: " + row.vec.str() +
                          " (" + verdict.status_name() + ")";
            return rep;
        }
    }

    // (b) Closure of the truncated radical slices under the variables.
    for (const auto& row : ideal.rows()) {
        if (row.pivot.degree() + 1 > degree_bound) continue;
        for (std::size_t i = 0; i < ring->nvars; ++i) {
            ++rep.closure_checks;
            const Polynomial shifted = row.vec * Polynomial::variable(ring, i);
            if (!ideal.reduce(shifted).residue.is_zero()) {
                rep.satisfied = false;
                rep.witness = "radical slices not closed under x" + std::to_string(i + 1) +
                              ": " + row.vec.str();
                return rep;
            }
        }
    }
    return rep;
}

SpotCheckReport mz_spot_check(const MapVariant& map, std::uint32_t degree_bound,
                              std::uint32_t power_bound,
                              std::uint32_t multiplier_bound) {
    const RingPtr ring = map_ring(map);
    SpotCheckReport rep;
    const std::uint64_t top = static_cast<std::uint64_t>(degree_bound) * power_bound +
                              multiplier_bound;
    if (top > kRadicalDegreeCap)
        throw InputError("spot check bounds exceed the degree cap");
    const ImageBasis basis(map, static_cast<std::uint32_t>(top));

    // Premise: monomials whose first M powers all lie in the image.
    std::vector<Polynomial> premise;
    for (const auto& m : monomials_up_to(ring->nvars, degree_bound, 1)) {
        const Polynomial a = Polynomial::monomial(ring, m, Scalar::one(ring->field));
        bool all_in = true;
        Polynomial am = Polynomial::constant(ring, Scalar::one(ring->field));
        for (std::uint32_t k = 1; k <= power_bound && all_in; ++k) {
            am = am * a;
            all_in = member(basis, am).status == MembershipVerdict::Status::In;
        }
        if (all_in) premise.push_back(a);
    }
    rep.premise_count = premise.size();
    if (premise.empty()) {
        rep.empty_premise = true;
        return rep;
    }

    const std::uint32_t m0 = multiplier_bound + 1;
    for (const auto& a : premise) {
        for (const auto& bm : monomials_up_to(ring->nvars, multiplier_bound, 0)) {
            const Polynomial b = Polynomial::monomial(ring, bm, Scalar::one(ring->field));
            for (std::uint32_t m = m0; m <= power_bound; ++m) {
                ++rep.pairs_checked;
                const auto verdict = member(basis, b * a.power(m));
                if (verdict.status == MembershipVerdict::Status::In) continue;
                if (verdict.status == MembershipVerdict::Status::NotFoundWithinSlack) {
                    ++rep.undecided;
                    continue;
                }
                rep.pass = false;
                if (rep.first_violation.empty())
                    rep.first_violation = "b = " + b.str() + ", a = " + a.str() +
                                          ", m = " + std::to_string(m);
            }
        }
    }
    return rep;
}

EDerivation jordan_chain(const RingPtr& ring, const Scalar& lambda) {
    const std::size_t n = ring->nvars;
    Endomorphism phi;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial img = Polynomial::variable(ring, i).scaled(lambda);
        if (i + 1 < n) img = img + Polynomial::variable(ring, i + 1);
        phi.images.push_back(img);
    }
    return EDerivation{std::move(phi)};
}

ConjectureExplorerReport conjecture45_explore(const Scalar& lambda,
                                              std::uint32_t degree_bound,
                                              std::uint32_t power_bound) {
    const FieldPtr field = lambda.field();
    const RingPtr ring = PolyRing::create(field, 3);
    const EDerivation delta = jordan_chain(ring, lambda);

    ConjectureExplorerReport rep;
    if (degree_bound == 0) return rep;  // empty candidate set, vacuous

    const auto scan = radical_scan(MapVariant{delta}, degree_bound, power_bound);
    const auto evidence = scan.evidence_monomials();
    auto in_cone = [](const Monomial& m) { return m.exps[2] >= m.exps[0] + 1; };
    auto in_evidence = [&](const Monomial& m) {
        return std::find(evidence.begin(), evidence.end(), m) != evidence.end();
    };
    for (const auto& m : monomials_up_to(3, degree_bound, 1)) {
        ++rep.scanned;
        if (in_evidence(m) && !in_cone(m)) rep.evidence_minus_cone.push_back(m);
        if (in_cone(m) && !in_evidence(m)) rep.cone_minus_evidence.push_back(m);
    }
    return rep;
}

}  // namespace ederiv
