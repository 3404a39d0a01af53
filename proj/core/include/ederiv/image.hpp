#ifndef EDERIV_IMAGE_HPP
#define EDERIV_IMAGE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ederiv/maps.hpp"

namespace ederiv {

/// Reduced echelon basis of a subspace of the polynomial ring with respect
/// to graded-lex pivots: pivot monomials strictly decrease, every pivot has
/// coefficient 1 and (after finalize) is absent from all other basis
/// vectors. Vectors live in a fixed coordinate universe of monomials.
/// Each row carries the combination of inserted generators that produced
/// it, so membership reductions return checkable witnesses; generators that
/// reduce to zero are collected as kernel combinations.
class EchelonBasis {
public:
    struct Row {
        Monomial pivot;
        Polynomial vec;       // monic leading coefficient
        Polynomial preimage;  // same combination over the inserted preimages
    };

    /// Coordinates must be sorted graded-lex descending and contain every
    /// monomial that can appear in inserted vectors.
    EchelonBasis(RingPtr ring, std::vector<Monomial> coordinates);

    /// Inserts v (with its preimage) by forward elimination; returns false
    /// when v reduced to zero (a nontrivial combination is then recorded as
    /// a kernel element).
    bool insert(const Polynomial& v, const Polynomial& preimage);

    /// Back-substitutes to fully reduced form and materializes rows();
    /// idempotent, and called automatically by canonical-row accessors.
    void finalize() const;

    struct Reduction {
        Polynomial residue;
        Polynomial combo;  // apply(map, combo) == input - residue for linear maps
    };
    Reduction reduce(const Polynomial& q) const;

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<Row>& rows() const;  // finalizes on first use
    /// Canonical row vectors with pivot degree <= e (descending pivots).
    std::vector<Polynomial> rows_up_to_degree(std::uint32_t e) const;
    const std::vector<Polynomial>& kernel_combinations() const { return kernel_; }

private:
    using Sparse = std::vector<std::pair<std::uint32_t, Scalar>>;  // index ascending

    Sparse to_sparse(const Polynomial& p) const;
    Polynomial row_to_poly(const Sparse& v) const;
    Polynomial combo_to_poly(const Sparse& combo) const;

    RingPtr ring_;
    std::vector<Monomial> coords_;  // descending graded-lex; index 0 largest
    std::map<Monomial, std::uint32_t, GradedLexGreater> coord_index_;

    struct SparseRow {
        Sparse vec;    // front() is the pivot (smallest index = largest monomial)
        Sparse combo;  // over generator indices
    };
    std::vector<SparseRow> rows_sparse_;           // unordered storage
    std::vector<std::int32_t> pivot_of_;           // coord index -> row index or -1
    std::vector<std::uint32_t> pivots_;            // coord indices with pivots
    std::vector<Polynomial> generators_;           // inserted preimages
    std::vector<Polynomial> kernel_;

    mutable bool finalized_ = false;
    mutable std::vector<Row> materialized_;
};

/// Degree-truncated basis of the image of an E-derivation or derivation.
///
/// Degree-preserving maps (linear phi, or derivations with linear
/// coefficients) admit exact slices: the image meets each homogeneous
/// component in the image of that component, so per-degree bases certify
/// both membership and non-membership. Filtration-preserving and general
/// maps get a single filtered basis spanned by images of monomials of
/// degree <= d + slack intersected with degree <= d; it contains the image
/// of the low-degree part but may undershoot the true truncated image,
/// which is why non-membership is never certified there.
class ImageBasis {
public:
    ImageBasis(MapVariant map, std::uint32_t degree_bound,
               std::optional<std::uint32_t> slack = std::nullopt);
    /// Degree-preserving maps only: compute just the listed exact-degree
    /// slices (all <= degree_bound).
    ImageBasis(MapVariant map, std::uint32_t degree_bound,
               const std::vector<std::uint32_t>& degrees);

    const MapVariant& map() const { return map_; }
    const RingPtr& ring() const { return map_ring(map_); }
    bool degree_preserving() const { return degree_preserving_; }
    std::uint32_t degree_bound() const { return degree_bound_; }
    std::uint32_t slack() const { return slack_; }

    /// Exact-degree slice rank (degree-preserving) or the number of basis
    /// vectors with leading degree e (filtered).
    std::size_t rank_at(std::uint32_t e) const;
    /// Canonical basis vectors with leading degree <= e.
    std::vector<Polynomial> rows_up_to_degree(std::uint32_t e) const;
    /// Kernel combinations found at exact degree e (degree-preserving only).
    const std::vector<Polynomial>& kernel_at(std::uint32_t e) const;

    EchelonBasis::Reduction reduce(const Polynomial& q) const;

private:
    void build(const std::vector<std::uint32_t>& degrees);
    const EchelonBasis& slice(std::uint32_t e) const;

    MapVariant map_;
    bool degree_preserving_;
    std::uint32_t degree_bound_;
    std::uint32_t slack_;
    std::vector<std::optional<EchelonBasis>> per_degree_;
    std::optional<EchelonBasis> filtered_;
};

bool is_degree_preserving(const MapVariant& m);
bool is_filtration_preserving(const MapVariant& m);

/// Default preimage-degree slack for filtered image computations:
/// 2*s*n with s the largest finite root-of-unity order among the diagonal
/// eigenvalues, else 2*n.
std::uint32_t default_slack(const MapVariant& m);

struct MembershipVerdict {
    enum class Status { In, NotInCertified, NotFoundWithinSlack };
    Status status;
    Polynomial residue;
    std::optional<Polynomial> witness;  // apply(map, witness) == query when In
    std::string status_name() const;
};

/// Reduce q against the image basis. Zero residue yields `In` with a
/// preimage witness; a nonzero residue is `NotInCertified` exactly when the
/// map is degree-preserving and `NotFoundWithinSlack` otherwise.
MembershipVerdict member(const ImageBasis& basis, const Polynomial& q);
MembershipVerdict member(const MapVariant& map, const Polynomial& q,
                         std::uint32_t degree_bound,
                         std::optional<std::uint32_t> slack = std::nullopt);

struct DegreeReport {
    bool pass = true;
    std::optional<std::uint32_t> first_failure;
    std::string detail;
};

/// Checks degree by degree (0..d) that the truncated image equals the
/// truncation of the ideal generated by the given polynomials.
DegreeReport ideal_slice_test(const ImageBasis& basis,
                              const std::vector<Polynomial>& generators);

/// Per-degree equality of canonical image bases; reports the first
/// discrepancy. Requires both sides degree-preserving or both filtered
/// with the same slack.
DegreeReport compare_images(const ImageBasis& a, const ImageBasis& b);

/// Canonical truncated basis of the ideal generated by the given
/// polynomials: echelon of {m*g : deg(m*g) <= bound}.
EchelonBasis ideal_truncation(const RingPtr& ring,
                              const std::vector<Polynomial>& generators,
                              std::uint32_t bound);

}  // namespace ederiv

#endif
