#ifndef EDERIV_MAPS_HPP
#define EDERIV_MAPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ederiv/polynomial.hpp"

namespace ederiv {

/// A K-algebra endomorphism of the ring, given by the images of x1..xn.
struct Endomorphism {
    std::vector<Polynomial> images;

    static Endomorphism identity(const RingPtr& ring);
    const RingPtr& ring() const { return images.front().ring(); }
    std::size_t nvars() const { return images.size(); }
    /// substitute(p, images): the homomorphic extension to all of the ring.
    Polynomial apply(const Polynomial& p) const { return p.substitute(images); }
    bool operator==(const Endomorphism& o) const { return images == o.images; }
};

/// a ∘ b: apply b first, then a.
Endomorphism compose(const Endomorphism& a, const Endomorphism& b);

/// delta = I - phi. Satisfies delta(ab) = delta(a)b + a delta(b) - delta(a)delta(b).
struct EDerivation {
    Endomorphism phi;

    const RingPtr& ring() const { return phi.ring(); }
    Polynomial apply(const Polynomial& p) const { return p - phi.apply(p); }
    bool operator==(const EDerivation& o) const { return phi == o.phi; }
};

/// D = sum coeffs[i] * d/dx_{i+1}. Satisfies the Leibniz rule.
struct Derivation {
    std::vector<Polynomial> coeffs;

    const RingPtr& ring() const { return coeffs.front().ring(); }
    std::size_t nvars() const { return coeffs.size(); }
    Polynomial apply(const Polynomial& p) const;
    bool operator==(const Derivation& o) const { return coeffs == o.coeffs; }
};

/// An invertible endomorphism with stored inverse; both directions are
/// verified at construction.
class PolyAutomorphism {
public:
    PolyAutomorphism(Endomorphism forward, Endomorphism inverse);
    static PolyAutomorphism identity(const RingPtr& ring);

    const Endomorphism& forward() const { return fwd_; }
    const Endomorphism& inverse() const { return inv_; }
    const RingPtr& ring() const { return fwd_.ring(); }
    Polynomial apply(const Polynomial& p) const { return fwd_.apply(p); }
    Polynomial apply_inverse(const Polynomial& p) const { return inv_.apply(p); }

private:
    Endomorphism fwd_, inv_;
};

/// a ∘ b as automorphisms (apply b first).
PolyAutomorphism compose(const PolyAutomorphism& a, const PolyAutomorphism& b);

/// sigma^{-1} ∘ map ∘ sigma, same kind as the input. For an E-derivation
/// this conjugates phi; conjugating a derivation yields a derivation.
EDerivation conjugate(const EDerivation& delta, const PolyAutomorphism& sigma);
Derivation conjugate(const Derivation& d, const PolyAutomorphism& sigma);

enum class ShapeKind {
    Linear,                 // phi = Ax
    Affine,                 // phi = Ax + c, A not upper triangular
    TriangularTail,         // phi(x_i) = lambda_i x_i + f_i(x_{i+1}..x_n)
    JordanPairs,            // 2x2 Jordan blocks then a diagonal tail
    DerivationAffine,       // D = sum (a_i x_i + b_i) d_i, a_i, b_i constants
    DerivationTriangular,   // D = sum (a_i x_i + b_i(x_1..x_{i-1})) d_i
    General,
};

std::string shape_kind_name(ShapeKind k);

/// Classification record for the structural shapes the theory distinguishes.
/// A classified shape re-serializes to a map equal to the input.
struct MapShape {
    ShapeKind kind = ShapeKind::General;
    RingPtr ring;
    bool is_endomorphism = true;

    std::vector<Scalar> matrix;      // row-major linear part (Linear/Affine)
    std::vector<Scalar> shifts;      // constants (Affine)
    std::vector<Scalar> lambdas;     // diagonal eigenvalues, one per variable
    std::vector<Polynomial> tails;   // f_i resp. b_i
    std::size_t blocks = 0;          // Jordan block count t (pairs occupy x1..x_{2t})

    Endomorphism rebuild_endomorphism() const;
    Derivation rebuild_derivation() const;
};

MapShape classify(const Endomorphism& phi);
MapShape classify(const Derivation& d);

/// Either kind of map, for image/membership machinery.
using MapVariant = std::variant<EDerivation, Derivation>;

const RingPtr& map_ring(const MapVariant& m);
Polynomial apply_map(const MapVariant& m, const Polynomial& p);
MapVariant conjugate(const MapVariant& m, const PolyAutomorphism& sigma);
MapShape classify_map(const MapVariant& m);

}  // namespace ederiv

#endif
