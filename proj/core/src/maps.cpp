#include "ederiv/maps.hpp"

#include "ederiv/errors.hpp"

namespace ederiv {

Endomorphism Endomorphism::identity(const RingPtr& ring) {
    Endomorphism e;
    for (std::size_t i = 0; i < ring->nvars; ++i)
        e.images.push_back(Polynomial::variable(ring, i));
    return e;
}

Endomorphism compose(const Endomorphism& a, const Endomorphism& b) {
    Endomorphism out;
    for (const auto& img : b.images) out.images.push_back(a.apply(img));
    return out;
}

Polynomial Derivation::apply(const Polynomial& p) const {
    Polynomial out = Polynomial::zero(ring());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        out = out + coeffs[i] * p.derivative(i);
    }
    return out;
}

PolyAutomorphism::PolyAutomorphism(Endomorphism forward, Endomorphism inverse)
    : fwd_(std::move(forward)), inv_(std::move(inverse)) {
    const RingPtr& r = fwd_.ring();
    if (fwd_.nvars() != r->nvars || inv_.nvars() != r->nvars)
        throw InputError("automorphism arity mismatch");
    const Endomorphism id = Endomorphism::identity(r);
    if (!(compose(fwd_, inv_) == id) || !(compose(inv_, fwd_) == id))
        throw InputError("automorphism check failed: inverse does not invert");
}

PolyAutomorphism PolyAutomorphism::identity(const RingPtr& ring) {
    return PolyAutomorphism(Endomorphism::identity(ring), Endomorphism::identity(ring));
}

PolyAutomorphism compose(const PolyAutomorphism& a, const PolyAutomorphism& b) {
    return PolyAutomorphism(compose(a.forward(), b.forward()),
                            compose(b.inverse(), a.inverse()));
}

EDerivation conjugate(const EDerivation& delta, const PolyAutomorphism& sigma) {
    // sigma^{-1} delta sigma = I - sigma^{-1} phi sigma
    return EDerivation{compose(sigma.inverse(), compose(delta.phi, sigma.forward()))};
}

Derivation conjugate(const Derivation& d, const PolyAutomorphism& sigma) {
    Derivation out;
    for (std::size_t i = 0; i < d.nvars(); ++i)
        out.coeffs.push_back(
            sigma.apply_inverse(d.apply(sigma.apply(Polynomial::variable(d.ring(), i)))));
    return out;
}

std::string shape_kind_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::Linear: return "linear";
        case ShapeKind::Affine: return "affine";
        case ShapeKind::TriangularTail: return "triangular-linear-diagonal-tail";
        case ShapeKind::JordanPairs: return "jordan-pairs";
        case ShapeKind::DerivationAffine: return "derivation-affine";
        case ShapeKind::DerivationTriangular: return "derivation-triangular";
        case ShapeKind::General: return "general";
    }
    return "general";
}

namespace {

// Coefficient of x_{j+1} in the degree-1 part of p.
Scalar linear_coeff(const Polynomial& p, std::size_t j) {
    return p.coeff(Monomial::unit(p.ring()->nvars, j));
}

bool degree_at_most_one(const Polynomial& p) { return p.degree() <= 1; }

}  // namespace

MapShape classify(const Endomorphism& phi) {
    const RingPtr ring = phi.ring();
    const std::size_t n = ring->nvars;
    const FieldPtr field = ring->field;
    MapShape shape;
    shape.ring = ring;
    shape.is_endomorphism = true;

    // Jordan pairs: maximal prefix of 2x2 blocks, then a diagonal tail.
    {
        std::size_t t = 0;
        std::vector<Scalar> lambdas(n, Scalar::zero(field));
        bool ok = true;
        while (2 * (t + 1) <= n) {
            const std::size_t a = 2 * t, b = 2 * t + 1;
            const Polynomial expect_block =
                Polynomial::variable(ring, a).scaled(linear_coeff(phi.images[a], a)) +
                Polynomial::variable(ring, b);
            const Scalar lam = linear_coeff(phi.images[a], a);
            if (phi.images[a] == expect_block &&
                phi.images[b] == Polynomial::variable(ring, b).scaled(lam)) {
                lambdas[a] = lam;
                lambdas[b] = lam;
                ++t;
            } else {
                break;
            }
        }
        for (std::size_t s = 2 * t; s < n && ok; ++s) {
            const Scalar lam = linear_coeff(phi.images[s], s);
            if (phi.images[s] == Polynomial::variable(ring, s).scaled(lam))
                lambdas[s] = lam;
            else
                ok = false;
        }
        if (ok) {
            shape.kind = ShapeKind::JordanPairs;
            shape.blocks = t;
            shape.lambdas = std::move(lambdas);
            return shape;
        }
    }

    // Triangular: phi(x_i) = lambda_i x_i + f_i(x_{i+1}..x_n).
    {
        bool ok = true;
        std::vector<Scalar> lambdas;
        std::vector<Polynomial> tails;
        for (std::size_t i = 0; i < n && ok; ++i) {
            const Scalar lam = linear_coeff(phi.images[i], i);
            const Polynomial tail =
                phi.images[i] - Polynomial::variable(ring, i).scaled(lam);
            if (tail.uses_only_vars(i + 1, n)) {
                lambdas.push_back(lam);
                tails.push_back(tail);
            } else {
                ok = false;
            }
        }
        if (ok) {
            shape.kind = ShapeKind::TriangularTail;
            shape.lambdas = std::move(lambdas);
            shape.tails = std::move(tails);
            return shape;
        }
    }

    // Linear / affine.
    {
        bool linear = true, affine = true;
        for (const auto& img : phi.images) {
            if (!degree_at_most_one(img)) {
                affine = false;
                linear = false;
                break;
            }
            if (!img.constant_term().is_zero()) linear = false;
        }
        if (affine) {
            shape.kind = linear ? ShapeKind::Linear : ShapeKind::Affine;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j)
                    shape.matrix.push_back(linear_coeff(phi.images[i], j));
                shape.shifts.push_back(phi.images[i].constant_term());
            }
            return shape;
        }
    }

    shape.kind = ShapeKind::General;
    return shape;
}

MapShape classify(const Derivation& d) {
    const RingPtr ring = d.ring();
    const std::size_t n = ring->nvars;
    MapShape shape;
    shape.ring = ring;
    shape.is_endomorphism = false;

    // DerivationAffine: coeffs a_i x_i + b_i with constant a_i, b_i.
    {
        bool ok = true;
        std::vector<Scalar> lambdas, shifts;
        for (std::size_t i = 0; i < n && ok; ++i) {
            const Polynomial& c = d.coeffs[i];
            const Scalar a = linear_coeff(c, i);
            const Polynomial rest =
                c - Polynomial::variable(ring, i).scaled(a);
            if (degree_at_most_one(c) && rest.degree() <= 0) {
                lambdas.push_back(a);
                shifts.push_back(rest.constant_term());
            } else {
                ok = false;
            }
        }
        if (ok) {
            shape.kind = ShapeKind::DerivationAffine;
            shape.lambdas = std::move(lambdas);
            shape.shifts = std::move(shifts);
            return shape;
        }
    }

    // DerivationTriangular: coeffs a_i x_i + b_i(x_1..x_{i-1}).
    {
        bool ok = true;
        std::vector<Scalar> lambdas;
        std::vector<Polynomial> tails;
        for (std::size_t i = 0; i < n && ok; ++i) {
            const Scalar a = linear_coeff(d.coeffs[i], i);
            const Polynomial tail =
                d.coeffs[i] - Polynomial::variable(ring, i).scaled(a);
            if (tail.uses_only_vars(0, i)) {
                lambdas.push_back(a);
                tails.push_back(tail);
            } else {
                ok = false;
            }
        }
        if (ok) {
            shape.kind = ShapeKind::DerivationTriangular;
            shape.lambdas = std::move(lambdas);
            shape.tails = std::move(tails);
            return shape;
        }
    }

    shape.kind = ShapeKind::General;
    return shape;
}

Endomorphism MapShape::rebuild_endomorphism() const {
    if (!is_endomorphism) throw Error("shape does not describe an endomorphism");
    const std::size_t n = ring->nvars;
    Endomorphism out;
    switch (kind) {
        case ShapeKind::JordanPairs: {
            for (std::size_t i = 0; i < n; ++i) {
                Polynomial img = Polynomial::variable(ring, i).scaled(lambdas[i]);
                if (i < 2 * blocks && i % 2 == 0)
                    img = img + Polynomial::variable(ring, i + 1);
                out.images.push_back(img);
            }
            return out;
        }
        case ShapeKind::TriangularTail: {
            for (std::size_t i = 0; i < n; ++i)
                out.images.push_back(
                    Polynomial::variable(ring, i).scaled(lambdas[i]) + tails[i]);
            return out;
        }
        case ShapeKind::Linear:
        case ShapeKind::Affine: {
            for (std::size_t i = 0; i < n; ++i) {
                Polynomial img = Polynomial::constant(ring, shifts[i]);
                for (std::size_t j = 0; j < n; ++j)
                    img = img + Polynomial::variable(ring, j).scaled(matrix[i * n + j]);
                out.images.push_back(img);
            }
            return out;
        }
        default:
            throw Error("cannot rebuild a general shape");
    }
}

Derivation MapShape::rebuild_derivation() const {
    if (is_endomorphism) throw Error("shape does not describe a derivation");
    const std::size_t n = ring->nvars;
    Derivation out;
    switch (kind) {
        case ShapeKind::DerivationAffine: {
            for (std::size_t i = 0; i < n; ++i)
                out.coeffs.push_back(Polynomial::variable(ring, i).scaled(lambdas[i]) +
                                     Polynomial::constant(ring, shifts[i]));
            return out;
        }
        case ShapeKind::DerivationTriangular: {
            for (std::size_t i = 0; i < n; ++i)
                out.coeffs.push_back(Polynomial::variable(ring, i).scaled(lambdas[i]) +
                                     tails[i]);
            return out;
        }
        default:
            throw Error("cannot rebuild a general shape");
    }
}

const RingPtr& map_ring(const MapVariant& m) {
    return std::visit([](const auto& x) -> const RingPtr& { return x.ring(); }, m);
}

Polynomial apply_map(const MapVariant& m, const Polynomial& p) {
    return std::visit([&](const auto& x) { return x.apply(p); }, m);
}

MapVariant conjugate(const MapVariant& m, const PolyAutomorphism& sigma) {
    return std::visit([&](const auto& x) -> MapVariant { return conjugate(x, sigma); }, m);
}

MapShape classify_map(const MapVariant& m) {
    if (std::holds_alternative<EDerivation>(m))
        return classify(std::get<EDerivation>(m).phi);
    return classify(std::get<Derivation>(m));
}

}  // namespace ederiv
