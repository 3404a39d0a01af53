#ifndef EDERIV_CYCLOTOMIC_HPP
#define EDERIV_CYCLOTOMIC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ederiv/rational.hpp"

namespace ederiv {

/// The cyclotomic field Q(zeta_N) for a session-wide conductor N.
///
/// Elements are represented by their rational coordinates with respect to
/// the power basis 1, z, ..., z^{phi(N)-1}, reduced modulo the N-th
/// cyclotomic polynomial. The modulus is computed once and cached here.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> create(unsigned conductor);

    unsigned conductor() const { return n_; }
    /// phi(N): the degree of the N-th cyclotomic polynomial.
    unsigned degree() const { return phi_; }
    /// Dense integer coefficients of the modulus, low degree first, monic.
    const std::vector<Integer>& modulus() const { return modulus_; }
    /// Order of the torsion subgroup of Q(zeta_N)^*: N if N is even, 2N if odd.
    unsigned torsion_order() const { return n_ % 2 == 0 ? n_ : 2 * n_; }

private:
    explicit CyclotomicField(unsigned n);
    unsigned n_ = 1;
    unsigned phi_ = 1;
    std::vector<Integer> modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// An element of Q(zeta_N), immutable after construction.
///
/// Canonical form: exactly phi(N) rational coordinates; equality is a
/// coordinatewise comparison. Multiplication reduces eagerly modulo the
/// cyclotomic modulus so that canonical form is an invariant, not a pass.
class Scalar {
public:
    Scalar() = default;  // null element; arithmetic on it throws

    static Scalar zero(const FieldPtr& f);
    static Scalar one(const FieldPtr& f);
    static Scalar from_rational(const FieldPtr& f, const Rational& r);
    static Scalar rational(const FieldPtr& f, long p, long q = 1);
    /// zeta_N^j in canonical reduced form (j is reduced modulo N).
    static Scalar root_of_unity(const FieldPtr& f, long j);
    /// Construct from raw coordinates (must already have length phi(N)).
    static Scalar from_coords(const FieldPtr& f, std::vector<Rational> coords);

    bool valid() const { return field_ != nullptr; }
    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when only the degree-0 coordinate may be nonzero.
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws DivisionByZero on zero
    Scalar pow(std::uint64_t k) const;
    Scalar pow_int(std::int64_t k) const;  // negative exponents via inverse

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Serialization over the grammar `rational ( "*z^" integer )?`, terms
    /// joined by " + " / " - ", coordinates in ascending power order.
    std::string str() const;

private:
    Scalar(FieldPtr f, std::vector<Rational> coords)
        : field_(std::move(f)), coords_(std::move(coords)) {}
    void check_same_field(const Scalar& o) const;

    FieldPtr field_;
    std::vector<Rational> coords_;
};

}  // namespace ederiv

#endif
