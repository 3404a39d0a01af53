#ifndef EDERIV_POLYNOMIAL_HPP
#define EDERIV_POLYNOMIAL_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ederiv/cyclotomic.hpp"
#include "ederiv/monomial.hpp"

namespace ederiv {

/// A ring session: the coefficient field and the number of variables.
struct PolyRing {
    FieldPtr field;
    std::size_t nvars;

    static std::shared_ptr<const PolyRing> create(FieldPtr f, std::size_t n);
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Sparse multivariate polynomial over Scalar in canonical form: the term
/// map stores no zero coefficients and is ordered graded-lex descending, so
/// begin() is the leading term. Polynomials are immutable values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, GradedLexGreater>;

    Polynomial() = default;  // null; arithmetic throws
    static Polynomial zero(const RingPtr& ring);
    static Polynomial constant(const RingPtr& ring, const Scalar& c);
    static Polynomial constant(const RingPtr& ring, long p, long q = 1);
    static Polynomial variable(const RingPtr& ring, std::size_t i);  // x_{i+1}
    static Polynomial monomial(const RingPtr& ring, const Monomial& m, const Scalar& c);

    bool valid() const { return ring_ != nullptr; }
    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    std::int64_t degree() const;
    std::size_t term_count() const { return terms_.size(); }
    Scalar coeff(const Monomial& m) const;
    Scalar constant_term() const;
    const Monomial& leading_monomial() const;  // throws on zero
    const Scalar& leading_coeff() const;       // throws on zero
    bool is_homogeneous() const;
    /// True when every variable with index outside [lo, hi) has exponent 0.
    bool uses_only_vars(std::size_t lo, std::size_t hi) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial power(std::uint32_t k) const;  // repeated squaring

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Sum of the terms of exact degree d.
    Polynomial homogeneous_component(std::uint32_t d) const;
    /// Formal partial derivative with respect to x_{i+1} (0-based i).
    Polynomial derivative(std::size_t i) const;
    /// Ring-homomorphic substitution x_i -> images[i].
    Polynomial substitute(const std::vector<Polynomial>& images) const;
    /// Evaluation at a scalar point.
    Scalar eval(const std::vector<Scalar>& point) const;

    /// Deterministic text form; parse(str()) reproduces the polynomial.
    std::string str() const;

private:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    void add_term(const Monomial& m, const Scalar& c);  // merges, drops zeros
    void check_same_ring(const Polynomial& o) const;

    RingPtr ring_;
    TermMap terms_;
};

}  // namespace ederiv

#endif
