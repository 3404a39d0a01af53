#ifndef EDERIV_MONOMIAL_HPP
#define EDERIV_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ederiv {

/// Exponent vector for a fixed number of variables x1..xn.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    /// x_{i+1} (0-based variable index).
    static Monomial unit(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return exps.size(); }
    std::uint64_t degree() const;
    bool is_constant() const { return degree() == 0; }

    Monomial operator*(const Monomial& o) const;  // overflow checked
    bool divides(const Monomial& o) const;
    Monomial quotient(const Monomial& o) const;  // o / this, requires divides

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return exps != o.exps; }

    std::string str() const;  // "x1^2*x3", "1" for the empty monomial
};

/// Graded lexicographic comparison with x1 > x2 > ... > xn:
/// degree first, then the first differing exponent decides.
int graded_lex_cmp(const Monomial& a, const Monomial& b);

struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return graded_lex_cmp(a, b) > 0;
    }
};

/// All monomials of exact degree d in graded-lex descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d);

/// All monomials with min_degree <= degree <= d, ascending by degree and
/// graded-lex descending inside each degree.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t d,
                                      std::uint32_t min_degree = 0);

/// C(d + nvars - 1, nvars - 1): dimension of the exact-degree-d slice.
std::uint64_t slice_dimension(std::size_t nvars, std::uint32_t d);

/// A coordinatized slice of the polynomial ring: either the homogeneous
/// component of exact degree d or the filtered space of degree <= d.
struct GradedSlice {
    std::uint32_t degree = 0;
    bool filtered = false;
    std::vector<Monomial> monomials;

    std::size_t dimension() const { return monomials.size(); }
    static GradedSlice exact(std::size_t nvars, std::uint32_t d);
    static GradedSlice up_to(std::size_t nvars, std::uint32_t d);
};

}  // namespace ederiv

#endif
