#ifndef EDERIV_RESONANCE_HPP
#define EDERIV_RESONANCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ederiv/cyclotomic.hpp"

namespace ederiv {

/// Least s >= 1 with a^s = 1, or absent when a is not a root of unity.
///
/// Every root of unity in Q(zeta_N) has order dividing M, where M = N for
/// even N and M = 2N for odd N; a^M is tested by repeated squaring and the
/// order is then the least divisor of M fixing a.
std::optional<unsigned> root_of_unity_order(const Scalar& a);

/// First exponent vector (graded-lex order, 1 <= sum <= bound) with
/// prod lambda_j^{i_j} = 1, or absent. Absence within the bound is bounded
/// evidence only, not a proof of global non-resonance.
std::optional<std::vector<std::uint32_t>> resonance_exists_bounded(
    const std::vector<Scalar>& lambdas, unsigned bound);

/// An eigenvalue supplied in factored form q * zeta_N^j with q a positive
/// rational; the form in which global resonance questions are decidable.
struct FactoredEigenvalue {
    Rational ratio;  // q > 0
    long zeta_exp;   // j, taken modulo N
};

/// Decides globally whether a nonzero natural exponent vector i exists with
/// prod (q_k zeta^{j_k})^{i_k} = 1; returns the graded-lex-least witness or
/// certified absence. The rational parts reduce to an integer nullspace
/// condition over prime exponent vectors (solved by minimal-support circuit
/// enumeration restricted to sign-definite kernels); the root-of-unity parts
/// add a congruence sum i_k j_k = 0 (mod N), satisfiable by scaling.
std::optional<std::vector<std::uint32_t>> resonance_exists_structured(
    const FieldPtr& field, const std::vector<FactoredEigenvalue>& parts);

/// Attempt to write a scalar as q * zeta_N^j with q a positive rational.
std::optional<FactoredEigenvalue> to_factored(const Scalar& a);

}  // namespace ederiv

#endif
