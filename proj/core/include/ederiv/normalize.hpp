#ifndef EDERIV_NORMALIZE_HPP
#define EDERIV_NORMALIZE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ederiv/maps.hpp"
#include "ederiv/matrix.hpp"

namespace ederiv {

/// Record of which canonical shape a normalization achieved and with which
/// conjugation data. The invariant conjugate(input, sigma) == normalized is
/// checked by every constructor in this module.
struct NormalizationCertificate {
    std::string kind;  // "shift-to-origin" | "linearize-triangular" |
                       // "diagonal" | "jordan" | "contains-one" | "principal-ideal"
    std::vector<Scalar> eigenvalues;
    std::vector<Scalar> constants;             // shift constants c_i
    std::vector<Polynomial> coefficient_polys; // per-variable sigma_k(x_k) tails C_k
    std::optional<ScalarMatrix> transform;     // linear-part transform T
    std::optional<Polynomial> principal_generator;
    std::vector<std::string> notes;
};

struct EDNormalization {
    PolyAutomorphism sigma;
    EDerivation normalized;
    NormalizationCertificate certificate;
};

struct DerNormalization {
    PolyAutomorphism sigma;
    Derivation normalized;
    NormalizationCertificate certificate;
};

/// Constant-shift elimination for triangular phi(x_i) = lambda_i x_i +
/// f_i(x_{i+1}..x_n): builds sigma(x_i) = x_i + c_i by back-substitution from
/// i = n downward, with c_i = (lambda_i - 1)^{-1} f_i(-c_{i+1},..,-c_n).
/// After conjugation every tail has zero constant term. An eigenvalue 1
/// whose tail constant does not already vanish raises
/// NormalizationImpossible naming the variable.
EDNormalization shift_to_origin(const EDerivation& delta);

/// Full linearization of a triangular derivation
/// D = sum (a_i x_i + b_i(x_1..x_{i-1})) d_i with nonzero a_i: iteratively
/// builds sigma_k(x_k) = a_k x_k + C_k where each coefficient of C_k is
/// (a_k - sum l_i a_i)^{-1} a_k b_{k,l}, composing in ascending index order.
/// The result is exactly the diagonal derivation sum a_i x_i d_i. A vanishing
/// denominator raises ResonantObstruction with (k, l).
DerNormalization linearize_triangular_derivation(const Derivation& d);

/// Returns (T, U) with U = T^{-1} A T upper triangular, for n <= 3.
/// Eigenvalue search: rational candidates by the rational-root theorem,
/// root-of-unity-scaled candidates q * zeta_N^j over divisor-bounded q and
/// all j, and quadratics by the explicit formula whenever y^2 = disc is
/// solvable in coordinates. Anything else raises UnsupportedField.
std::pair<ScalarMatrix, ScalarMatrix> triangularize_linear_part(const ScalarMatrix& A);

/// Square root in Q(zeta_N) by the bounded candidate search y = q * zeta^j.
std::optional<Scalar> sqrt_in_field(const Scalar& disc);

/// Affine two-variable reduction to one of the terminal cases:
/// "diagonal", "jordan", "contains-one" (1 lies in the image), or
/// "principal-ideal" generated by x2 + mu_1. The certificate states which.
EDNormalization normalize_affine_dim2(const EDerivation& delta);

}  // namespace ederiv

#endif
