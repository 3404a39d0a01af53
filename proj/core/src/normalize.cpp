#include "ederiv/normalize.hpp"

#include <algorithm>

#include "ederiv/errors.hpp"

namespace ederiv {

namespace {

struct TriangularView {
    std::vector<Scalar> lambdas;
    std::vector<Polynomial> tails;  // f_i in K[x_{i+1}..x_n]
};

TriangularView triangular_view(const Endomorphism& phi) {
    const RingPtr ring = phi.ring();
    const std::size_t n = ring->nvars;
    TriangularView v;
    for (std::size_t i = 0; i < n; ++i) {
        const Scalar lam = phi.images[i].coeff(Monomial::unit(n, i));
        const Polynomial tail = phi.images[i] - Polynomial::variable(ring, i).scaled(lam);
        if (!tail.uses_only_vars(i + 1, n))
            throw InputError("map is not triangular: image of x" + std::to_string(i + 1) +
                             " involves x" + std::to_string(i + 1) +
                             " or earlier variables in its tail");
        v.lambdas.push_back(lam);
        v.tails.push_back(tail);
    }
    return v;
}

PolyAutomorphism shift_automorphism(const RingPtr& ring, const std::vector<Scalar>& c) {
    Endomorphism fwd, inv;
    for (std::size_t i = 0; i < ring->nvars; ++i) {
        fwd.images.push_back(Polynomial::variable(ring, i) +
                             Polynomial::constant(ring, c[i]));
        inv.images.push_back(Polynomial::variable(ring, i) -
                             Polynomial::constant(ring, c[i]));
    }
    return PolyAutomorphism(std::move(fwd), std::move(inv));
}

}  // namespace

EDNormalization shift_to_origin(const EDerivation& delta) {
    const RingPtr ring = delta.ring();
    const FieldPtr field = ring->field;
    const std::size_t n = ring->nvars;
    const TriangularView view = triangular_view(delta.phi);

    // Back-substitution from the last variable downward.
    std::vector<Scalar> c(n, Scalar::zero(field));
    const Scalar one = Scalar::one(field);
    for (std::size_t ii = n; ii-- > 0;) {
        std::vector<Scalar> point(n, Scalar::zero(field));
        for (std::size_t j = ii + 1; j < n; ++j) point[j] = -c[j];
        const Scalar value = view.tails[ii].eval(point);  // f_i(-c_{i+1},..,-c_n)
        if (view.lambdas[ii] == one) {
            if (!value.is_zero())
                throw NormalizationImpossible(
                    "eigenvalue 1 at x" + std::to_string(ii + 1) +
                        " with obstructing constant " + value.str(),
                    ii + 1);
            c[ii] = Scalar::zero(field);
        } else {
            c[ii] = (view.lambdas[ii] - one).inverse() * value;
        }
    }

    PolyAutomorphism sigma = shift_automorphism(ring, c);
    EDerivation normalized = conjugate(delta, sigma);

    const TriangularView out_view = triangular_view(normalized.phi);
    for (std::size_t i = 0; i < n; ++i) {
        if (!out_view.tails[i].constant_term().is_zero())
            throw Error("internal: shift-to-origin left a constant at x" +
                        std::to_string(i + 1));
    }

    NormalizationCertificate cert;
    cert.kind = "shift-to-origin";
    cert.eigenvalues = view.lambdas;
    cert.constants = std::move(c);
    return EDNormalization{std::move(sigma), std::move(normalized), std::move(cert)};
}

DerNormalization linearize_triangular_derivation(const Derivation& d) {
    const RingPtr ring = d.ring();
    const FieldPtr field = ring->field;
    const std::size_t n = ring->nvars;

    std::vector<Scalar> a;
    for (std::size_t i = 0; i < n; ++i) {
        const Scalar ai = d.coeffs[i].coeff(Monomial::unit(n, i));
        const Polynomial tail = d.coeffs[i] - Polynomial::variable(ring, i).scaled(ai);
        if (!tail.uses_only_vars(0, i))
            throw InputError("derivation is not triangular at x" + std::to_string(i + 1));
        if (ai.is_zero())
            throw InputError("triangular linearization requires a nonzero diagonal "
                             "coefficient at x" +
                             std::to_string(i + 1));
        a.push_back(ai);
    }

    Derivation current = d;
    PolyAutomorphism sigma = PolyAutomorphism::identity(ring);
    std::vector<Polynomial> coefficient_polys;
    for (std::size_t k = 0; k < n; ++k) {
        const Polynomial bk =
            current.coeffs[k] - Polynomial::variable(ring, k).scaled(a[k]);
        if (!bk.uses_only_vars(0, k))
            throw Error("internal: conjugation broke triangularity at x" +
                        std::to_string(k + 1));
        // Solve a_k C_k - sum_{i<k} a_i x_i dC_k/dx_i = a_k b_k coefficientwise.
        Polynomial ck = Polynomial::zero(ring);
        for (const auto& [mono, coeff] : bk.terms()) {
            Scalar den = a[k];
            for (std::size_t i = 0; i < k; ++i) {
                if (mono.exps[i] == 0) continue;
                den = den - a[i] * Scalar::rational(field, static_cast<long>(mono.exps[i]));
            }
            if (den.is_zero())
                throw ResonantObstruction(
                    "resonant obstruction at x" + std::to_string(k + 1) +
                        ", multi-index " + mono.str(),
                    k + 1, mono.exps);
            ck = ck + Polynomial::monomial(ring, mono, den.inverse() * a[k] * coeff);
        }
        coefficient_polys.push_back(ck);

        Endomorphism fwd = Endomorphism::identity(ring);
        Endomorphism inv = Endomorphism::identity(ring);
        fwd.images[k] = Polynomial::variable(ring, k).scaled(a[k]) + ck;
        inv.images[k] = (Polynomial::variable(ring, k) - ck).scaled(a[k].inverse());
        PolyAutomorphism sk(std::move(fwd), std::move(inv));
        current = conjugate(current, sk);
        sigma = compose(sigma, sk);
    }

    // The result must be exactly the diagonal derivation sum a_i x_i d_i.
    Derivation diagonal;
    for (std::size_t i = 0; i < n; ++i)
        diagonal.coeffs.push_back(Polynomial::variable(ring, i).scaled(a[i]));
    if (!(current == diagonal))
        throw Error("internal: triangular linearization did not reach diagonal form");

    NormalizationCertificate cert;
    cert.kind = "linearize-triangular";
    cert.eigenvalues = std::move(a);
    cert.coefficient_polys = std::move(coefficient_polys);
    return DerNormalization{std::move(sigma), std::move(current), std::move(cert)};
}

namespace {

// --- eigenvalue search helpers ---------------------------------------------

std::vector<Integer> divisors(Integer v) {
    if (v < 0) v = -v;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            out.push_back(v / d);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Rational root candidates of a dense rational polynomial (low degree first).
std::vector<Rational> rational_root_candidates(const std::vector<Rational>& poly) {
    // Clear denominators to an integer polynomial.
    Integer lcm_den = 1;
    for (const auto& c : poly) {
        const Integer d = c.get_den();
        lcm_den = lcm_den / gcd(lcm_den, d) * d;
    }
    std::vector<Integer> z;
    for (const auto& c : poly) z.push_back(Integer(c * Rational(lcm_den)));
    while (!z.empty() && z.back() == 0) z.pop_back();
    if (z.empty()) return {};
    std::vector<Rational> cands{Rational(0)};
    // Strip trailing zero constant coefficients (x | p).
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low >= z.size() - 1) return cands;
    for (const auto& p : divisors(z[low]))
        for (const auto& q : divisors(z.back())) {
            cands.push_back(make_rational(p, q));
            cands.push_back(make_rational(-p, q));
        }
    return cands;
}

Scalar eval_poly(const std::vector<Scalar>& poly, const Scalar& x) {
    Scalar acc = Scalar::zero(x.field());
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

// One root of a monic char polynomial (degree <= 3, low degree first) inside
// the searchable subset of Q(zeta_N): rationals, q*zeta^j, or a quadratic
// formula solution.
std::optional<Scalar> find_root(const FieldPtr& field, const std::vector<Scalar>& poly) {
    const std::size_t deg = poly.size() - 1;
    if (deg == 1) return -poly[0];
    if (deg == 2) {
        // x^2 + b x + c
        const Scalar b = poly[1], c = poly[0];
        const Scalar disc = b * b - Scalar::rational(field, 4) * c;
        auto y = sqrt_in_field(disc);
        if (!y) return std::nullopt;
        const Scalar half = Scalar::rational(field, 1, 2);
        return (-b + *y) * half;
    }
    // deg == 3: candidates q * zeta^j for each j, with q a rational root of a
    // nonzero coordinate polynomial of p(q * zeta^j).
    const unsigned n = field->conductor();
    for (unsigned j = 0; j < n; ++j) {
        const Scalar zj = Scalar::root_of_unity(field, static_cast<long>(j));
        // p(q z^j) = sum_k (c_k z^{jk}) q^k; pick a coordinate with a nonzero
        // rational polynomial in q.
        std::vector<Scalar> dk;
        for (std::size_t k = 0; k < poly.size(); ++k)
            dk.push_back(poly[k] * zj.pow(k));
        for (std::size_t coord = 0; coord < field->degree(); ++coord) {
            std::vector<Rational> qpoly;
            bool nonzero = false;
            for (const auto& s : dk) {
                qpoly.push_back(s.coords()[coord]);
                nonzero = nonzero || s.coords()[coord] != 0;
            }
            if (!nonzero) continue;
            for (const auto& q : rational_root_candidates(qpoly)) {
                const Scalar cand = Scalar::from_rational(field, q) * zj;
                if (eval_poly(poly, cand).is_zero()) return cand;
            }
            break;  // one nonzero coordinate polynomial pins down all q
        }
    }
    return std::nullopt;
}

std::vector<Scalar> char_poly(const ScalarMatrix& A) {
    const FieldPtr f = A.field();
    const std::size_t n = A.rows();
    auto rat = [&](long v) { return Scalar::rational(f, v); };
    if (n == 1) return {-A.at(0, 0), rat(1)};
    if (n == 2) {
        const Scalar tr = A.at(0, 0) + A.at(1, 1);
        const Scalar det = A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
        return {det, -tr, rat(1)};
    }
    if (n == 3) {
        const Scalar tr = A.at(0, 0) + A.at(1, 1) + A.at(2, 2);
        Scalar m2 = Scalar::zero(f);
        m2 = m2 + A.at(1, 1) * A.at(2, 2) - A.at(1, 2) * A.at(2, 1);
        m2 = m2 + A.at(0, 0) * A.at(2, 2) - A.at(0, 2) * A.at(2, 0);
        m2 = m2 + A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
        const Scalar det = A.determinant();
        return {-det, m2, -tr, rat(1)};
    }
    throw UnsupportedField("linear-part triangularization is implemented for n <= 3");
}

// Extend an eigenvector to an invertible matrix using standard basis columns.
ScalarMatrix extend_to_basis(const FieldPtr& f, const std::vector<Scalar>& v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> picks;
    for (std::size_t skip_mask = 0; skip_mask < (std::size_t{1} << n); ++skip_mask) {
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < n && cols.size() + 1 < n; ++i)
            if (skip_mask & (std::size_t{1} << i)) cols.push_back(i);
        if (cols.size() + 1 != n) continue;
        ScalarMatrix T(f, n, n);
        for (std::size_t i = 0; i < n; ++i) T.at(i, 0) = v[i];
        for (std::size_t k = 0; k < cols.size(); ++k)
            T.at(cols[k], k + 1) = Scalar::one(f);
        if (!T.determinant().is_zero()) return T;
    }
    throw Error("internal: could not extend eigenvector to a basis");
}

}  // namespace

std::optional<Scalar> sqrt_in_field(const Scalar& disc) {
    const FieldPtr field = disc.field();
    if (disc.is_zero()) return Scalar::zero(field);
    auto rational_sqrt = [](const Rational& r) -> std::optional<Rational> {
        if (r <= 0) return std::nullopt;
        const Integer num = r.get_num(), den = r.get_den();
        Integer ns, ds;
        mpz_sqrt(ns.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(ds.get_mpz_t(), den.get_mpz_t());
        if (ns * ns == num && ds * ds == den) return make_rational(ns, ds);
        return std::nullopt;
    };
    for (unsigned j = 0; j < field->conductor(); ++j) {
        const Scalar shifted = disc * Scalar::root_of_unity(field, -2L * j);
        const auto r = shifted.as_rational();
        if (!r) continue;
        const auto q = rational_sqrt(*r);
        if (q)
            return Scalar::from_rational(field, *q) *
                   Scalar::root_of_unity(field, static_cast<long>(j));
    }
    return std::nullopt;
}

std::pair<ScalarMatrix, ScalarMatrix> triangularize_linear_part(const ScalarMatrix& A) {
    const FieldPtr field = A.field();
    const std::size_t n = A.rows();
    if (A.cols() != n) throw InputError("linear part must be square");
    if (n > 3) throw UnsupportedField("linear-part triangularization is implemented for n <= 3");
    if (n == 1) return {ScalarMatrix::identity(field, 1), A};

    const auto poly = char_poly(A);
    const auto lambda = find_root(field, poly);
    if (!lambda)
        throw UnsupportedField(
            "no eigenvalue found inside the searchable subset of Q(zeta_N); "
            "supply the transform explicitly or enlarge the conductor");

    ScalarMatrix shifted = A;
    for (std::size_t i = 0; i < n; ++i)
        shifted.at(i, i) = shifted.at(i, i) - *lambda;
    const auto ker = shifted.kernel();
    if (ker.empty()) throw Error("internal: eigenvalue without eigenvector");
    const ScalarMatrix T1 = extend_to_basis(field, ker.front());
    const ScalarMatrix B = T1.inverse() * A * T1;

    if (n == 2) return {T1, B};

    // Recurse on the trailing 2x2 block.
    ScalarMatrix sub(field, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) sub.at(i, j) = B.at(i + 1, j + 1);
    auto [T2s, U2] = triangularize_linear_part(sub);
    ScalarMatrix T2 = ScalarMatrix::identity(field, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) T2.at(i + 1, j + 1) = T2s.at(i, j);
    const ScalarMatrix T = T1 * T2;
    const ScalarMatrix U = T.inverse() * A * T;
    return {T, U};
}

namespace {

// sigma(x_i) = sum_j S_ij x_j as an automorphism; conjugating an affine map
// with matrix A and shift c by it yields matrix S A S^{-1} and shift S c.
PolyAutomorphism linear_automorphism(const RingPtr& ring, const ScalarMatrix& S) {
    const ScalarMatrix Sinv = S.inverse();
    Endomorphism fwd, inv;
    for (std::size_t i = 0; i < ring->nvars; ++i) {
        Polynomial pf = Polynomial::zero(ring);
        Polynomial pi = Polynomial::zero(ring);
        for (std::size_t j = 0; j < ring->nvars; ++j) {
            pf = pf + Polynomial::variable(ring, j).scaled(S.at(i, j));
            pi = pi + Polynomial::variable(ring, j).scaled(Sinv.at(i, j));
        }
        fwd.images.push_back(pf);
        inv.images.push_back(pi);
    }
    return PolyAutomorphism(std::move(fwd), std::move(inv));
}

}  // namespace

EDNormalization normalize_affine_dim2(const EDerivation& delta) {
    const RingPtr ring = delta.ring();
    const FieldPtr field = ring->field;
    if (ring->nvars != 2)
        throw InputError("affine normalization is specific to two variables");
    for (const auto& img : delta.phi.images)
        if (img.degree() > 1) throw InputError("map is not affine");

    ScalarMatrix A(field, 2, 2);
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j)
            A.at(i, j) = delta.phi.images[i].coeff(Monomial::unit(2, j));
        c.push_back(delta.phi.images[i].constant_term());
    }

    const Scalar one = Scalar::one(field);
    const Scalar tr = A.at(0, 0) + A.at(1, 1);
    const Scalar det = A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
    const Scalar disc = tr * tr - Scalar::rational(field, 4) * det;

    NormalizationCertificate cert;
    cert.constants = {Scalar::zero(field), Scalar::zero(field)};

    // Stage 1: bring the linear part to diagonal or Jordan form.
    ScalarMatrix T = ScalarMatrix::identity(field, 2);
    bool jordan = false;
    Scalar lam1 = Scalar::zero(field), lam2 = Scalar::zero(field);
    if (disc.is_zero()) {
        const Scalar lam = tr * Scalar::rational(field, 1, 2);
        ScalarMatrix shifted = A;
        shifted.at(0, 0) = shifted.at(0, 0) - lam;
        shifted.at(1, 1) = shifted.at(1, 1) - lam;
        const bool scalar_matrix = shifted.at(0, 0).is_zero() &&
                                   shifted.at(0, 1).is_zero() &&
                                   shifted.at(1, 0).is_zero() &&
                                   shifted.at(1, 1).is_zero();
        if (scalar_matrix) {
            lam1 = lam2 = lam;  // already diagonal, T = I
        } else {
            jordan = true;
            lam1 = lam2 = lam;
            // v with (A - lam)v != 0, then T = [ (A-lam)v | v ].
            std::vector<Scalar> v = {one, Scalar::zero(field)};
            std::vector<Scalar> u = shifted * v;
            if (u[0].is_zero() && u[1].is_zero()) {
                v = {Scalar::zero(field), one};
                u = shifted * v;
            }
            for (std::size_t i = 0; i < 2; ++i) {
                T.at(i, 0) = u[i];
                T.at(i, 1) = v[i];
            }
        }
    } else {
        const auto y = sqrt_in_field(disc);
        if (!y)
            throw UnsupportedField(
                "eigenvalues of the linear part lie outside the searchable subset "
                "of Q(zeta_N); enlarge the conductor");
        const Scalar half = Scalar::rational(field, 1, 2);
        lam1 = (tr + *y) * half;
        lam2 = (tr - *y) * half;
        auto eigenvector = [&](const Scalar& lam) {
            ScalarMatrix shifted = A;
            shifted.at(0, 0) = shifted.at(0, 0) - lam;
            shifted.at(1, 1) = shifted.at(1, 1) - lam;
            const auto ker = shifted.kernel();
            if (ker.empty()) throw Error("internal: eigenvalue without eigenvector");
            return ker.front();
        };
        const auto v1 = eigenvector(lam1);
        const auto v2 = eigenvector(lam2);
        for (std::size_t i = 0; i < 2; ++i) {
            T.at(i, 0) = v1[i];
            T.at(i, 1) = v2[i];
        }
    }
    cert.transform = T;
    cert.eigenvalues = {lam1, lam2};

    // The automorphism realizing matrix T^{-1} A T is sigma(x) = (T^{-1}) x.
    PolyAutomorphism sigma = linear_automorphism(ring, T.inverse());
    EDerivation current = conjugate(delta, sigma);
    std::vector<Scalar> mu;
    for (std::size_t i = 0; i < 2; ++i)
        mu.push_back(current.phi.images[i].constant_term());

    // Stage 2: case analysis on the canonical form.
    if (!jordan) {
        bool contains_one = false;
        std::vector<Scalar> shifts(2, Scalar::zero(field));
        const std::vector<Scalar> lams = {lam1, lam2};
        for (std::size_t i = 0; i < 2; ++i) {
            if (lams[i] == one) {
                if (!mu[i].is_zero()) {
                    contains_one = true;
                    cert.notes.push_back("delta(x" + std::to_string(i + 1) +
                                         ") = " + (-mu[i]).str() +
                                         " is a nonzero constant");
                }
            } else {
                shifts[i] = (lams[i] - one).inverse() * mu[i];
            }
        }
        if (shifts[0].is_zero() && shifts[1].is_zero()) {
            cert.kind = contains_one ? "contains-one" : "diagonal";
            cert.constants = shifts;
            return EDNormalization{std::move(sigma), std::move(current), std::move(cert)};
        }
        PolyAutomorphism shift = shift_automorphism(ring, shifts);
        sigma = compose(sigma, shift);
        current = conjugate(delta, sigma);
        cert.kind = contains_one ? "contains-one" : "diagonal";
        cert.constants = shifts;
        return EDNormalization{std::move(sigma), std::move(current), std::move(cert)};
    }

    if (!(lam1 == one)) {
        // Jordan with lambda != 1: remove both constants.
        const Scalar inv = (lam1 - one).inverse();
        const Scalar c2 = inv * mu[1];
        const Scalar c1 = inv * (mu[0] - c2);  // f_1(-c_2) = -c_2 + mu_1
        PolyAutomorphism shift = shift_automorphism(ring, {c1, c2});
        sigma = compose(sigma, shift);
        current = conjugate(delta, sigma);
        cert.kind = "jordan";
        cert.constants = {c1, c2};
        return EDNormalization{std::move(sigma), std::move(current), std::move(cert)};
    }

    // Jordan with lambda = 1.
    if (!mu[1].is_zero()) {
        cert.kind = "contains-one";
        cert.notes.push_back("delta(x2) = " + (-mu[1]).str() + " is a nonzero constant");
        return EDNormalization{std::move(sigma), std::move(current), std::move(cert)};
    }
    cert.kind = "principal-ideal";
    cert.principal_generator =
        Polynomial::variable(ring, 1) + Polynomial::constant(ring, mu[0]);
    cert.notes.push_back("image is the ideal generated by " +
                         cert.principal_generator->str());
    return EDNormalization{std::move(sigma), std::move(current), std::move(cert)};
}

}  // namespace ederiv
