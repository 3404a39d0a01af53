#include "ederiv/resonance.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ederiv/errors.hpp"

namespace ederiv {

std::optional<unsigned> root_of_unity_order(const Scalar& a) {
    if (!a.valid()) throw Error("null scalar");
    if (a.is_zero()) return std::nullopt;
    const unsigned m = a.field()->torsion_order();
    if (!a.pow(m).is_one()) return std::nullopt;
    for (unsigned s = 1; s <= m; ++s) {
        if (m % s != 0) continue;
        if (a.pow(s).is_one()) return s;
    }
    return m;  // unreachable: s = m always divides m
}

namespace {

// Enumerates exponent vectors of fixed total degree in descending lex order
// (first coordinate largest first), invoking fn on each; fn returns true to
// stop. Combined with an ascending loop over totals this yields graded-lex.
bool for_each_composition(std::vector<std::uint32_t>& v, std::size_t pos,
                          std::uint32_t remaining,
                          const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
    if (pos + 1 == v.size()) {
        v[pos] = remaining;
        return fn(v);
    }
    for (std::uint32_t e = remaining; e + 1 > 0; --e) {
        v[pos] = e;
        if (for_each_composition(v, pos + 1, remaining - e, fn)) return true;
        if (e == 0) break;
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> resonance_exists_bounded(
    const std::vector<Scalar>& lambdas, unsigned bound) {
    if (bound == 0) throw InputError("resonance bound must be >= 1");
    if (lambdas.empty()) return std::nullopt;
    const FieldPtr f = lambdas.front().field();
    // Power table lambda_j^k for k <= bound.
    std::vector<std::vector<Scalar>> pows(lambdas.size());
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        pows[j].push_back(Scalar::one(f));
        for (unsigned k = 1; k <= bound; ++k)
            pows[j].push_back(pows[j].back() * lambdas[j]);
    }
    std::optional<std::vector<std::uint32_t>> hit;
    std::vector<std::uint32_t> v(lambdas.size(), 0);
    for (unsigned total = 1; total <= bound && !hit; ++total) {
        for_each_composition(v, 0, total, [&](const std::vector<std::uint32_t>& e) {
            Scalar prod = Scalar::one(f);
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] > 0) prod = prod * pows[j][e[j]];
            if (prod.is_one()) {
                hit = e;
                return true;
            }
            return false;
        });
    }
    return hit;
}

namespace {

// Prime exponent vector of a positive rational (numerator minus denominator
// valuations), by trial division; inputs are desk scale.
std::map<Integer, long> factor_positive(const Rational& q) {
    std::map<Integer, long> out;
    auto accumulate = [&out](Integer v, int sign) {
        Integer p = 2;
        while (v > 1) {
            if (p * p > v) {
                out[v] += sign;
                break;
            }
            if (v % p == 0) {
                out[p] += sign;
                v /= p;
            } else {
                ++p;
            }
        }
    };
    accumulate(q.get_num(), +1);
    accumulate(q.get_den(), -1);
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

// Reduced kernel basis computation for a small rational matrix (rows x cols,
// row-major); returns kernel dimension and, when it is one, the kernel vector.
struct KernelResult {
    std::size_t dim;
    std::vector<Rational> vec;  // valid when dim == 1
};

KernelResult kernel_of(const std::vector<std::vector<Rational>>& cols) {
    const std::size_t m = cols.size();
    const std::size_t rows = m == 0 ? 0 : cols[0].size();
    // Gaussian elimination on the column space: track combinations.
    // work[i] = (column values, combination over original columns)
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> work;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> comb(m, Rational(0));
        comb[j] = 1;
        work.emplace_back(cols[j], std::move(comb));
    }
    std::size_t rank = 0;
    std::vector<Rational> kernel_vec;
    std::size_t kernel_count = 0;
    for (std::size_t j = 0; j < m; ++j) {
        auto& [col, comb] = work[j];
        // reduce against established pivots
        for (std::size_t p = 0; p < rank; ++p) {
            auto& [pcol, pcomb] = work[p];
            std::size_t pr = 0;
            while (pr < rows && pcol[pr] == 0) ++pr;
            if (pr == rows) continue;
            if (col[pr] == 0) continue;
            const Rational c = col[pr] / pcol[pr];
            for (std::size_t r = 0; r < rows; ++r) col[r] -= c * pcol[r];
            for (std::size_t k = 0; k < m; ++k) comb[k] -= c * pcomb[k];
        }
        const bool zero = std::all_of(col.begin(), col.end(),
                                      [](const Rational& r) { return r == 0; });
        if (zero) {
            ++kernel_count;
            kernel_vec = comb;
        } else {
            std::swap(work[rank], work[j]);
            ++rank;
        }
    }
    return {kernel_count, kernel_vec};
}

}  // namespace

std::optional<std::vector<std::uint32_t>> resonance_exists_structured(
    const FieldPtr& field, const std::vector<FactoredEigenvalue>& parts) {
    const std::size_t m = parts.size();
    if (m == 0) return std::nullopt;
    const long n = static_cast<long>(field->conductor());
    std::vector<std::map<Integer, long>> factored(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (parts[k].ratio <= 0)
            throw InputError("structured resonance requires positive rational parts");
        factored[k] = factor_positive(parts[k].ratio);
    }
    // Prime valuation matrix: one row per prime, one column per eigenvalue.
    std::vector<Integer> primes;
    for (const auto& f : factored)
        for (const auto& [p, e] : f)
            if (std::find(primes.begin(), primes.end(), p) == primes.end())
                primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    std::vector<std::vector<Rational>> cols(m,
                                            std::vector<Rational>(primes.size(), Rational(0)));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t r = 0; r < primes.size(); ++r) {
            auto it = factored[k].find(primes[r]);
            if (it != factored[k].end()) cols[k][r] = it->second;
        }

    // Existence: the cone {x >= 0, Ax = 0} is nonzero iff some minimal
    // support S has a one-dimensional kernel spanned by a sign-definite
    // vector. Subsets are enumerated by size, so minimal supports come first.
    std::vector<std::uint32_t> witness;
    bool found = false;
    for (std::size_t size = 1; size <= m && !found; ++size) {
        std::vector<std::size_t> idx(size);
        // enumerate subsets of {0..m-1} of the given size
        std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                                std::size_t start) {
            if (pos == size) {
                std::vector<std::vector<Rational>> sub;
                for (auto i : idx) sub.push_back(cols[i]);
                auto ker = kernel_of(sub);
                if (ker.dim != 1) return false;
                const bool all_pos = std::all_of(ker.vec.begin(), ker.vec.end(),
                                                 [](const Rational& r) { return r > 0; });
                const bool all_neg = std::all_of(ker.vec.begin(), ker.vec.end(),
                                                 [](const Rational& r) { return r < 0; });
                if (!all_pos && !all_neg) return false;
                // Scale to a primitive positive integer vector on the support.
                Integer lcm_den = 1;
                for (const auto& r : ker.vec) {
                    Integer d = (all_neg ? Rational(-r) : r).get_den();
                    lcm_den = lcm_den / gcd(lcm_den, d) * d;
                }
                std::vector<Integer> x0(m, Integer(0));
                for (std::size_t p = 0; p < size; ++p) {
                    Rational v = all_neg ? Rational(-ker.vec[p]) : ker.vec[p];
                    x0[idx[p]] = Integer(v.get_num() * (lcm_den / v.get_den()));
                }
                // Congruence sum x_k j_k = 0 (mod N): always satisfiable by an
                // integer scaling t <= N.
                Integer c = 0;
                for (std::size_t k = 0; k < m; ++k)
                    c += x0[k] * Integer(parts[k].zeta_exp % n);
                Integer cmod = c % n;
                if (cmod < 0) cmod += n;
                Integer t = cmod == 0 ? Integer(1) : Integer(n) / gcd(cmod, Integer(n));
                std::uint64_t total = 0;
                std::vector<std::uint32_t> scaled(m, 0);
                for (std::size_t k = 0; k < m; ++k) {
                    Integer e = x0[k] * t;
                    scaled[k] = static_cast<std::uint32_t>(e.get_ui());
                    total += scaled[k];
                }
                witness = std::move(scaled);
                found = true;
                (void)total;
                return true;
            }
            for (std::size_t i = start; i < m; ++i) {
                idx[pos] = i;
                if (rec(pos + 1, i + 1)) return true;
            }
            return false;
        };
        rec(0, 0);
    }
    if (!found) return std::nullopt;

    // Minimal graded-lex witness: the known witness bounds the search.
    const std::uint32_t bound = static_cast<std::uint32_t>(
        std::accumulate(witness.begin(), witness.end(), std::uint64_t{0}));
    auto satisfies = [&](const std::vector<std::uint32_t>& e) {
        std::vector<Rational> prime_sum(primes.size(), Rational(0));
        long zsum = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if (e[k] == 0) continue;
            for (std::size_t r = 0; r < primes.size(); ++r)
                prime_sum[r] += Rational(e[k]) * cols[k][r];
            zsum += static_cast<long>(e[k]) * (parts[k].zeta_exp % n);
        }
        const bool rational_one = std::all_of(prime_sum.begin(), prime_sum.end(),
                                              [](const Rational& r) { return r == 0; });
        return rational_one && ((zsum % n) + n) % n == 0;
    };
    std::vector<std::uint32_t> v(m, 0);
    std::optional<std::vector<std::uint32_t>> best;
    for (std::uint32_t total = 1; total <= bound && !best; ++total) {
        for_each_composition(v, 0, total, [&](const std::vector<std::uint32_t>& e) {
            if (satisfies(e)) {
                best = e;
                return true;
            }
            return false;
        });
    }
    return best;
}

std::optional<FactoredEigenvalue> to_factored(const Scalar& a) {
    if (!a.valid()) throw Error("null scalar");
    if (a.is_zero()) return std::nullopt;
    const FieldPtr f = a.field();
    for (long j = 0; j < static_cast<long>(f->conductor()); ++j) {
        const Scalar q = a * Scalar::root_of_unity(f, -j);
        auto r = q.as_rational();
        if (r && *r > 0) return FactoredEigenvalue{*r, j};
    }
    return std::nullopt;
}

}  // namespace ederiv
