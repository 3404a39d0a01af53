#include "ederiv/monomial.hpp"

#include <numeric>

#include "ederiv/errors.hpp"

namespace ederiv {

Monomial Monomial::unit(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.exps.at(i) = 1;
    return m;
}

std::uint64_t Monomial::degree() const {
    return std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (exps.size() != o.exps.size()) throw Error("monomial arity mismatch");
    Monomial out(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const std::uint64_t s = std::uint64_t{exps[i]} + o.exps[i];
        if (s > UINT32_MAX) throw Error("monomial exponent overflow");
        out.exps[i] = static_cast<std::uint32_t>(s);
    }
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    if (exps.size() != o.exps.size()) throw Error("monomial arity mismatch");
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > o.exps[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    if (!divides(o)) throw Error("monomial quotient undefined");
    Monomial out(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) out.exps[i] = o.exps[i] - exps[i];
    return out;
}

std::string Monomial::str() const {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

int graded_lex_cmp(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size()) throw Error("monomial arity mismatch");
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    }
    return 0;
}

namespace {

void enumerate(std::size_t nvars, std::size_t pos, std::uint32_t remaining,
               Monomial& cur, std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur.exps[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = remaining;; --e) {
        cur.exps[pos] = e;
        enumerate(nvars, pos + 1, remaining - e, cur, out);
        if (e == 0) break;
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint32_t d) {
    if (nvars == 0) throw Error("ring must have at least one variable");
    std::vector<Monomial> out;
    Monomial cur(nvars);
    enumerate(nvars, 0, d, cur, out);
    return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t d,
                                      std::uint32_t min_degree) {
    std::vector<Monomial> out;
    for (std::uint32_t e = min_degree; e <= d; ++e) {
        auto part = monomials_of_degree(nvars, e);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::uint64_t slice_dimension(std::size_t nvars, std::uint32_t d) {
    // C(d + nvars - 1, nvars - 1)
    std::uint64_t num = 1, den = 1;
    for (std::size_t i = 1; i < nvars; ++i) {
        num *= d + i;
        den *= i;
    }
    return num / den;
}

GradedSlice GradedSlice::exact(std::size_t nvars, std::uint32_t d) {
    return GradedSlice{d, false, monomials_of_degree(nvars, d)};
}

GradedSlice GradedSlice::up_to(std::size_t nvars, std::uint32_t d) {
    return GradedSlice{d, true, monomials_up_to(nvars, d)};
}

}  // namespace ederiv
