#include "ederiv/polynomial.hpp"

#include <algorithm>

#include "ederiv/errors.hpp"

namespace ederiv {

std::shared_ptr<const PolyRing> PolyRing::create(FieldPtr f, std::size_t n) {
    if (!f) throw InputError("ring needs a coefficient field");
    if (n == 0) throw InputError("ring must have at least one variable");
    auto r = std::make_shared<PolyRing>();
    r->field = std::move(f);
    r->nvars = n;
    return r;
}

Polynomial Polynomial::zero(const RingPtr& ring) { return Polynomial(ring); }

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
    Polynomial p(ring);
    p.add_term(Monomial(ring->nvars), c);
    return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, long p, long q) {
    return constant(ring, Scalar::rational(ring->field, p, q));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i) {
    if (i >= ring->nvars) throw InputError("variable index out of range");
    Polynomial p(ring);
    p.add_term(Monomial::unit(ring->nvars, i), Scalar::one(ring->field));
    return p;
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m, const Scalar& c) {
    if (m.nvars() != ring->nvars) throw InputError("monomial arity mismatch");
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = std::move(s);
    }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_) throw Error("arithmetic on null polynomial");
    if (ring_->nvars != o.ring_->nvars ||
        ring_->field->conductor() != o.ring_->field->conductor())
        throw InputError("polynomials from different rings");
}

std::int64_t Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<std::int64_t>(terms_.begin()->first.degree());
}

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return Scalar::zero(ring_->field);
    return it->second;
}

Scalar Polynomial::constant_term() const { return coeff(Monomial(ring_->nvars)); }

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw Error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
}

bool Polynomial::uses_only_vars(std::size_t lo, std::size_t hi) const {
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m.exps[i] != 0 && (i < lo || i >= hi)) return false;
        }
    }
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator-() const {
    if (!ring_) throw Error("null polynomial");
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial out(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (!ring_) throw Error("null polynomial");
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.add_term(m, k * c);
    return out;
}

Polynomial Polynomial::power(std::uint32_t k) const {
    if (!ring_) throw Error("null polynomial");
    Polynomial acc = Polynomial::constant(ring_, Scalar::one(ring_->field));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_ring(o);
    return terms_ == o.terms_;
}

Polynomial Polynomial::homogeneous_component(std::uint32_t d) const {
    if (!ring_) throw Error("null polynomial");
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) out.terms_.emplace(m, c);
    return out;
}

Polynomial Polynomial::derivative(std::size_t i) const {
    if (!ring_) throw Error("null polynomial");
    if (i >= ring_->nvars) throw InputError("variable index out of range");
    Polynomial out(ring_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[i] == 0) continue;
        Monomial d = m;
        const std::uint32_t e = d.exps[i];
        d.exps[i] = e - 1;
        out.add_term(d, c * Scalar::rational(ring_->field, static_cast<long>(e)));
    }
    return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (!ring_) throw Error("null polynomial");
    if (images.size() != ring_->nvars)
        throw InputError("substitution needs one image per variable");
    const RingPtr target = images.empty() ? ring_ : images.front().ring();
    Polynomial out = Polynomial::zero(target);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(target, Scalar::one(target->field));
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m.exps[i] == 0) continue;
            term = term * images[i].power(m.exps[i]);
        }
        out = out + term.scaled(c);
    }
    return out;
}

Scalar Polynomial::eval(const std::vector<Scalar>& point) const {
    if (!ring_) throw Error("null polynomial");
    if (point.size() != ring_->nvars)
        throw InputError("evaluation needs one value per variable");
    Scalar out = Scalar::zero(ring_->field);
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m.exps[i] != 0) t = t * point[i].pow(m.exps[i]);
        out = out + t;
    }
    return out;
}

namespace {

// Coefficient rendering: scalars with at most one nonzero coordinate get the
// compact sign-extracted form; anything else is parenthesized verbatim.
struct CoeffText {
    bool negative = false;
    std::string magnitude;  // without sign; empty means implicit 1
};

CoeffText render_coeff(const Scalar& c, bool constant_term) {
    const auto& co = c.coords();
    std::size_t nonzero = 0, index = 0;
    for (std::size_t i = 0; i < co.size(); ++i) {
        if (co[i] != 0) {
            ++nonzero;
            index = i;
        }
    }
    CoeffText out;
    if (nonzero > 1) {
        out.magnitude = "(" + c.str() + ")";
        return out;
    }
    const Rational& r = co[index];
    out.negative = r < 0;
    const Rational mag = out.negative ? Rational(-r) : r;
    if (index == 0) {
        if (mag == 1 && !constant_term) return out;  // implicit 1
        out.magnitude = to_string(mag);
    } else {
        if (mag != 1) out.magnitude = to_string(mag) + "*";
        out.magnitude += "z^" + std::to_string(index);
    }
    return out;
}

}  // namespace

std::string Polynomial::str() const {
    if (!ring_) return "<null>";
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool constant = m.is_constant();
        CoeffText t = render_coeff(c, constant);
        if (out.empty()) {
            if (t.negative) out += "-";
        } else {
            out += t.negative ? " - " : " + ";
        }
        if (!t.magnitude.empty()) {
            out += t.magnitude;
            if (!constant) out += "*";
        }
        if (!constant) out += m.str();
    }
    return out;
}

}  // namespace ederiv
