#include "ederiv/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ederiv/errors.hpp"

namespace ederiv {

namespace {

// Dense integer polynomials, low degree first, used only to build Phi_N.
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division q = a / b for monic b; remainder must come out zero.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
    while (a.size() >= b.size() && !a.empty()) {
        const Integer c = a.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        ztrim(a);
    }
    if (!a.empty()) throw Error("internal: inexact cyclotomic division");
    return q;
}

// Phi_N via (x^N - 1) / prod_{d | N, d < N} Phi_d; results memoized.
const ZPoly& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, ZPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ZPoly num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) num = zdiv_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned n) : n_(n) {
    modulus_ = cyclotomic_polynomial(n);
    phi_ = static_cast<unsigned>(modulus_.size() - 1);
}

std::shared_ptr<const CyclotomicField> CyclotomicField::create(unsigned conductor) {
    if (conductor == 0) throw InputError("conductor must be a positive integer");
    return std::shared_ptr<const CyclotomicField>(new CyclotomicField(conductor));
}

Scalar Scalar::zero(const FieldPtr& f) {
    return Scalar(f, std::vector<Rational>(f->degree(), Rational(0)));
}

Scalar Scalar::one(const FieldPtr& f) {
    auto c = std::vector<Rational>(f->degree(), Rational(0));
    c[0] = 1;
    return Scalar(f, std::move(c));
}

Scalar Scalar::from_rational(const FieldPtr& f, const Rational& r) {
    auto c = std::vector<Rational>(f->degree(), Rational(0));
    c[0] = r;
    return Scalar(f, std::move(c));
}

Scalar Scalar::rational(const FieldPtr& f, long p, long q) {
    return from_rational(f, make_rational(p, q));
}

Scalar Scalar::from_coords(const FieldPtr& f, std::vector<Rational> coords) {
    if (coords.size() != f->degree())
        throw InputError("scalar coordinate vector has wrong length");
    return Scalar(f, std::move(coords));
}

namespace {

// Remainder of a dense rational polynomial modulo the (monic, integer)
// cyclotomic modulus; result has length phi(N).
std::vector<Rational> reduce_mod(const FieldPtr& f, std::vector<Rational> a) {
    const auto& m = f->modulus();
    const std::size_t deg = m.size() - 1;
    while (a.size() > deg) {
        const Rational c = a.back();
        const std::size_t shift = a.size() - m.size();
        if (c != 0) {
            for (std::size_t i = 0; i + 1 < m.size(); ++i)
                a[shift + i] -= c * Rational(m[i]);
        }
        a.pop_back();
    }
    a.resize(deg, Rational(0));
    return a;
}

}  // namespace

Scalar Scalar::root_of_unity(const FieldPtr& f, long j) {
    const long n = static_cast<long>(f->conductor());
    long r = j % n;
    if (r < 0) r += n;
    std::vector<Rational> x(static_cast<std::size_t>(r) + 1, Rational(0));
    x.back() = 1;
    return Scalar(f, reduce_mod(f, std::move(x)));
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!field_ || !o.field_) throw Error("arithmetic on null scalar");
    if (field_->conductor() != o.field_->conductor())
        throw InputError("scalars from different cyclotomic fields");
}

bool Scalar::is_zero() const {
    if (!field_) throw Error("null scalar");
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Rational& r) { return r == 0; });
}

bool Scalar::is_one() const {
    if (!field_) throw Error("null scalar");
    if (coords_[0] != 1) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(),
                       [](const Rational& r) { return r == 0; });
}

bool Scalar::is_rational() const {
    if (!field_) throw Error("null scalar");
    return std::all_of(coords_.begin() + 1, coords_.end(),
                       [](const Rational& r) { return r == 0; });
}

std::optional<Rational> Scalar::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coords_[0];
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    std::vector<Rational> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return Scalar(field_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    std::vector<Rational> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return Scalar(field_, std::move(c));
}

Scalar Scalar::operator-() const {
    if (!field_) throw Error("null scalar");
    std::vector<Rational> c(coords_);
    for (auto& x : c) x = -x;
    return Scalar(field_, std::move(c));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    const std::size_t d = coords_.size();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.coords_[j] == 0) continue;
            prod[i + j] += coords_[i] * o.coords_[j];
        }
    }
    return Scalar(field_, reduce_mod(field_, std::move(prod)));
}

namespace {

// Dense rational polynomials for the extended-gcd inverse.
using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qsub_scaled(QPoly a, const QPoly& b, const Rational& c, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    qtrim(a);
    return a;
}

// (quotient, remainder) of a by b over Q.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q;
    qtrim(a);
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    while (a.size() >= b.size()) {
        const Rational c = a.back() / lead;
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        a = qsub_scaled(std::move(a), b, c, shift);
        if (a.size() >= b.size() + shift + 1) throw Error("internal: division stalled");
    }
    return {std::move(q), std::move(a)};
}

}  // namespace

Scalar Scalar::inverse() const {
    if (!field_) throw Error("null scalar");
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    // Extended Euclid on (a, Phi_N) over Q. Phi_N is irreducible, so the gcd
    // is a nonzero constant and the Bezout coefficient of a is the inverse.
    QPoly r0(coords_);
    qtrim(r0);
    QPoly r1;
    for (const auto& z : field_->modulus()) r1.emplace_back(z);
    QPoly s0 = {Rational(1)};
    QPoly s1;  // zero
    // Maintain s_i with s_i * a == r_i (mod Phi_N); start from (a, Phi).
    while (!r1.empty()) {
        auto [q, r2] = qdivmod(r0, r1);
        // s2 = s0 - q*s1
        QPoly s2 = s0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] != 0) s2 = qsub_scaled(std::move(s2), s1, q[i], i);
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw Error("internal: gcd with cyclotomic modulus not constant");
    const Rational g = r0[0];
    QPoly inv = s0;
    for (auto& c : inv) c /= g;
    inv.resize(field_->degree(), Rational(0));
    return Scalar(field_, reduce_mod(field_, std::move(inv)));
}

Scalar Scalar::pow(std::uint64_t k) const {
    if (!field_) throw Error("null scalar");
    Scalar acc = Scalar::one(field_);
    Scalar base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

Scalar Scalar::pow_int(std::int64_t k) const {
    if (k >= 0) return pow(static_cast<std::uint64_t>(k));
    return inverse().pow(static_cast<std::uint64_t>(-k));
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return coords_ == o.coords_;
}

std::string Scalar::str() const {
    if (!field_) return "<null>";
    std::string out;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        const Rational& c = coords_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += to_string(mag);
        if (k > 0) out += "*z^" + std::to_string(k);
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace ederiv
