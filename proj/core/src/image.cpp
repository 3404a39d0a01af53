#include "ederiv/image.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>

#include "ederiv/errors.hpp"
#include "ederiv/resonance.hpp"

namespace ederiv {

namespace {

// Coordinate universe for filtered spans: all monomials of degree <= d in
// global graded-lex descending order.
std::vector<Monomial> monomials_up_to_descending(std::size_t nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    for (std::uint32_t e = d + 1; e-- > 0;) {
        auto part = monomials_of_degree(nvars, e);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

using Sparse = std::vector<std::pair<std::uint32_t, Scalar>>;

// a -= c * b on index-sorted sparse vectors.
Sparse axpy_sub(const Sparse& a, const Scalar& c, const Sparse& b) {
    Sparse out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(c * b[j].second));
            ++j;
        } else {
            Scalar s = a[i].second - c * b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

Sparse scale(Sparse v, const Scalar& c) {
    for (auto& [i, s] : v) s = s * c;
    return v;
}

}  // namespace

EchelonBasis::EchelonBasis(RingPtr ring, std::vector<Monomial> coordinates)
    : ring_(std::move(ring)), coords_(std::move(coordinates)) {
    for (std::uint32_t i = 0; i < coords_.size(); ++i) coord_index_.emplace(coords_[i], i);
    pivot_of_.assign(coords_.size(), -1);
}

EchelonBasis::Sparse EchelonBasis::to_sparse(const Polynomial& p) const {
    Sparse out;
    out.reserve(p.term_count());
    // terms() iterates descending graded-lex, which is ascending index order.
    for (const auto& [m, c] : p.terms()) {
        auto it = coord_index_.find(m);
        if (it == coord_index_.end())
            throw Error("internal: monomial outside the echelon coordinate universe: " +
                        m.str());
        out.emplace_back(it->second, c);
    }
    return out;
}

Polynomial EchelonBasis::row_to_poly(const Sparse& v) const {
    Polynomial out = Polynomial::zero(ring_);
    for (const auto& [i, c] : v)
        out = out + Polynomial::monomial(ring_, coords_[i], c);
    return out;
}

Polynomial EchelonBasis::combo_to_poly(const Sparse& combo) const {
    Polynomial out = Polynomial::zero(ring_);
    for (const auto& [i, c] : combo) out = out + generators_[i].scaled(c);
    return out;
}

bool EchelonBasis::insert(const Polynomial& v, const Polynomial& preimage) {
    finalized_ = false;
    const std::uint32_t gen_index = static_cast<std::uint32_t>(generators_.size());
    generators_.push_back(preimage);

    Sparse vec = to_sparse(v);
    Sparse combo{{gen_index, Scalar::one(ring_->field)}};
    while (!vec.empty()) {
        const std::uint32_t lead = vec.front().first;
        const std::int32_t r = pivot_of_[lead];
        if (r < 0) break;
        const Scalar c = vec.front().second;
        vec = axpy_sub(vec, c, rows_sparse_[static_cast<std::size_t>(r)].vec);
        combo = axpy_sub(combo, c, rows_sparse_[static_cast<std::size_t>(r)].combo);
    }
    if (vec.empty()) {
        if (!combo.empty()) {
            Polynomial k = combo_to_poly(combo);
            if (!k.is_zero()) kernel_.push_back(std::move(k));
        }
        return false;
    }
    const Scalar inv = vec.front().second.inverse();
    vec = scale(std::move(vec), inv);
    combo = scale(std::move(combo), inv);
    pivot_of_[vec.front().first] = static_cast<std::int32_t>(rows_sparse_.size());
    pivots_.push_back(vec.front().first);
    rows_sparse_.push_back(SparseRow{std::move(vec), std::move(combo)});
    return true;
}

void EchelonBasis::finalize() const {
    if (finalized_) return;
    auto* self = const_cast<EchelonBasis*>(this);
    // Back-substitution: process pivots from the smallest monomial (largest
    // index) upward, so every row used for reduction is already reduced.
    std::vector<std::uint32_t> order = self->pivots_;
    std::sort(order.begin(), order.end(), std::greater<>());
    for (const std::uint32_t pivot : order) {
        auto& row = self->rows_sparse_[static_cast<std::size_t>(self->pivot_of_[pivot])];
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t t = 1; t < row.vec.size(); ++t) {
                const std::int32_t r = self->pivot_of_[row.vec[t].first];
                if (r < 0) continue;
                const auto& other = self->rows_sparse_[static_cast<std::size_t>(r)];
                const Scalar c = row.vec[t].second;
                row.vec = axpy_sub(row.vec, c, other.vec);
                row.combo = axpy_sub(row.combo, c, other.combo);
                changed = true;
                break;
            }
        }
    }
    // Materialize canonical rows in descending pivot order.
    std::vector<std::uint32_t> sorted = self->pivots_;
    std::sort(sorted.begin(), sorted.end());
    self->materialized_.clear();
    for (const std::uint32_t pivot : sorted) {
        const auto& row = self->rows_sparse_[static_cast<std::size_t>(self->pivot_of_[pivot])];
        self->materialized_.push_back(Row{coords_[pivot], row_to_poly(row.vec),
                                          combo_to_poly(row.combo)});
    }
    finalized_ = true;
}

const std::vector<EchelonBasis::Row>& EchelonBasis::rows() const {
    finalize();
    return materialized_;
}

std::vector<Polynomial> EchelonBasis::rows_up_to_degree(std::uint32_t e) const {
    finalize();
    std::vector<Polynomial> out;
    for (const auto& row : materialized_)
        if (row.pivot.degree() <= e) out.push_back(row.vec);
    return out;
}

EchelonBasis::Reduction EchelonBasis::reduce(const Polynomial& q) const {
    Sparse work = to_sparse(q);
    Sparse combo;
    Sparse residue;
    while (!work.empty()) {
        const std::uint32_t lead = work.front().first;
        const std::int32_t r = pivot_of_[lead];
        if (r < 0) {
            residue.push_back(work.front());
            work.erase(work.begin());
            continue;
        }
        const Scalar c = work.front().second;
        const auto& row = rows_sparse_[static_cast<std::size_t>(r)];
        work = axpy_sub(work, c, row.vec);
        Sparse scaled_combo;  // combo += c * row.combo
        scaled_combo = axpy_sub(combo, -c, row.combo);
        combo = std::move(scaled_combo);
    }
    return Reduction{row_to_poly(residue), combo_to_poly(combo)};
}

bool is_degree_preserving(const MapVariant& m) {
    if (std::holds_alternative<EDerivation>(m)) {
        for (const auto& img : std::get<EDerivation>(m).phi.images) {
            if (img.is_zero()) continue;
            if (!(img.is_homogeneous() && img.degree() == 1)) return false;
        }
        return true;
    }
    for (const auto& c : std::get<Derivation>(m).coeffs) {
        if (c.is_zero()) continue;
        if (!(c.is_homogeneous() && c.degree() == 1)) return false;
    }
    return true;
}

bool is_filtration_preserving(const MapVariant& m) {
    if (std::holds_alternative<EDerivation>(m)) {
        for (const auto& img : std::get<EDerivation>(m).phi.images)
            if (img.degree() > 1) return false;
        return true;
    }
    for (const auto& c : std::get<Derivation>(m).coeffs)
        if (c.degree() > 1) return false;
    return true;
}

std::uint32_t default_slack(const MapVariant& m) {
    const MapShape shape = classify_map(m);
    const std::size_t n = map_ring(m)->nvars;
    std::vector<Scalar> eigen = shape.lambdas;
    if (eigen.empty() && !shape.matrix.empty()) {
        for (std::size_t i = 0; i < n; ++i) eigen.push_back(shape.matrix[i * n + i]);
    }
    std::uint32_t s = 0;
    for (const auto& lam : eigen) {
        if (lam.is_zero()) continue;
        const auto order = root_of_unity_order(lam);
        if (order) s = std::max(s, *order);
    }
    if (s == 0) return static_cast<std::uint32_t>(2 * n);
    return static_cast<std::uint32_t>(2 * s * n);
}

namespace {

unsigned thread_count() {
    const char* env = std::getenv("EDERIV_THREADS");
    if (!env) return 1;
    const long v = std::strtol(env, nullptr, 10);
    return v > 1 ? static_cast<unsigned>(v) : 1;
}

// Images of monomial generators, with cached powers of the endomorphism
// images (the expensive part of building many generators per slice).
class GeneratorImages {
public:
    explicit GeneratorImages(const MapVariant& map) : map_(map) {
        const RingPtr ring = map_ring(map);
        if (std::holds_alternative<EDerivation>(map)) {
            const auto& imgs = std::get<EDerivation>(map).phi.images;
            pows_.resize(imgs.size());
            for (std::size_t i = 0; i < imgs.size(); ++i)
                pows_[i].push_back(Polynomial::constant(ring, Scalar::one(ring->field)));
        }
    }

    Polynomial operator()(const Monomial& m) {
        const RingPtr ring = map_ring(map_);
        const Polynomial gen = Polynomial::monomial(ring, m, Scalar::one(ring->field));
        if (std::holds_alternative<Derivation>(map_)) {
            const auto& d = std::get<Derivation>(map_);
            Polynomial out = Polynomial::zero(ring);
            for (std::size_t i = 0; i < m.nvars(); ++i) {
                if (m.exps[i] == 0 || d.coeffs[i].is_zero()) continue;
                Monomial down = m;
                down.exps[i] -= 1;
                out = out + (d.coeffs[i] *
                             Polynomial::monomial(
                                 ring, down,
                                 Scalar::rational(ring->field,
                                                  static_cast<long>(m.exps[i]))));
            }
            return out;
        }
        const auto& phi = std::get<EDerivation>(map_).phi;
        Polynomial image = Polynomial::constant(ring, Scalar::one(ring->field));
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m.exps[i] == 0) continue;
            image = image * power_of(i, m.exps[i]);
        }
        return gen - image;
    }

private:
    const Polynomial& power_of(std::size_t var, std::uint32_t k) {
        auto& cache = pows_[var];
        const auto& base = std::get<EDerivation>(map_).phi.images[var];
        while (cache.size() <= k) cache.push_back(cache.back() * base);
        return cache[k];
    }

    const MapVariant& map_;
    std::vector<std::vector<Polynomial>> pows_;
};

// Canonical (fully reduced) form is produced lazily by the row accessors;
// membership reductions work on the plain echelon form directly.
EchelonBasis slice_basis(const MapVariant& map, const RingPtr& ring, std::uint32_t e) {
    EchelonBasis basis(ring, monomials_of_degree(ring->nvars, e));
    GeneratorImages images(map);
    for (const auto& m : monomials_of_degree(ring->nvars, e)) {
        const Polynomial gen = Polynomial::monomial(ring, m, Scalar::one(ring->field));
        basis.insert(images(m), gen);
    }
    return basis;
}

}  // namespace

void ImageBasis::build(const std::vector<std::uint32_t>& degrees) {
    const RingPtr ring = map_ring(map_);
    per_degree_.resize(degree_bound_ + 1);
    const unsigned threads = thread_count();
    if (threads <= 1) {
        for (const std::uint32_t e : degrees)
            per_degree_[e].emplace(slice_basis(map_, ring, e));
    } else {
        std::vector<std::future<EchelonBasis>> futures;
        for (const std::uint32_t e : degrees)
            futures.push_back(std::async(std::launch::async, slice_basis,
                                         std::cref(map_), std::cref(ring), e));
        for (std::size_t i = 0; i < degrees.size(); ++i)
            per_degree_[degrees[i]].emplace(futures[i].get());
    }
}

ImageBasis::ImageBasis(MapVariant map, std::uint32_t degree_bound,
                       std::optional<std::uint32_t> slack)
    : map_(std::move(map)), degree_bound_(degree_bound) {
    const RingPtr ring = map_ring(map_);
    degree_preserving_ = ederiv::is_degree_preserving(map_);
    slack_ = degree_preserving_ ? 0 : (slack ? *slack : default_slack(map_));

    if (degree_preserving_) {
        std::vector<std::uint32_t> degrees;
        for (std::uint32_t e = 0; e <= degree_bound_; ++e) degrees.push_back(e);
        build(degrees);
        return;
    }

    // Filtered: span the images of everything up to d + slack; outputs of
    // general maps can stick out further, so the coordinate universe covers
    // the maximal output degree actually seen.
    GeneratorImages images(map_);
    std::vector<std::pair<Polynomial, Polynomial>> gens;
    std::uint32_t max_out = degree_bound_ + slack_;
    for (const auto& m : monomials_up_to(ring->nvars, degree_bound_ + slack_, 1)) {
        const Polynomial gen = Polynomial::monomial(ring, m, Scalar::one(ring->field));
        Polynomial img = images(m);
        if (img.degree() > 0)
            max_out = std::max(max_out, static_cast<std::uint32_t>(img.degree()));
        gens.emplace_back(std::move(img), gen);
    }
    filtered_.emplace(ring, monomials_up_to_descending(ring->nvars, max_out));
    for (auto& [img, gen] : gens) filtered_->insert(img, gen);
}

ImageBasis::ImageBasis(MapVariant map, std::uint32_t degree_bound,
                       const std::vector<std::uint32_t>& degrees)
    : map_(std::move(map)), degree_bound_(degree_bound), slack_(0) {
    degree_preserving_ = ederiv::is_degree_preserving(map_);
    if (!degree_preserving_)
        throw InputError("explicit degree lists need a degree-preserving map");
    build(degrees);
}

const EchelonBasis& ImageBasis::slice(std::uint32_t e) const {
    if (e >= per_degree_.size() || !per_degree_[e])
        throw InputError("degree " + std::to_string(e) + " slice was not computed");
    return *per_degree_[e];
}

std::size_t ImageBasis::rank_at(std::uint32_t e) const {
    if (degree_preserving_) return slice(e).rank();
    std::size_t count = 0;
    for (const auto& row : filtered_->rows())
        if (row.pivot.degree() == e) ++count;
    return count;
}

std::vector<Polynomial> ImageBasis::rows_up_to_degree(std::uint32_t e) const {
    if (!degree_preserving_) return filtered_->rows_up_to_degree(e);
    std::vector<Polynomial> out;
    // Homogeneous slices have disjoint monomial supports, so their union is
    // itself a reduced echelon basis; collect in descending pivot order.
    for (std::uint32_t d = std::min<std::uint32_t>(e, degree_bound_) + 1; d-- > 0;) {
        if (d >= per_degree_.size() || !per_degree_[d]) continue;
        for (const auto& row : per_degree_[d]->rows()) out.push_back(row.vec);
    }
    return out;
}

const std::vector<Polynomial>& ImageBasis::kernel_at(std::uint32_t e) const {
    if (!degree_preserving_)
        throw InputError("kernel slices need a degree-preserving map");
    return slice(e).kernel_combinations();
}

EchelonBasis::Reduction ImageBasis::reduce(const Polynomial& q) const {
    const RingPtr ring = map_ring(map_);
    if (!degree_preserving_) return filtered_->reduce(q);
    EchelonBasis::Reduction total{Polynomial::zero(ring), Polynomial::zero(ring)};
    for (std::uint32_t e = 0; e <= degree_bound_; ++e) {
        const Polynomial part = q.homogeneous_component(e);
        if (part.is_zero()) continue;
        auto red = slice(e).reduce(part);
        total.residue = total.residue + red.residue;
        total.combo = total.combo + red.combo;
    }
    return total;
}

std::string MembershipVerdict::status_name() const {
    switch (status) {
        case Status::In: return "in";
        case Status::NotInCertified: return "not-in-certified";
        case Status::NotFoundWithinSlack: return "not-found-within-slack";
    }
    return "?";
}

MembershipVerdict member(const ImageBasis& basis, const Polynomial& q) {
    if (q.degree() > static_cast<std::int64_t>(basis.degree_bound()))
        throw InputError("query degree exceeds the basis degree bound");
    const RingPtr ring = basis.ring();
    if (q.is_zero())
        return {MembershipVerdict::Status::In, Polynomial::zero(ring),
                Polynomial::zero(ring)};
    auto red = basis.reduce(q);
    if (red.residue.is_zero())
        return {MembershipVerdict::Status::In, std::move(red.residue),
                std::move(red.combo)};
    const auto status = basis.degree_preserving()
                            ? MembershipVerdict::Status::NotInCertified
                            : MembershipVerdict::Status::NotFoundWithinSlack;
    return {status, std::move(red.residue), std::nullopt};
}

MembershipVerdict member(const MapVariant& map, const Polynomial& q,
                         std::uint32_t degree_bound,
                         std::optional<std::uint32_t> slack) {
    return member(ImageBasis(map, degree_bound, slack), q);
}

EchelonBasis ideal_truncation(const RingPtr& ring,
                              const std::vector<Polynomial>& generators,
                              std::uint32_t bound) {
    EchelonBasis basis(ring, monomials_up_to_descending(ring->nvars, bound));
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        const auto gdeg = static_cast<std::uint32_t>(g.degree());
        if (gdeg > bound) continue;
        for (std::uint32_t e = 0; e + gdeg <= bound; ++e) {
            for (const auto& m : monomials_of_degree(ring->nvars, e)) {
                const Polynomial mult =
                    Polynomial::monomial(ring, m, Scalar::one(ring->field)) * g;
                basis.insert(mult, Polynomial::zero(ring));
            }
        }
    }
    return basis;
}

namespace {

DegreeReport compare_rows_by_degree(const ImageBasis& image,
                                    const std::vector<Polynomial>& other_rows,
                                    std::uint32_t d, const std::string& other_name) {
    DegreeReport rep;
    for (std::uint32_t e = 0; e <= d; ++e) {
        std::vector<Polynomial> lhs = image.rows_up_to_degree(e);
        std::vector<Polynomial> rhs;
        for (const auto& r : other_rows)
            if (r.degree() >= 0 && static_cast<std::uint32_t>(r.degree()) <= e)
                rhs.push_back(r);
        if (lhs.size() != rhs.size()) {
            rep.pass = false;
            rep.first_failure = e;
            rep.detail = "degree " + std::to_string(e) + ": image rank " +
                         std::to_string(lhs.size()) + " vs " + other_name + " rank " +
                         std::to_string(rhs.size());
            return rep;
        }
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            if (!(lhs[i] == rhs[i])) {
                rep.pass = false;
                rep.first_failure = e;
                rep.detail = "degree " + std::to_string(e) +
                             ": basis vectors differ: " + lhs[i].str() + " vs " +
                             rhs[i].str();
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace

DegreeReport ideal_slice_test(const ImageBasis& basis,
                              const std::vector<Polynomial>& generators) {
    const RingPtr ring = basis.ring();
    const std::uint32_t bound = basis.degree_bound() + basis.slack();
    const EchelonBasis ideal = ideal_truncation(ring, generators, bound);
    std::vector<Polynomial> ideal_rows;
    for (const auto& row : ideal.rows()) ideal_rows.push_back(row.vec);
    return compare_rows_by_degree(basis, ideal_rows, basis.degree_bound(), "ideal");
}

DegreeReport compare_images(const ImageBasis& a, const ImageBasis& b) {
    if (a.degree_preserving() != b.degree_preserving())
        throw InputError("compare_images needs both maps degree-preserving or both filtered");
    if (!a.degree_preserving() && a.slack() != b.slack())
        throw InputError("compare_images needs identical slack on both sides");
    const std::uint32_t d = std::min(a.degree_bound(), b.degree_bound());
    return compare_rows_by_degree(a, b.rows_up_to_degree(d), d, "second image");
}

}  // namespace ederiv
