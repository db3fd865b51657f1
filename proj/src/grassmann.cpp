#include "nilschur/grassmann.hpp"

#include <algorithm>
#include <numeric>

#include "nilschur/errors.hpp"
#include "nilschur/sympoly.hpp"

namespace nilschur {

// --- GrassmannRing ----------------------------------------------------------

GrassmannRing::GrassmannRing(int k, int m) : k_(k), m_(m) {
    if (k < 0 || m < 0)
        throw InvalidInput("Grassmannian ring parameters must be nonnegative");
}

std::string GrassmannRing::to_string() const {
    return "H*(G_{" + std::to_string(k_) + "," + std::to_string(m_) + "})";
}

// --- CohomologyClass --------------------------------------------------------

CohomologyClass::CohomologyClass(GrassmannRing ring) : ring_(ring) {}

CohomologyClass CohomologyClass::unit(GrassmannRing ring) {
    CohomologyClass x(ring);
    x.add_term(std::vector<int>(static_cast<std::size_t>(ring.k()), 0), 1);
    return x;
}

CohomologyClass CohomologyClass::basis(GrassmannRing ring, const SchubertIndex& index) {
    if (index.k() != ring.k() || index.cap() != ring.m())
        throw InvalidInput("Schubert index does not belong to " + ring.to_string());
    CohomologyClass x(ring);
    x.add_term(index.entries(), 1);
    return x;
}

CohomologyClass CohomologyClass::basis(GrassmannRing ring, std::vector<int> entries) {
    return basis(ring, SchubertIndex(std::move(entries), ring.m()));
}

Int CohomologyClass::coeff(const std::vector<int>& entries) const {
    auto it = terms_.find(entries);
    return it == terms_.end() ? Int(0) : it->second;
}

void CohomologyClass::add_term(const std::vector<int>& entries, const Int& coeff) {
    // Validate through the index type so malformed labels cannot be stored.
    SchubertIndex index(entries, ring_.m());
    if (index.k() != ring_.k())
        throw InvalidInput("Schubert index length does not match the ring");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(entries, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

CohomologyClass CohomologyClass::operator+(const CohomologyClass& other) const {
    if (ring_ != other.ring_)
        throw InvalidInput("cannot add classes of different rings");
    CohomologyClass out = *this;
    for (const auto& [entries, c] : other.terms_)
        out.add_term(entries, c);
    return out;
}

CohomologyClass CohomologyClass::operator-(const CohomologyClass& other) const {
    if (ring_ != other.ring_)
        throw InvalidInput("cannot subtract classes of different rings");
    CohomologyClass out = *this;
    for (const auto& [entries, c] : other.terms_)
        out.add_term(entries, -c);
    return out;
}

CohomologyClass CohomologyClass::operator-() const {
    CohomologyClass out(ring_);
    for (const auto& [entries, c] : terms_)
        out.terms_.emplace(entries, -c);
    return out;
}

CohomologyClass CohomologyClass::scaled(const Int& factor) const {
    CohomologyClass out(ring_);
    if (factor == 0)
        return out;
    for (const auto& [entries, c] : terms_)
        out.terms_.emplace(entries, c * factor);
    return out;
}

CohomologyClass CohomologyClass::operator*(const CohomologyClass& other) const {
    if (ring_ != other.ring_)
        throw InvalidInput("cannot multiply classes of different rings");
    CohomologyClass out(ring_);
    for (const auto& [entries, c] : other.terms_) {
        for (const auto& [sign, rows] : giambelli_rows(SchubertIndex(entries, ring_.m()))) {
            CohomologyClass partial = *this;
            for (int j : rows)
                partial = pieri_mul(partial, j);
            out = out + partial.scaled(sign * c);
        }
    }
    return out;
}

GradedDegree CohomologyClass::degree() const {
    if (terms_.empty())
        return GradedDegree::zero();
    bool first = true;
    int common = 0;
    for (const auto& [entries, c] : terms_) {
        const int d = 2 * std::accumulate(entries.begin(), entries.end(), 0);
        if (first) {
            common = d;
            first = false;
        } else if (d != common) {
            return GradedDegree::mixed();
        }
    }
    return GradedDegree::homogeneous(common);
}

// --- special classes --------------------------------------------------------

CohomologyClass special_col(GrassmannRing ring, int i) {
    CohomologyClass out(ring);
    if (i < 0 || i > ring.k())
        return out;
    std::vector<int> entries(static_cast<std::size_t>(ring.k()), 0);
    for (int t = 0; t < i; ++t)
        entries[static_cast<std::size_t>(ring.k() - 1 - t)] = 1;
    if (i > 0 && ring.m() == 0)
        return out; // no room for a box
    out.add_term(entries, 1);
    return out;
}

CohomologyClass special_row(GrassmannRing ring, int j) {
    CohomologyClass out(ring);
    if (j < 0 || j > ring.m())
        return out;
    if (j > 0 && ring.k() == 0)
        return out;
    std::vector<int> entries(static_cast<std::size_t>(ring.k()), 0);
    if (j > 0)
        entries.back() = j;
    out.add_term(entries, 1);
    return out;
}

CohomologyClass special_row_signed(GrassmannRing ring, int j) {
    const CohomologyClass row = special_row(ring, j);
    return j % 2 == 0 ? row : -row;
}

// --- products ---------------------------------------------------------------

namespace {

void pieri_rec(const std::vector<int>& a, int m, int position, int remaining,
               std::vector<int>& prefix, const Int& coeff, CohomologyClass& out) {
    const int k = static_cast<int>(a.size());
    if (position > k) {
        if (remaining == 0)
            out.add_term(prefix, coeff);
        return;
    }
    const int lo = a[static_cast<std::size_t>(position - 1)];
    const int hi = position == k ? m : a[static_cast<std::size_t>(position)];
    for (int v = lo; v <= std::min(hi, lo + remaining); ++v) {
        prefix.push_back(v);
        pieri_rec(a, m, position + 1, remaining - (v - lo), prefix, coeff, out);
        prefix.pop_back();
    }
}

} // namespace

CohomologyClass pieri_mul(const CohomologyClass& x, int j) {
    const GrassmannRing ring = x.ring();
    CohomologyClass out(ring);
    if (j < 0)
        throw InvalidInput("pieri_mul: negative row index");
    if (j > ring.m())
        return out; // multiplying by the zero class
    for (const auto& [entries, c] : x.terms()) {
        std::vector<int> prefix;
        pieri_rec(entries, ring.m(), 1, j, prefix, c, out);
    }
    return out;
}

std::vector<std::pair<Int, std::vector<int>>> giambelli_rows(const SchubertIndex& index) {
    const int k = index.k();
    const int m = index.cap();
    std::vector<std::pair<Int, std::vector<int>>> out;
    for (const auto& sigma : all_permutations(k)) {
        std::vector<int> rows;
        bool dead = false;
        for (int i = 1; i <= k; ++i) {
            const int t = index.entry(i) + i - sigma.image(i);
            if (t < 0 || t > m) {
                dead = true;
                break;
            }
            if (t > 0)
                rows.push_back(t);
        }
        if (dead)
            continue;
        std::sort(rows.begin(), rows.end());
        out.emplace_back(sigma.length() % 2 == 0 ? Int(1) : Int(-1), std::move(rows));
    }
    return out;
}

CohomologyClass oracle_mul(const CohomologyClass& x, const CohomologyClass& y) {
    if (x.ring() != y.ring())
        throw InvalidInput("cannot multiply classes of different rings");
    const GrassmannRing ring = x.ring();
    const int k = ring.k();

    auto to_poly = [&](const CohomologyClass& z) {
        IntPolynomial p(k);
        for (const auto& [entries, c] : z.terms())
            p = p + schur(SchubertIndex(entries, ring.m()).to_partition(), k).scaled(c);
        return p;
    };

    const IntPolynomial product = to_poly(x) * to_poly(y);
    CohomologyClass out(ring);
    for (const auto& [shape, c] : expand_in_schur(product).coeffs) {
        if (shape.part(1) > ring.m())
            continue; // class of an overflowing shape vanishes
        out.add_term(SchubertIndex::from_partition(shape, k, ring.m()).entries(), c);
    }
    return out;
}

std::vector<CohomologyClass> borel_residuals(GrassmannRing ring) {
    std::vector<CohomologyClass> out;
    for (int s = 1; s <= ring.ell(); ++s) {
        CohomologyClass res(ring);
        for (int i = std::max(0, s - ring.m()); i <= std::min(ring.k(), s); ++i)
            res = res + special_col(ring, i) * special_row_signed(ring, s - i);
        out.push_back(std::move(res));
    }
    return out;
}

// --- duality ----------------------------------------------------------------

CohomologyClass zeta(const CohomologyClass& x) {
    const GrassmannRing target = x.ring().dual();
    CohomologyClass out(target);
    for (const auto& [entries, c] : x.terms()) {
        const SchubertIndex image =
            tau_hat_inv(tau(SchubertIndex(entries, x.ring().m())));
        out.add_term(image.entries(), c);
    }
    return out;
}

CohomologyClass giambelli_dual(const SchubertIndex& index) {
    const GrassmannRing target(index.cap(), index.k());
    const int k = index.k();
    CohomologyClass out(target);
    for (const auto& sigma : all_permutations(k)) {
        CohomologyClass prod = CohomologyClass::unit(target);
        bool dead = false;
        for (int i = 1; i <= k; ++i) {
            const CohomologyClass factor = special_col(target, index.entry(i) + i - sigma.image(i));
            if (factor.is_zero()) {
                dead = true;
                break;
            }
            prod = prod * factor;
        }
        if (dead)
            continue;
        out = sigma.length() % 2 == 0 ? out + prod : out - prod;
    }
    return out;
}

} // namespace nilschur
