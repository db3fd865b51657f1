#include "nilschur/isomorphism.hpp"

#include <algorithm>

#include "nilschur/errors.hpp"
#include "nilschur/sympoly.hpp"

namespace nilschur {

// --- BasicAlgebraElement ----------------------------------------------------

std::string BasicAlgebraElement::to_string() const {
    if (coeffs.empty())
        return "0";
    std::vector<const std::pair<const Partition, Int>*> order;
    order.reserve(coeffs.size());
    for (const auto& t : coeffs)
        order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        if (a->first.size() != b->first.size())
            return a->first.size() < b->first.size();
        return b->first < a->first;
    });
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& [shape, c] = *order[i];
        const Int mag = c < 0 ? Int(-c) : c;
        std::string piece = (mag != 1 ? to_decimal(mag) + "*" : "") + "b" + shape.to_string();
        if (i == 0)
            out += (c < 0 ? "-" : "") + piece;
        else
            out += (c < 0 ? " - " : " + ") + piece;
    }
    return out;
}

// --- exact integer linear algebra -------------------------------------------

namespace {

using Matrix = std::vector<std::vector<Int>>;

Int exact_quotient(const Int& numerator, const Int& denominator, const char* where) {
    Int q, r;
    boost::multiprecision::divide_qr(numerator, denominator, q, r);
    if (r != 0)
        throw ConsistencyError(std::string(where) + ": fraction-free division left a remainder");
    return q;
}

/// Fraction-free determinant (Bareiss).  The matrix is consumed.
Int bareiss_det(Matrix m) {
    const std::size_t d = m.size();
    if (d == 0)
        return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        while (pivot < d && m[pivot][col] == 0)
            ++pivot;
        if (pivot == d)
            return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < d; ++i) {
            for (std::size_t j = col + 1; j < d; ++j)
                m[i][j] = exact_quotient(m[i][j] * m[col][col] - m[i][col] * m[col][j], prev,
                                         "bareiss_det");
            m[i][col] = 0;
        }
        prev = m[col][col];
    }
    return sign * m[d - 1][d - 1];
}

Matrix minor_of(const Matrix& m, std::size_t drop_row, std::size_t drop_col) {
    Matrix out;
    out.reserve(m.size() - 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == drop_row)
            continue;
        std::vector<Int> row;
        row.reserve(m.size() - 1);
        for (std::size_t j = 0; j < m.size(); ++j)
            if (j != drop_col)
                row.push_back(m[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

/// Adjugate by cofactors: adj[j][i] = (-1)^(i+j) det(minor(i, j)), so that
/// m * adj = det(m) * identity.
Matrix adjugate_of(const Matrix& m) {
    const std::size_t d = m.size();
    Matrix adj(d, std::vector<Int>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Int c = bareiss_det(minor_of(m, i, j));
            if ((i + j) % 2 == 1)
                c = -c;
            adj[j][i] = c;
        }
    return adj;
}

/// Indices of `want` linearly independent rows of a tall matrix, found by
/// fraction-free elimination.  Throws when the rank is smaller.
std::vector<std::size_t> independent_rows(Matrix m, std::size_t want, const char* where) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> labels(rows);
    for (std::size_t i = 0; i < rows; ++i)
        labels[i] = i;
    Int prev = 1;
    for (std::size_t col = 0; col < want; ++col) {
        std::size_t pivot = col;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            throw ConsistencyError(std::string(where) + ": columns are linearly dependent");
        std::swap(m[pivot], m[col]);
        std::swap(labels[pivot], labels[col]);
        for (std::size_t i = col + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < want; ++j)
                m[i][j] = exact_quotient(m[i][j] * m[col][col] - m[i][col] * m[col][j], prev,
                                         where);
            m[i][col] = 0;
        }
        prev = m[col][col];
    }
    labels.resize(want);
    return labels;
}

} // namespace

// --- BasicAlgebra -----------------------------------------------------------

BasicAlgebra::BasicAlgebra(int ell, int n) : ell_(ell), n_(n) {
    const NilHeckeAlgebra algebra = NilHeckeAlgebra::cyclotomic(ell, n);
    box_ = partitions_in_box(n, ell - n);
    elements_.reserve(box_.size());
    for (const auto& shape : box_)
        elements_.push_back(basic_element(algebra, shape));

    // Row space: every normal-form word appearing in some basic element.
    std::map<NilHeckeElement::TermKey, std::size_t> row_of;
    for (const auto& element : elements_)
        for (const auto& [key, c] : element.terms())
            row_of.try_emplace(key, row_of.size());

    const std::size_t d = box_.size();
    if (row_of.size() < d)
        throw ConsistencyError("basic elements span fewer words than their count");
    Matrix columns(row_of.size(), std::vector<Int>(d, 0));
    for (std::size_t j = 0; j < d; ++j)
        for (const auto& [key, c] : elements_[j].terms())
            columns[row_of.at(key)][j] = c;

    std::vector<const NilHeckeElement::TermKey*> keys(row_of.size(), nullptr);
    for (const auto& [key, index] : row_of)
        keys[index] = &key;

    const std::vector<std::size_t> pivots = independent_rows(columns, d, "basic algebra setup");
    Matrix square(d, std::vector<Int>(d));
    pivot_keys_.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
        pivot_keys_.push_back(*keys[pivots[i]]);
        square[i] = columns[pivots[i]];
    }
    det_ = bareiss_det(square);
    if (det_ == 0)
        throw ConsistencyError("basic algebra setup: pivot submatrix is singular");
    adjugate_ = adjugate_of(square);
}

const NilHeckeElement& BasicAlgebra::element(const Partition& shape) const {
    const auto it = std::lower_bound(box_.begin(), box_.end(), shape);
    if (it == box_.end() || *it != shape)
        throw InvalidInput("shape " + shape.to_string() + " is outside the " +
                           std::to_string(n_) + " x " + std::to_string(ell_ - n_) + " box");
    return elements_[static_cast<std::size_t>(it - box_.begin())];
}

NilHeckeElement BasicAlgebra::realize(const BasicAlgebraElement& coords) const {
    if (coords.ell != ell_ || coords.n != n_)
        throw InvalidInput("coordinates belong to different algebra parameters");
    NilHeckeElement out(NilHeckeAlgebra::cyclotomic(ell_, n_));
    for (const auto& [shape, c] : coords.coeffs)
        out = out + element(shape).scaled(c);
    return out;
}

BasicAlgebraElement BasicAlgebra::decompose(const NilHeckeElement& x) const {
    if (x.algebra() != NilHeckeAlgebra::cyclotomic(ell_, n_))
        throw InvalidInput("element belongs to a different algebra");
    const std::size_t d = box_.size();

    std::vector<Int> rhs(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        auto it = x.terms().find(pivot_keys_[i]);
        if (it != x.terms().end())
            rhs[i] = it->second;
    }
    // adj * rhs = det * coordinates; reconstruct at that scale to certify
    // membership before any division happens.
    std::vector<Int> scaled_coords(d, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            scaled_coords[i] += adjugate_[i][j] * rhs[j];

    NilHeckeElement rebuilt(NilHeckeAlgebra::cyclotomic(ell_, n_));
    for (std::size_t i = 0; i < d; ++i)
        rebuilt = rebuilt + elements_[i].scaled(scaled_coords[i]);
    const NilHeckeElement residual = x.scaled(det_) - rebuilt;
    if (!residual.is_zero()) {
        const auto& [key, c] = *residual.terms().begin();
        throw NotInSpan("element is not in the span of the basic elements",
                        "residual (scaled by det " + to_decimal(det_) + ") has " +
                            std::to_string(residual.term_count()) +
                            " terms; first: " + to_decimal(c) + " * psi_" +
                            key.first.to_string() + " * y^" +
                            format_y_monomial(key.second));
    }

    BasicAlgebraElement out{ell_, n_, {}};
    for (std::size_t i = 0; i < d; ++i) {
        const Int c = exact_quotient(scaled_coords[i], det_,
                                     "decompose: non-integer coordinate, lattice broken");
        if (c != 0)
            out.coeffs.emplace(box_[i], c);
    }
    return out;
}

// --- eta and eta_hat --------------------------------------------------------

BasicAlgebraElement eta(const CohomologyClass& x) {
    const int n = x.ring().k();
    const int ell = x.ring().ell();
    BasicAlgebraElement out{ell, n, {}};
    for (const auto& [entries, c] : x.terms()) {
        const Partition shape = rho(tau(SchubertIndex(entries, x.ring().m())));
        auto [it, inserted] = out.coeffs.try_emplace(shape, c);
        if (!inserted)
            throw ConsistencyError("eta: two classes map to one shape");
    }
    return out;
}

BasicAlgebraElement eta_hat(const CohomologyClass& x) {
    const int n = x.ring().m();
    const int ell = x.ring().ell();
    BasicAlgebraElement out{ell, n, {}};
    for (const auto& [entries, c] : x.terms()) {
        const Partition shape = rho(tau_hat(SchubertIndex(entries, x.ring().m())));
        auto [it, inserted] = out.coeffs.try_emplace(shape, c);
        if (!inserted)
            throw ConsistencyError("eta_hat: two classes map to one shape");
    }
    return out;
}

// --- verification reports ---------------------------------------------------

namespace {

std::string element_summary(const NilHeckeElement& x) {
    if (x.is_zero())
        return "0";
    const auto& [key, c] = *x.terms().begin();
    return std::to_string(x.term_count()) + " terms, first " + to_decimal(c) + " * psi_" +
           key.first.to_string() + " * y^" + format_y_monomial(key.second);
}

} // namespace

VerificationReport check_borel_relations(int ell, int n) {
    VerificationReport report;
    report.title = "presentation relations at (ell=" + std::to_string(ell) +
                   ", n=" + std::to_string(n) + ")";
    const NilHeckeAlgebra algebra = NilHeckeAlgebra::cyclotomic(ell, n);
    const int dual = ell - n;

    auto col = [&](int i) { return basic_element_col(algebra, i); };
    auto row = [&](int s) { return basic_element_row(algebra, s); };
    auto sign = [](int s) { return s % 2 == 0 ? Int(1) : Int(-1); };
    auto record = [&](const std::string& name, const NilHeckeElement& value) {
        report.add(name, value.is_zero(),
                   value.is_zero() ? "" : "nonzero: " + element_summary(value));
    };

    if (dual >= n) {
        // One-column classes generate; mixed terms switch on past degree n.
        for (int m = 1; m <= n; ++m) {
            NilHeckeElement acc = col(m);
            for (int s = 1; s < m; ++s)
                acc = acc + (col(s) * row(m - s)).scaled(sign(m - s));
            acc = acc + row(m).scaled(sign(m));
            record("wide range, degree " + std::to_string(m), acc);
        }
        for (int m = n + 1; m <= dual; ++m) {
            NilHeckeElement acc = row(m).scaled(sign(m));
            for (int s = 1; s <= n; ++s)
                acc = acc + (col(s) * row(m - s)).scaled(sign(m - s));
            record("wide range, degree " + std::to_string(m), acc);
        }
        for (int m = dual + 1; m <= ell; ++m) {
            NilHeckeElement acc(algebra);
            for (int i = 1; i <= n; ++i) {
                const int j = m - i;
                if (1 <= j && j <= dual)
                    acc = acc + (col(i) * row(j)).scaled(sign(j));
            }
            record("wide range, degree " + std::to_string(m), acc);
        }
    } else {
        for (int m = 1; m <= dual; ++m) {
            NilHeckeElement acc = col(m);
            for (int s = 1; s < m; ++s)
                acc = acc + (col(s) * row(m - s)).scaled(sign(m - s));
            acc = acc + row(m).scaled(sign(m));
            record("tall range, degree " + std::to_string(m), acc);
        }
        for (int m = dual + 1; m <= n; ++m) {
            NilHeckeElement acc = col(m);
            for (int s = 1; s <= dual; ++s)
                acc = acc + (row(s) * col(m - s)).scaled(sign(s));
            record("tall range, degree " + std::to_string(m), acc);
        }
        for (int m = n + 1; m <= ell; ++m) {
            NilHeckeElement acc(algebra);
            for (int i = 1; i <= n; ++i) {
                const int j = m - i;
                if (1 <= j && j <= dual)
                    acc = acc + (row(j) * col(i)).scaled(sign(j));
            }
            record("tall range, degree " + std::to_string(m), acc);
        }
    }
    return report;
}

VerificationReport check_center(int ell, int n) {
    VerificationReport report;
    report.title = "center basis at (ell=" + std::to_string(ell) + ", n=" + std::to_string(n) + ")";
    const NilHeckeAlgebra algebra = NilHeckeAlgebra::cyclotomic(ell, n);

    std::vector<NilHeckeElement> images;
    std::vector<std::string> names;
    for (const auto& tuple : all_strict_tuples(ell, n)) {
        const Partition shape = rho(tuple);
        const IntPolynomial f = schur(shape, n);
        report.add("y-part of S" + shape.to_string() + " equals the Schur polynomial",
                   schur_element_poly(n, shape) == f);
        report.add("central: schur " + shape.to_string() + " of tuple " + tuple.to_string(),
                   is_central(f, ell, n));
        images.push_back(NilHeckeElement::from_polynomial(algebra, f));
        names.push_back(shape.to_string());
    }

    bool distinct = true;
    std::string clash;
    for (std::size_t i = 0; i < images.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < images.size() && distinct; ++j)
            if (images[i] == images[j]) {
                distinct = false;
                clash = names[i] + " and " + names[j] + " coincide";
            }
    report.add("pairwise distinct", distinct, clash);

    // Z-linear independence: exact rank of the coefficient matrix.
    std::map<NilHeckeElement::TermKey, std::size_t> row_of;
    for (const auto& image : images)
        for (const auto& [key, c] : image.terms())
            row_of.try_emplace(key, row_of.size());
    const std::size_t rows = std::max(row_of.size(), images.size());
    Matrix matrix(rows, std::vector<Int>(images.size(), 0));
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [key, c] : images[j].terms())
            matrix[row_of.at(key)][j] = c;
    bool independent = true;
    std::string witness;
    try {
        independent_rows(std::move(matrix), images.size(), "center rank");
    } catch (const ConsistencyError&) {
        independent = false;
        witness = "rank below " + std::to_string(images.size());
    }
    report.add("Z-linearly independent", independent, witness);
    return report;
}

VerificationReport check_duality(int ell, int n) {
    VerificationReport report;
    report.title = "duality at (ell=" + std::to_string(ell) + ", n=" + std::to_string(n) + ")";
    const GrassmannRing ring(n, ell - n);
    for (const auto& index : all_schubert_indices(n, ell - n)) {
        const CohomologyClass x = CohomologyClass::basis(ring, index);
        report.add("eta == eta_hat after zeta on " + index.to_string(),
                   eta(x) == eta_hat(zeta(x)));
        report.add("dual Giambelli reproduces zeta image of " + index.to_string(),
                   giambelli_dual(index) == zeta(x));
    }
    return report;
}

} // namespace nilschur
