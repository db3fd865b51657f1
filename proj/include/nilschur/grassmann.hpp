#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilschur/bigint.hpp"
#include "nilschur/combinatorics.hpp"
#include "nilschur/nilhecke.hpp"

namespace nilschur {

/// The integral cohomology ring H*(G_{k,m}) with its Schubert basis of weakly
/// increasing k-tuples capped by m.  k = 0 or m = 0 gives a rank-one ring.
class GrassmannRing {
public:
    GrassmannRing(int k, int m);

    int k() const { return k_; }
    int m() const { return m_; }
    int ell() const { return k_ + m_; }
    /// The ring with the box transposed; zeta lands there.
    GrassmannRing dual() const { return {m_, k_}; }

    bool operator==(const GrassmannRing&) const = default;
    std::string to_string() const;

private:
    int k_ = 0;
    int m_ = 0;
};

/// Integer combination of Schubert basis classes of one ring.
class CohomologyClass {
public:
    using TermMap = std::map<std::vector<int>, Int>;

    explicit CohomologyClass(GrassmannRing ring);

    static CohomologyClass unit(GrassmannRing ring); // class of (0,...,0)
    static CohomologyClass basis(GrassmannRing ring, const SchubertIndex& index);
    static CohomologyClass basis(GrassmannRing ring, std::vector<int> entries);

    const GrassmannRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    Int coeff(const std::vector<int>& entries) const;
    void add_term(const std::vector<int>& entries, const Int& coeff);

    CohomologyClass operator+(const CohomologyClass& other) const;
    CohomologyClass operator-(const CohomologyClass& other) const;
    CohomologyClass operator-() const;
    /// Product through the Giambelli expansion of the right factor followed
    /// by iterated Pieri multiplications.
    CohomologyClass operator*(const CohomologyClass& other) const;
    CohomologyClass scaled(const Int& factor) const;
    bool operator==(const CohomologyClass& other) const = default;

    /// Degree in the grading where a basis class sits in twice its entry sum.
    GradedDegree degree() const;

private:
    GrassmannRing ring_;
    TermMap terms_;
};

// --- special classes --------------------------------------------------------

/// Basis class (0,...,0,1,...,1) with i trailing ones (a one-column shape);
/// zero outside 0 <= i <= k.
CohomologyClass special_col(GrassmannRing ring, int i);

/// Basis class (0,...,0,j) (a one-row shape); zero outside 0 <= j <= m.
CohomologyClass special_row(GrassmannRing ring, int j);

/// (-1)^j times special_row(j): the inverse-series counterpart of special_col.
CohomologyClass special_row_signed(GrassmannRing ring, int j);

// --- products ---------------------------------------------------------------

/// Multiplies by special_row(j): each basis class (a) maps to the sum of all
/// (b) interlacing it, a_i <= b_i <= a_{i+1} with a_{k+1} = m, whose entry
/// sum grows by j.  Zero for j > m; identity for j = 0.
CohomologyClass pieri_mul(const CohomologyClass& x, int j);

/// Expansion of the Giambelli determinant det(special_row(a_i + i - j)) as
/// signed multisets of row indices; entries outside [0, m] kill a summand and
/// index 0 factors are skipped.  Folding each multiset through pieri_mul
/// reconstitutes the basis class.
std::vector<std::pair<Int, std::vector<int>>> giambelli_rows(const SchubertIndex& index);

/// Independent product: classes are converted to Schur polynomials in k
/// variables, multiplied there, and expanded back, discarding shapes wider
/// than m.
CohomologyClass oracle_mul(const CohomologyClass& x, const CohomologyClass& y);

/// The degree-s coefficients (s = 1..k+m) of the product of the special-class
/// series  (sum_i special_col(i) t^i) * (sum_j special_row_signed(j) t^j).
/// Each must vanish; returned unevaluated so tests can assert it.
std::vector<CohomologyClass> borel_residuals(GrassmannRing ring);

// --- duality ----------------------------------------------------------------

/// The basis-to-basis isomorphism onto the dual ring: a Schubert label is
/// sent through tau and back through tau_hat_inv.
CohomologyClass zeta(const CohomologyClass& x);

/// The k x k determinant det(special_col(a_i + i - j)) evaluated in the dual
/// ring; equals the zeta image of the basis class of `index`.
CohomologyClass giambelli_dual(const SchubertIndex& index);

} // namespace nilschur
