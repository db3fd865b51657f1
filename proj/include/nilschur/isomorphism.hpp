#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilschur/bigint.hpp"
#include "nilschur/combinatorics.hpp"
#include "nilschur/grassmann.hpp"
#include "nilschur/nilhecke.hpp"
#include "nilschur/report.hpp"

namespace nilschur {

/// Integer combination of the box-indexed basic elements of the cyclotomic
/// algebra at parameters (ell, n); shapes live in the n x (ell-n) box.
struct BasicAlgebraElement {
    int ell = 0;
    int n = 0;
    std::map<Partition, Int> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const BasicAlgebraElement&) const = default;

    /// "b(2,1) - 3*b(1)"; shapes ordered by size then reverse-lexicographic.
    std::string to_string() const;
};

/// Precomputed data for the commutative subalgebra spanned by the basic
/// elements of one cyclotomic algebra: the elements themselves plus an exact
/// integer solver for coordinates in that basis.
class BasicAlgebra {
public:
    BasicAlgebra(int ell, int n);

    int ell() const { return ell_; }
    int n() const { return n_; }
    const std::vector<Partition>& box() const { return box_; }
    const NilHeckeElement& element(const Partition& shape) const;

    NilHeckeElement realize(const BasicAlgebraElement& coords) const;

    /// Exact coordinates of x over the basic elements.  Throws NotInSpan with
    /// a residual witness when x is outside their rational span, and
    /// ConsistencyError when x is in the rational span but the coordinates
    /// are not integers (the lattice structure would be broken).
    BasicAlgebraElement decompose(const NilHeckeElement& x) const;

private:
    int ell_;
    int n_;
    std::vector<Partition> box_;
    std::vector<NilHeckeElement> elements_;
    std::vector<NilHeckeElement::TermKey> pivot_keys_;
    std::vector<std::vector<Int>> adjugate_; // adjugate of the pivot submatrix
    Int det_;                                // its determinant (nonzero)
};

/// Basis-to-basis correspondence from H*(G_{n,ell-n}) into the basic algebra:
/// the class of a Schubert label a maps to the basic element of rho(tau(a)).
BasicAlgebraElement eta(const CohomologyClass& x);

/// The mirrored correspondence from H*(G_{ell-n,n}): a maps to the basic
/// element of rho(tau_hat(a)).
BasicAlgebraElement eta_hat(const CohomologyClass& x);

/// Verifies the quadratic relations among the one-row and one-column basic
/// elements that present the ring: the alternating convolutions
/// sum (-1)^j b_col(i) b_row(j) over i + j = m vanish for m = 1..ell, split
/// into the three index ranges the presentation distinguishes.
VerificationReport check_borel_relations(int ell, int n);

/// Verifies that the Schur polynomials of the box shapes give central,
/// pairwise distinct, Z-linearly independent elements of the cyclotomic
/// algebra.
VerificationReport check_center(int ell, int n);

/// Verifies that eta equals eta_hat after zeta on every basis class, and that
/// the dual-ring Giambelli determinant reproduces each zeta image.
VerificationReport check_duality(int ell, int n);

} // namespace nilschur
