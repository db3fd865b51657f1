#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilschur/bigint.hpp"
#include "nilschur/combinatorics.hpp"
#include "nilschur/sympoly.hpp"

namespace nilschur {

enum class Flavor {
    free_algebra, // defining relations only
    cyclotomic,   // additionally y_1^ell = 0
};

/// Degree of an element in the even grading deg(y) = 2, deg(psi) = -2.
struct GradedDegree {
    enum class Kind { zero, homogeneous, mixed };

    Kind kind = Kind::zero;
    int value = 0; // meaningful only when homogeneous

    bool operator==(const GradedDegree&) const = default;

    static GradedDegree zero() { return {Kind::zero, 0}; }
    static GradedDegree homogeneous(int d) { return {Kind::homogeneous, d}; }
    static GradedDegree mixed() { return {Kind::mixed, 0}; }

    std::string to_string() const;
};

/// Parameters of a nilHecke algebra on strands 1..n: the free flavor, or the
/// cyclotomic quotient by y_1^ell (which requires 1 <= n <= ell).
struct NilHeckeAlgebra {
    Flavor flavor = Flavor::free_algebra;
    int n = 1;
    int ell = 0; // 0 exactly in the free flavor

    static NilHeckeAlgebra free_algebra(int n);
    static NilHeckeAlgebra cyclotomic(int ell, int n);

    bool is_cyclotomic() const { return flavor == Flavor::cyclotomic; }
    /// Largest exponent of y_i allowed in the cyclotomic normal form.
    int exponent_cap(int i) const { return ell - i; }

    bool operator==(const NilHeckeAlgebra&) const = default;
    std::string to_string() const;
};

/// Element of a nilHecke algebra in the normal form
///     sum of coeff * psi_w * y^c
/// over permutations w and exponent vectors c.  In the cyclotomic flavor the
/// exponents always satisfy c_i <= ell - i; arithmetic maintains this.
class NilHeckeElement {
public:
    using TermKey = std::pair<Permutation, std::vector<int>>;
    using TermMap = std::map<TermKey, Int>;

    explicit NilHeckeElement(NilHeckeAlgebra algebra);

    static NilHeckeElement unit(NilHeckeAlgebra algebra);
    static NilHeckeElement gen_psi(NilHeckeAlgebra algebra, int r);
    static NilHeckeElement gen_y(NilHeckeAlgebra algebra, int k);
    /// The basis word psi_w y^exps (reduced if cyclotomic).
    static NilHeckeElement basis_word(NilHeckeAlgebra algebra, const Permutation& w,
                                      std::vector<int> exps);
    static NilHeckeElement from_polynomial(NilHeckeAlgebra algebra, const IntPolynomial& f);

    const NilHeckeAlgebra& algebra() const { return algebra_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    NilHeckeElement operator+(const NilHeckeElement& other) const;
    NilHeckeElement operator-(const NilHeckeElement& other) const;
    NilHeckeElement operator-() const;
    NilHeckeElement operator*(const NilHeckeElement& other) const;
    NilHeckeElement scaled(const Int& factor) const;
    bool operator==(const NilHeckeElement& other) const = default;

    /// Anti-involution fixing every generator and reversing products.
    NilHeckeElement star() const;

    /// The coefficient of the empty psi word, i.e. the unique polynomial f
    /// with  x - f  in the span of terms carrying a leading psi.  Free flavor
    /// only.
    IntPolynomial poly_part() const;
    /// Same after star: the polynomial left when trailing-psi terms of the
    /// mirrored normal form are dropped.
    IntPolynomial poly_part_star() const;

    GradedDegree degree() const;

private:
    friend NilHeckeElement to_cyclotomic(const NilHeckeElement&, int);
    friend NilHeckeElement cyclotomic_reduce(const NilHeckeElement&);
    friend NilHeckeElement schur_element(int, const Partition&);
    friend NilHeckeElement basic_element(NilHeckeAlgebra, const Partition&);

    NilHeckeAlgebra algebra_;
    TermMap terms_;
};

/// Projects a free element into the cyclotomic quotient at the given ell.
NilHeckeElement to_cyclotomic(const NilHeckeElement& x, int ell);

/// Rewrites a cyclotomic element into the capped normal form.  Elements are
/// kept reduced at all times, so this is the identity on anything obtained
/// through the public API; it certifies idempotence of the rewriting.
NilHeckeElement cyclotomic_reduce(const NilHeckeElement& x);

/// Canonical display order for terms: longer psi word first, then one-line
/// notation ascending, then exponent vectors in descending graded-lex order.
bool canonical_term_before(const NilHeckeElement::TermKey& a, const NilHeckeElement::TermKey& b);

// --- distinguished elements -------------------------------------------------

/// The free-flavor element
///   (-1)^(n(n-1)/2) * y1^(l1+n-1) y2^(l2+n-2) ... yn^(ln) * psi_{w0}
/// whose poly_part is the Schur polynomial of the shape.  Zero when the shape
/// has more than n rows.
NilHeckeElement schur_element(int n, const Partition& shape);
/// Single-row shape (s); zero when s < 0.
NilHeckeElement schur_element_row(int n, int s);
/// Single-column shape (1^k); zero when k < 0 or k > n.
NilHeckeElement schur_element_col(int n, int k);

/// poly_part of schur_element; always symmetric.
IntPolynomial schur_element_poly(int n, const Partition& shape);

/// The element  psi_{w0} y^(shape+staircase) psi_{w0} y^staircase  of the
/// given algebra (staircase = (n-1, n-2, ..., 0)).  In the cyclotomic flavor
/// these span the commutative subalgebra whose basis-to-basis products give
/// the Schubert structure constants.  Zero when the shape has more than n
/// rows.
NilHeckeElement basic_element(NilHeckeAlgebra algebra, const Partition& shape);
/// Single-row shape (s); zero when s < 0.
NilHeckeElement basic_element_row(NilHeckeAlgebra algebra, int s);
/// Single-column shape (1^k); zero when k < 0 or k > n.
NilHeckeElement basic_element_col(NilHeckeAlgebra algebra, int k);

/// True when the image of the polynomial commutes with every generator of the
/// cyclotomic algebra.  Commutation with the y generators is automatic, so
/// only the psi generators are checked.
bool is_central(const IntPolynomial& f, int ell, int n);

/// All cyclotomic basis words (w, c) with c_i <= ell - i: permutations in
/// (length, one-line) order, exponent vectors ascending lexicographic.
std::vector<NilHeckeElement::TermKey> enumerate_basis(int ell, int n);

} // namespace nilschur
