#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilschur/bigint.hpp"
#include "nilschur/combinatorics.hpp"

namespace nilschur {

/// Multivariate polynomial over the integers in variables y1..y{nvars},
/// stored sparsely by exponent vector.  Zero coefficients are never kept.
class IntPolynomial {
public:
    using TermMap = std::map<std::vector<int>, Int>;

    explicit IntPolynomial(int nvars = 0);

    static IntPolynomial constant(int nvars, Int value);
    static IntPolynomial variable(int nvars, int index); // y_index, 1-based
    static IntPolynomial monomial(int nvars, std::vector<int> exps, Int coeff);
    static IntPolynomial one(int nvars) { return constant(nvars, 1); }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    Int coeff(const std::vector<int>& exps) const;
    void add_term(const std::vector<int>& exps, const Int& coeff);

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    IntPolynomial scaled(const Int& factor) const;
    bool operator==(const IntPolynomial& other) const = default;

    /// Largest total degree over the terms; -1 for the zero polynomial.
    int total_degree() const;
    /// True when every term has the same total degree (vacuously for zero);
    /// on success stores that degree (0 for the zero polynomial).
    bool is_homogeneous(int* degree = nullptr) const;
    /// Invariant under every adjacent variable swap.
    bool is_symmetric() const;

    /// Canonical text: terms in descending graded-lexicographic order,
    /// e.g. "y1^2 + y1*y2 + y2^2"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    int nvars_ = 0;
    TermMap terms_;
};

/// Formats one exponent vector as "y1^2*y3"; "1" for the constant monomial.
std::string format_y_monomial(const std::vector<int>& exps);

/// Descending graded-lexicographic order on exponent vectors: higher total
/// degree first, then lexicographically larger first.
bool graded_lex_before(const std::vector<int>& a, const std::vector<int>& b);

// --- classical bases --------------------------------------------------------

/// Elementary symmetric polynomial e_k(y1..yn); zero outside 0 <= k <= n.
IntPolynomial elementary(int k, int n);

/// Complete homogeneous symmetric polynomial h_s(y1..yn); zero for s < 0.
IntPolynomial complete(int s, int n);

enum class SchurMethod {
    jacobi_trudi_h, // determinant in complete homogeneous polynomials
    jacobi_trudi_e, // determinant in elementary polynomials (conjugate shape)
    bialternant,    // alternant quotient with exact-division certificate
};

/// Schur polynomial s_shape(y1..yn); zero when the shape has more than n rows.
IntPolynomial schur(const Partition& shape, int n,
                    SchurMethod method = SchurMethod::jacobi_trudi_h);

// --- operators --------------------------------------------------------------

/// Divided difference (f - swapped f) / (y_{r+1} - y_r), i.e.
/// (s_r f - f) / (y_r - y_{r+1}); implemented by synthetic division with a
/// mandatory zero-remainder certificate.
IntPolynomial divided_difference(int r, const IntPolynomial& f);

/// Variable substitution y_i -> y_{w(i)}.
IntPolynomial act_perm(const Permutation& w, const IntPolynomial& f);

// --- Schur expansion --------------------------------------------------------

/// A finite integer combination of Schur polynomials in a fixed variable count.
struct SchurExpansion {
    int nvars = 0;
    std::map<Partition, Int> coeffs;

    bool operator==(const SchurExpansion& other) const = default;
};

/// Expands a symmetric polynomial over the Schur basis by repeated leading
/// term extraction.  Throws InvalidInput when f is not symmetric.
SchurExpansion expand_in_schur(const IntPolynomial& f);

/// Rebuilds the polynomial of an expansion (for round-trip checks).
IntPolynomial schur_combination(const SchurExpansion& expansion);

/// The alternating convolution sum_{s=0..min(n,m)} (-1)^s e_s h_{m-s} in n
/// variables.  Identically zero for every m >= 1; returned unevaluated so
/// tests can assert the cancellation.
IntPolynomial eh_alternating_residual(int m, int n);

} // namespace nilschur
