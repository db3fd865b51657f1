#include "nilschur/nilhecke.hpp"

#include <algorithm>
#include <numeric>

#include "nilschur/errors.hpp"

namespace nilschur {

// --- GradedDegree / NilHeckeAlgebra -----------------------------------------

std::string GradedDegree::to_string() const {
    switch (kind) {
    case Kind::zero:
        return "zero";
    case Kind::homogeneous:
        return "degree " + std::to_string(value);
    case Kind::mixed:
        return "inhomogeneous";
    }
    return "?";
}

NilHeckeAlgebra NilHeckeAlgebra::free_algebra(int n) {
    if (n < 1)
        throw InvalidInput("nilHecke algebra needs at least one strand");
    return {Flavor::free_algebra, n, 0};
}

NilHeckeAlgebra NilHeckeAlgebra::cyclotomic(int ell, int n) {
    if (n < 1)
        throw InvalidInput("nilHecke algebra needs at least one strand");
    if (ell < n)
        throw InvalidInput("cyclotomic level must satisfy 1 <= n <= ell");
    return {Flavor::cyclotomic, n, ell};
}

std::string NilHeckeAlgebra::to_string() const {
    if (is_cyclotomic())
        return "cyclotomic nilHecke algebra (ell=" + std::to_string(ell) +
               ", n=" + std::to_string(n) + ")";
    return "free nilHecke algebra (n=" + std::to_string(n) + ")";
}

// --- term-level helpers ------------------------------------------------------

namespace {

using TermKey = NilHeckeElement::TermKey;
using TermMap = NilHeckeElement::TermMap;

void accumulate(TermMap& terms, TermKey key, const Int& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms.erase(it);
    }
}

/// Right-multiplies every term by psi_r using
///   (psi_w y^c) psi_r = psi_{w s_r} y^(swapped c) + psi_w * dd_r(y^c),
/// where psi_w psi_r survives exactly when the length grows and dd_r is the
/// divided difference acting on the polynomial part.
TermMap rmul_psi(const TermMap& terms, int r) {
    TermMap out;
    for (const auto& [key, coeff] : terms) {
        const auto& [w, c] = key;
        const std::size_t ri = static_cast<std::size_t>(r - 1);

        std::vector<int> line = w.one_line();
        std::swap(line[ri], line[ri + 1]);
        Permutation ws((std::move(line)));
        if (ws.length() == w.length() + 1) {
            std::vector<int> swapped = c;
            std::swap(swapped[ri], swapped[ri + 1]);
            accumulate(out, {std::move(ws), std::move(swapped)}, coeff);
        }

        // Divided difference of the monomial: a geometric sum between the two
        // touched exponents, with sign from their order.
        const int a = c[ri];
        const int b = c[ri + 1];
        if (a != b) {
            std::vector<int> e = c;
            const int lo = std::min(a, b);
            const int hi = std::max(a, b);
            const Int sign = b > a ? 1 : -1;
            for (int t = 0; t < hi - lo; ++t) {
                e[ri] = lo + t;
                e[ri + 1] = hi - 1 - t;
                accumulate(out, {w, e}, coeff * sign);
            }
        }
    }
    return out;
}

TermMap rmul_monomial(const TermMap& terms, const std::vector<int>& exps) {
    TermMap out;
    for (const auto& [key, coeff] : terms) {
        std::vector<int> e = key.second;
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] += exps[i];
        accumulate(out, {key.first, std::move(e)}, coeff);
    }
    return out;
}

void compositions_rec(int total, int parts, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        prefix.push_back(v);
        compositions_rec(total - v, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

/// All weak compositions of `total` into `parts` parts.
std::vector<std::vector<int>> weak_compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    compositions_rec(total, parts, prefix, out);
    return out;
}

/// Rewrites terms into the capped normal form c_i <= ell - i.  One step picks
/// a term with an offending exponent at its largest index i and substitutes
///   y_i^(ell-i+1) = - sum of the other degree-(ell-i+1) monomials in
///                     y_1..y_i of the vanishing power sum,
/// which is valid in the quotient.  Every step replaces the reversed exponent
/// vector (c_n,...,c_1) by strictly lexicographically smaller ones, and that
/// order is well founded, so the loop terminates.
void reduce_in_place(TermMap& terms, int ell, int n) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            const auto& exps = it->first.second;
            int offender = 0;
            for (int i = n; i >= 1; --i) {
                if (exps[static_cast<std::size_t>(i - 1)] > ell - i) {
                    offender = i;
                    break;
                }
            }
            if (offender == 0)
                continue;

            const Permutation w = it->first.first;
            std::vector<int> rest = exps;
            const Int coeff = it->second;
            terms.erase(it);
            const int degree = ell - offender + 1;
            rest[static_cast<std::size_t>(offender - 1)] -= degree;
            for (const auto& comp : weak_compositions(degree, offender)) {
                if (comp.back() == degree)
                    continue; // that is the monomial being rewritten
                std::vector<int> e = rest;
                for (int j = 0; j < offender; ++j)
                    e[static_cast<std::size_t>(j)] += comp[static_cast<std::size_t>(j)];
                accumulate(terms, {w, std::move(e)}, -coeff);
            }
            changed = true;
            break; // the map changed; restart the scan
        }
    }
}

void reduce_if_cyclotomic(TermMap& terms, const NilHeckeAlgebra& algebra) {
    if (algebra.is_cyclotomic())
        reduce_in_place(terms, algebra.ell, algebra.n);
}

std::vector<int> staircase_exponents(int n) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        exps[static_cast<std::size_t>(i)] = n - 1 - i;
    return exps;
}

} // namespace

// --- NilHeckeElement ---------------------------------------------------------

NilHeckeElement::NilHeckeElement(NilHeckeAlgebra algebra) : algebra_(algebra) {}

NilHeckeElement NilHeckeElement::unit(NilHeckeAlgebra algebra) {
    NilHeckeElement x(algebra);
    x.terms_.emplace(TermKey{Permutation::identity(algebra.n),
                             std::vector<int>(static_cast<std::size_t>(algebra.n), 0)},
                     1);
    return x;
}

NilHeckeElement NilHeckeElement::gen_psi(NilHeckeAlgebra algebra, int r) {
    if (r < 1 || r >= algebra.n)
        throw InvalidInput("psi index out of range 1..n-1");
    NilHeckeElement x(algebra);
    x.terms_.emplace(TermKey{Permutation::adjacent_transposition(algebra.n, r),
                             std::vector<int>(static_cast<std::size_t>(algebra.n), 0)},
                     1);
    return x;
}

NilHeckeElement NilHeckeElement::gen_y(NilHeckeAlgebra algebra, int k) {
    if (k < 1 || k > algebra.n)
        throw InvalidInput("y index out of range 1..n");
    NilHeckeElement x(algebra);
    std::vector<int> exps(static_cast<std::size_t>(algebra.n), 0);
    exps[static_cast<std::size_t>(k - 1)] = 1;
    x.terms_.emplace(TermKey{Permutation::identity(algebra.n), std::move(exps)}, 1);
    reduce_if_cyclotomic(x.terms_, x.algebra_);
    return x;
}

NilHeckeElement NilHeckeElement::basis_word(NilHeckeAlgebra algebra, const Permutation& w,
                                            std::vector<int> exps) {
    if (w.n() != algebra.n || static_cast<int>(exps.size()) != algebra.n)
        throw InvalidInput("basis word size does not match the algebra");
    for (int e : exps)
        if (e < 0)
            throw InvalidInput("basis word exponents must be nonnegative");
    NilHeckeElement x(algebra);
    x.terms_.emplace(TermKey{w, std::move(exps)}, 1);
    reduce_if_cyclotomic(x.terms_, x.algebra_);
    return x;
}

NilHeckeElement NilHeckeElement::from_polynomial(NilHeckeAlgebra algebra,
                                                 const IntPolynomial& f) {
    if (f.nvars() != algebra.n)
        throw InvalidInput("polynomial variable count does not match the algebra");
    NilHeckeElement x(algebra);
    const Permutation id = Permutation::identity(algebra.n);
    for (const auto& [exps, c] : f.terms())
        x.terms_.emplace(TermKey{id, exps}, c);
    reduce_if_cyclotomic(x.terms_, x.algebra_);
    return x;
}

NilHeckeElement NilHeckeElement::operator+(const NilHeckeElement& other) const {
    if (algebra_ != other.algebra_)
        throw InvalidInput("cannot add elements of different algebras");
    NilHeckeElement out = *this;
    for (const auto& [key, c] : other.terms_)
        accumulate(out.terms_, key, c);
    return out;
}

NilHeckeElement NilHeckeElement::operator-(const NilHeckeElement& other) const {
    if (algebra_ != other.algebra_)
        throw InvalidInput("cannot subtract elements of different algebras");
    NilHeckeElement out = *this;
    for (const auto& [key, c] : other.terms_)
        accumulate(out.terms_, key, -c);
    return out;
}

NilHeckeElement NilHeckeElement::operator-() const {
    NilHeckeElement out(algebra_);
    for (const auto& [key, c] : terms_)
        out.terms_.emplace(key, -c);
    return out;
}

NilHeckeElement NilHeckeElement::operator*(const NilHeckeElement& other) const {
    if (algebra_ != other.algebra_)
        throw InvalidInput("cannot multiply elements of different algebras");
    // Multiply freely, letter by letter through each right-hand basis word,
    // then (in the cyclotomic flavor) reduce the result once.
    NilHeckeElement out(algebra_);
    for (const auto& [key, coeff] : other.terms_) {
        const auto& [v, d] = key;
        TermMap partial = terms_;
        for (int r : reduced_word(v))
            partial = rmul_psi(partial, r);
        partial = rmul_monomial(partial, d);
        for (auto& [k, c] : partial)
            accumulate(out.terms_, k, c * coeff);
    }
    reduce_if_cyclotomic(out.terms_, algebra_);
    return out;
}

NilHeckeElement NilHeckeElement::scaled(const Int& factor) const {
    NilHeckeElement out(algebra_);
    if (factor == 0)
        return out;
    for (const auto& [key, c] : terms_)
        out.terms_.emplace(key, c * factor);
    return out;
}

NilHeckeElement NilHeckeElement::star() const {
    // (psi_w y^c)* = y^c psi_{w^{-1}}; renormalize by pushing the monomial
    // through the reversed word.
    NilHeckeElement out(algebra_);
    const Permutation id = Permutation::identity(algebra_.n);
    for (const auto& [key, coeff] : terms_) {
        TermMap partial;
        partial.emplace(TermKey{id, key.second}, coeff);
        for (int r : reduced_word(key.first.inverse()))
            partial = rmul_psi(partial, r);
        for (auto& [k, c] : partial)
            accumulate(out.terms_, k, c);
    }
    reduce_if_cyclotomic(out.terms_, algebra_);
    return out;
}

IntPolynomial NilHeckeElement::poly_part() const {
    if (algebra_.is_cyclotomic())
        throw InvalidInput("poly_part is defined on the free flavor");
    IntPolynomial out(algebra_.n);
    for (const auto& [key, c] : terms_)
        if (key.first.is_identity())
            out.add_term(key.second, c);
    return out;
}

IntPolynomial NilHeckeElement::poly_part_star() const {
    return star().poly_part();
}

GradedDegree NilHeckeElement::degree() const {
    if (terms_.empty())
        return GradedDegree::zero();
    bool first = true;
    int common = 0;
    for (const auto& [key, c] : terms_) {
        const int d = 2 * std::accumulate(key.second.begin(), key.second.end(), 0) -
                      2 * key.first.length();
        if (first) {
            common = d;
            first = false;
        } else if (d != common) {
            return GradedDegree::mixed();
        }
    }
    return GradedDegree::homogeneous(common);
}

NilHeckeElement to_cyclotomic(const NilHeckeElement& x, int ell) {
    if (x.algebra().is_cyclotomic())
        throw InvalidInput("to_cyclotomic expects a free-flavor element");
    NilHeckeElement out(NilHeckeAlgebra::cyclotomic(ell, x.algebra().n));
    out.terms_ = x.terms();
    reduce_in_place(out.terms_, ell, out.algebra().n);
    return out;
}

NilHeckeElement cyclotomic_reduce(const NilHeckeElement& x) {
    if (!x.algebra().is_cyclotomic())
        throw InvalidInput("cyclotomic_reduce expects a cyclotomic element");
    NilHeckeElement out = x;
    reduce_in_place(out.terms_, out.algebra().ell, out.algebra().n);
    return out;
}

bool canonical_term_before(const NilHeckeElement::TermKey& a, const NilHeckeElement::TermKey& b) {
    const int la = a.first.length();
    const int lb = b.first.length();
    if (la != lb)
        return la > lb;
    if (a.first != b.first)
        return a.first < b.first;
    return graded_lex_before(a.second, b.second);
}

// --- distinguished elements --------------------------------------------------

NilHeckeElement schur_element(int n, const Partition& shape) {
    const NilHeckeAlgebra algebra = NilHeckeAlgebra::free_algebra(n);
    NilHeckeElement x(algebra);
    if (shape.length() > n)
        return x;
    std::vector<int> exps = staircase_exponents(n);
    for (int i = 1; i <= n; ++i)
        exps[static_cast<std::size_t>(i - 1)] += shape.part(i);
    const Int sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    TermMap terms;
    terms.emplace(TermKey{Permutation::identity(n), std::move(exps)}, sign);
    for (int r : reduced_word(Permutation::longest_element(n)))
        terms = rmul_psi(terms, r);
    NilHeckeElement out(algebra);
    out.terms_ = std::move(terms);
    return out;
}

NilHeckeElement schur_element_row(int n, int s) {
    if (s < 0)
        return NilHeckeElement(NilHeckeAlgebra::free_algebra(n));
    return schur_element(n, Partition::single_row(s));
}

NilHeckeElement schur_element_col(int n, int k) {
    if (k < 0 || k > n)
        return NilHeckeElement(NilHeckeAlgebra::free_algebra(n));
    return schur_element(n, Partition::single_column(k));
}

IntPolynomial schur_element_poly(int n, const Partition& shape) {
    IntPolynomial out = schur_element(n, shape).poly_part();
    if (!out.is_symmetric())
        throw ConsistencyError("schur_element_poly: polynomial part is not symmetric for " +
                               shape.to_string());
    return out;
}

NilHeckeElement basic_element(NilHeckeAlgebra algebra, const Partition& shape) {
    NilHeckeElement x(algebra);
    if (shape.length() > algebra.n)
        return x;
    const int n = algebra.n;
    const std::vector<int> staircase = staircase_exponents(n);
    std::vector<int> shifted = staircase;
    for (int i = 1; i <= n; ++i)
        shifted[static_cast<std::size_t>(i - 1)] += shape.part(i);

    TermMap terms;
    terms.emplace(TermKey{Permutation::longest_element(n),
                          std::vector<int>(static_cast<std::size_t>(n), 0)},
                  1);
    terms = rmul_monomial(terms, shifted);
    for (int r : reduced_word(Permutation::longest_element(n)))
        terms = rmul_psi(terms, r);
    terms = rmul_monomial(terms, staircase);
    NilHeckeElement out(algebra);
    out.terms_ = std::move(terms);
    reduce_if_cyclotomic(out.terms_, algebra);
    return out;
}

NilHeckeElement basic_element_row(NilHeckeAlgebra algebra, int s) {
    if (s < 0)
        return NilHeckeElement(algebra);
    return basic_element(algebra, Partition::single_row(s));
}

NilHeckeElement basic_element_col(NilHeckeAlgebra algebra, int k) {
    if (k < 0 || k > algebra.n)
        return NilHeckeElement(algebra);
    return basic_element(algebra, Partition::single_column(k));
}

bool is_central(const IntPolynomial& f, int ell, int n) {
    const NilHeckeAlgebra algebra = NilHeckeAlgebra::cyclotomic(ell, n);
    const NilHeckeElement x = NilHeckeElement::from_polynomial(algebra, f);
    for (int r = 1; r < n; ++r) {
        const NilHeckeElement p = NilHeckeElement::gen_psi(algebra, r);
        if (x * p != p * x)
            return false;
    }
    return true;
}

std::vector<NilHeckeElement::TermKey> enumerate_basis(int ell, int n) {
    if (n < 1 || ell < n)
        throw InvalidInput("enumerate_basis: need 1 <= n <= ell");
    std::vector<Permutation> perms = all_permutations(n);
    std::stable_sort(perms.begin(), perms.end(), [](const Permutation& a, const Permutation& b) {
        return a.length() < b.length();
    });

    std::vector<NilHeckeElement::TermKey> out;
    for (const auto& w : perms) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        while (true) {
            out.emplace_back(w, exps);
            // Odometer over the capped exponent ranges, last variable fastest.
            int i = n - 1;
            while (i >= 0) {
                if (exps[static_cast<std::size_t>(i)] < ell - (i + 1)) {
                    ++exps[static_cast<std::size_t>(i)];
                    std::fill(exps.begin() + i + 1, exps.end(), 0);
                    break;
                }
                --i;
            }
            if (i < 0)
                break;
        }
    }
    return out;
}

} // namespace nilschur
