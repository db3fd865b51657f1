#include "nilschur/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "nilschur/errors.hpp"
#include "nilschur/expr.hpp"
#include "nilschur/grassmann.hpp"
#include "nilschur/isomorphism.hpp"
#include "nilschur/nilhecke.hpp"
#include "nilschur/sympoly.hpp"

namespace nilschur {

namespace {

using Rng = std::mt19937_64;

// Draws go through plain modulo so transcripts do not depend on the standard
// library's distribution implementations.
int draw(Rng& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

Permutation random_permutation(Rng& rng, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(images[static_cast<std::size_t>(i)],
                  images[static_cast<std::size_t>(draw(rng, i + 1))]);
    return Permutation(std::move(images));
}

NilHeckeElement random_basis_word(Rng& rng, const NilHeckeAlgebra& algebra, int free_cap) {
    const Permutation w = random_permutation(rng, algebra.n);
    std::vector<int> exps(static_cast<std::size_t>(algebra.n));
    for (int i = 1; i <= algebra.n; ++i) {
        const int cap = algebra.is_cyclotomic() ? algebra.exponent_cap(i) : free_cap;
        exps[static_cast<std::size_t>(i - 1)] = draw(rng, cap + 1);
    }
    return NilHeckeElement::basis_word(algebra, w, std::move(exps));
}

NilHeckeElement random_element(Rng& rng, const NilHeckeAlgebra& algebra, int terms,
                               int free_cap) {
    NilHeckeElement acc(algebra);
    for (int t = 0; t < terms; ++t)
        acc = acc + random_basis_word(rng, algebra, free_cap).scaled(draw(rng, 19) - 9);
    return acc;
}

IntPolynomial random_polynomial(Rng& rng, int n, int max_terms, int max_degree) {
    IntPolynomial acc(n);
    const int terms = 1 + draw(rng, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        int left = draw(rng, max_degree + 1);
        for (int i = 0; i < n && left > 0; ++i) {
            const int e = draw(rng, left + 1);
            exps[static_cast<std::size_t>(i)] = e;
            left -= e;
        }
        acc.add_term(exps, draw(rng, 19) - 9);
    }
    return acc;
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/// Determinant of a matrix of algebra elements, expanded by permutations with
/// every product taken in row order.  The identities under test assert that
/// this particular order already gives the claimed value.
NilHeckeElement ordered_det(const NilHeckeAlgebra& algebra,
                            const std::vector<std::vector<NilHeckeElement>>& m) {
    const int d = static_cast<int>(m.size());
    NilHeckeElement acc(algebra);
    if (d == 0)
        return NilHeckeElement::unit(algebra);
    for (const auto& sigma : all_permutations(d)) {
        NilHeckeElement term = NilHeckeElement::unit(algebra);
        for (int i = 1; i <= d; ++i) {
            term = term * m[static_cast<std::size_t>(i - 1)]
                          [static_cast<std::size_t>(sigma.image(i) - 1)];
            if (term.is_zero())
                break;
        }
        acc = sigma.length() % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

std::string shape_list(const std::vector<Partition>& shapes) {
    std::string out;
    for (const auto& s : shapes)
        out += (out.empty() ? "" : ", ") + s.to_string();
    return out;
}

/// Shapes of the a x b box and its transpose, deduplicated.  The determinant
/// identities extend to shapes with more than n rows (where the element is
/// zero by convention), so suites cover both readings of the box.
std::vector<Partition> union_boxes(int a, int b) {
    std::vector<Partition> shapes = partitions_in_box(a, b);
    for (const auto& s : partitions_in_box(b, a))
        shapes.push_back(s);
    std::sort(shapes.begin(), shapes.end());
    shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    return shapes;
}

void add_relation_cases(VerificationReport& report, const NilHeckeAlgebra& algebra) {
    const int n = algebra.n;
    auto psi = [&](int r) { return NilHeckeElement::gen_psi(algebra, r); };
    auto y = [&](int k) { return NilHeckeElement::gen_y(algebra, k); };
    const NilHeckeElement one = NilHeckeElement::unit(algebra);

    for (int r = 1; r < n; ++r)
        report.add("psi" + std::to_string(r) + "^2 = 0", (psi(r) * psi(r)).is_zero());
    for (int r = 1; r < n; ++r)
        for (int t = r + 2; t < n; ++t)
            report.add("psi" + std::to_string(r) + " and psi" + std::to_string(t) + " commute",
                       psi(r) * psi(t) == psi(t) * psi(r));
    for (int r = 1; r + 1 < n; ++r)
        report.add("braid relation at " + std::to_string(r),
                   psi(r) * psi(r + 1) * psi(r) == psi(r + 1) * psi(r) * psi(r + 1));

    {
        bool ok = true;
        std::string witness;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = i + 1; j <= n && ok; ++j)
                if (!(y(i) * y(j) == y(j) * y(i))) {
                    ok = false;
                    witness = "y" + std::to_string(i) + ", y" + std::to_string(j);
                }
        report.add("y generators commute", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int r = 1; r < n && ok; ++r)
            for (int k = 1; k <= n && ok; ++k) {
                if (k == r || k == r + 1)
                    continue;
                if (!(psi(r) * y(k) == y(k) * psi(r))) {
                    ok = false;
                    witness = "psi" + std::to_string(r) + ", y" + std::to_string(k);
                }
            }
        report.add("psi generators commute with distant y", ok, witness);
    }
    for (int r = 1; r < n; ++r) {
        report.add("psi" + std::to_string(r) + "*y" + std::to_string(r + 1) + " = y" +
                       std::to_string(r) + "*psi" + std::to_string(r) + " + 1",
                   psi(r) * y(r + 1) == y(r) * psi(r) + one);
        report.add("y" + std::to_string(r + 1) + "*psi" + std::to_string(r) + " = psi" +
                       std::to_string(r) + "*y" + std::to_string(r) + " + 1",
                   y(r + 1) * psi(r) == psi(r) * y(r) + one);
    }
}

void add_grading_case(VerificationReport& report, const NilHeckeAlgebra& algebra, Rng& rng,
                      int pairs) {
    bool ok = true;
    std::string witness;
    for (int t = 0; t < pairs; ++t) {
        const NilHeckeElement a = random_basis_word(rng, algebra, 3);
        const NilHeckeElement b = random_basis_word(rng, algebra, 3);
        const NilHeckeElement ab = a * b;
        if (ab.is_zero() || a.is_zero() || b.is_zero())
            continue;
        const GradedDegree expected =
            GradedDegree::homogeneous(a.degree().value + b.degree().value);
        if (!(ab.degree() == expected) && ok) {
            ok = false;
            witness = "a = " + to_text(a) + ", b = " + to_text(b);
        }
    }
    report.add("degrees add under multiplication (" + std::to_string(pairs) + " random pairs)",
               ok, witness);
}

// --- suites -----------------------------------------------------------------

VerificationReport suite_free_relations(int n, std::uint64_t seed) {
    VerificationReport report;
    report.title = "free algebra relations at n=" + std::to_string(n);
    const NilHeckeAlgebra algebra = NilHeckeAlgebra::free_algebra(n);
    Rng rng(seed);

    add_relation_cases(report, algebra);

    {
        bool ok = true;
        for (int r = 1; r < n; ++r)
            ok = ok && NilHeckeElement::gen_psi(algebra, r).star() ==
                           NilHeckeElement::gen_psi(algebra, r);
        for (int k = 1; k <= n; ++k)
            ok = ok && NilHeckeElement::gen_y(algebra, k).star() ==
                           NilHeckeElement::gen_y(algebra, k);
        report.add("star fixes every generator", ok);
    }
    {
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 50; ++t) {
            const NilHeckeElement a = random_element(rng, algebra, 3, 3);
            const NilHeckeElement b = random_element(rng, algebra, 3, 3);
            if (!((a * b).star() == b.star() * a.star()) && ok) {
                ok = false;
                witness = "a = " + to_text(a) + ", b = " + to_text(b);
            }
        }
        report.add("star reverses products (50 random pairs)", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 50; ++t) {
            const NilHeckeElement a = random_element(rng, algebra, 3, 3);
            if (!(a.star().star() == a) && ok) {
                ok = false;
                witness = "a = " + to_text(a);
            }
        }
        report.add("star is an involution (50 random elements)", ok, witness);
    }

    add_grading_case(report, algebra, rng, 50);

    {
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 200; ++t) {
            const NilHeckeElement a = random_basis_word(rng, algebra, 3);
            const NilHeckeElement b = random_basis_word(rng, algebra, 3);
            const NilHeckeElement c = random_basis_word(rng, algebra, 3);
            if (!((a * b) * c == a * (b * c)) && ok) {
                ok = false;
                witness = "a = " + to_text(a) + ", b = " + to_text(b) + ", c = " + to_text(c);
            }
        }
        report.add("associativity on 200 random basis-word triples", ok, witness);
    }
    return report;
}

VerificationReport suite_cyclotomic(int ell, int n, std::uint64_t seed) {
    VerificationReport report;
    report.title =
        "cyclotomic quotient at (ell=" + std::to_string(ell) + ", n=" + std::to_string(n) + ")";
    const NilHeckeAlgebra algebra = NilHeckeAlgebra::cyclotomic(ell, n);
    Rng rng(seed);

    {
        Int expected = factorial(n);
        for (int i = ell - n + 1; i <= ell; ++i)
            expected *= i;
        const auto basis = enumerate_basis(ell, n);
        report.add("basis count equals n! * ell!/(ell-n)! = " + to_decimal(expected),
                   Int(basis.size()) == expected,
                   "enumerated " + std::to_string(basis.size()));
    }
    {
        NilHeckeElement p = NilHeckeElement::unit(algebra);
        for (int i = 0; i < ell; ++i)
            p = p * NilHeckeElement::gen_y(algebra, 1);
        report.add("y1^ell reduces to zero", p.is_zero(), p.is_zero() ? "" : to_text(p));
    }

    add_relation_cases(report, algebra);

    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= 3; ++t) {
            // All monomials y_1^{l_1}..y_s^{l_s} with l_1+..+l_s = ell-s+t.
            const int degree = ell - s + t;
            IntPolynomial sum(n);
            std::vector<int> exps(static_cast<std::size_t>(n), 0);
            const std::function<void(int, int)> build = [&](int pos, int left) {
                if (pos == s) {
                    if (left == 0)
                        sum.add_term(exps, 1);
                    return;
                }
                for (int e = 0; e <= left; ++e) {
                    exps[static_cast<std::size_t>(pos)] = e;
                    build(pos + 1, left - e);
                }
                exps[static_cast<std::size_t>(pos)] = 0;
            };
            build(0, degree);
            const NilHeckeElement image = NilHeckeElement::from_polynomial(algebra, sum);
            report.add("sum of y^l over l1+..+l" + std::to_string(s) + " = " +
                           std::to_string(degree) + " vanishes",
                       image.is_zero(), image.is_zero() ? "" : to_text(image));
        }

    for (int t = 1; t <= 3; ++t) {
        const NilHeckeElement image =
            NilHeckeElement::from_polynomial(algebra, complete(ell - n + t, n));
        report.add("h_" + std::to_string(ell - n + t) + "(y) reduces to zero", image.is_zero(),
                   image.is_zero() ? "" : to_text(image));
    }

    {
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 50; ++t) {
            const NilHeckeElement a = random_element(rng, algebra, 3, 0);
            if (!(cyclotomic_reduce(a) == a) && ok) {
                ok = false;
                witness = "a = " + to_text(a);
            }
        }
        report.add("reduction is idempotent (50 random elements)", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        int checked = 0;
        for (int t = 0; t < 100; ++t) {
            const NilHeckeElement a = random_basis_word(rng, algebra, 0);
            const NilHeckeElement b = random_basis_word(rng, algebra, 0);
            const NilHeckeElement ab = a * b;
            ++checked;
            for (const auto& [key, coeff] : ab.terms())
                for (int i = 1; i <= n; ++i)
                    if (key.second[static_cast<std::size_t>(i - 1)] > algebra.exponent_cap(i) &&
                        ok) {
                        ok = false;
                        witness = "a = " + to_text(a) + ", b = " + to_text(b) +
                                  " gives exponent " +
                                  std::to_string(key.second[static_cast<std::size_t>(i - 1)]) +
                                  " on y" + std::to_string(i);
                    }
        }
        report.add("products of " + std::to_string(checked) +
                       " random basis-word pairs stay in normal form",
                   ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int t = 0; t < 100; ++t) {
            const NilHeckeElement a = random_basis_word(rng, algebra, 0);
            const NilHeckeElement b = random_basis_word(rng, algebra, 0);
            const NilHeckeElement c = random_basis_word(rng, algebra, 0);
            if (!((a * b) * c == a * (b * c)) && ok) {
                ok = false;
                witness = "a = " + to_text(a) + ", b = " + to_text(b) + ", c = " + to_text(c);
            }
        }
        report.add("associativity on 100 random basis-word triples", ok, witness);
    }

    add_grading_case(report, algebra, rng, 50);
    return report;
}

VerificationReport suite_schur(int n, std::uint64_t seed) {
    VerificationReport report;
    report.title = "symmetric polynomial machinery at n=" + std::to_string(n);
    Rng rng(seed);

    for (const auto& shape : partitions_in_box(3, 3)) {
        const IntPolynomial h = schur(shape, n, SchurMethod::jacobi_trudi_h);
        const IntPolynomial e = schur(shape, n, SchurMethod::jacobi_trudi_e);
        const IntPolynomial b = schur(shape, n, SchurMethod::bialternant);
        report.add("schur methods agree on " + shape.to_string(),
                   h == e && h == b && h.is_symmetric());
    }

    for (int m = 1; m <= 2 * n; ++m) {
        const IntPolynomial r = eh_alternating_residual(m, n);
        report.add("alternating e-h convolution vanishes at degree " + std::to_string(m),
                   r.is_zero(), r.is_zero() ? "" : r.to_string());
    }

    if (n >= 2) {
        bool square_ok = true, braid_ok = true, leibniz_ok = true;
        std::string square_w, braid_w, leibniz_w;
        for (int t = 0; t < 100; ++t) {
            const IntPolynomial f = random_polynomial(rng, n, 5, 5);
            const IntPolynomial g = random_polynomial(rng, n, 3, 3);
            for (int r = 1; r < n; ++r) {
                if (!divided_difference(r, divided_difference(r, f)).is_zero() && square_ok) {
                    square_ok = false;
                    square_w = "r = " + std::to_string(r) + ", f = " + f.to_string();
                }
                const IntPolynomial lhs = divided_difference(r, f * g);
                const IntPolynomial rhs =
                    divided_difference(r, f) * g +
                    act_perm(Permutation::adjacent_transposition(n, r), f) *
                        divided_difference(r, g);
                if (!(lhs == rhs) && leibniz_ok) {
                    leibniz_ok = false;
                    leibniz_w = "r = " + std::to_string(r) + ", f = " + f.to_string() +
                                ", g = " + g.to_string();
                }
            }
            for (int r = 1; r + 1 < n; ++r) {
                const IntPolynomial lhs = divided_difference(
                    r, divided_difference(r + 1, divided_difference(r, f)));
                const IntPolynomial rhs = divided_difference(
                    r + 1, divided_difference(r, divided_difference(r + 1, f)));
                if (!(lhs == rhs) && braid_ok) {
                    braid_ok = false;
                    braid_w = "r = " + std::to_string(r) + ", f = " + f.to_string();
                }
            }
        }
        report.add("divided differences square to zero (100 random polynomials)", square_ok,
                   square_w);
        if (n >= 3)
            report.add("divided differences satisfy the braid relation (100 random polynomials)",
                       braid_ok, braid_w);
        report.add("twisted Leibniz rule (100 random polynomials)", leibniz_ok, leibniz_w);
    }

    {
        bool ok = true;
        std::string witness;
        int count = 0;
        const auto box = partitions_in_box(2, 2);
        for (const auto& lam : box)
            for (const auto& mu : box) {
                const IntPolynomial product = schur(lam, n) * schur(mu, n);
                const SchurExpansion expansion = expand_in_schur(product);
                ++count;
                if (!(schur_combination(expansion) == product) && ok) {
                    ok = false;
                    witness = lam.to_string() + " * " + mu.to_string();
                }
            }
        report.add("schur expansion round-trips on " + std::to_string(count) +
                       " box-shape products",
                   ok, witness);
    }

    {
        bool row_ok = true, col_ok = true;
        std::string row_w, col_w;
        for (const auto& lam : partitions_in_box(4, 4)) {
            if (lam.size() > 4 || lam.length() > n)
                continue;
            for (int s = 0; s <= 3; ++s) {
                IntPolynomial rhs(n);
                for (const auto& mu : tensor_row(lam, s, n))
                    rhs = rhs + schur(mu, n);
                if (!(schur(lam, n) * complete(s, n) == rhs) && row_ok) {
                    row_ok = false;
                    row_w = lam.to_string() + " * h_" + std::to_string(s);
                }
            }
            for (int k = 0; k <= std::min(3, n); ++k) {
                IntPolynomial rhs(n);
                for (const auto& mu : tensor_col(lam, k, n))
                    rhs = rhs + schur(mu, n);
                if (!(schur(lam, n) * elementary(k, n) == rhs) && col_ok) {
                    col_ok = false;
                    col_w = lam.to_string() + " * e_" + std::to_string(k);
                }
            }
        }
        report.add("row Pieri at polynomial level", row_ok, row_w);
        report.add("column Pieri at polynomial level", col_ok, col_w);
    }
    return report;
}

VerificationReport suite_s_lambda(int n, std::uint64_t seed) {
    VerificationReport report;
    report.title = "S elements at n=" + std::to_string(n);
    (void)seed;
    const NilHeckeAlgebra algebra = NilHeckeAlgebra::free_algebra(n);

    for (const auto& shape : partitions_in_box(3, 3))
        report.add("y-part of S" + shape.to_string() + " is the Schur polynomial",
                   schur_element_poly(n, shape) == schur(shape, n));

    for (int i = 0; i <= 4; ++i)
        report.add("y-part of S(" + std::to_string(i) + ") is h_" + std::to_string(i),
                   schur_element_row(n, i).poly_part() == complete(i, n));
    for (int j = 0; j <= n; ++j)
        report.add("y-part of S(1^" + std::to_string(j) + ") is e_" + std::to_string(j),
                   schur_element_col(n, j).poly_part() == elementary(j, n));

    {
        bool ok = true;
        std::string witness;
        const auto box = partitions_in_box(2, 2);
        for (const auto& lam : box)
            for (const auto& mu : box) {
                const NilHeckeElement a = schur_element(n, lam);
                const NilHeckeElement b = schur_element(n, mu);
                if (!(a * b - b * a).poly_part().is_zero() && ok) {
                    ok = false;
                    witness = lam.to_string() + ", " + mu.to_string();
                }
            }
        report.add("S elements commute modulo leading-psi terms (box pairs)", ok, witness);
    }

    {
        bool row_ok = true, col_ok = true;
        std::string row_w, col_w;
        for (const auto& lam : partitions_in_box(2, 2)) {
            for (int s = 0; s <= 3; ++s) {
                NilHeckeElement diff = schur_element(n, lam) * schur_element_row(n, s);
                for (const auto& mu : tensor_row(lam, s, n))
                    diff = diff - schur_element(n, mu);
                if (!diff.poly_part().is_zero() && row_ok) {
                    row_ok = false;
                    row_w = lam.to_string() + " * S(" + std::to_string(s) + ")";
                }
            }
            for (int k = 0; k <= n; ++k) {
                NilHeckeElement diff = schur_element(n, lam) * schur_element_col(n, k);
                for (const auto& mu : tensor_col(lam, k, n))
                    diff = diff - schur_element(n, mu);
                if (!diff.poly_part().is_zero() && col_ok) {
                    col_ok = false;
                    col_w = lam.to_string() + " * S(1^" + std::to_string(k) + ")";
                }
            }
        }
        report.add("row Pieri for S modulo leading-psi terms", row_ok, row_w);
        report.add("column Pieri for S modulo leading-psi terms", col_ok, col_w);
    }

    for (const auto& lam : partitions_in_box(3, 3)) {
        // The matrix order may be anything >= length(shape); pad to cover
        // shapes with more rows than n, whose S element is zero.
        const int d = std::max(n, lam.length());
        std::vector<std::vector<NilHeckeElement>> rows(
            static_cast<std::size_t>(d),
            std::vector<NilHeckeElement>(static_cast<std::size_t>(d), NilHeckeElement(algebra)));
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    schur_element_row(n, lam.part(i) - i + j);
        report.add("h determinant reproduces S" + lam.to_string() + " modulo leading-psi terms",
                   (ordered_det(algebra, rows) - schur_element(n, lam)).poly_part().is_zero());

        const Partition conj = lam.conjugate();
        const int m = conj.length();
        std::vector<std::vector<NilHeckeElement>> cols(
            static_cast<std::size_t>(m),
            std::vector<NilHeckeElement>(static_cast<std::size_t>(m), NilHeckeElement(algebra)));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                cols[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    schur_element_col(n, conj.part(i) - i + j);
        report.add("e determinant reproduces S" + lam.to_string() + " modulo leading-psi terms",
                   (ordered_det(algebra, cols) - schur_element(n, lam)).poly_part().is_zero());
    }
    return report;
}

VerificationReport suite_b_lambda(int ell, int n, std::uint64_t seed) {
    VerificationReport report;
    report.title =
        "b elements at (ell=" + std::to_string(ell) + ", n=" + std::to_string(n) + ")";
    (void)seed;
    const NilHeckeAlgebra algebra = NilHeckeAlgebra::cyclotomic(ell, n);
    const std::vector<Partition> shapes = union_boxes(n, ell - n);

    {
        const NilHeckeElement unit = basic_element(algebra, Partition());
        report.add("b() is a nonzero idempotent", !unit.is_zero() && unit * unit == unit);
    }
    {
        const NilHeckeElement overflow = basic_element_row(algebra, ell - n + 1);
        report.add("b of a row past the box width vanishes", overflow.is_zero(),
                   overflow.is_zero() ? "" : to_text(overflow));
    }

    {
        bool ok = true;
        std::string witness;
        int count = 0;
        for (std::size_t i = 0; i < shapes.size(); ++i)
            for (std::size_t j = i + 1; j < shapes.size(); ++j) {
                const NilHeckeElement a = basic_element(algebra, shapes[i]);
                const NilHeckeElement b = basic_element(algebra, shapes[j]);
                ++count;
                if (!(a * b == b * a) && ok) {
                    ok = false;
                    witness = shapes[i].to_string() + ", " + shapes[j].to_string();
                }
            }
        report.add("b elements commute (" + std::to_string(count) + " pairs: " +
                       shape_list(shapes) + ")",
                   ok, witness);
    }

    if (n <= 3) {
        const NilHeckeAlgebra free = NilHeckeAlgebra::free_algebra(n);
        bool ok = true;
        std::string witness;
        const auto box = partitions_in_box(2, 2);
        for (std::size_t i = 0; i < box.size(); ++i)
            for (std::size_t j = i + 1; j < box.size(); ++j) {
                const NilHeckeElement a = basic_element(free, box[i]);
                const NilHeckeElement b = basic_element(free, box[j]);
                if (!(a * b == b * a) && ok) {
                    ok = false;
                    witness = box[i].to_string() + ", " + box[j].to_string();
                }
            }
        report.add("b elements commute already in the free algebra (box pairs)", ok, witness);
    }

    {
        bool row_ok = true, col_ok = true;
        std::string row_w, col_w;
        for (const auto& lam : partitions_in_box(n, ell - n)) {
            for (int s = 0; s <= ell - n + 1; ++s) {
                NilHeckeElement diff = basic_element(algebra, lam) * basic_element_row(algebra, s);
                for (const auto& mu : tensor_row(lam, s, n))
                    diff = diff - basic_element(algebra, mu);
                if (!diff.is_zero() && row_ok) {
                    row_ok = false;
                    row_w = lam.to_string() + " * b(" + std::to_string(s) + ")";
                }
            }
            for (int k = 0; k <= n; ++k) {
                NilHeckeElement diff = basic_element(algebra, lam) * basic_element_col(algebra, k);
                for (const auto& mu : tensor_col(lam, k, n))
                    diff = diff - basic_element(algebra, mu);
                if (!diff.is_zero() && col_ok) {
                    col_ok = false;
                    col_w = lam.to_string() + " * b(1^" + std::to_string(k) + ")";
                }
            }
        }
        report.add("row Pieri for b elements is exact", row_ok, row_w);
        report.add("column Pieri for b elements is exact", col_ok, col_w);
    }

    for (const auto& lam : shapes) {
        const int d = std::max(n, lam.length());
        std::vector<std::vector<NilHeckeElement>> rows(
            static_cast<std::size_t>(d),
            std::vector<NilHeckeElement>(static_cast<std::size_t>(d), NilHeckeElement(algebra)));
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    basic_element_row(algebra, lam.part(i) - i + j);
        report.add("h determinant reproduces b" + lam.to_string(),
                   ordered_det(algebra, rows) == basic_element(algebra, lam));

        const Partition conj = lam.conjugate();
        // A 1x1 matrix [b()] keeps the empty shape meaningful: b() is an
        // idempotent distinct from the algebra unit.
        const int m = std::max(1, conj.length());
        std::vector<std::vector<NilHeckeElement>> cols(
            static_cast<std::size_t>(m),
            std::vector<NilHeckeElement>(static_cast<std::size_t>(m), NilHeckeElement(algebra)));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                cols[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    basic_element_col(algebra, conj.part(i) - i + j);
        report.add("e determinant reproduces b" + lam.to_string(),
                   ordered_det(algebra, cols) == basic_element(algebra, lam));
    }

    {
        bool ok = true;
        std::string witness;
        for (const auto& lam : partitions_in_box(n, ell - n)) {
            const NilHeckeElement b = basic_element(algebra, lam);
            if (!(b.degree() == GradedDegree::homogeneous(2 * lam.size())) && ok) {
                ok = false;
                witness = lam.to_string() + " has degree " + b.degree().to_string();
            }
        }
        report.add("b elements are homogeneous of degree 2|shape|", ok, witness);
    }
    return report;
}

VerificationReport suite_grassmann(int ell, int n, std::uint64_t seed) {
    VerificationReport report;
    const GrassmannRing ring(n, ell - n);
    report.title = "Schubert calculus in " + ring.to_string();
    Rng rng(seed);

    const auto indices = all_schubert_indices(ring.k(), ring.m());
    std::vector<CohomologyClass> basis;
    basis.reserve(indices.size());
    for (const auto& a : indices)
        basis.push_back(CohomologyClass::basis(ring, a));
    const CohomologyClass one = CohomologyClass::unit(ring);

    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!(one * basis[i] == basis[i] && basis[i] * one == basis[i]) && ok) {
                ok = false;
                witness = indices[i].to_string();
            }
        report.add("unit class is neutral on every basis class", ok, witness);
    }

    {
        bool oracle_ok = true, comm_ok = true, grade_ok = true;
        std::string oracle_w, comm_w, grade_w;
        int count = 0;
        const int top = 2 * ring.k() * ring.m();
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j) {
                const CohomologyClass p = basis[i] * basis[j];
                ++count;
                if (!(p == oracle_mul(basis[i], basis[j])) && oracle_ok) {
                    oracle_ok = false;
                    oracle_w = indices[i].to_string() + " * " + indices[j].to_string();
                }
                if (!(p == basis[j] * basis[i]) && comm_ok) {
                    comm_ok = false;
                    comm_w = indices[i].to_string() + " * " + indices[j].to_string();
                }
                const int expected = 2 * (indices[i].weight() + indices[j].weight());
                const bool graded = expected > top
                                        ? p.is_zero()
                                        : (p.is_zero() ||
                                           p.degree() == GradedDegree::homogeneous(expected));
                if (!graded && grade_ok) {
                    grade_ok = false;
                    grade_w = indices[i].to_string() + " * " + indices[j].to_string() + " -> " +
                              to_text(p);
                }
            }
        const std::string suffix = " (" + std::to_string(count) + " pairs)";
        report.add("products match the symmetric-function oracle" + suffix, oracle_ok, oracle_w);
        report.add("products commute" + suffix, comm_ok, comm_w);
        report.add("degrees add and overflow the box to zero" + suffix, grade_ok, grade_w);
    }

    {
        bool ok = true;
        std::string witness;
        const std::size_t d = basis.size();
        const bool exhaustive = d * d * d <= 8000;
        int count = 0;
        auto try_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
            ++count;
            if (!((basis[i] * basis[j]) * basis[k] == basis[i] * (basis[j] * basis[k])) && ok) {
                ok = false;
                witness = indices[i].to_string() + ", " + indices[j].to_string() + ", " +
                          indices[k].to_string();
            }
        };
        if (exhaustive) {
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    for (std::size_t k = 0; k < d; ++k)
                        try_triple(i, j, k);
        } else {
            for (int t = 0; t < 200; ++t)
                try_triple(static_cast<std::size_t>(draw(rng, static_cast<int>(d))),
                           static_cast<std::size_t>(draw(rng, static_cast<int>(d))),
                           static_cast<std::size_t>(draw(rng, static_cast<int>(d))));
        }
        report.add("products associate (" + std::to_string(count) +
                       (exhaustive ? " exhaustive" : " random") + " triples)",
                   ok, witness);
    }

    {
        const auto residuals = borel_residuals(ring);
        for (std::size_t s = 0; s < residuals.size(); ++s)
            report.add("inverse-series residual vanishes at degree " + std::to_string(s + 1),
                       residuals[s].is_zero(),
                       residuals[s].is_zero() ? "" : to_text(residuals[s]));
    }

    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            CohomologyClass acc(ring);
            for (const auto& [coeff, rows] : giambelli_rows(indices[i])) {
                CohomologyClass term = one;
                for (const int j : rows)
                    term = pieri_mul(term, j);
                acc = acc + term.scaled(coeff);
            }
            if (!(acc == basis[i]) && ok) {
                ok = false;
                witness = indices[i].to_string() + " -> " + to_text(acc);
            }
        }
        report.add("determinant expansion reconstitutes every basis class", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const CohomologyClass image = zeta(basis[i]);
            const bool single = image.term_count() == 1 &&
                                image.terms().begin()->second == 1;
            const bool back = zeta(image) == basis[i];
            const bool degree =
                single && std::accumulate(image.terms().begin()->first.begin(),
                                          image.terms().begin()->first.end(),
                                          0) == indices[i].weight();
            if (!(single && back && degree) && ok) {
                ok = false;
                witness = indices[i].to_string() + " -> " + to_text(image);
            }
        }
        report.add("duality map sends basis to basis, preserves degree, round-trips", ok,
                   witness);
    }
    {
        bool ok = true;
        std::string witness;
        int count = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j) {
                ++count;
                if (!(zeta(basis[i] * basis[j]) == zeta(basis[i]) * zeta(basis[j])) && ok) {
                    ok = false;
                    witness = indices[i].to_string() + " * " + indices[j].to_string();
                }
            }
        report.add("duality map is multiplicative (" + std::to_string(count) + " pairs)", ok,
                   witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!(giambelli_dual(indices[i]) == zeta(basis[i])) && ok) {
                ok = false;
                witness = indices[i].to_string();
            }
        report.add("dual determinant formula matches the duality image", ok, witness);
    }

    if (ring.k() == 2 && ring.m() == 2) {
        const CohomologyClass sigma = CohomologyClass::basis(ring, {0, 1});
        const CohomologyClass fourth = sigma * sigma * sigma * sigma;
        const CohomologyClass expected = CohomologyClass::basis(ring, {2, 2}).scaled(2);
        report.add("fourth power of (0,1) is twice (2,2)", fourth == expected,
                   fourth == expected ? "" : to_text(fourth));
    }
    return report;
}

VerificationReport suite_eta(int ell, int n, std::uint64_t seed) {
    VerificationReport report;
    report.title =
        "cohomology-to-basic-algebra map at (ell=" + std::to_string(ell) + ", n=" +
        std::to_string(n) + ")";
    (void)seed;
    const GrassmannRing ring(n, ell - n);
    const GrassmannRing dual = ring.dual();

    std::unique_ptr<BasicAlgebra> algebra;
    try {
        algebra = std::make_unique<BasicAlgebra>(ell, n);
    } catch (const std::exception& bad) {
        report.add("basic algebra constructed", false, bad.what());
        return report;
    }
    report.add("basic algebra constructed with " + std::to_string(algebra->box().size()) +
                   " basis shapes",
               true);

    const auto indices = all_schubert_indices(ring.k(), ring.m());
    {
        bool ok = true;
        std::string witness;
        for (const auto& a : indices)
            if (rho(tau(a)).size() != a.weight() && ok) {
                ok = false;
                witness = a.to_string();
            }
        report.add("box weights match class degrees", ok, witness);
    }

    auto permutation_case = [&](const GrassmannRing& from, const std::string& label,
                                auto&& map) {
        const auto labels = all_schubert_indices(from.k(), from.m());
        bool ok = true;
        std::string witness;
        std::vector<Partition> images;
        for (const auto& a : labels) {
            const BasicAlgebraElement image = map(CohomologyClass::basis(from, a));
            if (image.coeffs.size() != 1 || image.coeffs.begin()->second != 1) {
                if (ok) {
                    ok = false;
                    witness = a.to_string() + " -> " + image.to_string();
                }
                continue;
            }
            images.push_back(image.coeffs.begin()->first);
        }
        std::sort(images.begin(), images.end());
        if (ok && (std::adjacent_find(images.begin(), images.end()) != images.end() ||
                   images.size() != algebra->box().size())) {
            ok = false;
            witness = "images do not exhaust the box";
        }
        report.add(label, ok, witness);
    };
    permutation_case(ring, "basis classes map bijectively onto the b basis",
                     [](const CohomologyClass& x) { return eta(x); });
    permutation_case(dual, "dual basis classes map bijectively onto the b basis",
                     [](const CohomologyClass& x) { return eta_hat(x); });

    {
        const BasicAlgebraElement image = eta(CohomologyClass::unit(ring));
        report.add("unit class maps to b()",
                   image.coeffs.size() == 1 && image.coeffs.begin()->first == Partition() &&
                       image.coeffs.begin()->second == 1);
    }
    {
        bool ok = true;
        std::string witness;
        for (int i = 1; i <= n; ++i) {
            const CohomologyClass c = special_col(ring, i);
            const BasicAlgebraElement image = eta(c);
            const Partition expected = Partition::single_column(i);
            // A column of height i needs box width >= 1; otherwise both the
            // class and its b image vanish.
            const bool hit = (ell - n >= 1)
                                 ? (image.coeffs.size() == 1 &&
                                    image.coeffs.begin()->first == expected &&
                                    image.coeffs.begin()->second == 1)
                                 : image.coeffs.empty();
            if (!hit && ok) {
                ok = false;
                witness = "i = " + std::to_string(i) + " -> " + image.to_string();
            }
        }
        report.add("column generators map to single-column b elements", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int j = 1; j <= ell - n; ++j) {
            const BasicAlgebraElement image = eta(special_row(ring, j));
            const Partition expected = Partition::single_row(j);
            if (!(image.coeffs.size() == 1 && image.coeffs.begin()->first == expected &&
                  image.coeffs.begin()->second == 1) &&
                ok) {
                ok = false;
                witness = "j = " + std::to_string(j) + " -> " + image.to_string();
            }
        }
        report.add("row generators map to single-row b elements", ok, witness);
    }

    {
        bool ok = true;
        std::string witness;
        int count = 0;
        for (std::size_t i = 0; i < indices.size() && ok; ++i)
            for (std::size_t j = i; j < indices.size() && ok; ++j) {
                const CohomologyClass x = CohomologyClass::basis(ring, indices[i]);
                const CohomologyClass y = CohomologyClass::basis(ring, indices[j]);
                ++count;
                try {
                    const NilHeckeElement product =
                        algebra->realize(eta(x)) * algebra->realize(eta(y));
                    if (!(algebra->decompose(product) == eta(x * y))) {
                        ok = false;
                        witness = indices[i].to_string() + " * " + indices[j].to_string();
                    }
                } catch (const std::exception& bad) {
                    ok = false;
                    witness = indices[i].to_string() + " * " + indices[j].to_string() + ": " +
                              bad.what();
                }
            }
        report.add("map is multiplicative over the b decomposition (" + std::to_string(count) +
                       " pairs)",
                   ok, witness);
    }

    report.merge_prefixed("relations: ", check_borel_relations(ell, n));
    return report;
}

VerificationReport suite_duality(int ell, int n, std::uint64_t seed) {
    VerificationReport report;
    report.title =
        "duality and center at (ell=" + std::to_string(ell) + ", n=" + std::to_string(n) + ")";
    (void)seed;
    report.merge_prefixed("duality: ", check_duality(ell, n));
    report.merge_prefixed("center: ", check_center(ell, n));
    return report;
}

void require(bool condition, const std::string& message) {
    if (!condition)
        throw InvalidInput(message);
}

} // namespace

Suite suite_from_string(const std::string& name) {
    if (name == "free-relations")
        return Suite::free_relations;
    if (name == "cyclotomic")
        return Suite::cyclotomic;
    if (name == "schur")
        return Suite::schur;
    if (name == "s-lambda")
        return Suite::s_lambda;
    if (name == "b-lambda")
        return Suite::b_lambda;
    if (name == "grassmann")
        return Suite::grassmann;
    if (name == "eta")
        return Suite::eta;
    if (name == "duality")
        return Suite::duality;
    if (name == "all")
        return Suite::all;
    throw InvalidInput("unknown suite \"" + name +
                       "\"; expected one of free-relations, cyclotomic, schur, s-lambda, "
                       "b-lambda, grassmann, eta, duality, all");
}

std::string suite_name(Suite suite) {
    switch (suite) {
    case Suite::free_relations: return "free-relations";
    case Suite::cyclotomic: return "cyclotomic";
    case Suite::schur: return "schur";
    case Suite::s_lambda: return "s-lambda";
    case Suite::b_lambda: return "b-lambda";
    case Suite::grassmann: return "grassmann";
    case Suite::eta: return "eta";
    case Suite::duality: return "duality";
    case Suite::all: return "all";
    }
    return "?";
}

VerificationReport run_suite(Suite suite, int ell, int n, std::uint64_t seed) {
    switch (suite) {
    case Suite::free_relations:
        require(n >= 1, "free-relations needs n >= 1");
        return suite_free_relations(n, seed);
    case Suite::schur:
        require(n >= 1, "schur needs n >= 1");
        return suite_schur(n, seed);
    case Suite::s_lambda:
        require(n >= 1, "s-lambda needs n >= 1");
        return suite_s_lambda(n, seed);
    case Suite::cyclotomic:
        require(1 <= n && n <= ell, "cyclotomic needs 1 <= n <= ell");
        return suite_cyclotomic(ell, n, seed);
    case Suite::b_lambda:
        require(1 <= n && n <= ell, "b-lambda needs 1 <= n <= ell");
        return suite_b_lambda(ell, n, seed);
    case Suite::grassmann:
        require(0 <= n && n <= ell, "grassmann needs 0 <= n <= ell");
        return suite_grassmann(ell, n, seed);
    case Suite::eta:
        require(1 <= n && n <= ell, "eta needs 1 <= n <= ell");
        return suite_eta(ell, n, seed);
    case Suite::duality:
        require(1 <= n && n <= ell, "duality needs 1 <= n <= ell");
        return suite_duality(ell, n, seed);
    case Suite::all: {
        require(1 <= n && n <= ell, "the combined suite needs 1 <= n <= ell");
        VerificationReport report;
        report.title = "all suites at (ell=" + std::to_string(ell) + ", n=" +
                       std::to_string(n) + ")";
        for (const Suite s :
             {Suite::free_relations, Suite::cyclotomic, Suite::schur, Suite::s_lambda,
              Suite::b_lambda, Suite::grassmann, Suite::eta, Suite::duality})
            report.merge_prefixed(suite_name(s) + ": ", run_suite(s, ell, n, seed));
        return report;
    }
    }
    throw InvalidInput("unknown suite");
}

} // namespace nilschur
