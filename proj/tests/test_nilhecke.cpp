#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nilschur/combinatorics.hpp"
#include "nilschur/errors.hpp"
#include "nilschur/nilhecke.hpp"
#include "nilschur/sympoly.hpp"

using namespace nilschur;

namespace {

const NilHeckeAlgebra free2 = NilHeckeAlgebra::free_algebra(2);
const NilHeckeAlgebra free3 = NilHeckeAlgebra::free_algebra(3);

NilHeckeElement psi(const NilHeckeAlgebra& a, int r) { return NilHeckeElement::gen_psi(a, r); }
NilHeckeElement y(const NilHeckeAlgebra& a, int k) { return NilHeckeElement::gen_y(a, k); }

} // namespace

TEST_CASE("defining relations in the free algebra") {
    CHECK((psi(free3, 1) * psi(free3, 1)).is_zero());
    CHECK(psi(free3, 1) * psi(free3, 2) * psi(free3, 1) ==
          psi(free3, 2) * psi(free3, 1) * psi(free3, 2));
    CHECK(y(free3, 1) * y(free3, 3) == y(free3, 3) * y(free3, 1));
    CHECK(psi(free3, 2) * y(free3, 1) == y(free3, 1) * psi(free3, 2));
    const NilHeckeElement one = NilHeckeElement::unit(free2);
    CHECK(psi(free2, 1) * y(free2, 2) == y(free2, 1) * psi(free2, 1) + one);
    CHECK(y(free2, 2) * psi(free2, 1) == psi(free2, 1) * y(free2, 1) + one);
}

TEST_CASE("generator construction validates indices") {
    CHECK_THROWS_AS(NilHeckeElement::gen_psi(free2, 2), InvalidInput);
    CHECK_THROWS_AS(NilHeckeElement::gen_psi(free2, 0), InvalidInput);
    CHECK_THROWS_AS(NilHeckeElement::gen_y(free2, 3), InvalidInput);
    CHECK_THROWS_AS(NilHeckeElement::gen_y(free2, 0), InvalidInput);
}

TEST_CASE("a squared y pushed past psi lands in normal form") {
    const NilHeckeElement lhs = y(free2, 1) * y(free2, 1) * psi(free2, 1);
    const NilHeckeElement expected =
        NilHeckeElement::basis_word(free2, Permutation::adjacent_transposition(2, 1), {0, 2}) -
        y(free2, 1) - y(free2, 2);
    CHECK(lhs == expected);
    CHECK(lhs.poly_part() == -elementary(1, 2));
}

TEST_CASE("the star map fixes generators and reverses products") {
    CHECK(psi(free3, 2).star() == psi(free3, 2));
    CHECK(y(free3, 3).star() == y(free3, 3));
    const NilHeckeElement a = psi(free2, 1) * y(free2, 2);
    CHECK(a.star() == y(free2, 2) * psi(free2, 1));
    const NilHeckeElement b = y(free2, 1) * y(free2, 1) * psi(free2, 1);
    CHECK((a * b).star() == b.star() * a.star());
    CHECK(a.star().star() == a);
}

TEST_CASE("graded degree bookkeeping") {
    CHECK(psi(free2, 1).degree() == GradedDegree::homogeneous(-2));
    CHECK(y(free2, 1).degree() == GradedDegree::homogeneous(2));
    CHECK(NilHeckeElement::unit(free2).degree() == GradedDegree::homogeneous(0));
    CHECK(NilHeckeElement(free2).degree() == GradedDegree::zero());
    CHECK((psi(free2, 1) + y(free2, 1)).degree() == GradedDegree::mixed());
    CHECK((psi(free2, 1) * y(free2, 2)).degree() == GradedDegree::homogeneous(0));
}

TEST_CASE("poly_part splits off the identity component") {
    const NilHeckeElement x =
        psi(free2, 1).scaled(4) + NilHeckeElement::from_polynomial(free2, complete(2, 2));
    CHECK(x.poly_part() == complete(2, 2));
    CHECK(NilHeckeElement(free2).poly_part().is_zero());
    CHECK(psi(free2, 1).poly_part().is_zero());
}

TEST_CASE("schur-type elements at pinned values") {
    const NilHeckeElement s_empty = schur_element(2, Partition());
    const NilHeckeElement expected =
        NilHeckeElement::unit(free2) -
        NilHeckeElement::basis_word(free2, Permutation::adjacent_transposition(2, 1), {0, 1});
    CHECK(s_empty == expected);
    CHECK(schur_element(2, Partition({1, 1, 1})).is_zero());
    CHECK(schur_element_row(2, -1).is_zero());
    CHECK(schur_element_col(2, 3).is_zero());
    CHECK(schur_element_row(2, 0) == s_empty);
    CHECK(schur_element_poly(2, Partition({1})) == elementary(1, 2));
    CHECK(schur_element_poly(2, Partition()) == IntPolynomial::one(2));
    CHECK(schur_element(2, Partition({1})).poly_part() == elementary(1, 2));
}

TEST_CASE("schur-type elements reduce to classical bases") {
    for (int n = 2; n <= 3; ++n) {
        for (int i = 0; i <= 4; ++i)
            CHECK(schur_element_row(n, i).poly_part() == complete(i, n));
        for (int j = 0; j <= n; ++j)
            CHECK(schur_element_col(n, j).poly_part() == elementary(j, n));
    }
}

TEST_CASE("schur-type elements commute modulo the psi left ideal") {
    for (const auto& lam : partitions_in_box(2, 2))
        for (const auto& mu : partitions_in_box(2, 2)) {
            const NilHeckeElement a = schur_element(3, lam);
            const NilHeckeElement b = schur_element(3, mu);
            CHECK((a * b - b * a).poly_part().is_zero());
        }
}

TEST_CASE("cyclotomic quotient enforces the exponent caps") {
    const NilHeckeAlgebra cyc = NilHeckeAlgebra::cyclotomic(3, 2);
    NilHeckeElement p = NilHeckeElement::unit(cyc);
    for (int i = 0; i < 3; ++i)
        p = p * y(cyc, 1);
    CHECK(p.is_zero());
    CHECK_FALSE((y(cyc, 1) * y(cyc, 1)).is_zero());
    const NilHeckeElement squared = y(cyc, 2) * y(cyc, 2);
    for (const auto& [key, coeff] : squared.terms()) {
        CHECK(key.second[0] <= cyc.exponent_cap(1));
        CHECK(key.second[1] <= cyc.exponent_cap(2));
    }
    CHECK_THROWS_AS(NilHeckeAlgebra::cyclotomic(2, 3), InvalidInput);
    CHECK_THROWS_AS(NilHeckeAlgebra::cyclotomic(3, 0), InvalidInput);
}

TEST_CASE("projection to the quotient is an algebra map") {
    const NilHeckeAlgebra cyc = NilHeckeAlgebra::cyclotomic(4, 2);
    const NilHeckeElement a = psi(free2, 1) * y(free2, 2) * y(free2, 2);
    const NilHeckeElement b = y(free2, 1).scaled(3) - psi(free2, 1);
    CHECK(to_cyclotomic(a * b, 4) == to_cyclotomic(a, 4) * to_cyclotomic(b, 4));
    CHECK(to_cyclotomic(a + b, 4) == to_cyclotomic(a, 4) + to_cyclotomic(b, 4));
    CHECK(cyclotomic_reduce(to_cyclotomic(a, 4)) == to_cyclotomic(a, 4));
    CHECK(to_cyclotomic(NilHeckeElement::unit(free2), 4) == NilHeckeElement::unit(cyc));
}

TEST_CASE("basis enumeration matches the dimension formula") {
    CHECK(enumerate_basis(2, 1).size() == 2);
    CHECK(enumerate_basis(3, 2).size() == 12);
    CHECK(enumerate_basis(4, 2).size() == 24);
    CHECK(enumerate_basis(4, 4).size() == 576);
    for (const auto& [w, exps] : enumerate_basis(3, 2))
        for (int i = 1; i <= 2; ++i)
            CHECK(exps[static_cast<std::size_t>(i - 1)] <= 3 - i);
}

TEST_CASE("cyclotomic vanishing identities") {
    for (int ell = 2; ell <= 5; ++ell)
        for (int n = 1; n <= ell; ++n) {
            const NilHeckeAlgebra cyc = NilHeckeAlgebra::cyclotomic(ell, n);
            for (int t = 1; t <= 2; ++t)
                CHECK(NilHeckeElement::from_polynomial(cyc, complete(ell - n + t, n)).is_zero());
        }
}

TEST_CASE("basic elements at pinned values") {
    const NilHeckeAlgebra cyc42 = NilHeckeAlgebra::cyclotomic(4, 2);
    const NilHeckeElement unit = basic_element(cyc42, Partition());
    CHECK_FALSE(unit.is_zero());
    CHECK(unit * unit == unit);
    CHECK(basic_element(cyc42, Partition({1})) * basic_element(cyc42, Partition({1})) ==
          basic_element(cyc42, Partition({2})) + basic_element(cyc42, Partition({1, 1})));
    CHECK(basic_element(cyc42, Partition({1, 1, 1})).is_zero());
    CHECK(basic_element_row(cyc42, -1).is_zero());
    CHECK(basic_element_col(cyc42, 3).is_zero());

    const NilHeckeAlgebra cyc32 = NilHeckeAlgebra::cyclotomic(3, 2);
    CHECK(basic_element(cyc32, Partition({1})) * basic_element(cyc32, Partition({1})) ==
          basic_element(cyc32, Partition({1, 1})));
    CHECK(basic_element_row(cyc32, 2).is_zero());
}

TEST_CASE("basic elements are homogeneous and commute") {
    const NilHeckeAlgebra cyc = NilHeckeAlgebra::cyclotomic(4, 2);
    for (const auto& lam : partitions_in_box(2, 2)) {
        const NilHeckeElement b = basic_element(cyc, lam);
        CHECK(b.degree() == GradedDegree::homogeneous(2 * lam.size()));
        for (const auto& mu : partitions_in_box(2, 2))
            CHECK(b * basic_element(cyc, mu) == basic_element(cyc, mu) * b);
    }
}

TEST_CASE("centrality test on pinned polynomials") {
    CHECK(is_central(elementary(1, 2), 3, 2));
    CHECK(is_central(elementary(2, 2), 3, 2));
    CHECK_FALSE(is_central(IntPolynomial::variable(2, 1), 3, 2));
    CHECK(is_central(schur(Partition({2, 1}), 2), 4, 2));
    CHECK(is_central(IntPolynomial::one(2), 3, 2));
}

TEST_CASE("mixed-flavor arithmetic is rejected") {
    const NilHeckeAlgebra cyc = NilHeckeAlgebra::cyclotomic(3, 2);
    CHECK_THROWS_AS(y(free2, 1) + y(cyc, 1), InvalidInput);
    CHECK_THROWS_AS(y(free2, 1) * y(cyc, 1), InvalidInput);
}

TEST_CASE("display order puts longer psi words first") {
    const auto key_of = [](const NilHeckeElement& x) { return x.terms().begin()->first; };
    const auto a = key_of(psi(free2, 1));
    const auto b = key_of(y(free2, 1));
    const auto c = key_of(NilHeckeElement::unit(free2));
    CHECK(canonical_term_before(a, b));
    CHECK(canonical_term_before(b, c));
    CHECK_FALSE(canonical_term_before(c, b));
}
