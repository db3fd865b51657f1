#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "nilschur/combinatorics.hpp"
#include "nilschur/errors.hpp"

using namespace nilschur;

TEST_CASE("partition construction and canonical form") {
    CHECK(Partition({3, 1, 1}).to_string() == "(3,1,1)");
    CHECK(Partition().to_string() == "()");
    CHECK(Partition({2, 1, 0, 0}).length() == 2);
    CHECK(Partition({4, 2, 1}).size() == 7);
    CHECK(Partition({3, 1}).part(1) == 3);
    CHECK(Partition({3, 1}).part(5) == 0);
    CHECK(Partition::single_row(3) == Partition({3}));
    CHECK(Partition::single_row(0) == Partition());
    CHECK(Partition::single_column(3) == Partition({1, 1, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
    CHECK_THROWS_AS(Partition({2, -1}), InvalidInput);
}

TEST_CASE("partition conjugate and box membership") {
    CHECK(Partition({3, 2}).conjugate() == Partition({2, 2, 1}));
    CHECK(Partition({3, 1, 1}).conjugate() == Partition({3, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    for (const auto& shape : partitions_in_box(3, 4))
        CHECK(shape.conjugate().conjugate() == shape);
    CHECK(Partition({2, 1}).fits_in_box(2, 2));
    CHECK_FALSE(Partition({3}).fits_in_box(2, 2));
    CHECK_FALSE(Partition({1, 1, 1}).fits_in_box(2, 2));
}

TEST_CASE("partitions_in_box enumerates binomial(rows+cols, rows) shapes") {
    CHECK(partitions_in_box(2, 2).size() == 6);
    CHECK(partitions_in_box(3, 2).size() == 10);
    CHECK(partitions_in_box(0, 5).size() == 1);
    const auto box = partitions_in_box(2, 2);
    CHECK(std::count(box.begin(), box.end(), Partition({2, 1})) == 1);
    CHECK(std::count(box.begin(), box.end(), Partition()) == 1);
    const std::set<Partition> unique(box.begin(), box.end());
    CHECK(unique.size() == box.size());
}

TEST_CASE("permutation composition acts on the left") {
    const Permutation s1 = Permutation::adjacent_transposition(3, 1);
    const Permutation s2 = Permutation::adjacent_transposition(3, 2);
    const Permutation u = s1.compose(s2);
    CHECK(u.one_line() == std::vector<int>{2, 3, 1});
    CHECK(u.length() == 2);
    CHECK(u.inverse().compose(u) == Permutation::identity(3));
    CHECK(Permutation::longest_element(4).length() == 6);
    CHECK(Permutation::longest_element(4).one_line() == std::vector<int>{4, 3, 2, 1});
    CHECK(Permutation::identity(3).is_identity());
    CHECK_FALSE(s1.is_identity());
    CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidInput);
}

TEST_CASE("reduced words evaluate back to their permutation") {
    CHECK(reduced_word(Permutation::identity(4)).empty());
    for (const auto& w : all_permutations(4)) {
        const auto word = reduced_word(w);
        CHECK(static_cast<int>(word.size()) == w.length());
        Permutation acc = Permutation::identity(4);
        for (const int r : word)
            acc = acc.compose(Permutation::adjacent_transposition(4, r));
        CHECK(acc == w);
    }
}

TEST_CASE("nil-Coxeter product is length additive or nothing") {
    const Permutation s1 = Permutation::adjacent_transposition(3, 1);
    const Permutation s2 = Permutation::adjacent_transposition(3, 2);
    CHECK_FALSE(nilcoxeter_mul(s1, s1).has_value());
    const auto p = nilcoxeter_mul(s1, s2);
    REQUIRE(p.has_value());
    CHECK(p->one_line() == std::vector<int>{2, 3, 1});
    for (const auto& u : all_permutations(3))
        for (const auto& v : all_permutations(3)) {
            const auto uv = nilcoxeter_mul(u, v);
            if (uv.has_value())
                CHECK(uv->length() == u.length() + v.length());
            else
                CHECK(u.compose(v).length() < u.length() + v.length());
        }
}

TEST_CASE("all_permutations is ordered and complete") {
    const auto perms = all_permutations(3);
    REQUIRE(perms.size() == 6);
    CHECK(perms.front() == Permutation::identity(3));
    CHECK(perms.back() == Permutation::longest_element(3));
    CHECK(std::is_sorted(perms.begin(), perms.end()));
}

TEST_CASE("strict tuples validate their entries") {
    const StrictTuple t({1, 3}, 4);
    CHECK(t.entry(1) == 1);
    CHECK(t.entry(2) == 3);
    CHECK(t.to_string() == "(1,3)");
    CHECK_THROWS_AS(StrictTuple({3, 1}, 4), InvalidInput);
    CHECK_THROWS_AS(StrictTuple({1, 1}, 4), InvalidInput);
    CHECK_THROWS_AS(StrictTuple({0, 1}, 4), InvalidInput);
    CHECK_THROWS_AS(StrictTuple({1, 5}, 4), InvalidInput);
    CHECK(all_strict_tuples(4, 2).size() == 6);
    CHECK(all_strict_tuples(5, 0).size() == 1);
}

TEST_CASE("schubert labels validate and convert to partitions") {
    const SchubertIndex a({0, 1, 1}, 2);
    CHECK(a.weight() == 2);
    CHECK(a.to_string() == "(0,1,1)");
    CHECK(a.to_partition() == Partition({1, 1}));
    CHECK(SchubertIndex::from_partition(Partition({1, 1}), 3, 2) == a);
    CHECK_THROWS_AS(SchubertIndex({1, 0}, 2), InvalidInput);
    CHECK_THROWS_AS(SchubertIndex({0, 3}, 2), InvalidInput);
    CHECK_THROWS_AS(SchubertIndex({-1, 0}, 2), InvalidInput);
    CHECK(all_schubert_indices(2, 2).size() == 6);
    CHECK(all_schubert_indices(0, 3).size() == 1);
}

TEST_CASE("masks and strict tuples carry the same data") {
    CHECK(all_masks(4, 2).size() == 6);
    for (const auto& mask : all_masks(5, 3)) {
        const StrictTuple t = theta(mask);
        CHECK(theta_inv(t) == mask);
        CHECK(t.n() == 3);
    }
    for (const auto& t : all_strict_tuples(5, 2))
        CHECK(theta(theta_inv(t)) == t);
}

TEST_CASE("rho maps strict tuples bijectively onto the box") {
    CHECK(rho(StrictTuple({2, 3}, 3)) == Partition());
    CHECK(rho(StrictTuple({1, 3}, 3)) == Partition({1}));
    CHECK(rho(StrictTuple({1, 2}, 3)) == Partition({1, 1}));
    std::set<Partition> images;
    for (const auto& t : all_strict_tuples(5, 2)) {
        const Partition shape = rho(t);
        CHECK(shape.fits_in_box(2, 3));
        images.insert(shape);
    }
    CHECK(images.size() == all_strict_tuples(5, 2).size());
    CHECK(images.size() == partitions_in_box(2, 3).size());
}

TEST_CASE("tau pairs labels with tuples and reverses entries through rho") {
    for (int ell = 1; ell <= 6; ++ell)
        for (int n = 0; n <= ell; ++n)
            for (const auto& a : all_schubert_indices(n, ell - n)) {
                const StrictTuple t = tau(a);
                CHECK(t.ell() == ell);
                CHECK(tau_inv(t) == a);
                std::vector<int> reversed(a.entries().rbegin(), a.entries().rend());
                CHECK(rho(t) == Partition(reversed));
            }
    for (const auto& t : all_strict_tuples(6, 3))
        CHECK(tau(tau_inv(t)) == t);
}

TEST_CASE("tau_hat pairs dual labels with tuples through the conjugate shape") {
    for (int ell = 1; ell <= 6; ++ell)
        for (int n = 0; n <= ell; ++n)
            for (const auto& a : all_schubert_indices(ell - n, n)) {
                const StrictTuple t = tau_hat(a);
                CHECK(t.ell() == ell);
                CHECK(t.n() == n);
                CHECK(tau_hat_inv(t) == a);
                std::vector<int> reversed(a.entries().rbegin(), a.entries().rend());
                CHECK(rho(t).conjugate() == Partition(reversed));
            }
}

TEST_CASE("the composed duality on labels is an involution") {
    for (int ell = 1; ell <= 6; ++ell)
        for (int n = 0; n <= ell; ++n)
            for (const auto& a : all_schubert_indices(n, ell - n)) {
                const SchubertIndex dual = tau_hat_inv(tau(a));
                CHECK(dual.k() == ell - n);
                CHECK(dual.weight() == a.weight());
                CHECK(tau_hat_inv(tau(dual)) == a);
            }
}

TEST_CASE("tensor_row adds at most one box per column") {
    auto sorted = [](std::vector<Partition> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(tensor_row(Partition(), 2, 2)) == sorted({Partition({2})}));
    CHECK(sorted(tensor_row(Partition({1}), 1, 2)) ==
          sorted({Partition({2}), Partition({1, 1})}));
    CHECK(sorted(tensor_row(Partition({1}), 2, 2)) ==
          sorted({Partition({3}), Partition({2, 1})}));
    CHECK(tensor_row(Partition({1}), 0, 2) == std::vector<Partition>{Partition({1})});
    CHECK(sorted(tensor_row(Partition({2, 2}), 1, 2)) == sorted({Partition({3, 2})}));
}

TEST_CASE("tensor_col adds at most one box per row") {
    auto sorted = [](std::vector<Partition> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(tensor_col(Partition(), 2, 2)) == sorted({Partition({1, 1})}));
    CHECK(sorted(tensor_col(Partition({1}), 1, 2)) ==
          sorted({Partition({2}), Partition({1, 1})}));
    CHECK(sorted(tensor_col(Partition({1}), 2, 2)) == sorted({Partition({2, 1})}));
    CHECK(sorted(tensor_col(Partition({1}), 2, 3)) ==
          sorted({Partition({2, 1}), Partition({1, 1, 1})}));
    CHECK(tensor_col(Partition(), 3, 2).empty());
}

TEST_CASE("strip counts stay inside the row bound") {
    for (const auto& lam : partitions_in_box(2, 2))
        for (int s = 0; s <= 3; ++s) {
            for (const auto& mu : tensor_row(lam, s, 2)) {
                CHECK(mu.length() <= 2);
                CHECK(mu.size() == lam.size() + s);
            }
            for (const auto& mu : tensor_col(lam, s, 2)) {
                CHECK(mu.length() <= 2);
                CHECK(mu.size() == lam.size() + s);
            }
        }
}
