#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "nilschur/errors.hpp"
#include "nilschur/expr.hpp"
#include "nilschur/grassmann.hpp"
#include "nilschur/json_io.hpp"
#include "nilschur/nilhecke.hpp"
#include "nilschur/report.hpp"
#include "nilschur/sympoly.hpp"

using namespace nilschur;

namespace {

const NilHeckeAlgebra free2 = NilHeckeAlgebra::free_algebra(2);
const NilHeckeAlgebra free3 = NilHeckeAlgebra::free_algebra(3);

NilHeckeElement random_element(std::mt19937_64& rng, const NilHeckeAlgebra& algebra) {
    NilHeckeElement acc(algebra);
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> images(static_cast<std::size_t>(algebra.n));
        for (int i = 0; i < algebra.n; ++i)
            images[static_cast<std::size_t>(i)] = i + 1;
        for (int i = algebra.n - 1; i > 0; --i)
            std::swap(images[static_cast<std::size_t>(i)],
                      images[static_cast<std::size_t>(rng() % (i + 1))]);
        std::vector<int> exps(static_cast<std::size_t>(algebra.n));
        for (int i = 1; i <= algebra.n; ++i) {
            const int cap = algebra.is_cyclotomic() ? algebra.exponent_cap(i) : 3;
            exps[static_cast<std::size_t>(i - 1)] = static_cast<int>(rng() % (cap + 1));
        }
        const Int coeff = Int(static_cast<int>(rng() % 19)) - 9;
        acc = acc + NilHeckeElement::basis_word(algebra, Permutation(std::move(images)),
                                                std::move(exps))
                        .scaled(coeff);
    }
    return acc;
}

} // namespace

TEST_CASE("parsing single generators and words") {
    CHECK(parse_element(free2, "y1") == NilHeckeElement::gen_y(free2, 1));
    CHECK(parse_element(free2, "psi[1]") == NilHeckeElement::gen_psi(free2, 1));
    CHECK(parse_element(free2, "y2^3") ==
          NilHeckeElement::basis_word(free2, Permutation::identity(2), {0, 3}));
    CHECK(parse_element(free2, "psi[1]*y2") ==
          NilHeckeElement::gen_psi(free2, 1) * NilHeckeElement::gen_y(free2, 2));
    CHECK(parse_element(free3, "psi[1,2]") ==
          NilHeckeElement::gen_psi(free3, 1) * NilHeckeElement::gen_psi(free3, 2));
    CHECK(parse_element(free2, "psi[1,1]").is_zero());
    CHECK(parse_element(free2, "7") == NilHeckeElement::unit(free2).scaled(7));
    CHECK(parse_element(free2, "0").is_zero());
}

TEST_CASE("the pinned normal-form example") {
    const NilHeckeElement x = parse_element(free2, "y1^2*psi[1]");
    CHECK(to_text(x) == "psi[1]*y2^2 - y1 - y2");
    CHECK(x == NilHeckeElement::gen_y(free2, 1) * NilHeckeElement::gen_y(free2, 1) *
                   NilHeckeElement::gen_psi(free2, 1));
}

TEST_CASE("operator precedence and grouping") {
    const NilHeckeElement y1 = NilHeckeElement::gen_y(free2, 1);
    const NilHeckeElement y2 = NilHeckeElement::gen_y(free2, 2);
    CHECK(parse_element(free2, "y1+y2*y1") == y1 + y2 * y1);
    CHECK(parse_element(free2, "(y1+y2)*y1") == (y1 + y2) * y1);
    CHECK(parse_element(free2, "y1-y2-y1") == y1 - y2 - y1);
    CHECK(parse_element(free2, "-y1^2") == -(y1 * y1));
    CHECK(parse_element(free2, "2*y1 - 3") == y1.scaled(2) - NilHeckeElement::unit(free2).scaled(3));
    CHECK(parse_element(free2, "- psi[1] * y2") == -(NilHeckeElement::gen_psi(free2, 1) * y2));
    CHECK(parse_element(free2, " y1 \t+\n y2 ") == y1 + y2);
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_element(free2, "psi[3]"), ExprError);
    CHECK_THROWS_AS(parse_element(free2, "y3"), ExprError);
    CHECK_THROWS_AS(parse_element(free2, "y0"), ExprError);
    CHECK_THROWS_AS(parse_element(free2, ""), ExprError);
    CHECK_THROWS_AS(parse_element(free2, "y1 +"), ExprError);
    CHECK_THROWS_AS(parse_element(free2, "y1 y2"), ExprError);
    CHECK_THROWS_AS(parse_element(free2, "psi[]"), ExprError);
    CHECK_THROWS_AS(parse_element(free2, "(y1"), ExprError);
    try {
        parse_element(free2, "y1 + psi[7]");
        CHECK(false);
    } catch (const ExprError& error) {
        CHECK(std::string(error.what()).find("syntax error at byte") != std::string::npos);
        CHECK(error.offset() > 0);
    }
}

TEST_CASE("integer tuples parse with or without parentheses") {
    CHECK(parse_int_tuple("(0,1)") == std::vector<int>{0, 1});
    CHECK(parse_int_tuple("0,1") == std::vector<int>{0, 1});
    CHECK(parse_int_tuple("()").empty());
    CHECK(parse_int_tuple("(5)") == std::vector<int>{5});
    CHECK(parse_int_tuple(" ( 1 , 3 ) ") == std::vector<int>{1, 3});
    CHECK_THROWS_AS(parse_int_tuple("(1,"), ExprError);
    CHECK_THROWS_AS(parse_int_tuple("(1,2"), ExprError);
    CHECK_THROWS_AS(parse_int_tuple("1,2)x"), ExprError);
    CHECK_THROWS_AS(parse_int_tuple("a"), ExprError);
}

TEST_CASE("printing canonical forms is stable under reparsing") {
    std::mt19937_64 rng(2024);
    const NilHeckeAlgebra cyc = NilHeckeAlgebra::cyclotomic(4, 2);
    for (const NilHeckeAlgebra& algebra : {free2, free3, cyc}) {
        for (int t = 0; t < 200; ++t) {
            const NilHeckeElement x = random_element(rng, algebra);
            const std::string printed = to_text(x);
            const NilHeckeElement reparsed = parse_element(algebra, printed);
            CHECK(reparsed == x);
            CHECK(to_text(reparsed) == printed);
        }
    }
}

TEST_CASE("JSON round-trips preserve elements exactly") {
    std::mt19937_64 rng(77);
    const NilHeckeAlgebra cyc = NilHeckeAlgebra::cyclotomic(5, 3);
    for (const NilHeckeAlgebra& algebra : {free3, cyc}) {
        for (int t = 0; t < 50; ++t) {
            const NilHeckeElement x = random_element(rng, algebra);
            CHECK(element_from_json(element_to_json(x)) == x);
        }
    }
    const NilHeckeElement big =
        NilHeckeElement::gen_y(free2, 1).scaled(parse_decimal("123456789012345678901234567890"));
    const nlohmann::json j = element_to_json(big);
    CHECK(j["terms"][0]["coeff"] == "123456789012345678901234567890");
    CHECK(element_from_json(j) == big);
}

TEST_CASE("JSON input is validated field by field") {
    const nlohmann::json good = element_to_json(NilHeckeElement::gen_y(free2, 1));
    nlohmann::json bad = good;
    bad["flavor"] = "quantum";
    CHECK_THROWS_AS(element_from_json(bad), InvalidInput);
    bad = good;
    bad["terms"][0]["coeff"] = 5; // must be a decimal string
    CHECK_THROWS_AS(element_from_json(bad), InvalidInput);
    bad = good;
    bad["terms"][0]["exps"] = {1};
    CHECK_THROWS_AS(element_from_json(bad), InvalidInput);
    bad = good;
    bad.erase("n");
    CHECK_THROWS_AS(element_from_json(bad), InvalidInput);
    bad = good;
    bad["terms"][0]["perm"] = {1, 1};
    CHECK_THROWS_AS(element_from_json(bad), InvalidInput);
}

TEST_CASE("cohomology classes round-trip through JSON") {
    const GrassmannRing ring(2, 2);
    CohomologyClass x(ring);
    x.add_term({0, 1}, parse_decimal("99999999999999999999999999"));
    x.add_term({2, 2}, -4);
    CHECK(class_from_json(class_to_json(x), ring) == x);
    const CohomologyClass zero(ring);
    CHECK(class_from_json(class_to_json(zero), ring) == zero);
    nlohmann::json bad = class_to_json(x);
    bad["classes"][0]["index"] = {1, 0};
    CHECK_THROWS_AS(class_from_json(bad, ring), InvalidInput);
}

TEST_CASE("schubert classes and expansions print in the documented shapes") {
    const GrassmannRing ring(2, 2);
    const CohomologyClass sigma = CohomologyClass::basis(ring, {0, 1});
    CHECK(to_text(sigma * sigma) == "(0,2) + (1,1)");
    const SchurExpansion expansion = expand_in_schur(complete(1, 2) * complete(1, 2));
    CHECK(to_text(expansion) == "s(2) + s(1,1)");
    CHECK(to_text(CohomologyClass(ring)) == "0");
    const CohomologyClass scaled = CohomologyClass::basis(ring, {2, 2}).scaled(2);
    CHECK(to_text(scaled) == "2*(2,2)");
}

TEST_CASE("verification reports serialize with per-case entries") {
    VerificationReport report;
    report.title = "sample";
    report.add("first", true);
    report.add("second", false, "details");
    const nlohmann::json j = report_to_json(report);
    CHECK(j["title"] == "sample");
    CHECK(j["passed"] == false);
    REQUIRE(j["cases"].size() == 2);
    CHECK(j["cases"][0]["name"] == "first");
    CHECK(j["cases"][0]["passed"] == true);
    CHECK(j["cases"][1]["witness"] == "details");
}
