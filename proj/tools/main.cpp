#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nilschur/combinatorics.hpp"
#include "nilschur/errors.hpp"
#include "nilschur/expr.hpp"
#include "nilschur/grassmann.hpp"
#include "nilschur/isomorphism.hpp"
#include "nilschur/json_io.hpp"
#include "nilschur/nilhecke.hpp"
#include "nilschur/report.hpp"
#include "nilschur/sympoly.hpp"
#include "nilschur/verify.hpp"

namespace {

using namespace nilschur;

NilHeckeAlgebra session_algebra(const std::string& flavor, int ell, int n) {
    if (flavor == "free" || (flavor.empty() && ell == 0)) {
        if (ell != 0)
            throw InvalidInput("--ell applies to the cyclotomic flavor only");
        return NilHeckeAlgebra::free_algebra(n);
    }
    return NilHeckeAlgebra::cyclotomic(ell, n);
}

SchubertIndex parse_index(const std::string& text, int k, int cap) {
    std::vector<int> entries = parse_int_tuple(text);
    if (static_cast<int>(entries.size()) != k)
        throw InvalidInput("expected a label with " + std::to_string(k) + " entries, got " +
                           std::to_string(entries.size()));
    return SchubertIndex(std::move(entries), cap);
}

StrictTuple parse_tuple(const std::string& text, int ell, int n) {
    std::vector<int> entries = parse_int_tuple(text);
    if (static_cast<int>(entries.size()) != n)
        throw InvalidInput("expected a tuple with " + std::to_string(n) + " entries, got " +
                           std::to_string(entries.size()));
    return StrictTuple(std::move(entries), ell);
}

void emit(const nlohmann::json& payload) { std::cout << payload.dump(2) << "\n"; }

int print_report(const VerificationReport& report, bool as_json) {
    if (as_json) {
        emit(report_to_json(report));
    } else {
        std::cout << report.title << "\n";
        for (const auto& item : report.cases) {
            std::cout << (item.passed ? "  ok    " : "  FAIL  ") << item.name << "\n";
            if (!item.passed && !item.witness.empty())
                std::cout << "        witness: " << item.witness << "\n";
        }
        if (report.all_passed())
            std::cout << "all " << report.cases.size() << " cases passed\n";
        else
            std::cout << report.failed_count() << " of " << report.cases.size()
                      << " cases FAILED\n";
    }
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in nilHecke algebras, their cyclotomic quotients, and "
                 "Grassmannian Schubert calculus"};
    app.require_subcommand(1);

    int ell = 0;
    int n = 0;
    bool as_json = false;
    std::uint64_t seed = 0;
    std::string suite_text = "all";
    std::string flavor;
    std::string left_text, right_text, input_text, which;
    bool second = false, hat = false;
    int status = 0;

    auto add_session = [&](CLI::App* sub, bool need_ell) {
        auto* opt_ell = sub->add_option("--ell", ell, "cyclotomic level");
        if (need_ell)
            opt_ell->required();
        sub->add_option("--n", n, "number of strands / variables")->required();
        sub->add_flag("--json", as_json, "emit JSON instead of text");
    };

    auto* verify = app.add_subcommand("verify", "run a verification suite and report per case");
    add_session(verify, false);
    verify->add_option("--suite", suite_text,
                       "free-relations, cyclotomic, schur, s-lambda, b-lambda, grassmann, "
                       "eta, duality, or all");
    verify->add_option("--seed", seed, "seed for the randomized cases");
    verify->callback(
        [&] { status = print_report(run_suite(suite_from_string(suite_text), ell, n, seed), as_json); });

    auto* mul_nh = app.add_subcommand("mul-nh", "multiply two algebra expressions");
    add_session(mul_nh, false);
    mul_nh->add_option("--flavor", flavor, "free or cyclotomic (default: cyclotomic iff --ell given)")
        ->check(CLI::IsMember({"free", "cyclotomic"}));
    mul_nh->add_option("left", left_text, "first expression")->required();
    mul_nh->add_option("right", right_text, "second expression")->required();
    mul_nh->callback([&] {
        const NilHeckeAlgebra algebra = session_algebra(flavor, ell, n);
        const NilHeckeElement product =
            parse_element(algebra, left_text) * parse_element(algebra, right_text);
        if (as_json)
            emit(element_to_json(product));
        else
            std::cout << to_text(product) << "\n";
    });

    auto* normal = app.add_subcommand("normal-form", "rewrite an expression in normal form");
    add_session(normal, false);
    normal->add_option("--flavor", flavor, "free or cyclotomic (default: cyclotomic iff --ell given)")
        ->check(CLI::IsMember({"free", "cyclotomic"}));
    normal->add_option("expr", input_text, "expression to normalize")->required();
    normal->callback([&] {
        const NilHeckeElement x = parse_element(session_algebra(flavor, ell, n), input_text);
        if (as_json)
            emit(element_to_json(x));
        else
            std::cout << to_text(x) << "\n";
    });

    auto* mul_schubert =
        app.add_subcommand("mul-schubert", "multiply two Schubert basis classes");
    add_session(mul_schubert, true);
    mul_schubert->add_option("left", left_text, "first label, e.g. \"(0,1)\"")->required();
    mul_schubert->add_option("right", right_text, "second label")->required();
    mul_schubert->callback([&] {
        const GrassmannRing ring(n, ell - n);
        const CohomologyClass product =
            CohomologyClass::basis(ring, parse_index(left_text, n, ell - n)) *
            CohomologyClass::basis(ring, parse_index(right_text, n, ell - n));
        if (as_json)
            emit(class_to_json(product));
        else
            std::cout << to_text(product) << "\n";
    });

    auto* giambelli = app.add_subcommand(
        "giambelli", "evaluate the determinant expansion of a Schubert basis class");
    add_session(giambelli, true);
    giambelli->add_flag("--second", second,
                        "evaluate the one-column determinant in the mirrored ring instead");
    giambelli->add_option("label", input_text, "basis label, e.g. \"(0,1)\"")->required();
    giambelli->callback([&] {
        const GrassmannRing ring(n, ell - n);
        const SchubertIndex index = parse_index(input_text, n, ell - n);
        CohomologyClass value(ring);
        if (second) {
            value = giambelli_dual(index);
        } else {
            for (const auto& [coeff, rows] : giambelli_rows(index)) {
                CohomologyClass term = CohomologyClass::unit(ring);
                for (const int j : rows)
                    term = pieri_mul(term, j);
                value = value + term.scaled(coeff);
            }
        }
        if (as_json)
            emit(class_to_json(value));
        else
            std::cout << to_text(value) << "\n";
    });

    auto* center = app.add_subcommand(
        "center", "list the central basis elements as Schur expansions");
    add_session(center, true);
    center->callback([&] {
        nlohmann::json items = nlohmann::json::array();
        for (const auto& tuple : all_strict_tuples(ell, n)) {
            const Partition shape = rho(tuple);
            const SchurExpansion expansion = expand_in_schur(schur(shape, n));
            if (as_json) {
                nlohmann::json terms = nlohmann::json::array();
                for (const auto& [part, coeff] : expansion.coeffs)
                    terms.push_back({{"shape", part.parts()}, {"coeff", to_decimal(coeff)}});
                items.push_back({{"tuple", tuple.entries()}, {"expansion", terms}});
            } else {
                std::cout << "z" << tuple.to_string() << " = " << to_text(expansion) << "\n";
            }
        }
        if (as_json)
            emit(items);
    });

    auto* eta_cmd = app.add_subcommand(
        "eta", "image of a Schubert basis class in the basic-element basis");
    add_session(eta_cmd, true);
    eta_cmd->add_flag("--hat", hat, "use the mirrored-ring map instead");
    eta_cmd->add_option("label", input_text, "basis label, e.g. \"(0,1)\"")->required();
    eta_cmd->callback([&] {
        const GrassmannRing ring = hat ? GrassmannRing(ell - n, n) : GrassmannRing(n, ell - n);
        const SchubertIndex index = parse_index(input_text, ring.k(), ring.m());
        const CohomologyClass x = CohomologyClass::basis(ring, index);
        const BasicAlgebraElement image = hat ? eta_hat(x) : eta(x);
        if (as_json) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [shape, coeff] : image.coeffs)
                terms.push_back({{"shape", shape.parts()}, {"coeff", to_decimal(coeff)}});
            emit({{"ell", ell}, {"n", n}, {"coeffs", terms}});
        } else {
            std::cout << to_text(image) << "\n";
        }
    });

    auto* map_cmd = app.add_subcommand("map", "apply one of the index bijections");
    add_session(map_cmd, true);
    map_cmd
        ->add_option("--which", which,
                     "rho, tau, tau-inv, tau-hat, tau-hat-inv, or zeta")
        ->required()
        ->check(CLI::IsMember({"rho", "tau", "tau-inv", "tau-hat", "tau-hat-inv", "zeta"}));
    map_cmd->add_option("input", input_text, "tuple or label, e.g. \"(1,3)\"")->required();
    map_cmd->callback([&] {
        std::string text;
        std::vector<int> entries;
        if (which == "rho") {
            const Partition shape = rho(parse_tuple(input_text, ell, n));
            text = shape.to_string();
            entries = shape.parts();
        } else if (which == "tau") {
            const StrictTuple t = tau(parse_index(input_text, n, ell - n));
            text = t.to_string();
            entries = t.entries();
        } else if (which == "tau-inv") {
            const SchubertIndex a = tau_inv(parse_tuple(input_text, ell, n));
            text = a.to_string();
            entries = a.entries();
        } else if (which == "tau-hat") {
            const StrictTuple t = tau_hat(parse_index(input_text, ell - n, n));
            text = t.to_string();
            entries = t.entries();
        } else if (which == "tau-hat-inv") {
            const SchubertIndex a = tau_hat_inv(parse_tuple(input_text, ell, n));
            text = a.to_string();
            entries = a.entries();
        } else {
            const SchubertIndex a = tau_hat_inv(tau(parse_index(input_text, n, ell - n)));
            text = a.to_string();
            entries = a.entries();
        }
        if (as_json)
            emit({{"which", which}, {"entries", entries}});
        else
            std::cout << text << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    } catch (const NotInSpan& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const ConsistencyError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const InvalidInput& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return status;
}
