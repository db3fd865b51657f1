// Acceptance gate: one pass/fail line per release criterion.  Exits with the
// number of failed criteria.  argv[1] must be the path to the command-line
// binary; the last criterion drives it end to end.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include "nilschur/errors.hpp"
#include "nilschur/expr.hpp"
#include "nilschur/json_io.hpp"
#include "nilschur/nilhecke.hpp"
#include "nilschur/verify.hpp"

namespace {

using namespace nilschur;

struct Outcome {
    bool ok = true;
    std::string detail;

    void absorb(bool passed, const std::string& what) {
        if (!passed && ok) {
            ok = false;
            detail = what;
        }
    }
};

void merge_suite(Outcome& outcome, Suite suite, int ell, int n) {
    const std::string where =
        suite_name(suite) + " at (ell=" + std::to_string(ell) + ", n=" + std::to_string(n) + ")";
    try {
        const VerificationReport report = run_suite(suite, ell, n, 0);
        for (const auto& item : report.cases)
            if (!item.passed) {
                outcome.absorb(false, where + ": " + item.name +
                                          (item.witness.empty() ? "" : " [" + item.witness + "]"));
                return;
            }
    } catch (const std::exception& error) {
        outcome.absorb(false, where + ": exception: " + error.what());
    }
}

int run_cli(const std::string& binary, const std::string& args) {
    const std::string command = binary + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(command.c_str());
    if (raw == -1 || !WIFEXITED(raw))
        return -1;
    return WEXITSTATUS(raw);
}

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
        acc = acc + NilHeckeElement::basis_word(algebra, Permutation(std::move(images)),
                                                std::move(exps))
                        .scaled(Int(static_cast<int>(rng() % 19)) - 9);
    }
    return acc;
}

} // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";
    int failed = 0;
    auto criterion = [&](int number, const std::string& label, const Outcome& outcome) {
        std::cout << (outcome.ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
                  << label << "\n";
        if (!outcome.ok) {
            ++failed;
            std::cout << "       first failure: " << outcome.detail << "\n";
        }
    };

    {
        Outcome outcome;
        for (const int n : {2, 3, 4})
            merge_suite(outcome, Suite::free_relations, 0, n);
        criterion(1, "defining relations and random associativity in the free algebra, n = 2..4",
                  outcome);
    }

    {
        Outcome outcome;
        for (const int n : {2, 3}) {
            merge_suite(outcome, Suite::schur, 0, n);
            merge_suite(outcome, Suite::s_lambda, 0, n);
        }
        criterion(2,
                  "Schur elements: y-parts, classical reductions, Pieri and determinant "
                  "identities modulo the psi ideal, n = 2..3",
                  outcome);
    }

    {
        Outcome outcome;
        for (int ell = 1; ell <= 6; ++ell)
            for (int n = 1; n <= ell; ++n)
                merge_suite(outcome, Suite::cyclotomic, ell, n);
        criterion(3, "cyclotomic quotients: dimension, vanishing sums, normal forms, all "
                     "1 <= n <= ell <= 6",
                  outcome);
    }

    {
        Outcome outcome;
        for (int ell = 1; ell <= 5; ++ell)
            for (int n = 1; n <= ell; ++n)
                merge_suite(outcome, Suite::b_lambda, ell, n);
        criterion(4, "basic elements: commutativity, exact Pieri, both determinant identities, "
                     "all 1 <= n <= ell <= 5",
                  outcome);
    }

    {
        Outcome outcome;
        for (int ell = 1; ell <= 6; ++ell)
            for (int n = 0; n <= ell; ++n)
                merge_suite(outcome, Suite::grassmann, ell, n);
        criterion(5, "Schubert calculus: oracle agreement, inverse-series residuals, "
                     "determinant reconstitution, quadric fold, all rings with ell <= 6",
                  outcome);
    }

    {
        Outcome outcome;
        std::vector<std::pair<int, int>> params;
        for (int ell = 1; ell <= 5; ++ell)
            for (int n = 1; n <= ell; ++n)
                params.emplace_back(ell, n);
        params.emplace_back(6, 2);
        params.emplace_back(6, 3);
        for (const auto& [ell, n] : params) {
            merge_suite(outcome, Suite::eta, ell, n);
            merge_suite(outcome, Suite::duality, ell, n);
        }
        criterion(6, "correspondence maps: multiplicativity, relation checks, duality, center "
                     "basis, all n <= ell <= 5 plus (6,2), (6,3)",
                  outcome);
    }

    {
        Outcome outcome;
        std::mt19937_64 rng(0);
        const NilHeckeAlgebra algebras[] = {NilHeckeAlgebra::free_algebra(2),
                                            NilHeckeAlgebra::free_algebra(3),
                                            NilHeckeAlgebra::cyclotomic(4, 2)};
        int round_trip_checked = 0;
        for (const auto& algebra : algebras)
            for (int t = 0; t < 67 && outcome.ok; ++t) {
                const NilHeckeElement x = random_element(rng, algebra);
                const std::string printed = to_text(x);
                try {
                    const NilHeckeElement reparsed = parse_element(algebra, printed);
                    ++round_trip_checked;
                    if (!(reparsed == x && to_text(reparsed) == printed))
                        outcome.absorb(false, "print/parse round trip broke on: " + printed);
                    if (!(element_from_json(element_to_json(x)) == x))
                        outcome.absorb(false, "JSON round trip broke on: " + printed);
                } catch (const std::exception& error) {
                    outcome.absorb(false, std::string("round trip threw: ") + error.what() +
                                              " on: " + printed);
                }
            }
        if (outcome.ok && round_trip_checked < 200)
            outcome.absorb(false,
                           "only " + std::to_string(round_trip_checked) + " round trips ran");
        const NilHeckeElement big = NilHeckeElement::gen_y(algebras[0], 1)
                                        .scaled(parse_decimal("90000000000000000000000000000001"));
        if (!(element_from_json(element_to_json(big)) == big))
            outcome.absorb(false, "JSON round trip broke on a 32-digit coefficient");

        if (binary.empty()) {
            outcome.absorb(false, "no CLI binary path supplied on the command line");
        } else {
            const int verify_rc = run_cli(binary, "verify --suite all --ell 4 --n 2");
            if (verify_rc != 0)
                outcome.absorb(false, "verify --suite all --ell 4 --n 2 exited with " +
                                          std::to_string(verify_rc));
            const int usage_rc = run_cli(binary, "normal-form --n 2 'psi[3]'");
            if (usage_rc != 2)
                outcome.absorb(false, "out-of-range generator index exited with " +
                                          std::to_string(usage_rc) + ", wanted 2");
            const int bad_flag_rc = run_cli(binary, "verify --no-such-flag");
            if (bad_flag_rc != 2)
                outcome.absorb(false, "unknown flag exited with " + std::to_string(bad_flag_rc) +
                                          ", wanted 2");
        }
        criterion(7, "command-line contract: canonical round trips, JSON round trips, verify "
                     "exit status",
                  outcome);
    }

    if (failed == 0)
        std::cout << "acceptance: all 7 criteria passed\n";
    else
        std::cout << "acceptance: " << failed << " of 7 criteria FAILED\n";
    return failed;
}
