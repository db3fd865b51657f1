#pragma once

#include <cstdint>
#include <string>

#include "nilschur/report.hpp"

namespace nilschur {

/// The verification suites exposed by the command line.  Each one checks a
/// family of identities at a single parameter point (ell, n); `all` runs
/// every suite at that point.
enum class Suite {
    free_relations, // defining relations, star, associativity (free flavor)
    cyclotomic,     // quotient dimension, vanishing sums, normal form
    schur,          // polynomial-level Schur machinery
    s_lambda,       // S elements modulo leading-psi terms
    b_lambda,       // b elements: commutativity, Pieri, determinants
    grassmann,      // Schubert-basis ring against the polynomial oracle
    eta,            // cohomology -> basic algebra correspondence
    duality,        // the mirrored correspondence and the center
    all,
};

/// Accepts the hyphenated command-line names ("free-relations", "b-lambda",
/// ..., "all"); throws InvalidInput for anything else.
Suite suite_from_string(const std::string& name);

std::string suite_name(Suite suite);

/// Runs one suite.  Parameter use varies: free_relations / schur / s_lambda
/// read only n; grassmann allows n = 0..ell; the rest need 1 <= n <= ell.
/// Randomized cases draw from a std::mt19937_64 seeded with `seed`, so equal
/// seeds give byte-identical reports.
VerificationReport run_suite(Suite suite, int ell, int n, std::uint64_t seed);

} // namespace nilschur
