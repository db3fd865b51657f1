#include "nilschur/sympoly.hpp"

#include <algorithm>
#include <numeric>

#include "nilschur/errors.hpp"

namespace nilschur {

// --- IntPolynomial ----------------------------------------------------------

IntPolynomial::IntPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0)
        throw InvalidInput("polynomial variable count must be nonnegative");
}

IntPolynomial IntPolynomial::constant(int nvars, Int value) {
    IntPolynomial p(nvars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), value);
    return p;
}

IntPolynomial IntPolynomial::variable(int nvars, int index) {
    if (index < 1 || index > nvars)
        throw InvalidInput("variable index out of range 1..nvars");
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    exps[static_cast<std::size_t>(index - 1)] = 1;
    return monomial(nvars, std::move(exps), 1);
}

IntPolynomial IntPolynomial::monomial(int nvars, std::vector<int> exps, Int coeff) {
    IntPolynomial p(nvars);
    p.add_term(exps, coeff);
    return p;
}

Int IntPolynomial::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Int(0) : it->second;
}

void IntPolynomial::add_term(const std::vector<int>& exps, const Int& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw InvalidInput("exponent vector length does not match variable count");
    for (int e : exps)
        if (e < 0)
            throw InvalidInput("monomial exponents must be nonnegative");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    if (nvars_ != other.nvars_)
        throw InvalidInput("polynomial variable counts differ");
    IntPolynomial out = *this;
    for (const auto& [exps, c] : other.terms_)
        out.add_term(exps, c);
    return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
    if (nvars_ != other.nvars_)
        throw InvalidInput("polynomial variable counts differ");
    IntPolynomial out = *this;
    for (const auto& [exps, c] : other.terms_)
        out.add_term(exps, -c);
    return out;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out(nvars_);
    for (const auto& [exps, c] : terms_)
        out.terms_.emplace(exps, -c);
    return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (nvars_ != other.nvars_)
        throw InvalidInput("polynomial variable counts differ");
    IntPolynomial out(nvars_);
    std::vector<int> exps(static_cast<std::size_t>(nvars_));
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            for (std::size_t i = 0; i < exps.size(); ++i)
                exps[i] = e1[i] + e2[i];
            out.add_term(exps, c1 * c2);
        }
    }
    return out;
}

IntPolynomial IntPolynomial::scaled(const Int& factor) const {
    IntPolynomial out(nvars_);
    if (factor == 0)
        return out;
    for (const auto& [exps, c] : terms_)
        out.terms_.emplace(exps, c * factor);
    return out;
}

int IntPolynomial::total_degree() const {
    int best = -1;
    for (const auto& [exps, c] : terms_)
        best = std::max(best, std::accumulate(exps.begin(), exps.end(), 0));
    return best;
}

bool IntPolynomial::is_homogeneous(int* degree) const {
    int common = 0;
    bool first = true;
    for (const auto& [exps, c] : terms_) {
        const int d = std::accumulate(exps.begin(), exps.end(), 0);
        if (first) {
            common = d;
            first = false;
        } else if (d != common) {
            return false;
        }
    }
    if (degree)
        *degree = common;
    return true;
}

bool IntPolynomial::is_symmetric() const {
    for (int r = 1; r < nvars_; ++r)
        if (act_perm(Permutation::adjacent_transposition(nvars_, r), *this) != *this)
            return false;
    return true;
}

std::string format_y_monomial(const std::vector<int>& exps) {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'y' + std::to_string(i + 1);
        if (exps[i] > 1)
            out += '^' + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

bool graded_lex_before(const std::vector<int>& a, const std::vector<int>& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da > db;
    return a > b;
}

std::string IntPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<const std::pair<const std::vector<int>, Int>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_)
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return graded_lex_before(a->first, b->first); });
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& [exps, c] = *order[i];
        const Int mag = c < 0 ? Int(-c) : c;
        const std::string body = format_y_monomial(exps);
        std::string piece;
        if (mag != 1 || body == "1")
            piece = to_decimal(mag) + (body == "1" ? "" : "*" + body);
        else
            piece = body;
        if (i == 0)
            out += (c < 0 ? "-" : "") + piece;
        else
            out += (c < 0 ? " - " : " + ") + piece;
    }
    return out;
}

// --- classical bases --------------------------------------------------------

namespace {

void elementary_rec(int n, int k, int next, std::vector<int>& exps, IntPolynomial& out) {
    if (k == 0) {
        out.add_term(exps, 1);
        return;
    }
    for (int i = next; i <= n - k + 1; ++i) {
        exps[static_cast<std::size_t>(i - 1)] = 1;
        elementary_rec(n, k - 1, i + 1, exps, out);
        exps[static_cast<std::size_t>(i - 1)] = 0;
    }
}

void complete_rec(int n, int index, int remaining, std::vector<int>& exps, IntPolynomial& out) {
    if (index == n) {
        exps[static_cast<std::size_t>(n - 1)] = remaining;
        out.add_term(exps, 1);
        exps[static_cast<std::size_t>(n - 1)] = 0;
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        exps[static_cast<std::size_t>(index - 1)] = v;
        complete_rec(n, index + 1, remaining - v, exps, out);
        exps[static_cast<std::size_t>(index - 1)] = 0;
    }
}

/// Determinant of a polynomial matrix by first-row expansion with zero pruning.
IntPolynomial poly_det(const std::vector<std::vector<IntPolynomial>>& rows, int nvars) {
    const std::size_t size = rows.size();
    if (size == 0)
        return IntPolynomial::one(nvars);
    if (size == 1)
        return rows[0][0];
    IntPolynomial out(nvars);
    for (std::size_t j = 0; j < size; ++j) {
        if (rows[0][j].is_zero())
            continue;
        std::vector<std::vector<IntPolynomial>> minor;
        minor.reserve(size - 1);
        for (std::size_t i = 1; i < size; ++i) {
            std::vector<IntPolynomial> row;
            row.reserve(size - 1);
            for (std::size_t jj = 0; jj < size; ++jj)
                if (jj != j)
                    row.push_back(rows[i][jj]);
            minor.push_back(std::move(row));
        }
        IntPolynomial cof = rows[0][j] * poly_det(minor, nvars);
        out = j % 2 == 0 ? out + cof : out - cof;
    }
    return out;
}

/// Exact quotient of f by (y_p - y_q), p < q.  Synthetic division: rewrite
/// each y_p^a as (y_p - y_q) * sum_{d<a} y_p^d y_q^{a-1-d} + y_q^a and drop
/// the substitution remainder f|_{y_p -> y_q}.  The caller certifies
/// exactness by multiplying back.
IntPolynomial divide_by_variable_difference(const IntPolynomial& f, int p, int q) {
    IntPolynomial out(f.nvars());
    for (const auto& [exps, c] : f.terms()) {
        const int a = exps[static_cast<std::size_t>(p - 1)];
        std::vector<int> e = exps;
        for (int d = 0; d < a; ++d) {
            e[static_cast<std::size_t>(p - 1)] = d;
            e[static_cast<std::size_t>(q - 1)] = exps[static_cast<std::size_t>(q - 1)] + a - 1 - d;
            out.add_term(e, c);
        }
    }
    return out;
}

IntPolynomial schur_jacobi_trudi_h(const Partition& shape, int n) {
    std::vector<std::vector<IntPolynomial>> rows;
    for (int i = 1; i <= n; ++i) {
        std::vector<IntPolynomial> row;
        for (int j = 1; j <= n; ++j)
            row.push_back(complete(shape.part(i) - i + j, n));
        rows.push_back(std::move(row));
    }
    return poly_det(rows, n);
}

IntPolynomial schur_jacobi_trudi_e(const Partition& shape, int n) {
    const Partition conj = shape.conjugate();
    const int size = conj.length();
    std::vector<std::vector<IntPolynomial>> rows;
    for (int i = 1; i <= size; ++i) {
        std::vector<IntPolynomial> row;
        for (int j = 1; j <= size; ++j)
            row.push_back(elementary(conj.part(i) - i + j, n));
        rows.push_back(std::move(row));
    }
    return poly_det(rows, n);
}

/// Signed sum over S_n of monomials with exponents mu permuted into position:
/// sum_w sgn(w) prod_i y_{w(i)}^{mu_i}.
IntPolynomial alternant(const std::vector<int>& mu, int n) {
    IntPolynomial out(n);
    for (const auto& w : all_permutations(n)) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        for (int i = 1; i <= n; ++i)
            exps[static_cast<std::size_t>(w.image(i) - 1)] = mu[static_cast<std::size_t>(i - 1)];
        out.add_term(exps, w.length() % 2 == 0 ? 1 : -1);
    }
    return out;
}

IntPolynomial schur_bialternant(const Partition& shape, int n) {
    std::vector<int> staircase(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        staircase[static_cast<std::size_t>(i - 1)] = shape.part(i) + n - i;
    const IntPolynomial numerator = alternant(staircase, n);
    IntPolynomial quotient = numerator;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            quotient = divide_by_variable_difference(quotient, p, q);
    // Certify the chain of exact divisions in one multiplication.
    IntPolynomial rebuilt = quotient;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            rebuilt = rebuilt * (IntPolynomial::variable(n, p) - IntPolynomial::variable(n, q));
    if (rebuilt != numerator)
        throw ConsistencyError("bialternant: Vandermonde division was not exact for " +
                               shape.to_string());
    return quotient;
}

} // namespace

IntPolynomial elementary(int k, int n) {
    if (n < 0)
        throw InvalidInput("elementary: negative variable count");
    IntPolynomial out(n);
    if (k < 0 || k > n)
        return out;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    elementary_rec(n, k, 1, exps, out);
    return out;
}

IntPolynomial complete(int s, int n) {
    if (n < 0)
        throw InvalidInput("complete: negative variable count");
    IntPolynomial out(n);
    if (s < 0)
        return out;
    if (n == 0)
        return s == 0 ? IntPolynomial::one(0) : out;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    complete_rec(n, 1, s, exps, out);
    return out;
}

IntPolynomial schur(const Partition& shape, int n, SchurMethod method) {
    if (n < 0)
        throw InvalidInput("schur: negative variable count");
    if (shape.length() > n)
        return IntPolynomial(n);
    switch (method) {
    case SchurMethod::jacobi_trudi_h:
        return schur_jacobi_trudi_h(shape, n);
    case SchurMethod::jacobi_trudi_e:
        return schur_jacobi_trudi_e(shape, n);
    case SchurMethod::bialternant:
        return schur_bialternant(shape, n);
    }
    throw InvalidInput("schur: unknown method");
}

IntPolynomial divided_difference(int r, const IntPolynomial& f) {
    if (r < 1 || r >= f.nvars())
        throw InvalidInput("divided_difference: index out of range 1..nvars-1");
    const IntPolynomial numerator =
        act_perm(Permutation::adjacent_transposition(f.nvars(), r), f) - f;
    const IntPolynomial quotient = divide_by_variable_difference(numerator, r, r + 1);
    const IntPolynomial difference =
        IntPolynomial::variable(f.nvars(), r) - IntPolynomial::variable(f.nvars(), r + 1);
    if (quotient * difference != numerator)
        throw ConsistencyError("divided_difference: division left a remainder");
    return quotient;
}

IntPolynomial act_perm(const Permutation& w, const IntPolynomial& f) {
    if (w.n() != f.nvars())
        throw InvalidInput("act_perm: permutation size does not match variable count");
    IntPolynomial out(f.nvars());
    std::vector<int> exps(static_cast<std::size_t>(f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        for (int i = 1; i <= f.nvars(); ++i)
            exps[static_cast<std::size_t>(w.image(i) - 1)] = e[static_cast<std::size_t>(i - 1)];
        out.add_term(exps, c);
    }
    return out;
}

SchurExpansion expand_in_schur(const IntPolynomial& f) {
    if (!f.is_symmetric())
        throw InvalidInput("expand_in_schur: polynomial is not symmetric");
    SchurExpansion out{f.nvars(), {}};
    IntPolynomial rest = f;
    // A symmetric polynomial's lexicographically greatest exponent vector is
    // weakly decreasing, and subtracting that multiple of the matching Schur
    // polynomial strictly lowers it, so this terminates.
    int guard = 0;
    while (!rest.is_zero()) {
        const std::vector<int> exps = rest.terms().rbegin()->first;
        const Int c = rest.terms().rbegin()->second;
        for (std::size_t i = 1; i < exps.size(); ++i)
            if (exps[i] > exps[i - 1])
                throw ConsistencyError("expand_in_schur: leading exponent not dominant");
        const Partition shape(exps);
        if (!out.coeffs.emplace(shape, c).second)
            throw ConsistencyError("expand_in_schur: leading shape repeated");
        rest = rest - schur(shape, f.nvars()).scaled(c);
        if (++guard > 200000)
            throw ConsistencyError("expand_in_schur: failed to terminate");
    }
    return out;
}

IntPolynomial schur_combination(const SchurExpansion& expansion) {
    IntPolynomial out(expansion.nvars);
    for (const auto& [shape, c] : expansion.coeffs)
        out = out + schur(shape, expansion.nvars).scaled(c);
    return out;
}

IntPolynomial eh_alternating_residual(int m, int n) {
    if (n < 0)
        throw InvalidInput("eh_alternating_residual: negative variable count");
    IntPolynomial out(n);
    if (m < 0)
        return out;
    for (int s = 0; s <= std::min(n, m); ++s) {
        const IntPolynomial piece = elementary(s, n) * complete(m - s, n);
        out = s % 2 == 0 ? out + piece : out - piece;
    }
    return out;
}

} // namespace nilschur
