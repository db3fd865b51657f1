#include "nilschur/expr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nilschur/errors.hpp"

namespace nilschur {

namespace {

/// Recursive-descent reader over one expression string.
class ElementParser {
public:
    ElementParser(const NilHeckeAlgebra& algebra, const std::string& text)
        : algebra_(algebra), text_(text) {}

    NilHeckeElement run() {
        NilHeckeElement value = expression();
        skip_ws();
        if (pos_ != text_.size())
            throw ExprError(pos_, "unexpected trailing input");
        return value;
    }

private:
    NilHeckeElement expression() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        NilHeckeElement acc = term();
        if (negate)
            acc = -acc;
        while (true) {
            skip_ws();
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    NilHeckeElement term() {
        NilHeckeElement acc = factor();
        while (true) {
            skip_ws();
            if (peek() != '*')
                return acc;
            ++pos_;
            acc = acc * factor();
        }
    }

    NilHeckeElement factor() {
        skip_ws();
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            NilHeckeElement inner = expression();
            skip_ws();
            if (peek() != ')')
                throw ExprError(pos_, "expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return NilHeckeElement::unit(algebra_).scaled(big_literal());
        if (c == 'y')
            return variable();
        if (c == 'p')
            return psi_word();
        throw ExprError(pos_, "expected a number, y<k>, psi[...], or '('");
    }

    NilHeckeElement variable() {
        ++pos_; // past 'y'
        const std::size_t at = pos_;
        const int k = small_literal("variable index");
        if (k < 1 || k > algebra_.n)
            throw ExprError(at, "variable index " + std::to_string(k) + " out of range 1.." +
                                    std::to_string(algebra_.n));
        int e = 1;
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            e = small_literal("exponent");
        }
        std::vector<int> exps(static_cast<std::size_t>(algebra_.n), 0);
        exps[static_cast<std::size_t>(k - 1)] = e;
        return NilHeckeElement::basis_word(algebra_, Permutation::identity(algebra_.n),
                                           std::move(exps));
    }

    NilHeckeElement psi_word() {
        if (text_.compare(pos_, 3, "psi") != 0)
            throw ExprError(pos_, "expected 'psi'");
        pos_ += 3;
        skip_ws();
        if (peek() != '[')
            throw ExprError(pos_, "expected '[' after psi");
        ++pos_;
        NilHeckeElement acc = NilHeckeElement::unit(algebra_);
        while (true) {
            skip_ws();
            const std::size_t at = pos_;
            const int r = small_literal("generator index");
            if (r < 1 || r > algebra_.n - 1)
                throw ExprError(at, "psi index " + std::to_string(r) + " out of range 1.." +
                                        std::to_string(algebra_.n - 1));
            acc = acc * NilHeckeElement::gen_psi(algebra_, r);
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ']') {
                ++pos_;
                return acc;
            }
            throw ExprError(pos_, "expected ',' or ']' in psi word");
        }
    }

    Int big_literal() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return parse_decimal(text_.substr(start, pos_ - start));
    }

    int small_literal(const char* what) {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start)
            throw ExprError(start, std::string("expected ") + what);
        if (pos_ - start > 6)
            throw ExprError(start, std::string(what) + " is unreasonably large");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const NilHeckeAlgebra& algebra_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

NilHeckeElement parse_element(const NilHeckeAlgebra& algebra, const std::string& text) {
    return ElementParser(algebra, text).run();
}

std::vector<int> parse_int_tuple(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_ws();
    bool parenthesized = false;
    if (pos < text.size() && text[pos] == '(') {
        parenthesized = true;
        ++pos;
    }
    std::vector<int> out;
    skip_ws();
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos - start > 6)
            throw ExprError(start, "entry is unreasonably large");
        out.push_back(std::stoi(text.substr(start, pos - start)));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip_ws();
            if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ExprError(pos, "expected an entry after ','");
        }
    }
    if (parenthesized) {
        if (pos == text.size() || text[pos] != ')')
            throw ExprError(pos, "expected ')'");
        ++pos;
        skip_ws();
    }
    if (pos != text.size())
        throw ExprError(pos, "unexpected trailing input");
    return out;
}

namespace {

/// Joins signed pieces: sign handling for the leading term differs from the
/// " + " / " - " separators between terms.
std::string join_signed(const std::vector<std::pair<bool, std::string>>& pieces) {
    if (pieces.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& [negative, body] = pieces[i];
        if (i == 0)
            out += (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

std::string magnitude_prefix(const Int& coeff, bool body_is_trivial) {
    const Int mag = coeff < 0 ? Int(-coeff) : coeff;
    if (body_is_trivial)
        return to_decimal(mag);
    if (mag == 1)
        return "";
    return to_decimal(mag) + "*";
}

} // namespace

std::string to_text(const NilHeckeElement& x) {
    std::vector<const std::pair<const NilHeckeElement::TermKey, Int>*> order;
    order.reserve(x.terms().size());
    for (const auto& t : x.terms())
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return canonical_term_before(a->first, b->first); });

    std::vector<std::pair<bool, std::string>> pieces;
    pieces.reserve(order.size());
    for (const auto* t : order) {
        const auto& [key, coeff] = *t;
        std::vector<std::string> factors;
        if (!key.first.is_identity()) {
            std::string word = "psi[";
            const std::vector<int> letters = reduced_word(key.first);
            for (std::size_t i = 0; i < letters.size(); ++i)
                word += (i ? "," : "") + std::to_string(letters[i]);
            factors.push_back(word + "]");
        }
        if (const std::string mono = format_y_monomial(key.second); mono != "1")
            factors.push_back(mono);
        std::string body = magnitude_prefix(coeff, factors.empty());
        for (std::size_t i = 0; i < factors.size(); ++i)
            body += (i ? "*" : "") + factors[i];
        pieces.emplace_back(coeff < 0, std::move(body));
    }
    return join_signed(pieces);
}

std::string to_text(const CohomologyClass& x) {
    std::vector<const std::pair<const std::vector<int>, Int>*> order;
    order.reserve(x.terms().size());
    for (const auto& t : x.terms())
        order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        const int da = std::accumulate(a->first.begin(), a->first.end(), 0);
        const int db = std::accumulate(b->first.begin(), b->first.end(), 0);
        if (da != db)
            return da < db;
        return a->first < b->first;
    });

    std::vector<std::pair<bool, std::string>> pieces;
    pieces.reserve(order.size());
    for (const auto* t : order) {
        const auto& [entries, coeff] = *t;
        std::string label = "(";
        for (std::size_t i = 0; i < entries.size(); ++i)
            label += (i ? "," : "") + std::to_string(entries[i]);
        label += ")";
        pieces.emplace_back(coeff < 0, magnitude_prefix(coeff, false) + label);
    }
    return join_signed(pieces);
}

std::string to_text(const SchurExpansion& x) {
    std::vector<const std::pair<const Partition, Int>*> order;
    order.reserve(x.coeffs.size());
    for (const auto& t : x.coeffs)
        order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        if (a->first.size() != b->first.size())
            return a->first.size() < b->first.size();
        return b->first < a->first;
    });
    std::vector<std::pair<bool, std::string>> pieces;
    pieces.reserve(order.size());
    for (const auto* t : order)
        pieces.emplace_back(t->second < 0,
                            magnitude_prefix(t->second, false) + "s" + t->first.to_string());
    return join_signed(pieces);
}

std::string to_text(const IntPolynomial& f) { return f.to_string(); }

std::string to_text(const BasicAlgebraElement& x) { return x.to_string(); }

} // namespace nilschur
