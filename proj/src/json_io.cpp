#include "nilschur/json_io.hpp"

#include <algorithm>
#include <vector>

#include "nilschur/errors.hpp"

namespace nilschur {

namespace {

std::vector<int> int_vector(const nlohmann::json& j, const char* what) {
    if (!j.is_array())
        throw InvalidInput(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_number_integer())
            throw InvalidInput(std::string(what) + " must contain only integers");
        out.push_back(entry.get<int>());
    }
    return out;
}

Int coeff_of(const nlohmann::json& term) {
    const auto it = term.find("coeff");
    if (it == term.end() || !it->is_string())
        throw InvalidInput("each term needs a \"coeff\" decimal string");
    return parse_decimal(it->get<std::string>());
}

} // namespace

nlohmann::json element_to_json(const NilHeckeElement& x) {
    nlohmann::json out;
    out["flavor"] = x.algebra().is_cyclotomic() ? "cyclotomic" : "free";
    out["ell"] = x.algebra().ell;
    out["n"] = x.algebra().n;

    std::vector<const std::pair<const NilHeckeElement::TermKey, Int>*> order;
    order.reserve(x.terms().size());
    for (const auto& t : x.terms())
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto* a, auto* b) { return canonical_term_before(a->first, b->first); });

    nlohmann::json terms = nlohmann::json::array();
    for (const auto* t : order) {
        nlohmann::json term;
        term["perm"] = t->first.first.one_line();
        term["exps"] = t->first.second;
        term["coeff"] = to_decimal(t->second);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

NilHeckeElement element_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw InvalidInput("element JSON must be an object");
    const auto flavor = j.find("flavor");
    const auto ell = j.find("ell");
    const auto n = j.find("n");
    const auto terms = j.find("terms");
    if (flavor == j.end() || !flavor->is_string() || ell == j.end() ||
        !ell->is_number_integer() || n == j.end() || !n->is_number_integer() ||
        terms == j.end() || !terms->is_array())
        throw InvalidInput("element JSON needs \"flavor\", \"ell\", \"n\", \"terms\"");

    NilHeckeAlgebra algebra;
    const std::string flavor_name = flavor->get<std::string>();
    if (flavor_name == "free")
        algebra = NilHeckeAlgebra::free_algebra(n->get<int>());
    else if (flavor_name == "cyclotomic")
        algebra = NilHeckeAlgebra::cyclotomic(ell->get<int>(), n->get<int>());
    else
        throw InvalidInput("unknown flavor \"" + flavor_name + "\"");
    if (!algebra.is_cyclotomic() && ell->get<int>() != 0)
        throw InvalidInput("free flavor must carry ell = 0");

    NilHeckeElement out(algebra);
    for (const auto& term : *terms) {
        if (!term.is_object())
            throw InvalidInput("each term must be an object");
        const Permutation w(int_vector(term.at("perm"), "\"perm\""));
        std::vector<int> exps = int_vector(term.at("exps"), "\"exps\"");
        if (static_cast<int>(exps.size()) != algebra.n)
            throw InvalidInput("\"exps\" length must equal n");
        for (const int e : exps)
            if (e < 0)
                throw InvalidInput("\"exps\" entries must be nonnegative");
        out = out +
              NilHeckeElement::basis_word(algebra, w, std::move(exps)).scaled(coeff_of(term));
    }
    return out;
}

nlohmann::json class_to_json(const CohomologyClass& x) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& [entries, coeff] : x.terms()) {
        nlohmann::json item;
        item["index"] = entries;
        item["coeff"] = to_decimal(coeff);
        classes.push_back(std::move(item));
    }
    nlohmann::json out;
    out["classes"] = std::move(classes);
    return out;
}

CohomologyClass class_from_json(const nlohmann::json& j, const GrassmannRing& ring) {
    if (!j.is_object() || !j.contains("classes") || !j.at("classes").is_array())
        throw InvalidInput("class JSON needs a \"classes\" array");
    CohomologyClass out(ring);
    for (const auto& item : j.at("classes")) {
        if (!item.is_object())
            throw InvalidInput("each class must be an object");
        out.add_term(int_vector(item.at("index"), "\"index\""), coeff_of(item));
    }
    return out;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases) {
        nlohmann::json item;
        item["name"] = c.name;
        item["passed"] = c.passed;
        item["witness"] = c.witness;
        cases.push_back(std::move(item));
    }
    nlohmann::json out;
    out["title"] = report.title;
    out["passed"] = report.all_passed();
    out["cases"] = std::move(cases);
    return out;
}

} // namespace nilschur
