#include "hilb/json_io.hpp"

#include <sstream>

namespace hilb {

namespace {

Json exponent_to_json(const ExponentVector& a) {
    return Json(a.exponents());
}

ExponentVector exponent_from_json(const Json& j, int n = -1) {
    if (j.is_string())
        return parse_monomial(j.get<std::string>(), n);
    if (!j.is_array())
        throw DomainError("expected an exponent array or monomial string");
    std::vector<int> e;
    for (const auto& item : j)
        e.push_back(item.get<int>());
    return ExponentVector(std::move(e));
}

Json difference_to_json(const DifferenceVector& k) {
    return Json(k.entries());
}

} // namespace

Json monomial_set_to_json(const MonomialSet& s) {
    Json members = Json::array();
    for (const ExponentVector& a : s.members())
        members.push_back(exponent_to_json(a));
    return Json{{"m", s.poset().m()}, {"n", s.poset().n()}, {"members", members}};
}

MonomialSet monomial_set_from_json(const Json& j, std::size_t cap) {
    int m = j.at("m").get<int>();
    int n = j.at("n").get<int>();
    auto poset = PosetPmn::build(m, n, cap);
    std::vector<ExponentVector> members;
    for (const auto& item : j.at("members"))
        members.push_back(exponent_from_json(item, n));
    return MonomialSet(poset, members);
}

Json ideal_to_json(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const ExponentVector& g : ideal.generators())
        gens.push_back(exponent_to_json(g));
    return Json{{"n", ideal.n()}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<ExponentVector> gens;
    for (const auto& item : j.at("generators"))
        gens.push_back(exponent_from_json(item, n));
    return MonomialIdeal(n, std::move(gens));
}

Json hilbert_polynomial_to_json(const HilbertPolynomial& rho) {
    Json coeffs = Json::array();
    for (const Rat& c : rho.coefficients())
        coeffs.push_back(rational_to_string(c));
    return coeffs;
}

HilbertPolynomial hilbert_polynomial_from_json(const Json& j) {
    std::vector<Rat> coeffs;
    for (const auto& item : j)
        coeffs.push_back(parse_rational(item.get<std::string>()));
    return HilbertPolynomial::from_coefficients(std::move(coeffs));
}

HilbertPolynomial parse_hilbert_polynomial(const std::string& text) {
    std::vector<Rat> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(parse_rational(item));
    if (coeffs.empty())
        throw DomainError("empty polynomial coefficient list");
    return HilbertPolynomial::from_coefficients(std::move(coeffs));
}

Json weight_vector_to_json(const WeightVector& w) {
    Json out = Json::array();
    for (const Int& x : w.weights())
        out.push_back(x.get_str());
    return out;
}

WeightVector parse_weight_vector(const std::string& comma_list) {
    std::vector<Int> w;
    std::stringstream ss(comma_list);
    std::string item;
    while (std::getline(ss, item, ','))
        w.push_back(parse_integer(item));
    return WeightVector(std::move(w));
}

Json tangent_vector_to_json(const TangentVector& v) {
    Json entries = Json::array();
    for (const auto& e : v.entry_list())
        entries.push_back(Json{{"A", exponent_to_json(e.A)},
                               {"B", exponent_to_json(e.B)},
                               {"c", rational_to_string(e.c)}});
    return Json{{"filter", monomial_set_to_json(v.base())}, {"entries", entries}};
}

TangentVector tangent_vector_from_json(const Json& j, std::size_t cap) {
    MonomialSet base = monomial_set_from_json(j.at("filter"), cap);
    std::vector<TangentVector::Entry> entries;
    const int n = base.poset().n();
    for (const auto& item : j.at("entries"))
        entries.push_back(TangentVector::Entry{exponent_from_json(item.at("A"), n),
                                               exponent_from_json(item.at("B"), n),
                                               parse_rational(item.at("c").get<std::string>())});
    return TangentVector(std::move(base), entries);
}

Json eigenvector_type_to_json(const EigenvectorType& type) {
    return Json{{"K", difference_to_json(type.K)},
                {"F_prime", monomial_set_to_json(type.f_prime)},
                {"F_double_prime", monomial_set_to_json(type.f_double_prime)}};
}

Json borel_eigenvector_to_json(const BorelEigenvector& family) {
    Json comps = Json::array();
    for (const auto& comp : family.components) {
        Json c = Json::array();
        for (const ExponentVector& a : comp)
            c.push_back(exponent_to_json(a));
        comps.push_back(c);
    }
    Json coeffs = Json::array();
    for (const auto& [a, c] : family.coefficients)
        coeffs.push_back(Json{{"A", exponent_to_json(a)}, {"c", rational_to_string(c)}});
    return Json{{"type", eigenvector_type_to_json(family.type)},
                {"components", comps},
                {"coefficients", coeffs}};
}

Json degeneration_report_to_json(const DegenerationReport& report) {
    Json out{{"limit_filter", monomial_set_to_json(report.limit)},
             {"borel_fixed_limit", report.borel_fixed_limit},
             {"at_fixed_point", report.at_fixed_point},
             {"genericity_note", report.genericity_note}};
    out["K"] = report.K ? difference_to_json(*report.K) : Json(nullptr);
    out["tangent"] = report.tangent ? tangent_vector_to_json(*report.tangent) : Json(nullptr);
    out["borel_eigenvector_tangent"] =
        report.borel_eigenvector_tangent ? Json(*report.borel_eigenvector_tangent)
                                         : Json(nullptr);
    out["is_tangent"] =
        report.tangent_is_flat ? Json(*report.tangent_is_flat) : Json(nullptr);
    return out;
}

Json fan_records_to_json(const std::vector<FanRecord>& records) {
    Json out = Json::array();
    for (const FanRecord& rec : records) {
        Json item{{"weight", weight_vector_to_json(rec.w)},
                  {"limit_filter", monomial_set_to_json(rec.limit)}};
        item["type"] = rec.type ? eigenvector_type_to_json(*rec.type) : Json(nullptr);
        out.push_back(item);
    }
    return out;
}

std::vector<std::vector<Rat>> parse_points_text(const std::string& text) {
    std::vector<std::vector<Rat>> points;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::stringstream ls(line);
        std::vector<Rat> point;
        std::string tok;
        while (ls >> tok)
            point.push_back(parse_rational(tok));
        if (!point.empty())
            points.push_back(std::move(point));
    }
    if (points.empty())
        throw DomainError("no points found");
    return points;
}

std::vector<Form> forms_from_ideal_json(const Json& j, int& n_out) {
    n_out = j.at("n").get<int>();
    std::vector<Form> forms;
    for (const auto& item : j.at("generators")) {
        if (item.is_string()) {
            forms.push_back(parse_form(item.get<std::string>(), n_out));
        } else {
            forms.push_back(form_monomial(exponent_from_json(item)));
        }
    }
    if (forms.empty())
        throw DomainError("ideal has no generators");
    return forms;
}

} // namespace hilb
