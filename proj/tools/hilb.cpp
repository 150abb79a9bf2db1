#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hilb/json_io.hpp"

namespace {

using namespace hilb;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_input(path));
    } catch (const Json::parse_error& e) {
        throw DomainError(std::string("malformed JSON input: ") + e.what());
    }
}

struct Output {
    std::string mode = "json"; // json | text
    void emit(const Json& j, const std::string& text) const {
        if (mode == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
    }
};

std::string describe_filter(const MonomialSet& s) {
    std::string out = "{";
    bool first = true;
    for (const ExponentVector& a : s.members()) {
        if (!first)
            out += ", ";
        out += format_monomial(a);
        first = false;
    }
    return out + "}";
}

std::string describe_gens(const MonomialIdeal& ideal) {
    std::string out = "(";
    bool first = true;
    for (const ExponentVector& g : ideal.generators()) {
        if (!first)
            out += ", ";
        out += format_monomial(g);
        first = false;
    }
    return out + ")";
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations on Borel-fixed points of Hilbert schemes"};
    app.require_subcommand(1);
    Output output;
    app.add_option("--output", output.mode, "output mode: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    std::size_t cap = 1'000'000;
    app.add_option("--cap", cap, "poset size limit")->capture_default_str();

    // gotzmann
    auto* cmd_gotzmann = app.add_subcommand("gotzmann", "Macaulay form and Gotzmann number");
    std::string poly_text;
    cmd_gotzmann->add_option("--poly", poly_text,
                             "Hilbert polynomial coefficients, lowest first (e.g. 1,2)")
        ->required();

    // enumerate-borel
    auto* cmd_enum = app.add_subcommand("enumerate-borel",
                                        "Borel-fixed points of Hilb for a Hilbert polynomial");
    std::string enum_poly;
    int enum_n = 0;
    cmd_enum->add_option("--poly", enum_poly, "Hilbert polynomial coefficients")->required();
    cmd_enum->add_option("--n", enum_n, "ambient projective space index n")->required();

    // eigenvectors
    auto* cmd_eigen = app.add_subcommand("eigenvectors",
                                         "Borel eigenvector families at a Borel-fixed ideal");
    std::string eigen_ideal_path;
    cmd_eigen->add_option("--ideal", eigen_ideal_path, "monomial ideal JSON file ('-' = stdin)")
        ->required();

    // tangent-check
    auto* cmd_tangent = app.add_subcommand("tangent-check",
                                           "flatness and eigenvector tests for a tangent vector");
    std::string tangent_path, tangent_poly;
    cmd_tangent->add_option("--vector", tangent_path, "tangent vector JSON file ('-' = stdin)")
        ->required();
    cmd_tangent->add_option("--poly", tangent_poly, "Hilbert polynomial coefficients")
        ->required();

    // degenerate
    auto* cmd_degen = app.add_subcommand("degenerate",
                                         "weight-vector degeneration with verdicts");
    std::string degen_ideal, degen_points, degen_poly, degen_weight;
    std::uint64_t degen_seed = 0;
    bool degen_identity = false, degen_no_cross = false;
    cmd_degen->add_option("--ideal", degen_ideal, "polynomial ideal JSON file ('-' = stdin)");
    cmd_degen->add_option("--points", degen_points, "points file (one point per line)");
    cmd_degen->add_option("--poly", degen_poly, "Hilbert polynomial coefficients");
    cmd_degen->add_option("--weight", degen_weight, "weight vector w0,w1,... (default: Lex)");
    cmd_degen->add_option("--seed", degen_seed, "seed for the generic coordinate change");
    cmd_degen->add_flag("--identity-g", degen_identity, "skip the generic coordinate change");
    cmd_degen->add_flag("--no-cross-check", degen_no_cross, "skip the genericity cross-check");

    // fan
    auto* cmd_fan = app.add_subcommand("fan", "first-order fan sampling");
    std::string fan_ideal, fan_points, fan_poly;
    std::uint64_t fan_seed = 0;
    int fan_trials = 10;
    cmd_fan->add_option("--ideal", fan_ideal, "polynomial ideal JSON file ('-' = stdin)");
    cmd_fan->add_option("--points", fan_points, "points file");
    cmd_fan->add_option("--poly", fan_poly, "Hilbert polynomial coefficients");
    cmd_fan->add_option("--seed", fan_seed, "seed");
    cmd_fan->add_option("--trials", fan_trials, "number of sampled weight vectors")
        ->capture_default_str();

    // flip
    auto* cmd_flip = app.add_subcommand("flip", "the isomorphism P(m,n) -> P(n,m)");
    std::string flip_mono;
    int flip_n = -1, flip_m = -1;
    cmd_flip->add_option("--monomial", flip_mono, "monomial (x0^2*x1 or [2,1,0])")->required();
    cmd_flip->add_option("--n", flip_n, "last variable index");
    cmd_flip->add_option("--m", flip_m, "degree (validated when given)");

    // poset
    auto* cmd_poset = app.add_subcommand("poset", "the poset P(m,n)");
    int poset_m = 0, poset_n = 0;
    bool poset_dot_flag = false;
    std::string poset_filter_path;
    cmd_poset->add_option("--m", poset_m, "degree")->required();
    cmd_poset->add_option("--n", poset_n, "last variable index")->required();
    cmd_poset->add_flag("--dot", poset_dot_flag, "emit a Graphviz DOT graph");
    cmd_poset->add_option("--filter", poset_filter_path, "filter JSON to highlight");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (cmd_gotzmann->parsed()) {
        HilbertPolynomial rho = parse_hilbert_polynomial(poly_text);
        MacaulayForm form = macaulay_form(rho);
        Json m_list = Json::array();
        std::string text = "m = [";
        for (std::size_t i = 0; i < form.m_list().size(); ++i) {
            m_list.push_back(form.m_list()[i].get_str());
            text += (i ? "," : "") + form.m_list()[i].get_str();
        }
        text += "]\ngotzmann = " + form.m_list().front().get_str() + "\n";
        output.emit(Json{{"poly", hilbert_polynomial_to_json(rho)},
                         {"m_list", m_list},
                         {"gotzmann", form.m_list().front().get_str()}},
                    text);
        return 0;
    }

    if (cmd_enum->parsed()) {
        HilbertPolynomial rho = parse_hilbert_polynomial(enum_poly);
        std::vector<MonomialSet> points = enumerate_borel_points(rho, enum_n, cap);
        Json arr = Json::array();
        std::string text;
        for (const MonomialSet& f : points) {
            MonomialIdeal sat = saturate_borel(MonomialIdeal(enum_n, f.members()));
            arr.push_back(Json{{"filter", monomial_set_to_json(f)},
                               {"saturation", ideal_to_json(sat)}});
            text += describe_filter(f) + "  saturation " + describe_gens(sat) + "\n";
        }
        text = "count = " + std::to_string(points.size()) + "\n" + text;
        output.emit(Json{{"count", points.size()}, {"points", arr}}, text);
        return 0;
    }

    if (cmd_eigen->parsed()) {
        MonomialIdeal ideal = ideal_from_json(read_json(eigen_ideal_path));
        if (!is_borel_fixed(ideal))
            throw DomainError("not Borel-fixed");
        int m = regularity_borel(ideal);
        auto poset = PosetPmn::build(m, ideal.n(), cap);
        MonomialSet F(poset, monomials_of_degree(ideal, m));
        HilbertPolynomial rho = hilbert_polynomial(saturate_borel(ideal));
        std::vector<BorelEigenvector> families = enumerate_borel_eigenvectors(F, rho);
        Json arr = Json::array();
        std::string text = "families = " + std::to_string(families.size()) + "\n";
        for (const BorelEigenvector& fam : families) {
            arr.push_back(borel_eigenvector_to_json(fam));
            if (fam.components.size() > 1)
                std::cerr << "note: family with " << fam.components.size()
                          << " independent components; review scalars separately\n";
            text += "K = [";
            for (int i = 0; i <= fam.type.K.last_index(); ++i)
                text += (i ? "," : "") + std::to_string(fam.type.K[i]);
            text += "]  moved ";
            std::string sep;
            for (const auto& [a, c] : fam.coefficients) {
                text += sep + format_monomial(a) + " (" + rational_to_string(c) + ")";
                sep = ", ";
            }
            text += "\n";
        }
        output.emit(Json{{"degree", m},
                         {"poly", hilbert_polynomial_to_json(rho)},
                         {"count", families.size()},
                         {"families", arr}},
                    text);
        return 0;
    }

    if (cmd_tangent->parsed()) {
        TangentVector v = tangent_vector_from_json(read_json(tangent_path), cap);
        HilbertPolynomial rho = parse_hilbert_polynomial(tangent_poly);
        bool flat = is_tangent(v, rho);
        auto type = torus_eigenvector_type(v);
        bool borel = is_borel_eigenvector(v);
        Json out{{"is_tangent", flat},
                 {"torus_eigenvector", type.has_value()},
                 {"is_borel_eigenvector", borel}};
        out["type"] = type ? eigenvector_type_to_json(*type) : Json(nullptr);
        std::string text = std::string("is_tangent = ") + (flat ? "true" : "false") +
                           "\ntorus_eigenvector = " + (type ? "true" : "false") +
                           "\nborel_eigenvector = " + (borel ? "true" : "false") + "\n";
        output.emit(out, text);
        return 0;
    }

    auto build_basis = [&](const std::string& ideal_path, const std::string& points_path,
                           const std::string& poly_str, HilbertPolynomial& rho_out)
        -> HomogeneousIdealBasis {
        if (ideal_path.empty() == points_path.empty())
            throw DomainError("exactly one of --ideal and --points is required");
        if (!ideal_path.empty()) {
            if (poly_str.empty())
                throw DomainError("--poly is required with --ideal");
            rho_out = parse_hilbert_polynomial(poly_str);
            int n = 0;
            std::vector<Form> gens = forms_from_ideal_json(read_json(ideal_path), n);
            int m = static_cast<int>(to_long(gotzmann_number(rho_out)));
            return truncate_at(gens, n, m);
        }
        std::vector<std::vector<Rat>> pts = parse_points_text(read_input(points_path));
        int n = static_cast<int>(pts.front().size()) - 1;
        rho_out = poly_str.empty()
                      ? HilbertPolynomial::from_coefficients(
                            {Rat(static_cast<long>(pts.size()))})
                      : parse_hilbert_polynomial(poly_str);
        int m = static_cast<int>(to_long(gotzmann_number(rho_out)));
        return ideal_of_points(pts, n, m);
    };

    if (cmd_degen->parsed()) {
        HilbertPolynomial rho = HilbertPolynomial::zero();
        HomogeneousIdealBasis basis = build_basis(degen_ideal, degen_points, degen_poly, rho);
        WeightVector w = degen_weight.empty()
                             ? make_lex_weight(basis.n(), basis.r() * basis.m())
                             : parse_weight_vector(degen_weight);
        DegenerateOptions opts;
        opts.seed = degen_seed;
        opts.identity_g = degen_identity;
        opts.cross_check = !degen_no_cross;
        opts.cap = cap;
        DegenerationReport rep = degenerate_report(basis, rho, w, opts);
        Json out = degeneration_report_to_json(rep);
        out["seed"] = degen_seed;
        std::string text = "limit = " + describe_filter(rep.limit) + "\nborel_fixed_limit = " +
                           (rep.borel_fixed_limit ? "true" : "false") + "\n";
        if (rep.at_fixed_point) {
            text += "at fixed point: no direction\n";
        } else {
            text += std::string("borel_eigenvector_tangent = ") +
                    (*rep.borel_eigenvector_tangent ? "true" : "false") + "\nis_tangent = " +
                    (*rep.tangent_is_flat ? "true" : "false") + "\n";
        }
        text += rep.genericity_note + "\n";
        output.emit(out, text);
        return 0;
    }

    if (cmd_fan->parsed()) {
        HilbertPolynomial rho = HilbertPolynomial::zero();
        HomogeneousIdealBasis basis = build_basis(fan_ideal, fan_points, fan_poly, rho);
        DegenerateOptions opts;
        opts.seed = fan_seed;
        opts.cap = cap;
        std::vector<FanRecord> records =
            first_order_fan_sample(basis, rho, fan_seed, fan_trials, opts);
        // group records into chambers by (limit, type)
        std::map<std::string, std::vector<std::size_t>> chambers;
        for (std::size_t i = 0; i < records.size(); ++i) {
            std::string key = monomial_set_to_json(records[i].limit).dump();
            key += records[i].type ? eigenvector_type_to_json(*records[i].type).dump()
                                   : std::string("fixed");
            chambers[key].push_back(i);
        }
        Json groups = Json::array();
        for (const auto& [key, idxs] : chambers) {
            (void)key;
            Json g{{"limit_filter", monomial_set_to_json(records[idxs.front()].limit)},
                   {"weights", Json::array()}};
            g["type"] = records[idxs.front()].type
                            ? eigenvector_type_to_json(*records[idxs.front()].type)
                            : Json(nullptr);
            for (std::size_t i : idxs)
                g["weights"].push_back(weight_vector_to_json(records[i].w));
            groups.push_back(g);
        }
        std::string text = "records = " + std::to_string(records.size()) +
                           ", chambers = " + std::to_string(chambers.size()) + "\n";
        output.emit(Json{{"records", fan_records_to_json(records)}, {"chambers", groups}},
                    text);
        return 0;
    }

    if (cmd_flip->parsed()) {
        ExponentVector a = parse_monomial(flip_mono, flip_n);
        if (flip_m >= 0 && a.degree() != flip_m)
            throw DomainError("monomial degree does not match --m");
        ExponentVector b = flip(a);
        output.emit(Json{{"monomial", format_monomial(b, 'y')},
                         {"exponents", Json(b.exponents())}},
                    format_monomial(b, 'y') + "\n");
        return 0;
    }

    if (cmd_poset->parsed()) {
        auto poset = PosetPmn::build(poset_m, poset_n, cap);
        std::optional<MonomialSet> highlight;
        if (!poset_filter_path.empty())
            highlight = monomial_set_from_json(read_json(poset_filter_path), cap);
        if (poset_dot_flag) {
            std::cout << poset_dot(*poset, highlight ? &*highlight : nullptr);
            return 0;
        }
        Json elements = Json::array();
        std::string text;
        for (const ExponentVector& a : poset->elements()) {
            elements.push_back(Json(a.exponents()));
            text += format_monomial(a) + "\n";
        }
        Json edges = Json::array();
        for (int i = 0; i < poset->size(); ++i)
            for (int up : poset->up_covers(i))
                edges.push_back(Json{Json(poset->element(i).exponents()),
                                     Json(poset->element(up).exponents())});
        output.emit(Json{{"m", poset_m},
                         {"n", poset_n},
                         {"size", poset->size()},
                         {"elements", elements},
                         {"cover_edges", edges}},
                    text);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hilb::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
