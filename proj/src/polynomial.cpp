#include "hilb/polynomial.hpp"

#include <cctype>

namespace hilb {

bool form_is_zero(const Form& f) {
    return f.empty();
}

bool form_is_homogeneous(const Form& f, int* degree_out) {
    int deg = -1;
    for (const auto& [mono, coeff] : f) {
        (void)coeff;
        if (deg < 0)
            deg = mono.degree();
        else if (mono.degree() != deg)
            return false;
    }
    if (degree_out)
        *degree_out = deg;
    return true;
}

int form_num_vars(const Form& f) {
    if (f.empty())
        throw DomainError("zero form has no ring attached");
    return f.begin()->first.num_vars();
}

void form_add_scaled(Form& dst, const Form& src, const Rat& scale) {
    if (scale == 0)
        return;
    for (const auto& [mono, coeff] : src) {
        auto it = dst.find(mono);
        if (it == dst.end()) {
            dst.emplace(mono, coeff * scale);
        } else {
            it->second += coeff * scale;
            if (it->second == 0)
                dst.erase(it);
        }
    }
}

Form form_multiply(const Form& a, const Form& b) {
    Form out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<int> e(ma.exponents());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += mb.exponents()[i];
            ExponentVector m(std::move(e));
            auto it = out.find(m);
            if (it == out.end()) {
                out.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    return out;
}

Form form_monomial(const ExponentVector& a, const Rat& coeff) {
    Form f;
    if (coeff != 0)
        f.emplace(a, coeff);
    return f;
}

Form form_apply_matrix(const RatMatrix& g, const Form& f) {
    if (f.empty())
        return {};
    const int vars = form_num_vars(f);
    if (static_cast<int>(g.size()) != vars)
        throw DomainError("matrix size does not match the ring");

    // images of the variables as linear forms
    std::vector<Form> var_image(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) {
        Form lin;
        for (int k = 0; k < vars; ++k) {
            if (g[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] == 0)
                continue;
            std::vector<int> e(static_cast<std::size_t>(vars), 0);
            e[static_cast<std::size_t>(k)] = 1;
            lin.emplace(ExponentVector(std::move(e)),
                        g[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
        }
        var_image[static_cast<std::size_t>(i)] = std::move(lin);
    }

    Form out;
    for (const auto& [mono, coeff] : f) {
        Form term = form_monomial(ExponentVector::unit(vars - 1), coeff);
        for (int i = 0; i < vars; ++i)
            for (int k = 0; k < mono[i]; ++k)
                term = form_multiply(term, var_image[static_cast<std::size_t>(i)]);
        form_add_scaled(out, term, Rat(1));
    }
    return out;
}

namespace {

bool is_rational_literal(const std::string& tok) {
    if (tok.empty())
        return false;
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-')
            return false;
    return true;
}

} // namespace

Form parse_form(const std::string& text, int n) {
    if (n < 1)
        throw DomainError("parse_form requires n >= 1");
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw DomainError("empty polynomial");

    Form out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        Rat sign(1);
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-')
            ++end;
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty())
            throw DomainError("malformed polynomial: '" + text + "'");

        Rat coeff = sign;
        std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
        std::size_t tpos = 0;
        while (tpos < term.size()) {
            std::size_t tend = term.find('*', tpos);
            if (tend == std::string::npos)
                tend = term.size();
            std::string factor = term.substr(tpos, tend - tpos);
            tpos = tend + 1;
            if (factor.empty())
                throw DomainError("malformed term '" + term + "'");
            if (is_rational_literal(factor)) {
                coeff *= parse_rational(factor);
            } else {
                ExponentVector mono = parse_monomial(factor, n);
                for (int i = 0; i <= n; ++i)
                    exps[static_cast<std::size_t>(i)] += mono[i];
            }
        }
        form_add_scaled(out, form_monomial(ExponentVector(std::move(exps)), Rat(1)), coeff);
    }
    return out;
}

std::string format_form(const Form& f, char letter) {
    if (f.empty())
        return "0";
    // descending Lex reads naturally: x0^2 + x0*x1 + ...
    std::string out;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        const auto& [mono, coeff] = *it;
        Rat abs_coeff = coeff < 0 ? Rat(-coeff) : coeff;
        if (out.empty()) {
            if (coeff < 0)
                out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        std::string mono_str = format_monomial(mono, letter);
        if (abs_coeff != 1 || mono_str == "1") {
            out += rational_to_string(abs_coeff);
            if (mono_str != "1")
                out += "*";
        }
        if (mono_str != "1")
            out += mono_str;
    }
    return out;
}

} // namespace hilb
