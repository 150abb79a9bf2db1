#include "hilb/rational.hpp"

#include <climits>

namespace hilb {

Rat parse_rational(const std::string& text) {
    Rat r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw DomainError("malformed rational: '" + text + "'");
    if (r.get_den() == 0)
        throw DomainError("zero denominator in rational: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rat& value) {
    return value.get_str();
}

Int parse_integer(const std::string& text) {
    Int v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw DomainError("malformed integer: '" + text + "'");
    return v;
}

Int binomial(const Int& top, unsigned long k) {
    if (top < 0)
        throw DomainError("binomial with negative top");
    if (top < static_cast<long>(k))
        return 0;
    Int out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
    return out;
}

Rat rat_pow(const Rat& base, long exponent) {
    if (exponent == 0)
        return Rat(1);
    if (base == 0 && exponent < 0)
        throw DomainError("zero raised to a negative power");
    Rat b = exponent > 0 ? base : Rat(1) / base;
    unsigned long e = exponent > 0 ? static_cast<unsigned long>(exponent)
                                   : static_cast<unsigned long>(-exponent);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

Rat make_fraction(const Int& num, const Int& den) {
    if (den == 0)
        throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

long to_long(const Int& value) {
    if (!value.fits_slong_p())
        throw DomainError("integer too large: " + value.get_str());
    return value.get_si();
}

Int rat_to_int(const Rat& value) {
    if (value.get_den() != 1)
        throw DomainError("expected an integer, got " + value.get_str());
    return value.get_num();
}

} // namespace hilb
