#include "patgf/display.hpp"

#include <vector>

namespace patgf {

namespace {

std::string power_string(const std::string& base, int pow, bool parens) {
    std::string s = parens ? "(" + base + ")" : base;
    if (pow > 1) s += "^" + std::to_string(pow);
    return s;
}

struct FactoredPart {
    Rational scale = Rational(1);
    int pow_z = 0;
    int pow_1mz = 0;
    int pow_1m2z = 0;
    Poly residual;  // primitive integer coefficients, positive leading, or 1
};

// Pulls out powers of z, (1-z), (1-2*z), then scales the remainder to a
// primitive integer polynomial with positive leading coefficient.
FactoredPart factor_part(Poly p) {
    FactoredPart part;
    const Poly base_z = Poly::monomial(1);
    const Poly base_1mz({Rational(1), Rational(-1)});
    const Poly base_1m2z({Rational(1), Rational(-2)});

    Poly q;
    while (p.degree() > 0 && Poly::divides(p, base_z, &q)) {
        p = q;
        ++part.pow_z;
    }
    while (p.degree() > 0 && Poly::divides(p, base_1mz, &q)) {
        p = q;
        ++part.pow_1mz;
    }
    while (p.degree() > 0 && Poly::divides(p, base_1m2z, &q)) {
        p = q;
        ++part.pow_1m2z;
    }

    BigInt num_gcd = 0, den_lcm = 1;
    for (const Rational& c : p.coeffs()) {
        if (c == 0) continue;
        num_gcd = gcd(num_gcd, BigInt(abs(numerator(c))));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational content = make_rational(num_gcd, den_lcm);
    if (p.leading() < 0) content = -content;
    part.scale = content;
    part.residual = p * (Rational(1) / content);
    return part;
}

std::vector<std::string> part_pieces(const FactoredPart& part) {
    std::vector<std::string> pieces;
    if (part.pow_z > 0) pieces.push_back(power_string("z", part.pow_z, false));
    if (part.pow_1mz > 0) pieces.push_back(power_string("1-z", part.pow_1mz, true));
    if (part.pow_1m2z > 0) pieces.push_back(power_string("1-2*z", part.pow_1m2z, true));
    if (!(part.residual == Poly(1)))
        pieces.push_back("(" + poly_to_string(part.residual) + ")");
    return pieces;
}

std::string join_pieces(const std::vector<std::string>& pieces) {
    std::string out;
    for (const auto& piece : pieces) {
        if (!out.empty()) out += '*';
        out += piece;
    }
    return out;
}

}  // namespace

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const Rational& c = p.coeff(d);
        if (c == 0) continue;
        Rational mag = c;
        if (out.empty()) {
            if (c < 0) {
                out += '-';
                mag = -c;
            }
        } else {
            out += c < 0 ? '-' : '+';
            if (c < 0) mag = -c;
        }
        if (d == 0) {
            out += rational_to_string(mag);
        } else {
            if (mag != 1) out += rational_to_string(mag) + "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

std::string ratfun_to_string(const RatFun& f) {
    if (f.is_zero()) return "0";
    if (f.den() == Poly(1)) return poly_to_string(f.num());
    return "(" + poly_to_string(f.num()) + ")/(" + poly_to_string(f.den()) + ")";
}

std::string ratfun_to_factored_string(const RatFun& f) {
    if (f.is_zero()) return "0";
    FactoredPart num = factor_part(f.num());
    FactoredPart den = factor_part(f.den());
    Rational prefix = num.scale / den.scale;

    std::string out;
    if (prefix < 0) {
        out += '-';
        prefix = -prefix;
    }
    std::string num_str = join_pieces(part_pieces(num));
    if (num_str.empty())
        num_str = rational_to_string(prefix);
    else if (prefix != 1)
        num_str = rational_to_string(prefix) + "*" + num_str;
    out += num_str;

    const auto den_pieces = part_pieces(den);
    if (!den_pieces.empty()) {
        out += "/";
        out += den_pieces.size() > 1 ? "(" + join_pieces(den_pieces) + ")" : den_pieces[0];
    }
    return out;
}

}  // namespace patgf
