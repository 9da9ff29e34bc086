#include "toriclab/coefficient_field.hpp"

namespace toric {

CoefficientField CoefficientField::prime_field(const Int& p) {
    if (!is_prime(p)) throw DomainError("characteristic " + p.str() + " is not prime");
    return CoefficientField{p};
}

CoefficientField CoefficientField::of_characteristic(const Int& c) {
    if (c == 0) return rationals();
    return prime_field(c);
}

Int mod_inverse(const Int& a, const Int& p) {
    // extended Euclid
    Int r0 = p, r1 = a % p;
    if (r1 < 0) r1 += p;
    if (r1 == 0) throw DomainError("division by zero in F_" + p.str());
    Int s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    Int inv = s0 % p;
    if (inv < 0) inv += p;
    return inv;
}

Rat CoefficientField::normalize(const Rat& x) const {
    if (characteristic == 0) return x;
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    Int d = den % characteristic;
    if (d < 0) d += characteristic;
    if (d == 0) throw DomainError("denominator divisible by the characteristic");
    Int n = num % characteristic;
    if (n < 0) n += characteristic;
    return Rat(n * mod_inverse(d, characteristic) % characteristic);
}

Rat CoefficientField::inv(const Rat& a) const {
    Rat x = normalize(a);
    if (x == 0) throw DomainError("division by zero");
    if (characteristic == 0) return Rat(1) / x;
    return normalize(Rat(mod_inverse(boost::multiprecision::numerator(x), characteristic)));
}

Rat CoefficientField::div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

Rat CoefficientField::pow(const Rat& a, const Int& e) const {
    Rat base = e < 0 ? inv(a) : normalize(a);
    Int n = int_abs(e);
    Rat r = 1;
    while (n > 0) {
        if ((n & 1) != 0) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

std::string CoefficientField::describe() const {
    return characteristic == 0 ? "Q" : "F_" + characteristic.str();
}

} // namespace toric
