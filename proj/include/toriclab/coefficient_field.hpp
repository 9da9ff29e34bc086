#pragma once

#include "toriclab/ints.hpp"

namespace toric {

// The rationals or a prime field F_p. Elements are carried as Rat values;
// in characteristic p they are normalized to integers in [0, p).
struct CoefficientField {
    Int characteristic; // 0 or prime

    static CoefficientField rationals() { return CoefficientField{0}; }
    static CoefficientField prime_field(const Int& p);
    static CoefficientField of_characteristic(const Int& c);

    bool operator==(const CoefficientField& o) const { return characteristic == o.characteristic; }

    Rat normalize(const Rat& x) const;
    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }
    Rat div(const Rat& a, const Rat& b) const;
    Rat inv(const Rat& a) const;
    // a^e, with negative e meaning the inverse power
    Rat pow(const Rat& a, const Int& e) const;
    bool is_zero(const Rat& a) const { return normalize(a) == 0; }
    bool eq(const Rat& a, const Rat& b) const { return normalize(a - b) == 0; }

    std::string describe() const;
};

// Inverse of a modulo p (p prime, a not divisible by p).
Int mod_inverse(const Int& a, const Int& p);

} // namespace toric
