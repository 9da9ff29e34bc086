#pragma once

#include "toriclab/coefficient_field.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace toric {

// Power series in t known up to (not including) exponent `truncation`.
// Only nonzero coefficients are stored; exponents live in [0, truncation).
class TruncatedSeries {
public:
    TruncatedSeries(CoefficientField field, std::int64_t truncation);

    static TruncatedSeries monomial(const CoefficientField& field, std::int64_t truncation,
                                    std::int64_t exponent, const Rat& coeff);

    const CoefficientField& field() const { return field_; }
    std::int64_t truncation() const { return truncation_; }
    const std::map<std::int64_t, Rat>& coefficients() const { return coeffs_; }

    bool is_zero_to_precision() const { return coeffs_.empty(); }
    // smallest exponent with nonzero coefficient
    std::optional<std::int64_t> order() const;
    Rat leading_coefficient() const;
    Rat coefficient(std::int64_t e) const;

    void set_coefficient(std::int64_t e, const Rat& c);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Rat& c) const;
    TruncatedSeries pow(std::uint64_t e) const;
    // same series viewed at a lower precision
    TruncatedSeries truncated_to(std::int64_t t) const;

    bool operator==(const TruncatedSeries& o) const;

    std::string to_string() const;

private:
    void check_compatible(const TruncatedSeries& o) const;

    CoefficientField field_;
    std::int64_t truncation_;
    std::map<std::int64_t, Rat> coeffs_;
};

// t-adic order; nullopt means zero to the stored precision.
inline std::optional<std::int64_t> series_order(const TruncatedSeries& s) { return s.order(); }

// Parses "8:1,12:3/2" as exponent:coefficient pairs.
TruncatedSeries parse_series(const CoefficientField& field, std::int64_t truncation,
                             const std::string& text);

} // namespace toric
