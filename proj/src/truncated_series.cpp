#include "toriclab/truncated_series.hpp"

#include <sstream>

namespace toric {

TruncatedSeries::TruncatedSeries(CoefficientField field, std::int64_t truncation)
    : field_(field), truncation_(truncation) {
    if (truncation <= 0) throw DomainError("series truncation must be positive");
}

TruncatedSeries TruncatedSeries::monomial(const CoefficientField& field, std::int64_t truncation,
                                          std::int64_t exponent, const Rat& coeff) {
    TruncatedSeries s(field, truncation);
    if (exponent < 0) throw DomainError("series exponents must be non-negative");
    s.set_coefficient(exponent, coeff);
    return s;
}

std::optional<std::int64_t> TruncatedSeries::order() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

Rat TruncatedSeries::leading_coefficient() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of a zero series");
    return coeffs_.begin()->second;
}

Rat TruncatedSeries::coefficient(std::int64_t e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void TruncatedSeries::set_coefficient(std::int64_t e, const Rat& c) {
    if (e >= truncation_) return;
    Rat n = field_.normalize(c);
    if (n == 0)
        coeffs_.erase(e);
    else
        coeffs_[e] = n;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (!(field_ == o.field_)) throw DomainError("series over different fields");
    if (truncation_ != o.truncation_) throw DomainError("series with different truncations");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set_coefficient(e, r.coefficient(e) + c);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set_coefficient(e, r.coefficient(e) - c);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_compatible(o);
    TruncatedSeries r(field_, truncation_);
    std::map<std::int64_t, Rat> acc;
    for (const auto& [e1, c1] : coeffs_) {
        if (e1 >= truncation_) break;
        for (const auto& [e2, c2] : o.coeffs_) {
            std::int64_t e = e1 + e2;
            if (e >= truncation_) break;
            acc[e] += c1 * c2;
        }
    }
    for (const auto& [e, c] : acc) r.set_coefficient(e, c);
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rat& c) const {
    TruncatedSeries r(field_, truncation_);
    for (const auto& [e, x] : coeffs_) r.set_coefficient(e, c * x);
    return r;
}

TruncatedSeries TruncatedSeries::pow(std::uint64_t e) const {
    TruncatedSeries r = monomial(field_, truncation_, 0, 1);
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated_to(std::int64_t t) const {
    TruncatedSeries r(field_, t);
    for (const auto& [e, c] : coeffs_) {
        if (e >= t) break;
        r.set_coefficient(e, c);
    }
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return field_ == o.field_ && truncation_ == o.truncation_ && coeffs_ == o.coeffs_;
}

std::string TruncatedSeries::to_string() const {
    if (coeffs_.empty()) return "O(t^" + std::to_string(truncation_) + ")";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        if (c != 1 || e == 0) out << c.str() << (e > 0 ? "*" : "");
        if (e > 0) out << "t^" << e;
    }
    out << " + O(t^" << truncation_ << ")";
    return out.str();
}

TruncatedSeries parse_series(const CoefficientField& field, std::int64_t truncation,
                             const std::string& text) {
    TruncatedSeries s(field, truncation);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw DomainError("series term '" + item + "' is not exponent:coefficient");
        std::int64_t e;
        try {
            e = std::stoll(item.substr(0, colon));
        } catch (const std::exception&) {
            throw DomainError("bad series exponent in '" + item + "'");
        }
        Rat c;
        try {
            c = Rat(item.substr(colon + 1));
        } catch (const std::exception&) {
            throw DomainError("bad series coefficient in '" + item + "'");
        }
        if (e < 0) throw DomainError("series exponents must be non-negative");
        if (e >= truncation)
            throw DomainError("series term t^" + std::to_string(e) +
                              " is at or beyond the truncation " + std::to_string(truncation));
        s.set_coefficient(e, s.coefficient(e) + c);
    }
    return s;
}

} // namespace toric
