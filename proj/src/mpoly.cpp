#include "toriclab/mpoly.hpp"

#include <sstream>

namespace toric {

MPoly::MPoly(CoefficientField field, size_t nvars) : field_(field), nvars_(nvars) {}

MPoly MPoly::monomial(const CoefficientField& field, const Exps& exps, const Rat& coeff) {
    MPoly p(field, exps.size());
    p.add_term(exps, coeff);
    return p;
}

void MPoly::add_term(const Exps& exps, const Rat& coeff) {
    if (exps.size() != nvars_) throw DomainError("monomial has wrong number of variables");
    Rat c = field_.add(coeff, terms_.count(exps) ? terms_[exps] : Rat(0));
    if (c == 0)
        terms_.erase(exps);
    else
        terms_[exps] = c;
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_)
        throw DomainError("polynomial operands do not match");
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + o.scaled(-1); }

MPoly MPoly::operator*(const MPoly& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_)
        throw DomainError("polynomial operands do not match");
    MPoly r(field_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exps e(nvars_);
            for (size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, field_.mul(c1, c2));
        }
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(field_, nvars_);
    for (const auto& [e, x] : terms_) r.add_term(e, field_.mul(c, x));
    return r;
}

MPoly MPoly::derivative(size_t var) const {
    if (var >= nvars_) throw DomainError("derivative variable out of range");
    MPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps d = e;
        d[var] -= 1;
        r.add_term(d, field_.mul(c, Rat(e[var])));
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::map<std::int64_t, Rat> MPoly::restrict_to_cocharacter(
    const std::vector<std::int64_t>& a) const {
    if (a.size() != nvars_) throw DomainError("cocharacter has wrong number of variables");
    std::map<std::int64_t, Rat> out;
    for (const auto& [e, c] : terms_) {
        std::int64_t key = 0;
        for (size_t i = 0; i < nvars_; ++i) key += e[i] * a[i];
        out[key] = field_.add(out.count(key) ? out[key] : Rat(0), c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) ss << " + ";
        first = false;
        bool unit = c == 1;
        if (!unit) ss << c.str();
        bool any = false;
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any || !unit) ss << "*";
            any = true;
            ss << names[i];
            if (e[i] != 1) ss << "^" << e[i];
        }
        if (!any && unit) ss << "1";
    }
    return ss.str();
}

MPoly mpoly_determinant(const std::vector<std::vector<MPoly>>& m) {
    size_t n = m.size();
    if (n == 0) throw DomainError("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of non-square matrix");
    if (n == 1) return m[0][0];
    MPoly det(m[0][0].field(), m[0][0].nvars());
    std::vector<std::vector<MPoly>> minor(n - 1);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        for (size_t i = 1; i < n; ++i) {
            minor[i - 1].clear();
            for (size_t k = 0; k < n; ++k)
                if (k != j) minor[i - 1].push_back(m[i][k]);
        }
        MPoly cof = m[0][j] * mpoly_determinant(minor);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

} // namespace toric
