#include "toriclab/branch_semigroup.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace toric {

namespace {

constexpr std::int64_t kAperyLimit = 1 << 24;

std::vector<Int> apery_set(const std::vector<Int>& gens) {
    Int m = gens.front();
    if (m > kAperyLimit)
        throw ComputationError("semigroup multiplicity " + m.str() + " too large to analyze");
    size_t mm = static_cast<size_t>(m);
    std::vector<Int> w(mm, Int(-1));
    w[0] = 0;
    // Bellman-Ford style relaxation over residues mod m
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t r = 0; r < mm; ++r) {
            if (w[r] < 0) continue;
            for (const Int& g : gens) {
                Int cand = w[r] + g;
                size_t rr = static_cast<size_t>(cand % m);
                if (w[rr] < 0 || cand < w[rr]) {
                    w[rr] = cand;
                    changed = true;
                }
            }
        }
    }
    return w;
}

} // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Int> generators)
    : generators_(std::move(generators)) {
    if (generators_.empty()) throw DomainError("numerical semigroup needs at least one generator");
    for (size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] <= 0) throw DomainError("semigroup generators must be positive");
        if (i > 0 && generators_[i] <= generators_[i - 1])
            throw DomainError("semigroup generators must be strictly increasing");
    }
    Int g = 0;
    for (const Int& x : generators_) g = int_gcd(g, x);
    if (g != 1) throw DomainError("semigroup generators must have gcd 1");

    apery_ = apery_set(generators_);
    Int frobenius = -1;
    for (const Int& w : apery_) frobenius = std::max(frobenius, Int(w - generators_.front()));
    conductor_ = frobenius + 1;

    // minimality: no generator reachable from the others
    for (size_t i = 0; i < generators_.size(); ++i) {
        if (generators_.size() == 1) break;
        std::vector<Int> others;
        for (size_t j = 0; j < generators_.size(); ++j)
            if (j != i) others.push_back(generators_[j]);
        std::vector<Int> w = apery_set(others); // gcd may exceed 1; unreachable residues stay -1
        Int m = others.front();
        size_t r = static_cast<size_t>(generators_[i] % m);
        if (w[r] >= 0 && w[r] <= generators_[i])
            throw DomainError("generator " + generators_[i].str() +
                              " is a combination of the others (not minimal)");
    }
}

bool NumericalSemigroup::contains(const Int& n) const {
    if (n < 0) return false;
    size_t r = static_cast<size_t>(n % generators_.front());
    return apery_[r] >= 0 && n >= apery_[r];
}

Int NumericalSemigroup::gap_count() const {
    Int total = 0;
    for (const Int& w : apery_) total += w / generators_.front();
    return total;
}

CharExponents::CharExponents(std::vector<Int> beta) : beta_(std::move(beta)) {
    if (beta_.empty()) throw DomainError("empty characteristic exponent sequence");
    for (size_t i = 0; i < beta_.size(); ++i) {
        if (beta_[i] <= 0) throw DomainError("characteristic exponents must be positive");
        if (i > 0 && beta_[i] <= beta_[i - 1])
            throw DomainError("characteristic exponents must be strictly increasing");
    }
    Int e = beta_[0];
    for (size_t i = 1; i < beta_.size(); ++i) {
        Int next = int_gcd(e, beta_[i]);
        if (next >= e)
            throw DomainError("gcd chain must strictly decrease at beta_" + std::to_string(i));
        e = next;
    }
    if (e != 1) throw DomainError("gcd chain must end at 1");
}

NumericalSemigroup semigroup_from_char_exponents(const CharExponents& b) {
    const std::vector<Int>& beta = b.beta();
    std::vector<Int> bar;
    bar.push_back(beta[0]);
    if (beta.size() > 1) bar.push_back(beta[1]);
    Int e_prev = beta[0];
    for (size_t i = 1; i + 1 < beta.size(); ++i) {
        Int e_i = int_gcd(e_prev, beta[i]);
        Int n_i = e_prev / e_i;
        bar.push_back(n_i * bar[i] + beta[i + 1] - beta[i]);
        e_prev = e_i;
    }
    return NumericalSemigroup(bar);
}

namespace {

// membership of target in the semigroup generated by gens (gcd arbitrary)
bool small_semigroup_contains(const std::vector<Int>& gens, const Int& target) {
    if (target == 0) return true;
    if (gens.empty() || target < 0) return false;
    if (target > kAperyLimit) throw ComputationError("semigroup membership target too large");
    size_t n = static_cast<size_t>(target);
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (size_t k = 1; k <= n; ++k)
        for (const Int& g : gens) {
            if (g > k) continue;
            if (reach[k - static_cast<size_t>(g)]) { reach[k] = 1; break; }
        }
    return reach[n] != 0;
}

} // namespace

CharExponents char_exponents_from_semigroup(const NumericalSemigroup& g) {
    const std::vector<Int>& bar = g.generators();
    std::vector<Int> beta;
    beta.push_back(bar[0]);
    if (bar.size() > 1) beta.push_back(bar[1]);
    Int e_prev = bar[0];
    for (size_t i = 1; i + 1 < bar.size(); ++i) {
        Int e_i = int_gcd(e_prev, bar[i]);
        Int n_i = e_prev / e_i;
        if (n_i <= 1)
            throw DomainError("not-a-plane-branch-semigroup: gcd chain does not drop at " +
                              bar[i].str());
        std::vector<Int> earlier(bar.begin(), bar.begin() + i);
        if (!small_semigroup_contains(earlier, n_i * bar[i]))
            throw DomainError("not-a-plane-branch-semigroup: " + Int(n_i * bar[i]).str() +
                              " is not a combination of the earlier generators");
        if (bar[i + 1] <= n_i * bar[i])
            throw DomainError("not-a-plane-branch-semigroup: generator " + bar[i + 1].str() +
                              " does not exceed " + Int(n_i * bar[i]).str());
        beta.push_back(bar[i + 1] - n_i * bar[i] + beta[i]);
        e_prev = e_i;
    }
    // final stage of the chain must also be a plane-branch relation
    if (bar.size() > 1) {
        size_t i = bar.size() - 1;
        Int e_i = int_gcd(e_prev, bar[i]);
        Int n_i = e_prev / e_i;
        if (n_i <= 1)
            throw DomainError("not-a-plane-branch-semigroup: gcd chain does not drop at " +
                              bar[i].str());
        std::vector<Int> earlier(bar.begin(), bar.begin() + i);
        if (!small_semigroup_contains(earlier, n_i * bar[i]))
            throw DomainError("not-a-plane-branch-semigroup: " + Int(n_i * bar[i]).str() +
                              " is not a combination of the earlier generators");
    }
    return CharExponents(beta);
}

// ---------------------------------------------------------------------------
// value_semigroup

namespace {

// Dense coefficient rows modulo a word-sized prime.
struct FpOps {
    using Elem = std::int64_t;
    std::int64_t p;

    Elem from_rat(const CoefficientField& f, const Rat& x) const {
        Rat n = f.normalize(x);
        return static_cast<Elem>(boost::multiprecision::numerator(n) % p);
    }
    static bool is_zero(Elem a) { return a == 0; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<__int128>(a) * b % p);
    }
    Elem add_mul(Elem a, Elem f, Elem b) const { // a + f*b
        Elem r = (a + mul(f, b)) % p;
        return r < 0 ? r + p : r;
    }
    Elem sub_mul(Elem a, Elem f, Elem b) const { // a - f*b
        Elem r = (a - mul(f, b)) % p;
        return r < 0 ? r + p : r;
    }
    Elem inv(Elem a) const {
        std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
        if (r1 < 0) r1 += p;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
            r0 = r1; r1 = r2; s0 = s1; s1 = s2;
        }
        return s0 < 0 ? s0 + p : s0;
    }
};

struct RatOps {
    using Elem = Rat;

    Elem from_rat(const CoefficientField&, const Rat& x) const { return x; }
    static bool is_zero(const Elem& a) { return a == 0; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem add_mul(const Elem& a, const Elem& f, const Elem& b) const { return a + f * b; }
    Elem sub_mul(const Elem& a, const Elem& f, const Elem& b) const { return a - f * b; }
    Elem inv(const Elem& a) const { return Rat(1) / a; }
};

// Orders of nonzero elements of span{ x^i y^j : i*a + j*b < limit },
// which equal the orders of the whole subalgebra below `limit`.
template <class Ops>
std::set<std::int64_t> achieved_orders(const Ops& ops, const TruncatedSeries& x,
                                       const TruncatedSeries& y, std::int64_t limit) {
    using Elem = typename Ops::Elem;
    using Row = std::vector<Elem>; // coefficients of t^start, t^{start+1}, ...
    const CoefficientField& field = x.field();

    std::int64_t a = *x.order(), b = *y.order();

    // sparse term lists for multiplying a dense row by x or y
    auto terms_of = [&](const TruncatedSeries& s) {
        std::vector<std::pair<std::int64_t, Elem>> t;
        for (const auto& [e, c] : s.coefficients())
            if (e < limit) t.emplace_back(e, ops.from_rat(field, c));
        return t;
    };
    auto xs = terms_of(x), ys = terms_of(y);

    // row *= series (dense-by-sparse, truncated at limit)
    auto mul_series = [&](std::int64_t start, const Row& row,
                          const std::vector<std::pair<std::int64_t, Elem>>& terms,
                          std::int64_t shift_base) {
        std::int64_t new_start = start + shift_base;
        Row out(static_cast<size_t>(std::max<std::int64_t>(0, limit - new_start)), Elem(0));
        for (const auto& [e, c] : terms) {
            std::int64_t off = e - shift_base; // >= 0 since shift_base is the order
            size_t kmax = std::min<size_t>(row.size(), out.size() > static_cast<size_t>(off)
                                                           ? out.size() - static_cast<size_t>(off)
                                                           : 0);
            for (size_t k = 0; k < kmax; ++k) {
                if (Ops::is_zero(row[k])) continue;
                size_t idx = k + static_cast<size_t>(off);
                out[idx] = ops.add_mul(out[idx], c, row[k]);
            }
        }
        return std::pair<std::int64_t, Row>(new_start, std::move(out));
    };

    std::map<std::int64_t, Row> basis; // pivot order -> monic row

    auto insert = [&](std::int64_t start, Row row) {
        for (;;) {
            size_t lead = 0;
            while (lead < row.size() && Ops::is_zero(row[lead])) ++lead;
            if (lead == row.size()) return; // vanishes below limit
            start += static_cast<std::int64_t>(lead);
            if (lead > 0) row.erase(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(lead));
            auto it = basis.find(start);
            if (it == basis.end()) {
                Elem li = ops.inv(row[0]);
                for (auto& c : row) c = ops.mul(c, li);
                basis.emplace(start, std::move(row));
                return;
            }
            const Row& piv = it->second;
            Elem f = row[0];
            size_t n = std::min(row.size(), piv.size());
            for (size_t k = 0; k < n; ++k) row[k] = ops.sub_mul(row[k], f, piv[k]);
        }
    };

    // monomials x^i y^j, one running row per j, multiplied up by x along i
    std::int64_t jmax = (limit - 1) / b;
    Row ypow_row;
    std::int64_t ypow_start = 0;
    for (std::int64_t j = 0; j <= jmax; ++j) {
        if (j == 0) {
            ypow_start = 0;
            ypow_row.assign(static_cast<size_t>(limit), Elem(0));
            ypow_row[0] = ops.from_rat(field, Rat(1));
        } else {
            auto [s, r] = mul_series(ypow_start, ypow_row, ys, b);
            ypow_start = s;
            ypow_row = std::move(r);
        }
        std::int64_t row_start = ypow_start;
        Row row = ypow_row;
        while (row_start < limit) {
            insert(row_start, row);
            if (row_start + a >= limit) break;
            auto [s, r] = mul_series(row_start, row, xs, a);
            row_start = s;
            row = std::move(r);
        }
        if (ypow_start + b >= limit) break;
    }

    std::set<std::int64_t> achieved;
    for (const auto& [o, _] : basis) achieved.insert(o);
    return achieved;
}

struct Certificate {
    std::vector<Int> generators;
    std::int64_t conductor;
};

// Certified when the achieved set shows gcd 1 and a full run of
// `multiplicity` consecutive orders below the working precision.
std::optional<Certificate> certify(const std::set<std::int64_t>& achieved, std::int64_t limit) {
    if (achieved.empty()) return std::nullopt;
    std::int64_t g = 0;
    for (std::int64_t o : achieved) g = std::gcd(g, o);
    if (g != 1) return std::nullopt;
    std::int64_t g0 = 0;
    for (std::int64_t o : achieved)
        if (o > 0) { g0 = o; break; }
    if (g0 == 0) return std::nullopt;
    std::int64_t conductor = 0;
    for (std::int64_t k = limit - 1; k >= 0; --k)
        if (!achieved.count(k)) { conductor = k + 1; break; }
    if (conductor + g0 > limit) return std::nullopt;

    Certificate cert;
    cert.conductor = conductor;
    for (std::int64_t o : achieved) {
        if (o == 0) continue;
        bool reducible = false;
        for (std::int64_t s : achieved) {
            if (s == 0) continue;
            if (s >= o) break;
            if (achieved.count(o - s)) { reducible = true; break; }
        }
        if (!reducible) cert.generators.push_back(Int(o));
    }
    return cert;
}

} // namespace

NumericalSemigroup value_semigroup(const TruncatedSeries& x, const TruncatedSeries& y) {
    if (!(x.field() == y.field())) throw DomainError("series over different fields");
    if (x.truncation() != y.truncation()) throw DomainError("series with different truncations");
    auto ox = x.order(), oy = y.order();
    if (!ox || !oy) throw DomainError("value_semigroup needs nonzero series");
    if (*ox <= 0 || *oy <= 0) throw DomainError("value_semigroup needs series of positive order");

    const std::int64_t T = x.truncation();
    const Int& ch = x.field().characteristic;
    bool word_prime = ch != 0 && ch < Int(std::numeric_limits<std::int64_t>::max() / 4);

    std::int64_t w = std::min<std::int64_t>(T, std::max<std::int64_t>(64, 4 * (*ox + *oy)));
    for (;;) {
        std::set<std::int64_t> achieved;
        if (word_prime) {
            FpOps ops{static_cast<std::int64_t>(ch)};
            achieved = achieved_orders(ops, x, y, w);
        } else {
            achieved = achieved_orders(RatOps{}, x, y, w);
        }
        auto cert = certify(achieved, w);
        if (cert) {
            NumericalSemigroup s(cert->generators);
            if (s.conductor() != cert->conductor)
                throw ComputationError("conductor certification mismatch");
            return s;
        }
        if (w >= T)
            throw ComputationError(
                "truncation-exhausted: no conductor certificate below precision " +
                std::to_string(T) + "; recompute the series with a larger truncation");
        w = std::min(T, 2 * w);
    }
}

TruncatedSeries curve_equation_residual(const TruncatedSeries& x, const TruncatedSeries& y) {
    const Int& ch = x.field().characteristic;
    if (ch == 0) throw DomainError("curve equation is defined over a prime field");
    std::uint64_t p = static_cast<std::uint64_t>(ch);
    TruncatedSeries lhs = y.pow(p) - x.pow(p + 1);
    return lhs.pow(p * p) - x.pow((p * p + 1) * (p + 1));
}

bool verify_curve_equation(const Int& p, std::int64_t truncation) {
    CoefficientField f = CoefficientField::prime_field(p);
    std::int64_t pi = static_cast<std::int64_t>(p);
    std::int64_t top = pi * pi * pi * (pi * pi + 1) * (pi + 1);
    if (truncation <= top)
        throw ComputationError("truncation-too-small: need more than " + std::to_string(top));
    TruncatedSeries x = TruncatedSeries::monomial(f, truncation, pi * pi * pi, 1);
    TruncatedSeries y = TruncatedSeries::monomial(f, truncation, pi * pi * pi + pi * pi, 1) +
                        TruncatedSeries::monomial(f, truncation, pi * pi * pi + pi * pi + pi + 1, 1);
    return curve_equation_residual(x, y).is_zero_to_precision();
}

} // namespace toric
