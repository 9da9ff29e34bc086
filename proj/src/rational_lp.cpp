#include "toriclab/rational_lp.hpp"

namespace toric {

bool nonneg_solution_exists(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
    size_t m = a.size();
    if (b.size() != m) throw DomainError("lp: inconsistent system size");
    if (m == 0) return true;
    size_t n = a.front().size();

    // tableau [A | I | rhs] with artificial basis; minimize the artificial sum
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, 0));
    for (size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw DomainError("lp: ragged system");
        bool flip = b[i] < 0;
        for (size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
        t[i][n + i] = 1;
        t[i][n + m] = flip ? -b[i] : b[i];
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;

    // objective row: d_j = z_j - c_j, value = current artificial sum
    std::vector<Rat> d(n + m, 0);
    Rat value = 0;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) d[j] += t[i][j];
        value += t[i][n + m];
    }

    for (;;) {
        size_t enter = n + m; // Bland: smallest improving column
        for (size_t j = 0; j < n + m; ++j)
            if (d[j] > 0) { enter = j; break; }
        if (enter == n + m) break;

        size_t leave = m;
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            Rat cur = t[i][n + m] / t[i][enter];
            Rat best = t[leave][n + m] / t[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) throw ComputationError("lp: phase-I column without a positive pivot");

        Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
        }
        Rat f = d[enter];
        for (size_t j = 0; j < n + m; ++j) d[j] -= f * t[leave][j];
        value -= f * t[leave][n + m];
        basis[leave] = enter;
    }
    return value == 0;
}

} // namespace toric
