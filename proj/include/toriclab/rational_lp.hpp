#pragma once

#include "toriclab/ints.hpp"

#include <vector>

namespace toric {

// Whether {x >= 0 : A x = b} is nonempty, decided exactly by a phase-I
// simplex with Bland's rule.
bool nonneg_solution_exists(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

} // namespace toric
