#pragma once

#include <vector>

#include "qhk/poly.hpp"

namespace qhk {

/// Factors a nonzero rational polynomial into monic irreducible factors over Q
/// (repeated according to multiplicity, leading coefficient dropped).
std::vector<QPoly> factor_rational_poly(const QPoly& f);

/// Irreducibility test over Q for polynomials of degree >= 1.
bool is_irreducible_over_q(const QPoly& f);

}  // namespace qhk
