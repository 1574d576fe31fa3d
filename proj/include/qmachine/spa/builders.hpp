#pragma once

#include "qmachine/geometry.hpp"
#include "qmachine/machine.hpp"
#include "qmachine/spa/state_property_space.hpp"

#include <vector>

namespace qmachine::spa {

/// The spin model as a finite state property space.
///   properties: 0, one a_u per direction, I
///   states:     one p_u per direction (xi = {a_u, I}), one p_w per interior
///               point (xi = {I}), and a maximal state "top" (xi = {I})
/// Directions must be pairwise distinct; interior points must satisfy
/// |w| < 1. Throws std::domain_error otherwise.
StatePropertySpace build_spin_sps(const std::vector<Direction>& directions,
                                  const std::vector<BallPoint>& interior);

/// Orthocomplementation tests on the spin sps are only meaningful for
/// direction sets closed under negation (a_u' pairs with a_{-u}).
bool negation_closed(const std::vector<Direction>& directions);

} // namespace qmachine::spa
