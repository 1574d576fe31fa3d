#pragma once

#include "qmachine/spa/state_property_space.hpp"

#include <vector>

namespace qmachine::spa {

/// The minimal compound of two state property systems.
///   Sigma = Sigma1 x Sigma2
///   L     = { (a1, a2) : a1 != 01, a2 != 02 } union {0}
///   xi(p1, p2) = { (a1, a2) : a1 in xi1(p1), a2 in xi2(p2) }
/// with componentwise order and meets collapsing to 0 when either component
/// meet is 0. The embeddings n1(a1) = (a1, I2) and n2(a2) = (I1, a2) are
/// exposed as index maps into the coproduct's property list.
struct Coproduct {
    StatePropertySpace sps;
    std::vector<int> n1; // property index of sps1 -> index in sps (01 -> 0)
    std::vector<int> n2; // property index of sps2 -> index in sps (02 -> 0)

    /// State (i, j) of the factors sits at index i * n2_states + j.
    int state_pair_index(int i, int j) const;
    int n2_states = 0;
};

/// Both inputs must pass check_axiom1; throws std::domain_error otherwise.
Coproduct coproduct(const StatePropertySpace& sps1, const StatePropertySpace& sps2);

} // namespace qmachine::spa
