#pragma once

#include "qmachine/spa/state_property_space.hpp"

#include <string>
#include <vector>

namespace qmachine::spa {

/// A finite partial order with meet/join tables, bounds, atoms and coatoms.
/// Tables hold -1 where the bound does not exist; bottom/top are -1 when
/// absent.
struct FiniteLattice {
    std::vector<std::string> labels;
    Relation leq;
    std::vector<std::vector<int>> meet;
    std::vector<std::vector<int>> join;
    int bottom = -1;
    int top = -1;
    std::vector<int> atoms;
    std::vector<int> coatoms;

    int size() const { return static_cast<int>(labels.size()); }
    bool less_eq(int a, int b) const { return leq[a][b]; }
};

/// Builds the derived structure from a partial order; throws
/// std::invalid_argument if leq is not reflexive, antisymmetric and
/// transitive. Meets and joins are found by scanning bound sets, so the
/// tables agree with the order by construction.
FiniteLattice lattice_from_poset(std::vector<std::string> labels, const Relation& leq);

/// Complete for a finite order: bounded with all pairwise meets and joins.
bool is_complete_lattice(const FiniteLattice& lattice);

/// Quotients the induced property preorder of an sps and builds the lattice
/// of its classes; class labels come from the smallest member. The quotient
/// is returned through out_quotient when requested.
FiniteLattice property_lattice_of(const StatePropertySpace& sps, Quotient* out_quotient = nullptr);

// Canned orders used by the audits and tests.
FiniteLattice mo_lattice(int n_atoms);     // {0, a1..an, I}, atoms incomparable
FiniteLattice boolean_lattice(int n_bits); // subsets of {1..n} under inclusion
FiniteLattice chain_lattice(int length);   // c0 < c1 < ... < c(length-1)
FiniteLattice hexagon_lattice();           // 0 < a < b < I, 0 < b' < a' < I
FiniteLattice direct_product(const FiniteLattice& lhs, const FiniteLattice& rhs);

// Matching state property spaces whose property lattices are MO-n resp. the
// Boolean algebra 2^n.
StatePropertySpace mo_sps(int n_atoms);
StatePropertySpace boolean_sps(int n_points);

} // namespace qmachine::spa
