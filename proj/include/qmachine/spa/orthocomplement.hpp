#pragma once

#include "qmachine/spa/lattice.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qmachine::spa {

/// An orthocomplementation candidate: element-to-element map. Valid when it
/// is an involution, order-reversing, and a meet a' = 0 for every a.
struct OrthoMap {
    std::vector<int> image;

    int operator()(int a) const { return image[a]; }
    int size() const { return static_cast<int>(image.size()); }
};

bool is_orthocomplementation(const FiniteLattice& lattice, const OrthoMap& ortho);

enum class SearchStatus { found, none, inconclusive };

struct OrthoSearchResult {
    SearchStatus status;
    OrthoMap map;     // meaningful only when status == found
    std::string note; // refutation route or cap message
};

/// Searches for an orthocomplementation. Counting refutations run first (an
/// order-reversing involutive bijection matches atoms with coatoms, and more
/// generally the down-set/up-set size profiles), then a backtracking search
/// over order-reversing involutions with the a meet a' = 0 constraint.
/// Lattices larger than element_cap yield an explicit inconclusive verdict.
OrthoSearchResult ortho_search(const FiniteLattice& lattice, int element_cap = 64);

/// Covering-law counterexample: an atom t, an element a with a meet t = 0,
/// and b strictly between a and a join t. Smallest (a, t, b) in index order,
/// or nullopt when the covering law holds.
std::optional<std::array<int, 3>> covering_counterexample(const FiniteLattice& lattice);

/// Element not equal to the join of the atoms below it, or nullopt.
std::optional<int> atomistic_counterexample(const FiniteLattice& lattice);

/// Pair a <= b with (a join b') meet b != a, or nullopt.
std::optional<std::array<int, 2>> weak_modularity_counterexample(const FiniteLattice& lattice,
                                                                 const OrthoMap& ortho);

/// Element b outside {0, I} with b = (b meet a) join (b meet a') for every
/// a, or nullopt.
std::optional<int> irreducibility_counterexample(const FiniteLattice& lattice,
                                                 const OrthoMap& ortho);

/// Size of the largest set of pairwise-orthogonal nonzero elements
/// (x orthogonal to y iff x <= y'). Exact up to 20 elements, a greedy lower
/// bound above.
int longest_orthogonal_chain(const FiniteLattice& lattice, const OrthoMap& ortho);

} // namespace qmachine::spa
