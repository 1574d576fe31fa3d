#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qmachine::spa {

/// Square boolean matrix; rel[i][j] holds iff i precedes j.
using Relation = std::vector<std::vector<bool>>;

/// A finite state property space: states Sigma, properties L, and the
/// actuality relation xi, with xi[state][property] true iff the property is
/// actual in that state. The dual map kappa(a) = { p : xi[p][a] } is derived,
/// so the duality a in xi(p) <=> p in kappa(a) holds by construction.
struct StatePropertySpace {
    std::vector<std::string> states;
    std::vector<std::string> properties;
    std::vector<std::vector<bool>> xi;

    int n_states() const { return static_cast<int>(states.size()); }
    int n_properties() const { return static_cast<int>(properties.size()); }

    bool actual(int state, int property) const { return xi[state][property]; }

    /// kappa(a): indices of the states in which property a is actual.
    std::vector<int> extent(int property) const;

    /// xi(p): indices of the properties actual in state p.
    std::vector<int> actual_set(int state) const;

    int state_index(std::string_view label) const;
    int property_index(std::string_view label) const;

    /// Shape and label-uniqueness checks; throws std::invalid_argument.
    void validate() const;
};

struct InducedOrders {
    Relation property_leq; // a <= b  iff  kappa(a) subset of kappa(b)
    Relation state_leq;    // p <= q  iff  xi(q) subset of xi(p)
};

InducedOrders induced_orders(const StatePropertySpace& sps);

bool is_preorder(const Relation& rel);
bool is_partial_order(const Relation& rel);

/// Quotient of a preorder by mutual precedence. Classes are numbered in
/// order of their smallest member, so results are deterministic.
struct Quotient {
    std::vector<int> class_of;
    std::vector<std::vector<int>> members;
    Relation leq;

    int n_classes() const { return static_cast<int>(members.size()); }
};

Quotient quotient_to_poset(const Relation& preorder);

/// Atoms of a preordered set. With a global bottom class the atoms are the
/// classes covering it; without one the minimal classes themselves play the
/// role of atoms. Returns the element indices of atom classes, ascending.
std::vector<int> atoms_of(const Relation& preorder);

/// Exhaustive subset enumeration is only attempted up to this many
/// properties (or states, on the dual side); larger instances check subsets
/// of size at most 3 and set the capped flag.
inline constexpr int kSubsetEnumerationCap = 16;

struct CompletenessReport {
    bool property_complete = false;
    std::vector<int> property_witness; // offending property subset, if any
    bool state_complete = false;
    std::vector<int> state_witness; // offending state subset, if any
    bool capped = false;
    std::string note;
};

/// Property completeness: every enumerated subset of properties has some
/// property whose extent equals the intersection of the subset's extents
/// (the meet-actuality condition follows). Dually for states via
/// intersections of actual-sets, over non-empty subsets.
CompletenessReport completeness_report(const StatePropertySpace& sps);

struct PropertyStateMaps {
    /// s[p]: index of the property-state, the meet of all properties actual
    /// in p.
    std::vector<int> s;
    /// t[a]: index of the state-property, the join of all states making a
    /// actual; -1 where the extent is empty.
    std::vector<int> t;
};

/// Requires the needed meets/joins to exist (a completeness precondition);
/// throws std::domain_error otherwise. Verifies p <= q <=> s(p) <= s(q) and
/// xi(p) = [s(p), +inf) before returning.
PropertyStateMaps property_state_maps(const StatePropertySpace& sps);

} // namespace qmachine::spa
