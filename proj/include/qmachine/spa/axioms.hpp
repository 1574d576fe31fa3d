#pragma once

#include "qmachine/spa/lattice.hpp"
#include "qmachine/spa/orthocomplement.hpp"
#include "qmachine/spa/state_property_space.hpp"

#include <optional>
#include <string>

namespace qmachine::spa {

struct Verdict {
    enum class Status { holds, fails, not_applicable, inconclusive };

    Status status = Status::not_applicable;
    std::string witness; // concrete counterexample, when status == fails
    std::string note;    // cap messages, refutation routes, pointers
    bool capped = false;

    bool holds() const { return status == Status::holds; }
    bool fails() const { return status == Status::fails; }
};

/// Axiom 1 (state property system): the quotiented property order is a
/// complete lattice, the maximal property is actual in every state, the
/// minimal one in none, and meets are actual exactly when all their terms
/// are. Subset enumeration follows kSubsetEnumerationCap; capped runs are
/// flagged, never silently truncated.
Verdict check_axiom1(const StatePropertySpace& sps);

/// Axiom 2: every element is the join of the atoms below it.
Verdict check_atomistic(const FiniteLattice& lattice);

/// Axiom 3 (covering law) as a verdict over covering_counterexample.
Verdict check_covering_law(const FiniteLattice& lattice);

/// Axiom 5: a <= b implies (a join b') meet b = a.
Verdict check_weak_modularity(const FiniteLattice& lattice, const OrthoMap& ortho);

/// Axiom 7: only 0 and I split over every (a, a') pair.
Verdict check_irreducible(const FiniteLattice& lattice, const OrthoMap& ortho);

struct AxiomReport {
    Verdict axiom1;
    Verdict axiom2;
    Verdict axiom3;
    Verdict axiom4;
    Verdict axiom5;
    Verdict axiom6; // plane transitivity: reported not-applicable, no search
    Verdict axiom7;
    int longest_orthogonal_chain = -1; // finite stand-in for axiom 8; -1 without ortho
    std::optional<OrthoMap> ortho;
    FiniteLattice lattice; // quotiented property lattice the checks ran on
    bool lattice_valid = false;

    bool any_capped_or_inconclusive() const;
};

/// Runs every applicable checker on the property lattice of the sps. When no
/// orthocomplementation is supplied ortho_search looks for one; a supplied
/// map is validated (std::domain_error if invalid). Lattice-level checks are
/// reported not-applicable when axiom 1 already failed to produce a complete
/// lattice.
AxiomReport axiom_report(const StatePropertySpace& sps,
                         const std::optional<OrthoMap>& ortho = std::nullopt);

/// Structured-text rendering, one line per axiom, deterministic.
std::string render_report(const StatePropertySpace& sps, const AxiomReport& report);

} // namespace qmachine::spa
