#include "qmachine/spa/axioms.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qmachine::spa {

namespace {

Verdict holds() { return {Verdict::Status::holds, "", "", false}; }

Verdict fails(std::string witness) {
    return {Verdict::Status::fails, std::move(witness), "", false};
}

Verdict not_applicable(std::string note) {
    return {Verdict::Status::not_applicable, "", std::move(note), false};
}

std::string subset_labels(const StatePropertySpace& sps, const Quotient& q,
                          const std::vector<int>& classes) {
    std::string out = "{";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i)
            out += ", ";
        out += sps.properties[q.members[classes[i]][0]];
    }
    return out + "}";
}

} // namespace

Verdict check_axiom1(const StatePropertySpace& sps) {
    sps.validate();
    Quotient q;
    const FiniteLattice lat = property_lattice_of(sps, &q);
    const int nc = lat.size();
    const int ns = sps.n_states();

    if (!is_complete_lattice(lat)) {
        for (int a = 0; a < nc; ++a)
            for (int b = 0; b < nc; ++b)
                if (lat.meet[a][b] < 0 || lat.join[a][b] < 0)
                    return fails("property order is not a complete lattice: '" + lat.labels[a] +
                                 "' and '" + lat.labels[b] + "' lack a meet or join");
        return fails("property order is not a complete lattice: unbounded");
    }

    // Class c is actual in p iff any (hence every) member is.
    auto class_actual = [&](int state, int cls) { return sps.xi[state][q.members[cls][0]]; };

    for (int p = 0; p < ns; ++p) {
        if (!class_actual(p, lat.top))
            return fails("maximal property not actual in state '" + sps.states[p] + "'");
        if (class_actual(p, lat.bottom))
            return fails("minimal property actual in state '" + sps.states[p] + "'");
    }

    bool capped = false;
    std::string note;

    if (nc <= kSubsetEnumerationCap) {
        // Meet of every class subset via shared-prefix folding, then the
        // actuality condition against every state's actual-class mask.
        const std::uint32_t total = std::uint32_t{1} << nc;
        std::vector<int> meet_of(total, lat.top); // empty subset meets to I
        std::vector<std::uint32_t> actual_mask(ns, 0);
        for (int p = 0; p < ns; ++p)
            for (int c = 0; c < nc; ++c)
                if (class_actual(p, c))
                    actual_mask[p] |= std::uint32_t{1} << c;
        for (std::uint32_t mask = 1; mask < total; ++mask) {
            const int low = std::countr_zero(mask);
            meet_of[mask] = lat.meet[meet_of[mask & (mask - 1)]][low];
            for (int p = 0; p < ns; ++p) {
                const bool all_actual = (mask & actual_mask[p]) == mask;
                const bool meet_actual = (actual_mask[p] >> meet_of[mask]) & 1;
                if (all_actual != meet_actual) {
                    std::vector<int> classes;
                    for (int c = 0; c < nc; ++c)
                        if (mask & (std::uint32_t{1} << c))
                            classes.push_back(c);
                    return fails("meet condition violated at state '" + sps.states[p] +
                                 "' for subset " + subset_labels(sps, q, classes) + " with meet '" +
                                 lat.labels[meet_of[mask]] + "'");
                }
            }
        }
    } else {
        capped = true;
        note = "meet condition checked for subsets of size <= 3 (lattice larger than " +
               std::to_string(kSubsetEnumerationCap) + " classes)";
        auto check_meet = [&](const std::vector<int>& classes) -> std::optional<Verdict> {
            int m = lat.top;
            for (int c : classes)
                m = lat.meet[m][c];
            for (int p = 0; p < ns; ++p) {
                bool all_actual = true;
                for (int c : classes)
                    all_actual = all_actual && class_actual(p, c);
                if (all_actual != class_actual(p, m))
                    return fails("meet condition violated at state '" + sps.states[p] +
                                 "' for subset " + subset_labels(sps, q, classes) + " with meet '" +
                                 lat.labels[m] + "'");
            }
            return std::nullopt;
        };
        for (int a = 0; a < nc; ++a)
            if (auto v = check_meet({a}))
                return *v;
        for (int a = 0; a < nc; ++a)
            for (int b = a + 1; b < nc; ++b)
                if (auto v = check_meet({a, b}))
                    return *v;
        for (int a = 0; a < nc; ++a)
            for (int b = a + 1; b < nc; ++b)
                for (int c = b + 1; c < nc; ++c)
                    if (auto v = check_meet({a, b, c}))
                        return *v;
    }

    Verdict verdict = holds();
    verdict.capped = capped;
    verdict.note = note;
    return verdict;
}

Verdict check_atomistic(const FiniteLattice& lattice) {
    if (const auto witness = atomistic_counterexample(lattice))
        return fails("element '" + lattice.labels[*witness] +
                     "' is not the join of the atoms below it");
    return holds();
}

Verdict check_covering_law(const FiniteLattice& lattice) {
    if (const auto w = covering_counterexample(lattice))
        return fails("a='" + lattice.labels[(*w)[0]] + "' t='" + lattice.labels[(*w)[1]] +
                     "' b='" + lattice.labels[(*w)[2]] + "'");
    return holds();
}

Verdict check_weak_modularity(const FiniteLattice& lattice, const OrthoMap& ortho) {
    if (const auto w = weak_modularity_counterexample(lattice, ortho))
        return fails("a='" + lattice.labels[(*w)[0]] + "' b='" + lattice.labels[(*w)[1]] + "'");
    return holds();
}

Verdict check_irreducible(const FiniteLattice& lattice, const OrthoMap& ortho) {
    if (const auto w = irreducibility_counterexample(lattice, ortho))
        return fails("central element '" + lattice.labels[*w] + "'");
    return holds();
}

bool AxiomReport::any_capped_or_inconclusive() const {
    for (const Verdict* v : {&axiom1, &axiom2, &axiom3, &axiom4, &axiom5, &axiom7})
        if (v->capped || v->status == Verdict::Status::inconclusive)
            return true;
    return false;
}

AxiomReport axiom_report(const StatePropertySpace& sps, const std::optional<OrthoMap>& ortho) {
    AxiomReport report;
    report.axiom1 = check_axiom1(sps);

    Quotient q;
    report.lattice = property_lattice_of(sps, &q);
    report.lattice_valid = is_complete_lattice(report.lattice);

    const std::string gate_note = "property order is not a complete lattice";
    if (!report.lattice_valid) {
        report.axiom2 = not_applicable(gate_note);
        report.axiom3 = not_applicable(gate_note);
        report.axiom4 = not_applicable(gate_note);
    } else {
        report.axiom2 = check_atomistic(report.lattice);
        report.axiom3 = check_covering_law(report.lattice);

        if (ortho) {
            // A supplied map speaks about raw properties; transport it to
            // the quotient classes and insist it is well defined there.
            if (ortho->size() != sps.n_properties())
                throw std::domain_error("axiom_report: orthocomplementation has wrong size");
            OrthoMap on_classes;
            on_classes.image.assign(report.lattice.size(), -1);
            for (int a = 0; a < sps.n_properties(); ++a) {
                const int img = (*ortho)(a);
                if (img < 0 || img >= sps.n_properties())
                    throw std::domain_error("axiom_report: orthocomplementation maps out of range");
                const int ca = q.class_of[a];
                const int ci = q.class_of[img];
                if (on_classes.image[ca] >= 0 && on_classes.image[ca] != ci)
                    throw std::domain_error(
                        "axiom_report: orthocomplementation is not well defined on classes");
                on_classes.image[ca] = ci;
            }
            if (!is_orthocomplementation(report.lattice, on_classes))
                throw std::domain_error("axiom_report: supplied map is not an orthocomplementation");
            report.ortho = on_classes;
            report.axiom4 = holds();
            report.axiom4.note = "orthocomplementation supplied";
        } else {
            const OrthoSearchResult search = ortho_search(report.lattice);
            switch (search.status) {
            case SearchStatus::found:
                report.ortho = search.map;
                report.axiom4 = holds();
                report.axiom4.note = search.note;
                break;
            case SearchStatus::none:
                report.axiom4 = fails("no orthocomplementation exists");
                report.axiom4.note = search.note;
                break;
            case SearchStatus::inconclusive:
                report.axiom4 = {Verdict::Status::inconclusive, "", search.note, true};
                break;
            }
        }

        if (report.ortho) {
            report.axiom5 = check_weak_modularity(report.lattice, *report.ortho);
            report.axiom7 = check_irreducible(report.lattice, *report.ortho);
            report.longest_orthogonal_chain = longest_orthogonal_chain(report.lattice, *report.ortho);
        } else {
            report.axiom5 = not_applicable("no orthocomplementation available");
            report.axiom7 = not_applicable("no orthocomplementation available");
        }
    }

    report.axiom6 =
        not_applicable("plane transitivity needs an automorphism-orbit search; not checked here");
    return report;
}

namespace {

const char* status_name(Verdict::Status s) {
    switch (s) {
    case Verdict::Status::holds:
        return "holds";
    case Verdict::Status::fails:
        return "fails";
    case Verdict::Status::not_applicable:
        return "not-applicable";
    case Verdict::Status::inconclusive:
        return "inconclusive";
    }
    return "?";
}

void render_verdict(std::ostringstream& out, const char* name, const Verdict& v) {
    out << name << ": " << status_name(v.status);
    if (!v.witness.empty())
        out << "  witness: " << v.witness;
    if (!v.note.empty())
        out << "  note: " << v.note;
    if (v.capped)
        out << "  [capped]";
    out << "\n";
}

} // namespace

std::string render_report(const StatePropertySpace& sps, const AxiomReport& report) {
    std::ostringstream out;
    out << "# state property space axiom report\n";
    out << "states: " << sps.n_states() << "\n";
    out << "properties: " << sps.n_properties() << "\n";
    out << "lattice: elements=" << report.lattice.size() << " atoms=" << report.lattice.atoms.size()
        << " coatoms=" << report.lattice.coatoms.size()
        << " complete=" << (report.lattice_valid ? "yes" : "no") << "\n";
    render_verdict(out, "axiom1 state-property-system", report.axiom1);
    render_verdict(out, "axiom2 atomisticity", report.axiom2);
    render_verdict(out, "axiom3 covering-law", report.axiom3);
    render_verdict(out, "axiom4 orthocomplementation", report.axiom4);
    render_verdict(out, "axiom5 weak-modularity", report.axiom5);
    render_verdict(out, "axiom6 plane-transitivity", report.axiom6);
    render_verdict(out, "axiom7 irreducibility", report.axiom7);
    out << "axiom8-proxy longest-orthogonal-chain: ";
    if (report.longest_orthogonal_chain >= 0)
        out << report.longest_orthogonal_chain << "\n";
    else
        out << "not-applicable\n";
    if (report.ortho) {
        out << "ortho:";
        for (int a = 0; a < report.lattice.size(); ++a)
            if (a <= (*report.ortho)(a))
                out << " " << report.lattice.labels[a] << "<->"
                    << report.lattice.labels[(*report.ortho)(a)];
        out << "\n";
    }
    return out.str();
}

} // namespace qmachine::spa
