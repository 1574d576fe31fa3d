#include "qmachine/spa/state_property_space.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace qmachine::spa {

namespace {

std::vector<bool> intersect(const std::vector<bool>& a, const std::vector<bool>& b) {
    std::vector<bool> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] && b[i];
    return out;
}

} // namespace

std::vector<int> StatePropertySpace::extent(int property) const {
    std::vector<int> out;
    for (int p = 0; p < n_states(); ++p)
        if (xi[p][property])
            out.push_back(p);
    return out;
}

std::vector<int> StatePropertySpace::actual_set(int state) const {
    std::vector<int> out;
    for (int a = 0; a < n_properties(); ++a)
        if (xi[state][a])
            out.push_back(a);
    return out;
}

int StatePropertySpace::state_index(std::string_view label) const {
    for (int i = 0; i < n_states(); ++i)
        if (states[i] == label)
            return i;
    return -1;
}

int StatePropertySpace::property_index(std::string_view label) const {
    for (int i = 0; i < n_properties(); ++i)
        if (properties[i] == label)
            return i;
    return -1;
}

void StatePropertySpace::validate() const {
    if (xi.size() != states.size())
        throw std::invalid_argument("state property space: xi has wrong number of rows");
    for (const auto& row : xi)
        if (row.size() != properties.size())
            throw std::invalid_argument("state property space: xi has ragged rows");
    std::unordered_set<std::string> seen;
    for (const auto& s : states)
        if (!seen.insert("s:" + s).second)
            throw std::invalid_argument("state property space: duplicate state label '" + s + "'");
    for (const auto& a : properties)
        if (!seen.insert("a:" + a).second)
            throw std::invalid_argument("state property space: duplicate property label '" + a +
                                        "'");
}

InducedOrders induced_orders(const StatePropertySpace& sps) {
    const int np = sps.n_properties();
    const int ns = sps.n_states();
    InducedOrders out;
    out.property_leq.assign(np, std::vector<bool>(np, false));
    for (int a = 0; a < np; ++a) {
        for (int b = 0; b < np; ++b) {
            bool subset = true;
            for (int p = 0; p < ns && subset; ++p)
                if (sps.xi[p][a] && !sps.xi[p][b])
                    subset = false;
            out.property_leq[a][b] = subset;
        }
    }
    out.state_leq.assign(ns, std::vector<bool>(ns, false));
    for (int p = 0; p < ns; ++p) {
        for (int q = 0; q < ns; ++q) {
            bool subset = true;
            for (int a = 0; a < np && subset; ++a)
                if (sps.xi[q][a] && !sps.xi[p][a])
                    subset = false;
            out.state_leq[p][q] = subset;
        }
    }
    return out;
}

bool is_preorder(const Relation& rel) {
    const int n = static_cast<int>(rel.size());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rel[i].size()) != n || !rel[i][i])
            return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rel[i][j])
                for (int k = 0; k < n; ++k)
                    if (rel[j][k] && !rel[i][k])
                        return false;
    return true;
}

bool is_partial_order(const Relation& rel) {
    if (!is_preorder(rel))
        return false;
    const int n = static_cast<int>(rel.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && rel[i][j] && rel[j][i])
                return false;
    return true;
}

Quotient quotient_to_poset(const Relation& preorder) {
    if (!is_preorder(preorder))
        throw std::invalid_argument("quotient_to_poset: relation is not a preorder");
    const int n = static_cast<int>(preorder.size());
    Quotient q;
    q.class_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (q.class_of[i] >= 0)
            continue;
        const int c = q.n_classes();
        q.members.push_back({});
        for (int j = i; j < n; ++j) {
            if (q.class_of[j] < 0 && preorder[i][j] && preorder[j][i]) {
                q.class_of[j] = c;
                q.members[c].push_back(j);
            }
        }
    }
    const int nc = q.n_classes();
    q.leq.assign(nc, std::vector<bool>(nc, false));
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b)
            q.leq[a][b] = preorder[q.members[a][0]][q.members[b][0]];
    return q;
}

std::vector<int> atoms_of(const Relation& preorder) {
    const Quotient q = quotient_to_poset(preorder);
    const int nc = q.n_classes();
    int bottom = -1;
    for (int c = 0; c < nc; ++c) {
        bool below_all = true;
        for (int d = 0; d < nc && below_all; ++d)
            below_all = q.leq[c][d];
        if (below_all) {
            bottom = c;
            break;
        }
    }
    std::vector<int> out;
    for (int c = 0; c < nc; ++c) {
        if (c == bottom)
            continue;
        bool atom = true;
        for (int d = 0; d < nc && atom; ++d)
            if (d != c && d != bottom && q.leq[d][c])
                atom = false;
        if (atom)
            for (int e : q.members[c])
                out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Enumerated property subsets must have a property realizing the extent
// intersection; dually for states. Returns the first offending subset.
struct SideCheck {
    bool complete = true;
    std::vector<int> witness;
    bool capped = false;
};

SideCheck check_side(const std::vector<std::vector<bool>>& sets, int n_items,
                     bool include_empty_subset) {
    // sets[i] is the extent (resp. actual-set) of item i over the dual side.
    const int n = static_cast<int>(sets.size());
    const std::size_t universe = sets.empty() ? 0 : sets[0].size();
    SideCheck out;

    auto realized = [&](const std::vector<bool>& target) {
        for (int i = 0; i < n; ++i)
            if (sets[i] == target)
                return true;
        return false;
    };
    auto check_subset = [&](const std::vector<int>& subset) {
        std::vector<bool> inter(universe, true);
        for (int i : subset)
            inter = intersect(inter, sets[i]);
        if (!realized(inter)) {
            out.complete = false;
            out.witness = subset;
            return false;
        }
        return true;
    };

    (void)n_items;
    if (n <= kSubsetEnumerationCap) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            if (mask == 0 && !include_empty_subset)
                continue;
            std::vector<int> subset;
            for (int i = 0; i < n; ++i)
                if (mask & (std::uint32_t{1} << i))
                    subset.push_back(i);
            if (!check_subset(subset))
                return out;
        }
        return out;
    }

    out.capped = true;
    if (include_empty_subset && !check_subset({}))
        return out;
    for (int i = 0; i < n; ++i)
        if (!check_subset({i}))
            return out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!check_subset({i, j}))
                return out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (!check_subset({i, j, k}))
                    return out;
    return out;
}

} // namespace

CompletenessReport completeness_report(const StatePropertySpace& sps) {
    sps.validate();
    const int np = sps.n_properties();
    const int ns = sps.n_states();

    std::vector<std::vector<bool>> extents(np, std::vector<bool>(ns, false));
    for (int a = 0; a < np; ++a)
        for (int p = 0; p < ns; ++p)
            extents[a][p] = sps.xi[p][a];
    std::vector<std::vector<bool>> actuals(ns, std::vector<bool>(np, false));
    for (int p = 0; p < ns; ++p)
        for (int a = 0; a < np; ++a)
            actuals[p][a] = sps.xi[p][a];

    // The empty property subset asks for a maximal property actual in every
    // state. The dual empty state subset would ask for a state making every
    // property (the minimal one included) actual; no state property system
    // admits one, so the state side ranges over non-empty subsets.
    const SideCheck prop = check_side(extents, np, /*include_empty_subset=*/true);
    const SideCheck stat = check_side(actuals, ns, /*include_empty_subset=*/false);

    CompletenessReport report;
    report.property_complete = prop.complete;
    report.property_witness = prop.witness;
    report.state_complete = stat.complete;
    report.state_witness = stat.witness;
    report.capped = prop.capped || stat.capped;
    if (report.capped)
        report.note = "subset enumeration capped at size 3 (side larger than " +
                      std::to_string(kSubsetEnumerationCap) + " items)";
    return report;
}

PropertyStateMaps property_state_maps(const StatePropertySpace& sps) {
    sps.validate();
    const int np = sps.n_properties();
    const int ns = sps.n_states();

    PropertyStateMaps maps;
    maps.s.assign(ns, -1);
    maps.t.assign(np, -1);

    for (int p = 0; p < ns; ++p) {
        // s(p) = meet of xi(p): the property whose extent is the
        // intersection of the extents of the properties actual in p.
        std::vector<bool> inter(ns, true);
        for (int a = 0; a < np; ++a)
            if (sps.xi[p][a])
                for (int q = 0; q < ns; ++q)
                    inter[q] = inter[q] && sps.xi[q][a];
        for (int b = 0; b < np; ++b) {
            bool match = true;
            for (int q = 0; q < ns && match; ++q)
                match = sps.xi[q][b] == inter[q];
            if (match) {
                maps.s[p] = b;
                break;
            }
        }
        if (maps.s[p] < 0)
            throw std::domain_error(
                "property_state_maps: not property complete at state '" + sps.states[p] + "'");
    }

    for (int a = 0; a < np; ++a) {
        // t(a) = join of kappa(a); undefined (-1) for an empty extent.
        bool proper = false;
        std::vector<bool> inter(np, true);
        for (int p = 0; p < ns; ++p) {
            if (!sps.xi[p][a])
                continue;
            proper = true;
            for (int b = 0; b < np; ++b)
                inter[b] = inter[b] && sps.xi[p][b];
        }
        if (!proper)
            continue;
        for (int q = 0; q < ns; ++q) {
            bool match = true;
            for (int b = 0; b < np && match; ++b)
                match = sps.xi[q][b] == inter[b];
            if (match) {
                maps.t[a] = q;
                break;
            }
        }
        if (maps.t[a] < 0)
            throw std::domain_error("property_state_maps: not state complete at property '" +
                                    sps.properties[a] + "'");
    }

    // p <= q <=> s(p) <= s(q), and xi(p) = [s(p), +inf).
    const InducedOrders orders = induced_orders(sps);
    for (int p = 0; p < ns; ++p) {
        for (int q = 0; q < ns; ++q)
            if (orders.state_leq[p][q] != orders.property_leq[maps.s[p]][maps.s[q]])
                throw std::logic_error("property_state_maps: s does not preserve the order");
        for (int a = 0; a < np; ++a)
            if (sps.xi[p][a] != orders.property_leq[maps.s[p]][a])
                throw std::logic_error("property_state_maps: xi(p) != [s(p), +inf)");
    }
    return maps;
}

} // namespace qmachine::spa
