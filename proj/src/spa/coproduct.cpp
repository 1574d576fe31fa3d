#include "qmachine/spa/coproduct.hpp"

#include "qmachine/spa/axioms.hpp"

#include <stdexcept>

namespace qmachine::spa {

namespace {

// Smallest-index property whose extent is the whole state set.
int top_property(const StatePropertySpace& sps) {
    for (int a = 0; a < sps.n_properties(); ++a) {
        bool full = true;
        for (int p = 0; p < sps.n_states() && full; ++p)
            full = sps.xi[p][a];
        if (full)
            return a;
    }
    return -1;
}

bool has_empty_extent(const StatePropertySpace& sps, int a) {
    for (int p = 0; p < sps.n_states(); ++p)
        if (sps.xi[p][a])
            return false;
    return true;
}

} // namespace

int Coproduct::state_pair_index(int i, int j) const {
    return i * n2_states + j;
}

Coproduct coproduct(const StatePropertySpace& sps1, const StatePropertySpace& sps2) {
    for (const StatePropertySpace* in : {&sps1, &sps2}) {
        if (in->n_states() == 0)
            throw std::domain_error("coproduct: input has no states");
        const Verdict v = check_axiom1(*in);
        if (!v.holds())
            throw std::domain_error("coproduct: input is not a state property system (" +
                                    v.witness + ")");
    }

    Coproduct out;
    out.n2_states = sps2.n_states();

    for (const auto& s1 : sps1.states)
        for (const auto& s2 : sps2.states)
            out.sps.states.push_back("(" + s1 + "," + s2 + ")");

    // Properties: the fresh zero, then all pairs of nonzero (= proper)
    // factor properties in (first, second) index order.
    out.sps.properties.push_back("0");
    std::vector<int> proper1, proper2;
    for (int a = 0; a < sps1.n_properties(); ++a)
        if (!has_empty_extent(sps1, a))
            proper1.push_back(a);
    for (int a = 0; a < sps2.n_properties(); ++a)
        if (!has_empty_extent(sps2, a))
            proper2.push_back(a);

    std::vector<std::vector<int>> pair_index(sps1.n_properties(),
                                             std::vector<int>(sps2.n_properties(), -1));
    for (int a1 : proper1)
        for (int a2 : proper2) {
            pair_index[a1][a2] = out.sps.n_properties();
            out.sps.properties.push_back("(" + sps1.properties[a1] + "," + sps2.properties[a2] +
                                         ")");
        }

    out.sps.xi.assign(out.sps.n_states(),
                      std::vector<bool>(out.sps.n_properties(), false));
    for (int i = 0; i < sps1.n_states(); ++i)
        for (int j = 0; j < sps2.n_states(); ++j)
            for (int a1 : proper1)
                for (int a2 : proper2)
                    out.sps.xi[out.state_pair_index(i, j)][pair_index[a1][a2]] =
                        sps1.xi[i][a1] && sps2.xi[j][a2];

    const int top1 = top_property(sps1);
    const int top2 = top_property(sps2);
    if (top1 < 0 || top2 < 0)
        throw std::domain_error("coproduct: input lacks a maximal property");

    out.n1.assign(sps1.n_properties(), 0);
    for (int a1 : proper1)
        out.n1[a1] = pair_index[a1][top2];
    out.n2.assign(sps2.n_properties(), 0);
    for (int a2 : proper2)
        out.n2[a2] = pair_index[top1][a2];

    out.sps.validate();
    return out;
}

} // namespace qmachine::spa
