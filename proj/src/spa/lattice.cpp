#include "qmachine/spa/lattice.hpp"

#include <stdexcept>
#include <string>

namespace qmachine::spa {

namespace {

// Greatest element of the bound set, or -1. Antisymmetry makes it unique.
int greatest_of(const Relation& leq, const std::vector<int>& bounds) {
    for (int m : bounds) {
        bool greatest = true;
        for (int k : bounds)
            if (!leq[k][m]) {
                greatest = false;
                break;
            }
        if (greatest)
            return m;
    }
    return -1;
}

int least_of(const Relation& leq, const std::vector<int>& bounds) {
    for (int m : bounds) {
        bool least = true;
        for (int k : bounds)
            if (!leq[m][k]) {
                least = false;
                break;
            }
        if (least)
            return m;
    }
    return -1;
}

} // namespace

FiniteLattice lattice_from_poset(std::vector<std::string> labels, const Relation& leq) {
    if (labels.size() != leq.size())
        throw std::invalid_argument("lattice_from_poset: label/order size mismatch");
    if (!is_partial_order(leq))
        throw std::invalid_argument("lattice_from_poset: relation is not a partial order");

    FiniteLattice lat;
    lat.labels = std::move(labels);
    lat.leq = leq;
    const int n = lat.size();

    lat.meet.assign(n, std::vector<int>(n, -1));
    lat.join.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            std::vector<int> lower, upper;
            for (int k = 0; k < n; ++k) {
                if (leq[k][a] && leq[k][b])
                    lower.push_back(k);
                if (leq[a][k] && leq[b][k])
                    upper.push_back(k);
            }
            lat.meet[a][b] = greatest_of(leq, lower);
            lat.join[a][b] = least_of(leq, upper);
        }
    }

    for (int c = 0; c < n; ++c) {
        bool is_bottom = true, is_top = true;
        for (int d = 0; d < n; ++d) {
            is_bottom = is_bottom && leq[c][d];
            is_top = is_top && leq[d][c];
        }
        if (is_bottom)
            lat.bottom = c;
        if (is_top)
            lat.top = c;
    }

    for (int c = 0; c < n; ++c) {
        bool atom = c != lat.bottom, coatom = c != lat.top;
        for (int d = 0; d < n; ++d) {
            if (d != c && d != lat.bottom && leq[d][c])
                atom = false;
            if (d != c && d != lat.top && leq[c][d])
                coatom = false;
        }
        if (atom)
            lat.atoms.push_back(c);
        if (coatom)
            lat.coatoms.push_back(c);
    }
    return lat;
}

bool is_complete_lattice(const FiniteLattice& lattice) {
    if (lattice.bottom < 0 || lattice.top < 0)
        return false;
    const int n = lattice.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (lattice.meet[a][b] < 0 || lattice.join[a][b] < 0)
                return false;
    return true;
}

FiniteLattice property_lattice_of(const StatePropertySpace& sps, Quotient* out_quotient) {
    const Quotient q = quotient_to_poset(induced_orders(sps).property_leq);
    std::vector<std::string> labels;
    labels.reserve(q.n_classes());
    for (const auto& members : q.members)
        labels.push_back(sps.properties[members[0]]);
    if (out_quotient)
        *out_quotient = q;
    return lattice_from_poset(std::move(labels), q.leq);
}

FiniteLattice mo_lattice(int n_atoms) {
    if (n_atoms < 1)
        throw std::invalid_argument("mo_lattice: need at least one atom");
    const int n = n_atoms + 2;
    std::vector<std::string> labels(n);
    labels[0] = "0";
    for (int i = 1; i <= n_atoms; ++i)
        labels[i] = "a" + std::to_string(i);
    labels[n - 1] = "I";
    Relation leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
        leq[i][i] = true;
        leq[0][i] = true;
        leq[i][n - 1] = true;
    }
    return lattice_from_poset(std::move(labels), leq);
}

FiniteLattice boolean_lattice(int n_bits) {
    if (n_bits < 1 || n_bits > 10)
        throw std::invalid_argument("boolean_lattice: supported sizes are 1..10 bits");
    const int n = 1 << n_bits;
    std::vector<std::string> labels(n);
    for (int mask = 0; mask < n; ++mask) {
        if (mask == 0) {
            labels[mask] = "0";
        } else if (mask == n - 1) {
            labels[mask] = "I";
        } else {
            std::string s = "{";
            for (int b = 0; b < n_bits; ++b) {
                if (mask & (1 << b)) {
                    if (s.size() > 1)
                        s += ",";
                    s += std::to_string(b + 1);
                }
            }
            labels[mask] = s + "}";
        }
    }
    Relation leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            leq[a][b] = (a & b) == a;
    return lattice_from_poset(std::move(labels), leq);
}

FiniteLattice chain_lattice(int length) {
    if (length < 1)
        throw std::invalid_argument("chain_lattice: need at least one element");
    std::vector<std::string> labels(length);
    for (int i = 0; i < length; ++i)
        labels[i] = "c" + std::to_string(i);
    Relation leq(length, std::vector<bool>(length, false));
    for (int a = 0; a < length; ++a)
        for (int b = a; b < length; ++b)
            leq[a][b] = true;
    return lattice_from_poset(std::move(labels), leq);
}

FiniteLattice hexagon_lattice() {
    // 0 < a < b < I and 0 < b' < a' < I; the unique orthocomplementation
    // swaps a with a' and b with b', and weak modularity fails at (a, b).
    const std::vector<std::string> labels = {"0", "a", "b", "b'", "a'", "I"};
    const int n = 6;
    Relation leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
        leq[i][i] = true;
        leq[0][i] = true;
        leq[i][5] = true;
    }
    leq[1][2] = true; // a < b
    leq[3][4] = true; // b' < a'
    return lattice_from_poset(labels, leq);
}

FiniteLattice direct_product(const FiniteLattice& lhs, const FiniteLattice& rhs) {
    const int nl = lhs.size();
    const int nr = rhs.size();
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(nl) * nr);
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nr; ++j)
            labels.push_back("(" + lhs.labels[i] + "," + rhs.labels[j] + ")");
    Relation leq(nl * nr, std::vector<bool>(nl * nr, false));
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nr; ++j)
            for (int k = 0; k < nl; ++k)
                for (int l = 0; l < nr; ++l)
                    leq[i * nr + j][k * nr + l] = lhs.leq[i][k] && rhs.leq[j][l];
    return lattice_from_poset(std::move(labels), leq);
}

StatePropertySpace mo_sps(int n_atoms) {
    if (n_atoms < 1)
        throw std::invalid_argument("mo_sps: need at least one atom");
    StatePropertySpace sps;
    sps.properties.push_back("0");
    for (int i = 1; i <= n_atoms; ++i) {
        sps.properties.push_back("a" + std::to_string(i));
        sps.states.push_back("p" + std::to_string(i));
    }
    sps.properties.push_back("I");
    sps.xi.assign(n_atoms, std::vector<bool>(n_atoms + 2, false));
    for (int i = 0; i < n_atoms; ++i) {
        sps.xi[i][1 + i] = true;
        sps.xi[i][n_atoms + 1] = true;
    }
    return sps;
}

StatePropertySpace boolean_sps(int n_points) {
    if (n_points < 1 || n_points > 10)
        throw std::invalid_argument("boolean_sps: supported sizes are 1..10 points");
    const FiniteLattice shape = boolean_lattice(n_points);
    StatePropertySpace sps;
    for (int p = 0; p < n_points; ++p)
        sps.states.push_back("s" + std::to_string(p + 1));
    sps.properties = shape.labels;
    sps.xi.assign(n_points, std::vector<bool>(shape.size(), false));
    for (int p = 0; p < n_points; ++p)
        for (int mask = 0; mask < shape.size(); ++mask)
            sps.xi[p][mask] = (mask >> p) & 1;
    return sps;
}

} // namespace qmachine::spa
