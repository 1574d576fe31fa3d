#include "qmachine/spa/orthocomplement.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

namespace qmachine::spa {

namespace {

// Common lower bounds of a and b reduce to the bottom element alone. Works
// straight off the order, independently of the meet tables.
bool meet_is_bottom(const FiniteLattice& lat, int a, int b) {
    for (int k = 0; k < lat.size(); ++k)
        if (k != lat.bottom && lat.leq[k][a] && lat.leq[k][b])
            return false;
    return true;
}

int down_size(const FiniteLattice& lat, int x) {
    int c = 0;
    for (int k = 0; k < lat.size(); ++k)
        if (lat.leq[k][x])
            ++c;
    return c;
}

int up_size(const FiniteLattice& lat, int x) {
    int c = 0;
    for (int k = 0; k < lat.size(); ++k)
        if (lat.leq[x][k])
            ++c;
    return c;
}

} // namespace

bool is_orthocomplementation(const FiniteLattice& lattice, const OrthoMap& ortho) {
    const int n = lattice.size();
    if (ortho.size() != n || lattice.bottom < 0)
        return false;
    std::vector<bool> hit(n, false);
    for (int a = 0; a < n; ++a) {
        const int b = ortho(a);
        if (b < 0 || b >= n || hit[b])
            return false;
        hit[b] = true;
    }
    for (int a = 0; a < n; ++a) {
        if (ortho(ortho(a)) != a)
            return false;
        if (!meet_is_bottom(lattice, a, ortho(a)))
            return false;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (lattice.leq[a][b] && !lattice.leq[ortho(b)][ortho(a)])
                return false;
    return true;
}

OrthoSearchResult ortho_search(const FiniteLattice& lattice, int element_cap) {
    const int n = lattice.size();
    if (n > element_cap)
        return {SearchStatus::inconclusive, {},
                "lattice has " + std::to_string(n) + " elements, search cap is " +
                    std::to_string(element_cap)};
    if (lattice.bottom < 0 || lattice.top < 0)
        return {SearchStatus::none, {}, "no bottom or top element"};
    if (n == 1)
        return {SearchStatus::found, OrthoMap{{0}}, "trivial lattice"};

    if (lattice.atoms.size() != lattice.coatoms.size())
        return {SearchStatus::none, {},
                "counting refutation: " + std::to_string(lattice.atoms.size()) + " atoms vs " +
                    std::to_string(lattice.coatoms.size()) + " coatoms"};

    // An order-reversing bijection swaps down-set and up-set sizes, so the
    // two size profiles must agree as multisets.
    std::map<int, int> down_profile, up_profile;
    for (int x = 0; x < n; ++x) {
        ++down_profile[down_size(lattice, x)];
        ++up_profile[up_size(lattice, x)];
    }
    if (down_profile != up_profile)
        return {SearchStatus::none, {}, "counting refutation: down-set/up-set size profiles differ"};

    std::vector<std::vector<int>> candidates(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && down_size(lattice, x) == up_size(lattice, y) &&
                up_size(lattice, x) == down_size(lattice, y) && meet_is_bottom(lattice, x, y))
                candidates[x].push_back(y);

    std::vector<int> image(n, -1);
    std::vector<int> assigned; // elements with an image, in assignment order

    auto consistent = [&](int x, int y) {
        for (int a : assigned) {
            const int b = image[a];
            if (lattice.leq[x][a] != lattice.leq[b][y])
                return false;
            if (lattice.leq[a][x] != lattice.leq[y][b])
                return false;
            if (lattice.leq[y][a] != lattice.leq[b][x])
                return false;
            if (lattice.leq[a][y] != lattice.leq[x][b])
                return false;
        }
        return true;
    };

    std::function<bool()> search = [&]() {
        int x = -1;
        for (int i = 0; i < n; ++i)
            if (image[i] < 0) {
                x = i;
                break;
            }
        if (x < 0)
            return true;
        for (int y : candidates[x]) {
            if (image[y] >= 0 || !consistent(x, y))
                continue;
            image[x] = y;
            image[y] = x;
            assigned.push_back(x);
            assigned.push_back(y);
            if (search())
                return true;
            assigned.pop_back();
            assigned.pop_back();
            image[x] = -1;
            image[y] = -1;
        }
        return false;
    };

    image[lattice.bottom] = lattice.top;
    image[lattice.top] = lattice.bottom;
    assigned.push_back(lattice.bottom);
    assigned.push_back(lattice.top);
    if (!search())
        return {SearchStatus::none, {}, "backtracking search exhausted"};

    OrthoMap found{image};
    if (!is_orthocomplementation(lattice, found))
        return {SearchStatus::none, {}, "backtracking search produced an invalid map"};
    return {SearchStatus::found, found, "backtracking search"};
}

std::optional<std::array<int, 3>> covering_counterexample(const FiniteLattice& lattice) {
    const int n = lattice.size();
    if (lattice.bottom < 0)
        return std::nullopt;
    for (int a = 0; a < n; ++a) {
        for (int t : lattice.atoms) {
            if (lattice.meet[a][t] != lattice.bottom)
                continue;
            const int join_at = lattice.join[a][t];
            if (join_at < 0)
                continue;
            for (int b = 0; b < n; ++b) {
                if (b == a || b == join_at)
                    continue;
                if (lattice.leq[a][b] && lattice.leq[b][join_at])
                    return std::array<int, 3>{a, t, b};
            }
        }
    }
    return std::nullopt;
}

std::optional<int> atomistic_counterexample(const FiniteLattice& lattice) {
    const int n = lattice.size();
    if (lattice.bottom < 0)
        return 0;
    for (int x = 0; x < n; ++x) {
        int join_of_atoms = lattice.bottom;
        for (int t : lattice.atoms) {
            if (!lattice.leq[t][x])
                continue;
            join_of_atoms = lattice.join[join_of_atoms][t];
            if (join_of_atoms < 0)
                break;
        }
        if (join_of_atoms != x)
            return x;
    }
    return std::nullopt;
}

std::optional<std::array<int, 2>> weak_modularity_counterexample(const FiniteLattice& lattice,
                                                                 const OrthoMap& ortho) {
    if (!is_orthocomplementation(lattice, ortho))
        throw std::domain_error("weak_modularity: invalid orthocomplementation");
    const int n = lattice.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!lattice.leq[a][b])
                continue;
            const int j = lattice.join[a][ortho(b)];
            if (j < 0 || lattice.meet[j][b] != a)
                return std::array<int, 2>{a, b};
        }
    return std::nullopt;
}

std::optional<int> irreducibility_counterexample(const FiniteLattice& lattice,
                                                 const OrthoMap& ortho) {
    if (!is_orthocomplementation(lattice, ortho))
        throw std::domain_error("irreducibility: invalid orthocomplementation");
    const int n = lattice.size();
    for (int b = 0; b < n; ++b) {
        if (b == lattice.bottom || b == lattice.top)
            continue;
        bool splits_everywhere = true;
        for (int a = 0; a < n && splits_everywhere; ++a) {
            const int part = lattice.join[lattice.meet[b][a]][lattice.meet[b][ortho(a)]];
            splits_everywhere = part == b;
        }
        if (splits_everywhere)
            return b;
    }
    return std::nullopt;
}

int longest_orthogonal_chain(const FiniteLattice& lattice, const OrthoMap& ortho) {
    if (!is_orthocomplementation(lattice, ortho))
        throw std::domain_error("longest_orthogonal_chain: invalid orthocomplementation");
    const int n = lattice.size();
    std::vector<int> eligible;
    for (int x = 0; x < n; ++x)
        if (x != lattice.bottom)
            eligible.push_back(x);
    const int m = static_cast<int>(eligible.size());
    auto orthogonal = [&](int x, int y) { return lattice.leq[x][ortho(y)]; };

    if (m <= 20) {
        // Exact maximum clique of the orthogonality graph, on <= 20 nodes.
        std::vector<std::uint64_t> adj(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && orthogonal(eligible[i], eligible[j]))
                    adj[i] |= std::uint64_t{1} << j;
        int best = 0;
        std::function<void(std::uint64_t, int)> grow = [&](std::uint64_t cand, int size) {
            if (size + std::popcount(cand) <= best)
                return;
            if (cand == 0) {
                best = std::max(best, size);
                return;
            }
            const int v = std::countr_zero(cand);
            grow(cand & adj[v], size + 1);
            grow(cand & ~(std::uint64_t{1} << v), size);
        };
        grow(m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1), 0);
        return best;
    }

    // Greedy lower bound in index order.
    std::vector<int> chosen;
    for (int x : eligible) {
        bool ok = true;
        for (int y : chosen)
            if (!orthogonal(x, y)) {
                ok = false;
                break;
            }
        if (ok)
            chosen.push_back(x);
    }
    return static_cast<int>(chosen.size());
}

} // namespace qmachine::spa
