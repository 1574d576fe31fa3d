#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmachine/spa/axioms.hpp"
#include "qmachine/spa/builders.hpp"
#include "qmachine/spa/coproduct.hpp"
#include "qmachine/spa/lattice.hpp"

#include <functional>
#include <numbers>

using namespace qmachine;
using namespace qmachine::spa;

namespace {

constexpr double pi = std::numbers::pi;

// Least upper bound recomputed from the raw order, as an independent route.
int join_by_scan(const FiniteLattice& lat, int a, int b) {
    int best = -1;
    for (int k = 0; k < lat.size(); ++k) {
        if (!lat.leq[a][k] || !lat.leq[b][k])
            continue;
        if (best < 0 || lat.leq[k][best])
            best = k;
    }
    return best;
}

bool meet_is_bottom_by_scan(const FiniteLattice& lat, int a, int b) {
    for (int k = 0; k < lat.size(); ++k)
        if (k != lat.bottom && lat.leq[k][a] && lat.leq[k][b])
            return false;
    return true;
}

} // namespace

TEST_CASE("coproduct size formula") {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 2; n <= 4; ++n) {
            const Coproduct product = coproduct(mo_sps(m), mo_sps(n));
            CHECK(product.sps.n_properties() == (m + 1) * (n + 1) + 1);
            CHECK(product.sps.n_states() == m * n);
        }
    }
}

TEST_CASE("covariance of the embeddings") {
    const StatePropertySpace s1 = mo_sps(2);
    const StatePropertySpace s2 = mo_sps(3);
    const Coproduct product = coproduct(s1, s2);
    for (int a1 = 0; a1 < s1.n_properties(); ++a1)
        for (int i = 0; i < s1.n_states(); ++i)
            for (int j = 0; j < s2.n_states(); ++j)
                CHECK(s1.xi[i][a1] ==
                      product.sps.xi[product.state_pair_index(i, j)][product.n1[a1]]);
    for (int a2 = 0; a2 < s2.n_properties(); ++a2)
        for (int i = 0; i < s1.n_states(); ++i)
            for (int j = 0; j < s2.n_states(); ++j)
                CHECK(s2.xi[j][a2] ==
                      product.sps.xi[product.state_pair_index(i, j)][product.n2[a2]]);
    // Zero maps to the fresh zero.
    CHECK(product.n1[0] == 0);
    CHECK(product.n2[0] == 0);
}

TEST_CASE("coproduct of passing systems passes axiom 1") {
    const Coproduct product = coproduct(mo_sps(2), mo_sps(2));
    CHECK(check_axiom1(product.sps).holds());

    // Monotone actuality survives the construction.
    const InducedOrders orders = induced_orders(product.sps);
    for (int p = 0; p < product.sps.n_states(); ++p)
        for (int a = 0; a < product.sps.n_properties(); ++a)
            for (int b = 0; b < product.sps.n_properties(); ++b)
                if (product.sps.xi[p][a] && orders.property_leq[a][b])
                    CHECK(product.sps.xi[p][b]);
}

TEST_CASE("coproduct rejects non-systems") {
    StatePropertySpace improper = mo_sps(2);
    improper.states.push_back("void");
    improper.xi.push_back(std::vector<bool>(improper.n_properties(), false));
    CHECK_THROWS_AS(coproduct(improper, mo_sps(2)), std::domain_error);
}

TEST_CASE("coproduct order is componentwise") {
    const StatePropertySpace s1 = mo_sps(2);
    const StatePropertySpace s2 = mo_sps(2);
    const Coproduct product = coproduct(s1, s2);
    const InducedOrders inner1 = induced_orders(s1);
    const InducedOrders inner2 = induced_orders(s2);
    const InducedOrders outer = induced_orders(product.sps);

    // Pair properties: index them back out of the labels by construction
    // order (all proper properties of each factor, row by row).
    std::vector<int> proper1, proper2;
    for (int a = 0; a < s1.n_properties(); ++a)
        if (!s1.extent(a).empty())
            proper1.push_back(a);
    for (int a = 0; a < s2.n_properties(); ++a)
        if (!s2.extent(a).empty())
            proper2.push_back(a);
    auto pair_at = [&](int i, int j) {
        return 1 + i * static_cast<int>(proper2.size()) + j;
    };
    for (std::size_t i = 0; i < proper1.size(); ++i)
        for (std::size_t j = 0; j < proper2.size(); ++j)
            for (std::size_t k = 0; k < proper1.size(); ++k)
                for (std::size_t l = 0; l < proper2.size(); ++l) {
                    const bool componentwise = inner1.property_leq[proper1[i]][proper1[k]] &&
                                               inner2.property_leq[proper2[j]][proper2[l]];
                    CHECK(outer.property_leq[pair_at(i, j)][pair_at(k, l)] == componentwise);
                }
    // The fresh zero sits below everything.
    for (int b = 0; b < product.sps.n_properties(); ++b)
        CHECK(outer.property_leq[0][b]);
}

TEST_CASE("coproduct lattice atoms are pairs of atoms") {
    const Coproduct product = coproduct(mo_sps(2), mo_sps(3));
    const FiniteLattice lat = property_lattice_of(product.sps);
    CHECK(lat.atoms.size() == 6);
    // Coatoms pair a factor coatom with the other factor's top.
    CHECK(lat.coatoms.size() == 5);
}

TEST_CASE("every MO pair coproduct breaks the covering law with a verified witness") {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 2; n <= 4; ++n) {
            const Coproduct product = coproduct(mo_sps(m), mo_sps(n));
            const FiniteLattice lat = property_lattice_of(product.sps);
            const auto witness = covering_counterexample(lat);
            REQUIRE_MESSAGE(witness.has_value(), "MO", m, " x MO", n);
            const auto [a, t, b] = *witness;
            // Independent verification from the raw order.
            CHECK(meet_is_bottom_by_scan(lat, a, t));
            bool t_is_atom = t != lat.bottom;
            for (int k = 0; k < lat.size(); ++k)
                if (k != t && k != lat.bottom && lat.leq[k][t])
                    t_is_atom = false;
            CHECK(t_is_atom);
            const int join_at = join_by_scan(lat, a, t);
            REQUIRE(join_at >= 0);
            CHECK(lat.leq[a][b]);
            CHECK(lat.leq[b][join_at]);
            CHECK(b != a);
            CHECK(b != join_at);
        }
    }
}

TEST_CASE("no orthocomplementation on MO coproducts") {
    {
        const FiniteLattice lat = property_lattice_of(coproduct(mo_sps(2), mo_sps(2)).sps);
        CHECK(lat.size() == 10);
        const OrthoSearchResult result = ortho_search(lat);
        CHECK(result.status == SearchStatus::none);
        CHECK(result.note.find("exhausted") != std::string::npos);

        // Independent confirmation: enumerate every involution of the
        // 10-element lattice and test the axioms directly.
        const int size = lat.size();
        std::vector<int> image(size, -1);
        bool any = false;
        std::function<void(int)> place = [&](int i) {
            if (any)
                return;
            if (i == size) {
                for (int a = 0; a < size; ++a) {
                    if (!meet_is_bottom_by_scan(lat, a, image[a]))
                        return;
                    for (int b = 0; b < size; ++b)
                        if (lat.leq[a][b] && !lat.leq[image[b]][image[a]])
                            return;
                }
                any = true;
                return;
            }
            if (image[i] >= 0) {
                place(i + 1);
                return;
            }
            for (int j = i; j < size && !any; ++j) {
                if (image[j] >= 0)
                    continue;
                image[i] = j;
                image[j] = i;
                place(i + 1);
                image[i] = -1;
                if (j != i)
                    image[j] = -1;
            }
        };
        place(0);
        CHECK(!any);
    }
    {
        const FiniteLattice lat = property_lattice_of(coproduct(mo_sps(3), mo_sps(3)).sps);
        const OrthoSearchResult result = ortho_search(lat);
        CHECK(result.status == SearchStatus::none);
        CHECK(result.note.find("counting refutation") != std::string::npos);
        CHECK(result.note.find("9 atoms vs 6 coatoms") != std::string::npos);
    }
}

TEST_CASE("axiom report of a spin sps coproduct") {
    const std::vector<Direction> dirs = {
        direction_from_angles(0, 0), direction_from_angles(pi, 0),
        direction_from_angles(pi / 2, 0), direction_from_angles(pi / 2, pi)};
    const StatePropertySpace spin = build_spin_sps(dirs, {BallPoint::center()});
    const Coproduct product = coproduct(spin, spin);
    const AxiomReport report = axiom_report(product.sps);
    CHECK(report.axiom1.holds());
    CHECK(report.axiom1.capped); // 26 property classes
    CHECK(report.axiom2.holds());
    CHECK(report.axiom3.fails());
    CHECK(report.axiom4.fails());
    CHECK(report.axiom5.status == Verdict::Status::not_applicable);
}

TEST_CASE("coproduct with a Boolean factor still breaks covering") {
    const Coproduct product = coproduct(mo_sps(2), boolean_sps(2));
    const FiniteLattice lat = property_lattice_of(product.sps);
    CHECK(covering_counterexample(lat).has_value());
}
