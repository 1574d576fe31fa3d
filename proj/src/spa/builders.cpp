#include "qmachine/spa/builders.hpp"

#include <stdexcept>
#include <string>

namespace qmachine::spa {

bool negation_closed(const std::vector<Direction>& directions) {
    for (const Direction& u : directions) {
        bool found = false;
        for (const Direction& v : directions)
            if ((u.vec() + v.vec()).norm() <= 1e-9) {
                found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

StatePropertySpace build_spin_sps(const std::vector<Direction>& directions,
                                  const std::vector<BallPoint>& interior) {
    const int nd = static_cast<int>(directions.size());
    for (int i = 0; i < nd; ++i)
        for (int j = i + 1; j < nd; ++j)
            if ((directions[i].vec() - directions[j].vec()).norm() <= 1e-9)
                throw std::domain_error("build_spin_sps: duplicate directions " +
                                        std::to_string(i) + " and " + std::to_string(j));
    for (const BallPoint& w : interior)
        if (w.vec().norm() >= 1.0 - kTol)
            throw std::domain_error("build_spin_sps: interior points must satisfy |w| < 1");

    StatePropertySpace sps;
    sps.properties.push_back("0");
    for (int i = 0; i < nd; ++i)
        sps.properties.push_back("a" + std::to_string(i));
    sps.properties.push_back("I");
    const int prop_top = nd + 1;

    for (int i = 0; i < nd; ++i)
        sps.states.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < interior.size(); ++j)
        sps.states.push_back("w" + std::to_string(j));
    sps.states.push_back("top");

    sps.xi.assign(sps.n_states(), std::vector<bool>(sps.n_properties(), false));
    for (int p = 0; p < sps.n_states(); ++p)
        sps.xi[p][prop_top] = true;
    for (int i = 0; i < nd; ++i)
        sps.xi[i][1 + i] = true;

    sps.validate();
    return sps;
}

} // namespace qmachine::spa
