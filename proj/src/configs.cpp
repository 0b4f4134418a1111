#include "jjline/configs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jjline {

PhotonConfigSet build_photon_configs(const Eigen::VectorXd& frequencies,
                                     double e_cut, int max_configs) {
    const int nm = static_cast<int>(frequencies.size());
    if (e_cut <= 0.0) throw std::invalid_argument("E_cut must be > 0");
    for (int k = 0; k < nm; ++k)
        if (!(frequencies[k] > 0.0))
            throw std::invalid_argument("mode frequencies must be positive");

    std::vector<std::vector<int>> cfgs;
    std::vector<int> cur(nm, 0);
    // Depth-first enumeration; strict inequality keeps the set open at E_cut.
    auto rec = [&](auto&& self, int k, double rem) -> void {
        if (k == nm) {
            if (static_cast<int>(cfgs.size()) >= max_configs) {
                std::ostringstream msg;
                msg << "photon config basis exceeds the configured maximum of "
                    << max_configs << " states (E_cut = " << e_cut << ")";
                throw BasisOverflow(msg.str());
            }
            cfgs.push_back(cur);
            return;
        }
        const double w = frequencies[k];
        for (int n = 0; n * w < rem; ++n) {
            cur[k] = n;
            self(self, k + 1, rem - n * w);
        }
        cur[k] = 0;
    };
    rec(rec, 0, e_cut);

    auto energy_of = [&](const std::vector<int>& c) {
        double e = 0.0;
        for (int k = 0; k < nm; ++k) e += c[k] * frequencies[k];
        return e;
    };
    std::sort(cfgs.begin(), cfgs.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  const double ea = energy_of(a), eb = energy_of(b);
                  if (ea != eb) return ea < eb;
                  return a < b;
              });

    PhotonConfigSet out;
    out.frequencies = frequencies;
    out.energy_cutoff = e_cut;
    out.occupations.resize(static_cast<int>(cfgs.size()), nm);
    out.energies.resize(static_cast<int>(cfgs.size()));
    out.mode_max.assign(nm, 0);
    for (int i = 0; i < static_cast<int>(cfgs.size()); ++i) {
        for (int k = 0; k < nm; ++k) {
            out.occupations(i, k) = cfgs[i][k];
            out.mode_max[k] = std::max(out.mode_max[k], cfgs[i][k]);
        }
        out.energies[i] = energy_of(cfgs[i]);
    }
    return out;
}

}  // namespace jjline
