#include "clustval/profile.hpp"

#include <algorithm>
#include <optional>

namespace clustval {

namespace {

bool wants(const std::vector<std::string>& sel, const std::string& id) {
    return sel.empty() || std::find(sel.begin(), sel.end(), id) != sel.end();
}

} // namespace

ProfileResult compute_profile(const DissimilarityMatrix& d, const Clustering& c,
                              const ValidationConfig& config,
                              const std::vector<std::string>& selected,
                              const DensityEstimate* cache) {
    for (const auto& id : selected)
        if (!is_known_index(id)) throw MissingIndex("unknown index id '" + id + "'");

    ProfileResult out;
    out.profile.num_clusters = c.num_clusters();
    auto eval = [&](const std::string& id, auto&& fn) {
        if (!wants(selected, id)) return;
        try {
            out.profile.values.emplace(id, fn());
        } catch (const ValidationError& err) {
            out.failures.emplace(id, err.what());
        }
    };

    eval("withindis", [&] { return within_dis(d, c); });
    eval("psep", [&] { return p_separation(d, c, config.p_sep); });
    eval("centroid", [&] { return centroid_index(d, c); });
    eval("pearsongamma", [&] { return pearson_gamma(d, c); });
    eval("widestgap", [&] { return widest_gap(d, c); });
    eval("cvdens", [&] { return cv_density(d, c, config.k_cv); });
    eval("entropy", [&] { return entropy(c); });
    eval("parsimony", [&] { return parsimony(c, config.k_max); });

    const bool density_needed = wants(selected, "densdec") || wants(selected, "densbound") ||
                                wants(selected, "highdgap");
    if (density_needed) {
        std::optional<DensityEstimate> local;
        if (cache == nullptr) {
            local = density_estimate(d, config.p_dens);
            cache = &*local;
        }
        const DensityProfile prof = density_profile(d, c, *cache);
        auto [densdec, gaps] = densdec_and_gaps(d, c, prof);
        if (wants(selected, "densdec")) out.profile.values.emplace("densdec", densdec);
        if (wants(selected, "highdgap"))
            out.profile.values.emplace("highdgap", highdgap(gaps, d.d_max()));
        if (wants(selected, "densbound"))
            out.profile.values.emplace("densbound", densbound(c, prof));
    }
    return out;
}

} // namespace clustval
