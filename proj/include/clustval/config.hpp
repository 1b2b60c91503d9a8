#ifndef CLUSTVAL_CONFIG_HPP
#define CLUSTVAL_CONFIG_HPP

#include <cstddef>

#include "clustval/errors.hpp"

namespace clustval {

// Shared knobs for index evaluation and calibration.
struct ValidationConfig {
    double p_sep = 0.1;    // portion of closest-to-other-cluster objects per cluster
    double p_dens = 0.1;   // quantile portion for the kernel bandwidth
    std::size_t k_cv = 4;  // neighbour order for cvdens
    std::size_t k_max = 10;
    std::size_t b = 100;   // random clusterings per generator per K

    void validate() const {
        if (!(p_sep > 0.0 && p_sep <= 1.0)) throw MalformedInput("p_sep must be in (0,1]");
        if (!(p_dens > 0.0 && p_dens <= 1.0)) throw MalformedInput("p_dens must be in (0,1]");
        if (k_cv < 1) throw MalformedInput("k_cv must be >= 1");
        if (k_max < 2) throw MalformedInput("K_max must be >= 2");
        if (b < 2) throw MalformedInput("B must be >= 2");
    }
};

} // namespace clustval

#endif
