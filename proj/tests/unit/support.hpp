#pragma once

#include <random>
#include <string>

#include "oriftl/params.hpp"
#include "oriftl/poly.hpp"

namespace oriftl::test {

inline ParamConfig load_config(const std::string& name) {
    return ParamConfig::from_file(std::string(ORIFTL_CONFIG_DIR) + "/" + name + ".json");
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int lo, int hi, int cmax, int terms) {
    std::uniform_int_distribution<int> e(lo, hi), c(-cmax, cmax);
    LaurentPoly p;
    for (int i = 0; i < terms; ++i) p.add_term(e(rng), c(rng));
    return p;
}

}  // namespace oriftl::test
