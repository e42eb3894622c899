#pragma once

#include "ncr/pipeline.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ncr {

struct OracleCounts {
    std::size_t clifford = 1000;      // random trace / cyclicity instances
    std::size_t halfplane = 500;      // random rationals for pi_plus identities
    std::size_t contour = 500;        // random integrands against quadrature
    std::size_t sphere = 10'000'000;  // Monte Carlo samples per moment
};

struct Suite {
    std::string name;
    std::vector<SelfCheck> checks;
    bool passed() const;
};

Suite verify_clifford(const OracleCounts& n, std::uint64_t seed);
Suite verify_trace_identities();
Suite verify_halfplane(const OracleCounts& n, std::uint64_t seed);
Suite verify_contour(const OracleCounts& n, std::uint64_t seed);
Suite verify_sphere(const OracleCounts& n, std::uint64_t seed);
// Parametrix identities, plus the printed-vs-recomputed diffs of the
// (D_T^* D_T)^{-1} symbol, reported in the check details.
Suite verify_parametrix();

std::vector<Suite> run_oracle_suites(const OracleCounts& n, std::uint64_t seed);

}  // namespace ncr
