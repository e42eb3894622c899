#pragma once

#include "ncr/clifford.hpp"

#include <string>
#include <vector>

namespace ncr {

enum class RefKind { CaseValue, Total, TheoremStatement, Intermediate, Interior, TraceE };
// ATerms: compare only the monomials that carry an A[i,s,t] atom.
enum class RefProjection { Full, ATerms };

// A printed value. Intermediates are stored at x0 with |xi'| = 1 imposed and
// d/dx_n c(xi') written as h'(0)/2 c(xi').
struct Reference {
    std::string id;      // "T4.6/a2", "T4.6/a2:first.pi_plus", "T5.4/total"
    std::string anchor;  // where to look in the source
    std::string source;  // the printed formula, verbatim
    RefKind kind;
    RefProjection projection;
    CliffordExpr value;
};

const std::vector<Reference>& reference_table();
// Throws std::invalid_argument for an unknown id.
const Reference& find_reference(const std::string& id);
const Reference* lookup_reference(const std::string& id);
std::string ref_kind_name(RefKind k);

}  // namespace ncr
