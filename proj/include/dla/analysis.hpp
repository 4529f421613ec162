#ifndef DLA_ANALYSIS_HPP
#define DLA_ANALYSIS_HPP

#include "dla/invariants.hpp"
#include "dla/pddl.hpp"

namespace dla {

struct AnalysisOptions {
    size_t state_guard = 10000;  // per-space extension bound
};

// Full pipeline over an untyped STRIPS domain/problem pair. Inputs are the
// raw parsed models; constant lifting and validation happen inside.
struct Analysis {
    DomainModel domain;    // lifted
    ProblemModel problem;  // lifted
    DomainModel raw_domain;
    ProblemModel raw_problem;
    Diagnostics diags;

    std::vector<TransitionRule> rules;
    std::vector<PropertyClass> classes;
    std::vector<Space> spaces;  // primary, creation order
    OwnerMap owners;
    TypeTable types;
    std::vector<TypedSchema> typed_schemas;

    std::vector<Space> subspaces;
    std::vector<Invariant> invariants;  // primary then sub-space results
};

Analysis analyze(const DomainModel& d, const ProblemModel& p,
                 const AnalysisOptions& opts = {});

}  // namespace dla

#endif
