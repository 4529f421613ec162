#include "dla/analysis.hpp"

namespace dla {

Analysis analyze(const DomainModel& d, const ProblemModel& p,
                 const AnalysisOptions& opts) {
    Analysis a;
    a.raw_domain = d;
    a.raw_problem = p;
    validate_strips(d, &a.diags);
    std::tie(a.domain, a.problem) = lift_constants(d, p);
    validate_problem(a.domain, a.problem);

    a.rules = build_rules(a.domain);
    a.classes = unite(a.rules);
    a.spaces = seed_spaces(a.classes, a.rules, a.problem.init, a.domain);
    a.owners = build_owner_map(a.spaces);
    assign_objects(a.spaces, a.owners, a.problem.init, a.problem.objects);

    for (size_t i = 0; i < a.spaces.size(); ++i) {
        if (!a.spaces[i].is_property_space()) continue;
        if (auto m = extend_property_space(a.spaces[i], opts.state_guard))
            split_mixed_space(a.spaces, static_cast<int>(i), m->hidden, a.owners,
                              a.problem.init, a.problem.objects, opts.state_guard);
    }
    extend_attribute_spaces(a.spaces, a.owners, a.problem.init,
                            a.problem.objects);

    a.types = infer_types(a.spaces, a.problem.objects);
    a.typed_schemas =
        parameter_types(a.domain, a.spaces, a.owners, a.types, a.problem.init);

    auto push = [&](std::vector<Invariant> xs) {
        for (auto& x : xs) a.invariants.push_back(std::move(x));
    };
    push(identity_invariants(a.spaces, a.types, a.domain));
    push(membership_invariants(a.spaces, a.owners, a.types, a.domain,
                               a.problem.init));
    push(uniqueness_invariants(a.spaces, a.owners, a.types, a.domain,
                               a.problem.init));
    push(fixed_resource_invariants(a.domain, a.spaces, a.problem.init));
    auto sub = subspace_invariants(a.spaces, a.owners, a.types, a.domain,
                                   a.problem.init, a.invariants);
    a.subspaces = std::move(sub.subspaces);
    push(std::move(sub.invariants));
    return a;
}

}  // namespace dla
