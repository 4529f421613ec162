#ifndef DLA_ORACLE_HPP
#define DLA_ORACLE_HPP

#include <set>
#include <string>
#include <vector>

#include "dla/invariants.hpp"

namespace dla {

using World = std::set<Atom>;

struct GroundAction {
    std::string name;
    std::vector<std::string> args;
    std::vector<Atom> pre, add, del;
};

// Cartesian instantiation over the problem objects. Unary static
// preconditions prune candidate bindings; the result is otherwise naive.
std::vector<GroundAction> ground_actions(const DomainModel& d,
                                         const ProblemModel& p);

struct ReachabilityResult {
    std::vector<World> worlds;  // BFS order, worlds[0] == init
    bool complete = true;       // false when the limit stopped the closure
    size_t expansions = 0;
};

ReachabilityResult enumerate_reachable(const DomainModel& d,
                                       const ProblemModel& p,
                                       size_t max_states = 200000);

// Delete-relaxed fixpoint of reachable atoms (used to screen which ground
// actions can ever fire).
std::set<Atom> relaxed_reachable_atoms(const DomainModel& d,
                                       const ProblemModel& p);

bool eval(const Formula& f, const World& w, const TypeTable& tt,
          const std::vector<std::string>& objects);

struct InvariantCheck {
    bool holds = true;
    World counterexample;  // first failing world when !holds
};

InvariantCheck check_invariant(const Invariant& inv,
                               const ReachabilityResult& r, const TypeTable& tt,
                               const std::vector<std::string>& objects);

// Theorem-style soundness of the space analysis: in every reachable world the
// projection of each member object onto a property (sub-)space's property set
// is one of the space's states.
struct SoundnessCheck {
    bool holds = true;
    std::string detail;  // object/space/world description on failure
};

SoundnessCheck check_projection_soundness(const std::vector<Space>& spaces,
                                          const ReachabilityResult& r);

Bag project_world(const World& w, const std::string& o,
                  const std::vector<Property>& props);

}  // namespace dla

#endif
