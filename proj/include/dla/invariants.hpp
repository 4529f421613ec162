#ifndef DLA_INVARIANTS_HPP
#define DLA_INVARIANTS_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dla/types.hpp"

namespace dla {

// First-order formula over ground worlds. Quantifiers range over the problem
// objects of the listed types (an empty type list means all objects).
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum Kind { forall, exists, atom, eq, conj, disj, neg, impl, card } kind = atom;

    // forall / exists
    std::vector<std::string> vars;
    std::vector<std::vector<int>> var_types;  // parallel to vars
    // children: quantifier body (1), conj/disj (n), neg (1)
    std::vector<FormulaPtr> children;

    Atom a;  // atom: args are variable names or object constants

    std::string lhs, rhs;  // eq

    // card: |{(x0..): pred(x0..)}| rel k
    std::string pred;
    int arity = 0;
    bool exact = true;  // "=" vs "<="
    long bound = 0;

    // Always render inside parentheses (used for membership bodies).
    bool grouped = false;
};

FormulaPtr mk_forall(std::string var, std::vector<int> types, FormulaPtr body);
FormulaPtr mk_exists(std::string var, std::vector<int> types, FormulaPtr body);
FormulaPtr mk_atom(Atom a);
FormulaPtr mk_eq(std::string l, std::string r);
FormulaPtr mk_and(std::vector<FormulaPtr> xs);
FormulaPtr mk_or(std::vector<FormulaPtr> xs);
FormulaPtr mk_not(FormulaPtr x);
FormulaPtr mk_card(std::string pred, int arity, bool exact, long bound);

// Surface syntax used by the text report, e.g.
//   FORALL x:T1 U T2. (deflated(x) OR inflated(x))
std::string render(const Formula& f, const TypeTable& tt);

enum class InvariantFamily { identity, membership, uniqueness, fixed_resource };

struct Invariant {
    InvariantFamily family;
    FormulaPtr formula;
    int space = -1;          // owning space (membership/uniqueness)
    std::string pred;        // fixed_resource / identity anchor predicate
    bool from_subspace = false;
    int subspace_type = -1;
    // Sub-space result whose formula already follows from a primary one and
    // whose type is contained in the primary type union.
    bool subsumed = false;
};

// State partition of a property space: the usable states (states jointly
// included with a sibling inside some other state are not usable on their
// own).
struct StatePartition {
    int space = -1;
    std::vector<Bag> states;
    std::vector<bool> usable;
};

StatePartition partition_of(const Space& p);

std::vector<Invariant> identity_invariants(const std::vector<Space>& spaces,
                                           const TypeTable& tt,
                                           const DomainModel& d);
std::vector<Invariant> membership_invariants(const std::vector<Space>& spaces,
                                             const OwnerMap& owners,
                                             const TypeTable& tt,
                                             const DomainModel& d,
                                             const std::vector<Atom>& init);
std::vector<Invariant> uniqueness_invariants(const std::vector<Space>& spaces,
                                             const OwnerMap& owners,
                                             const TypeTable& tt,
                                             const DomainModel& d,
                                             const std::vector<Atom>& init);
std::vector<Invariant> fixed_resource_invariants(const DomainModel& d,
                                                 const std::vector<Space>& spaces,
                                                 const std::vector<Atom>& init);

// Per-type decomposition of every rule-owning space with >1 object types;
// property sub-spaces yield membership/uniqueness invariants tagged with
// their type.
struct SubspaceResult {
    std::vector<Space> subspaces;
    std::vector<Invariant> invariants;
};
SubspaceResult subspace_invariants(const std::vector<Space>& spaces,
                                   const OwnerMap& owners, const TypeTable& tt,
                                   const DomainModel& d,
                                   const std::vector<Atom>& init,
                                   const std::vector<Invariant>& primary);

}  // namespace dla

#endif
