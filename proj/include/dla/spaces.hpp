#ifndef DLA_SPACES_HPP
#define DLA_SPACES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dla/rules.hpp"

namespace dla {

enum class SpaceKind {
    property,
    attribute,
    mixed_retired,  // a mixed space kept only for typing after splitting
};

struct Space {
    int id = 0;
    SpaceKind kind = SpaceKind::property;
    std::vector<Property> properties;  // canonical order
    std::vector<TransitionRule> rules;
    std::vector<std::string> objects;  // insertion order
    std::vector<Bag> states;           // property spaces only

    // Singleton spaces seeded from properties that never occur in a rule's
    // start/finish (statics and pure enablers).
    bool singleton_seed = false;
    bool static_pred = false;  // predicate never added/deleted by any schema

    // Sub-space provenance (§-style per-type decomposition); sub-spaces are
    // kept outside the primary list and never influence typing.
    int parent = -1;
    int subspace_type = -1;

    bool has_object(const std::string& o) const;
    bool is_property_space() const { return kind == SpaceKind::property; }
};

struct MixedDetected {
    std::vector<Property> hidden;  // bag difference between state and ancestor
    Bag offending;
    Bag ancestor;
};

// Maps each property to the primary space that owns it (mixed_retired spaces
// excluded once split).
using OwnerMap = std::map<Property, int>;

// Initial properties of one object: every (pred, position) where the object
// occurs in an init atom, one bag occurrence per atom occurrence.
Bag initial_properties(const std::vector<Atom>& init, const std::string& o);

std::vector<Space> seed_spaces(const std::vector<PropertyClass>& classes,
                               const std::vector<TransitionRule>& rules,
                               const std::vector<Atom>& init,
                               const DomainModel& d);

void assign_objects(std::vector<Space>& spaces, const OwnerMap& owners,
                    const std::vector<Atom>& init,
                    const std::vector<std::string>& objects);

// Fixed point of s' = (s ⊖ start) ⊕ finish over the space's rules, with
// duplicate collapse. Returns the hidden attributes if a new state strictly
// includes a state on its own derivation chain. `guard` bounds the state
// count; exceeding it raises ParseError-free std::runtime_error naming the
// space (probable undetected attribute).
std::optional<MixedDetected> extend_property_space(Space& p, size_t guard = 10000);

// Cuts rules over the hidden properties and appends a fresh property space
// and (if any attribute rules result) a fresh attribute space; the original
// space becomes mixed_retired but keeps its objects for typing.
void split_mixed_space(std::vector<Space>& spaces, int mixed_id,
                       const std::vector<Property>& hidden, OwnerMap& owners,
                       const std::vector<Atom>& init,
                       const std::vector<std::string>& objects, size_t guard);

// Potentiation-based attribute extension with per-iteration marking to break
// enabler cycles. When `trace` is given it receives one membership snapshot
// (space id -> objects) per outer iteration.
void extend_attribute_spaces(
    std::vector<Space>& spaces, const OwnerMap& owners,
    const std::vector<Atom>& init, const std::vector<std::string>& objects,
    std::vector<std::map<int, std::vector<std::string>>>* trace = nullptr);

OwnerMap build_owner_map(const std::vector<Space>& spaces);

}  // namespace dla

#endif
