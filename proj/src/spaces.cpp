#include "dla/spaces.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace dla {

bool Space::has_object(const std::string& o) const {
    return std::count(objects.begin(), objects.end(), o) > 0;
}

Bag initial_properties(const std::vector<Atom>& init, const std::string& o) {
    Bag b;
    for (const auto& a : init)
        for (size_t i = 0; i < a.args.size(); ++i)
            if (a.args[i] == o) b.insert({a.pred, static_cast<int>(i) + 1});
    return b;
}

namespace {

Bag restrict_to(const Bag& b, const std::vector<Property>& props) {
    Bag out;
    for (const auto& p : b.items())
        if (std::count(props.begin(), props.end(), p)) out.insert(p);
    return out;
}

std::set<std::string> static_predicates(const DomainModel& d) {
    std::set<std::string> dyn;
    for (const auto& s : d.schemas) {
        for (const auto& a : s.add) dyn.insert(a.pred);
        for (const auto& a : s.del) dyn.insert(a.pred);
    }
    std::set<std::string> out;
    for (const auto& [name, _] : d.predicates)
        if (!dyn.count(name)) out.insert(name);
    return out;
}

}  // namespace

std::vector<Space> seed_spaces(const std::vector<PropertyClass>& classes,
                               const std::vector<TransitionRule>& rules,
                               const std::vector<Atom>& init,
                               const DomainModel& d) {
    std::vector<Space> spaces;
    std::map<Property, int> class_of;
    for (const auto& c : classes) {
        Space s;
        s.id = static_cast<int>(spaces.size());
        s.properties = c.members;
        for (const auto& p : c.members) class_of[p] = s.id;
        spaces.push_back(std::move(s));
    }
    for (const auto& r : rules) {
        const Bag both = r.start.sum(r.finish);
        if (both.empty()) continue;
        Space& s = spaces[class_of.at(both.items()[0])];
        s.rules.push_back(r);
        if (r.is_attribute()) s.kind = SpaceKind::attribute;
    }
    // Properties seen only as enablers or in init seed singleton spaces so
    // they still contribute a bit to the type vectors.
    std::set<Property> loose;
    for (const auto& r : rules)
        for (const auto& p : r.enablers.support())
            if (!class_of.count(p)) loose.insert(p);
    for (const auto& a : init)
        for (size_t i = 0; i < a.args.size(); ++i) {
            Property p{a.pred, static_cast<int>(i) + 1};
            if (!class_of.count(p)) loose.insert(p);
        }
    auto statics = static_predicates(d);
    for (const auto& p : loose) {
        Space s;
        s.id = static_cast<int>(spaces.size());
        s.kind = SpaceKind::attribute;
        s.properties = {p};
        s.singleton_seed = true;
        s.static_pred = statics.count(p.pred) > 0;
        spaces.push_back(std::move(s));
    }
    return spaces;
}

OwnerMap build_owner_map(const std::vector<Space>& spaces) {
    OwnerMap m;
    for (const auto& s : spaces) {
        if (s.kind == SpaceKind::mixed_retired) continue;
        for (const auto& p : s.properties) m[p] = s.id;
    }
    return m;
}

void assign_objects(std::vector<Space>& spaces, const OwnerMap& owners,
                    const std::vector<Atom>& init,
                    const std::vector<std::string>& objects) {
    for (const auto& o : objects) {
        Bag proj = initial_properties(init, o);
        for (auto& s : spaces) {
            if (s.kind == SpaceKind::mixed_retired) continue;
            Bag r = restrict_to(proj, s.properties);
            if (r.empty()) continue;
            if (!s.has_object(o)) s.objects.push_back(o);
            if (s.is_property_space() &&
                !std::count(s.states.begin(), s.states.end(), r))
                s.states.push_back(r);
        }
    }
    (void)owners;
}

std::optional<MixedDetected> extend_property_space(Space& p, size_t guard) {
    std::vector<int> parent(p.states.size(), -1);
    for (size_t i = 0; i < p.states.size(); ++i) {
        const Bag s = p.states[i];
        for (const auto& r : p.rules) {
            if (!s.includes(r.start)) continue;
            Bag next = s.diff(r.start).sum(r.finish);
            if (std::count(p.states.begin(), p.states.end(), next)) continue;
            // Growth along the state's own derivation chain signals hidden
            // attribute behaviour.
            for (int a = static_cast<int>(i); a >= 0; a = parent[a]) {
                if (next.strictly_includes(p.states[a])) {
                    MixedDetected m;
                    m.offending = next;
                    m.ancestor = p.states[a];
                    m.hidden = next.diff(p.states[a]).support();
                    return m;
                }
            }
            p.states.push_back(next);
            parent.push_back(static_cast<int>(i));
            if (p.states.size() > guard)
                throw std::runtime_error(
                    "state explosion while extending property space " +
                    std::to_string(p.id));
        }
    }
    return std::nullopt;
}

void split_mixed_space(std::vector<Space>& spaces, int mixed_id,
                       const std::vector<Property>& hidden, OwnerMap& owners,
                       const std::vector<Atom>& init,
                       const std::vector<std::string>& objects, size_t guard) {
    std::vector<TransitionRule> state_rules, attr_rules;
    const Bag hidden_bag{hidden};
    for (const auto& r : spaces[mixed_id].rules) {
        Bag sh = restrict_to(r.start, hidden);
        Bag sp = r.start.diff(sh);
        Bag fh = restrict_to(r.finish, hidden);
        Bag fp = r.finish.diff(fh);
        if (!sh.empty())
            attr_rules.push_back(
                {r.enablers.sum(sp), sh, Bag{}, RuleKind::decreasing, r.origin});
        for (const auto& a : fh.items())
            attr_rules.push_back({r.enablers.sum(r.start), Bag{}, Bag{{a}},
                                  RuleKind::increasing, r.origin});
        if (!sp.empty() || !fp.empty()) {
            Bag en = r.enablers.sum(sh);
            if (sp.empty()) {
                for (const auto& a : fp.items())
                    state_rules.push_back(
                        {en, Bag{}, Bag{{a}}, RuleKind::increasing, r.origin});
            } else if (fp.empty()) {
                state_rules.push_back(
                    {en, sp, Bag{}, RuleKind::decreasing, r.origin});
            } else {
                state_rules.push_back({en, sp, fp, RuleKind::state, r.origin});
            }
        }
    }

    std::vector<Property> rest;
    for (const auto& p : spaces[mixed_id].properties)
        if (!std::count(hidden.begin(), hidden.end(), p)) rest.push_back(p);

    spaces[mixed_id].kind = SpaceKind::mixed_retired;
    spaces[mixed_id].states.clear();

    auto append = [&](std::vector<Property> props,
                      std::vector<TransitionRule> rules) -> int {
        Space s;
        s.id = static_cast<int>(spaces.size());
        s.properties = std::move(props);
        s.rules = std::move(rules);
        s.kind = SpaceKind::property;
        for (const auto& r : s.rules)
            if (r.is_attribute()) s.kind = SpaceKind::attribute;
        if (s.rules.empty()) s.kind = SpaceKind::attribute;
        for (const auto& p : s.properties) owners[p] = s.id;
        spaces.push_back(std::move(s));
        return spaces.back().id;
    };

    int state_id = -1;
    if (!rest.empty()) state_id = append(std::move(rest), std::move(state_rules));
    int attr_id = append({hidden.begin(), hidden.end()}, std::move(attr_rules));
    (void)attr_id;

    for (const auto& o : objects) {
        Bag proj = initial_properties(init, o);
        for (int id : {state_id, spaces.back().id}) {
            if (id < 0) continue;
            Space& s = spaces[id];
            Bag r = restrict_to(proj, s.properties);
            if (r.empty()) continue;
            if (!s.has_object(o)) s.objects.push_back(o);
            if (s.is_property_space() &&
                !std::count(s.states.begin(), s.states.end(), r))
                s.states.push_back(r);
        }
    }
    if (state_id >= 0 && spaces[state_id].is_property_space()) {
        if (auto m = extend_property_space(spaces[state_id], guard))
            split_mixed_space(spaces, state_id, m->hidden, owners, init, objects,
                              guard);
    }
}

namespace {

bool potentiates(const std::string& o, const Property& e,
                 const std::vector<Space>& spaces, const OwnerMap& owners,
                 const std::vector<Atom>& init) {
    auto it = owners.find(e);
    if (it != owners.end()) return spaces[it->second].has_object(o);
    for (const auto& a : init)
        if (a.pred == e.pred && static_cast<int>(a.args.size()) >= e.pos &&
            a.args[e.pos - 1] == o)
            return true;
    return false;
}

}  // namespace

void extend_attribute_spaces(
    std::vector<Space>& spaces, const OwnerMap& owners,
    const std::vector<Atom>& init, const std::vector<std::string>& objects,
    std::vector<std::map<int, std::vector<std::string>>>* trace) {
    bool changed = true;
    std::set<int> marked;
    std::function<void(int)> extend = [&](int id) {
        marked.insert(id);
        Space& a = spaces[id];
        for (const auto& r : a.rules) {
            if (r.kind != RuleKind::increasing) continue;
            for (const auto& e : r.enablers.support()) {
                auto it = owners.find(e);
                if (it == owners.end() || it->second == id) continue;
                const Space& other = spaces[it->second];
                if (other.kind == SpaceKind::attribute && !marked.count(other.id))
                    extend(other.id);
            }
        }
        for (const auto& r : a.rules) {
            if (r.kind != RuleKind::increasing) continue;
            for (const auto& o : objects) {
                if (a.has_object(o)) continue;
                bool ok = true;
                for (const auto& e : r.enablers.support())
                    if (!potentiates(o, e, spaces, owners, init)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    a.objects.push_back(o);
                    changed = true;
                }
            }
        }
    };
    while (changed) {
        changed = false;
        marked.clear();
        for (auto& s : spaces)
            if (s.kind == SpaceKind::attribute && !marked.count(s.id))
                extend(s.id);
        if (trace) {
            std::map<int, std::vector<std::string>> snap;
            for (const auto& s : spaces)
                if (s.kind == SpaceKind::attribute) snap[s.id] = s.objects;
            trace->push_back(std::move(snap));
        }
    }
}

}  // namespace dla
