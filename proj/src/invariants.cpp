#include "dla/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dla {

namespace {

FormulaPtr mk(Formula f) { return std::make_shared<Formula>(std::move(f)); }

}  // namespace

FormulaPtr mk_forall(std::string var, std::vector<int> types, FormulaPtr body) {
    Formula f;
    f.kind = Formula::forall;
    f.vars = {std::move(var)};
    f.var_types = {std::move(types)};
    f.children = {std::move(body)};
    return mk(std::move(f));
}

FormulaPtr mk_exists(std::string var, std::vector<int> types, FormulaPtr body) {
    Formula f;
    f.kind = Formula::exists;
    f.vars = {std::move(var)};
    f.var_types = {std::move(types)};
    f.children = {std::move(body)};
    return mk(std::move(f));
}

FormulaPtr mk_atom(Atom a) {
    Formula f;
    f.kind = Formula::atom;
    f.a = std::move(a);
    return mk(std::move(f));
}

FormulaPtr mk_eq(std::string l, std::string r) {
    Formula f;
    f.kind = Formula::eq;
    f.lhs = std::move(l);
    f.rhs = std::move(r);
    return mk(std::move(f));
}

FormulaPtr mk_and(std::vector<FormulaPtr> xs) {
    if (xs.size() == 1) return xs[0];
    Formula f;
    f.kind = Formula::conj;
    f.children = std::move(xs);
    return mk(std::move(f));
}

FormulaPtr mk_or(std::vector<FormulaPtr> xs) {
    if (xs.size() == 1) return xs[0];
    Formula f;
    f.kind = Formula::disj;
    f.children = std::move(xs);
    return mk(std::move(f));
}

FormulaPtr mk_not(FormulaPtr x) {
    Formula f;
    f.kind = Formula::neg;
    f.children = {std::move(x)};
    return mk(std::move(f));
}

FormulaPtr mk_card(std::string pred, int arity, bool exact, long bound) {
    Formula f;
    f.kind = Formula::card;
    f.pred = std::move(pred);
    f.arity = arity;
    f.exact = exact;
    f.bound = bound;
    return mk(std::move(f));
}

namespace {

FormulaPtr mk_impl(FormulaPtr a, FormulaPtr b) {
    Formula f;
    f.kind = Formula::impl;
    f.children = {std::move(a), std::move(b)};
    return mk(std::move(f));
}

FormulaPtr mk_grouped(const FormulaPtr& x) {
    Formula f = *x;
    f.grouped = true;
    return mk(std::move(f));
}

std::string type_names(const std::vector<int>& ts) {
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i) s += " U ";
        s += "T" + std::to_string(ts[i]);
    }
    return s;
}

std::string render_inner(const Formula& f, bool naked);

std::string join_children(const Formula& f, const char* op) {
    std::string s;
    for (size_t i = 0; i < f.children.size(); ++i) {
        if (i) s += op;
        s += render_inner(*f.children[i], false);
    }
    return s;
}

std::string render_core(const Formula& f, bool naked) {
    switch (f.kind) {
        case Formula::forall: {
            std::string q = "FORALL " + f.vars[0];
            if (!f.var_types[0].empty()) q += ":" + type_names(f.var_types[0]);
            return q + ". " + render_inner(*f.children[0], false);
        }
        case Formula::exists: {
            std::string q = "Exists " + f.vars[0];
            if (!f.var_types[0].empty()) q += ":" + type_names(f.var_types[0]);
            return q + ". " + render_inner(*f.children[0], false);
        }
        case Formula::atom:
            return to_string(f.a);
        case Formula::eq:
            return f.lhs + " = " + f.rhs;
        case Formula::conj: {
            std::string s = join_children(f, " AND ");
            return (naked || f.children.size() < 2) ? s : "(" + s + ")";
        }
        case Formula::disj: {
            std::string s = join_children(f, " OR ");
            return (naked || f.children.size() < 2) ? s : "(" + s + ")";
        }
        case Formula::neg:
            return "NOT " + render_inner(*f.children[0], false);
        case Formula::impl:
            return render_inner(*f.children[0], true) + " => " +
                   render_inner(*f.children[1], true);
        case Formula::card: {
            std::string vars, tuple;
            for (int i = 0; i < f.arity; ++i) {
                if (i) vars += ",";
                vars += "x" + std::to_string(i);
            }
            tuple = f.arity > 1 ? "(" + vars + ")" : vars;
            return "|{" + tuple + ": " + f.pred + "(" + vars + ")}| " +
                   (f.exact ? "=" : "<=") + " " + std::to_string(f.bound);
        }
    }
    return "";
}

std::string render_inner(const Formula& f, bool naked) {
    std::string s = render_core(f, naked);
    if (f.grouped && (s.empty() || s[0] != '(')) s = "(" + s + ")";
    return s;
}

}  // namespace

std::string render(const Formula& f, const TypeTable&) {
    return render_inner(f, false);
}

StatePartition partition_of(const Space& p) {
    StatePartition sp;
    sp.space = p.id;
    sp.states = p.states;
    sp.usable.assign(p.states.size(), true);
    auto join = [](const Bag& a, const Bag& b) { return a.sum(b.diff(a)); };
    for (size_t i = 0; i < sp.states.size(); ++i)
        for (size_t j = 0; j < sp.states.size() && sp.usable[i]; ++j) {
            if (i == j) continue;
            Bag both = join(sp.states[i], sp.states[j]);
            for (const auto& s : sp.states)
                if (s.includes(both)) {
                    sp.usable[i] = false;
                    break;
                }
        }
    return sp;
}

namespace {

std::vector<int> type_union_of(const std::vector<std::string>& objs,
                               const TypeTable& tt) {
    std::set<int> ts;
    for (const auto& o : objs) {
        int t = tt.type_of(o);
        if (t >= 0) ts.insert(t);
    }
    return {ts.begin(), ts.end()};
}

// Types admissible at position `pos` of `pred`, from the owning space of
// that position (or, for unowned statics, the init occupants).
std::vector<int> position_types(const std::string& pred, int pos,
                                const std::vector<Space>& spaces,
                                const OwnerMap& owners, const TypeTable& tt,
                                const std::vector<Atom>& init) {
    auto it = owners.find({pred, pos});
    if (it != owners.end())
        return type_union_of(spaces[it->second].objects, tt);
    std::set<int> ts;
    for (const auto& a : init)
        if (a.pred == pred && static_cast<int>(a.args.size()) >= pos) {
            int t = tt.type_of(a.args[pos - 1]);
            if (t >= 0) ts.insert(t);
        }
    return {ts.begin(), ts.end()};
}

// One occurrence of property p held by x: p's atom with x at p.pos and a
// typed existential per remaining position.
FormulaPtr occurrence_formula(const Property& p, const DomainModel& d,
                              const std::vector<Space>& spaces,
                              const OwnerMap& owners, const TypeTable& tt,
                              const std::vector<Atom>& init) {
    int arity = d.arity_of(p.pred);
    Atom a;
    a.pred = p.pred;
    a.args.resize(arity);
    std::vector<std::pair<std::string, int>> evars;  // (name, position)
    int n = 0;
    for (int i = 1; i <= arity; ++i) {
        if (i == p.pos) {
            a.args[i - 1] = "x";
        } else {
            std::string v = "y" + std::to_string(++n);
            a.args[i - 1] = v;
            evars.emplace_back(v, i);
        }
    }
    FormulaPtr f = mk_atom(std::move(a));
    for (auto it = evars.rbegin(); it != evars.rend(); ++it)
        f = mk_exists(it->first,
                      position_types(p.pred, it->second, spaces, owners, tt, init),
                      f);
    return f;
}

FormulaPtr state_formula(const Bag& state, const DomainModel& d,
                         const std::vector<Space>& spaces, const OwnerMap& owners,
                         const TypeTable& tt, const std::vector<Atom>& init) {
    std::vector<FormulaPtr> parts;
    for (const auto& p : state.items())
        parts.push_back(occurrence_formula(p, d, spaces, owners, tt, init));
    return mk_and(std::move(parts));
}

// Membership states: the space's states with strict supersets of another
// state discarded.
std::vector<Bag> minimal_states(const Space& s) {
    std::vector<Bag> out;
    for (const auto& a : s.states) {
        bool superset = false;
        for (const auto& b : s.states)
            if (a.strictly_includes(b)) {
                superset = true;
                break;
            }
        if (!superset) out.push_back(a);
    }
    return out;
}

std::vector<Invariant> space_invariants(const Space& s,
                                        const std::vector<int>& xtypes,
                                        const std::vector<Space>& spaces,
                                        const OwnerMap& owners,
                                        const TypeTable& tt, const DomainModel& d,
                                        const std::vector<Atom>& init) {
    std::vector<Invariant> out;
    if (s.states.empty() || s.objects.empty()) return out;
    std::vector<Bag> mins = minimal_states(s);

    // Membership: every member object is always in one of the states.
    {
        std::vector<FormulaPtr> disjuncts;
        for (const auto& st : mins)
            disjuncts.push_back(state_formula(st, d, spaces, owners, tt, init));
        Invariant inv;
        inv.family = InvariantFamily::membership;
        inv.space = s.id;
        inv.formula = mk_forall("x", xtypes, mk_grouped(mk_or(std::move(disjuncts))));
        out.push_back(std::move(inv));
    }

    // Uniqueness: no object satisfies two exclusive states at once. The
    // formulas only see which properties are held, not how often, so the
    // exclusiveness test runs on supports: a pair is skipped when some state
    // covers both supports at once.
    for (size_t i = 0; i < mins.size(); ++i)
        for (size_t j = i + 1; j < mins.size(); ++j) {
            Bag both{mins[i].support()};
            for (const auto& p : mins[j].support()) {
                if (!both.contains(p)) both.insert(p);
            }
            bool joint = false;
            for (const auto& st : s.states)
                if (Bag{st.support()}.includes(both)) {
                    joint = true;
                    break;
                }
            if (joint) continue;
            Invariant inv;
            inv.family = InvariantFamily::uniqueness;
            inv.space = s.id;
            inv.formula = mk_forall(
                "x", xtypes,
                mk_not(mk_and({state_formula(mins[i], d, spaces, owners, tt, init),
                               state_formula(mins[j], d, spaces, owners, tt,
                                             init)})));
            out.push_back(std::move(inv));
        }
    return out;
}

const char* kGroupNames[] = {"y", "z", "u", "v", "w"};

std::string group_name(size_t g) {
    if (g < 5) return kGroupNames[g];
    return "g" + std::to_string(g + 1);
}

// Identity invariants of one space: one per property whose predicate takes
// other arguments, bounded by the property's maximum occurrence count m over
// the space's states.
std::vector<Invariant> identity_for(const Space& s,
                                    const std::vector<int>& xtypes,
                                    const DomainModel& d) {
    std::vector<Invariant> out;
    for (const auto& p : s.properties) {
        int arity = d.arity_of(p.pred);
        if (arity < 2) continue;
        size_t m = 0;
        for (const auto& st : s.states) m = std::max(m, st.count(p));
        if (m < 1) continue;
        // m+1 witnesses force two equal argument tuples.
        std::vector<FormulaPtr> atoms;
        std::vector<std::vector<std::string>> groups;
        for (size_t g = 0; g < m + 1; ++g) {
            Atom a;
            a.pred = p.pred;
            a.args.resize(arity);
            std::vector<std::string> vars;
            int n = 0;
            for (int i = 1; i <= arity; ++i) {
                if (i == p.pos) {
                    a.args[i - 1] = "x";
                } else {
                    std::string v = group_name(g) + std::to_string(++n);
                    a.args[i - 1] = v;
                    vars.push_back(v);
                }
            }
            atoms.push_back(mk_atom(std::move(a)));
            groups.push_back(std::move(vars));
        }
        std::vector<FormulaPtr> eqs;
        for (size_t i = 0; i < groups.size(); ++i)
            for (size_t j = i + 1; j < groups.size(); ++j) {
                std::vector<FormulaPtr> pair;
                for (size_t k = 0; k < groups[i].size(); ++k)
                    pair.push_back(mk_eq(groups[i][k], groups[j][k]));
                eqs.push_back(mk_and(std::move(pair)));
            }
        FormulaPtr body = mk_impl(mk_and(std::move(atoms)), mk_or(std::move(eqs)));
        for (size_t g = groups.size(); g-- > 0;)
            for (size_t k = groups[g].size(); k-- > 0;)
                body = mk_forall(groups[g][k], {}, body);
        Invariant inv;
        inv.family = InvariantFamily::identity;
        inv.space = s.id;
        inv.pred = p.pred;
        inv.formula = mk_forall("x", xtypes, std::move(body));
        out.push_back(std::move(inv));
    }
    return out;
}

}  // namespace

std::vector<Invariant> identity_invariants(const std::vector<Space>& spaces,
                                           const TypeTable& tt,
                                           const DomainModel& d) {
    std::vector<Invariant> out;
    for (const auto& s : spaces) {
        if (!s.is_property_space() || s.objects.empty()) continue;
        for (auto& inv : identity_for(s, type_union_of(s.objects, tt), d))
            out.push_back(std::move(inv));
    }
    return out;
}

std::vector<Invariant> membership_invariants(const std::vector<Space>& spaces,
                                             const OwnerMap& owners,
                                             const TypeTable& tt,
                                             const DomainModel& d,
                                             const std::vector<Atom>& init) {
    std::vector<Invariant> out;
    for (const auto& s : spaces) {
        if (!s.is_property_space()) continue;
        for (auto& inv :
             space_invariants(s, type_union_of(s.objects, tt), spaces, owners,
                              tt, d, init))
            if (inv.family == InvariantFamily::membership)
                out.push_back(std::move(inv));
    }
    return out;
}

std::vector<Invariant> uniqueness_invariants(const std::vector<Space>& spaces,
                                             const OwnerMap& owners,
                                             const TypeTable& tt,
                                             const DomainModel& d,
                                             const std::vector<Atom>& init) {
    std::vector<Invariant> out;
    for (const auto& s : spaces) {
        if (!s.is_property_space()) continue;
        for (auto& inv :
             space_invariants(s, type_union_of(s.objects, tt), spaces, owners,
                              tt, d, init))
            if (inv.family == InvariantFamily::uniqueness)
                out.push_back(std::move(inv));
    }
    return out;
}

std::vector<Invariant> fixed_resource_invariants(const DomainModel& d,
                                                 const std::vector<Space>& spaces,
                                                 const std::vector<Atom>& init) {
    std::vector<Invariant> out;
    for (const auto& [pred, arity] : d.predicates) {
        bool balanced = true;
        bool dynamic = false;
        for (const auto& s : d.schemas) {
            long adds = std::count_if(s.add.begin(), s.add.end(),
                                      [&](const Atom& a) { return a.pred == pred; });
            long dels = std::count_if(s.del.begin(), s.del.end(),
                                      [&](const Atom& a) { return a.pred == pred; });
            if (adds != dels) balanced = false;
            if (adds || dels) dynamic = true;
        }
        if (!balanced) continue;
        long k = std::count_if(init.begin(), init.end(),
                               [&](const Atom& a) { return a.pred == pred; });
        if (k == 0) continue;
        bool exact = !dynamic || k <= 1;
        if (!exact) {
            // State-valued with at most one occurrence per state: the count
            // can never grow past the initial one.
            for (const auto& s : spaces) {
                if (!s.is_property_space()) continue;
                for (const auto& p : s.properties) {
                    if (p.pred != pred) continue;
                    size_t m = 0;
                    for (const auto& st : s.states) m = std::max(m, st.count(p));
                    if (m <= 1) exact = true;
                }
            }
        }
        Invariant inv;
        inv.family = InvariantFamily::fixed_resource;
        inv.pred = pred;
        inv.formula = mk_card(pred, arity, exact, k);
        out.push_back(std::move(inv));
    }
    std::sort(out.begin(), out.end(),
              [](const Invariant& a, const Invariant& b) { return a.pred < b.pred; });
    return out;
}

SubspaceResult subspace_invariants(const std::vector<Space>& spaces,
                                   const OwnerMap& owners, const TypeTable& tt,
                                   const DomainModel& d,
                                   const std::vector<Atom>& init,
                                   const std::vector<Invariant>& primary) {
    SubspaceResult res;
    // Body text of each primary invariant, for subsumption marking.
    std::map<std::string, std::vector<int>> primary_bodies;
    for (const auto& inv : primary) {
        if (inv.family == InvariantFamily::fixed_resource) continue;
        primary_bodies[render(*inv.formula->children[0], tt)] =
            inv.formula->var_types[0];
    }
    for (const auto& s : spaces) {
        if (s.kind == SpaceKind::mixed_retired || s.rules.empty()) continue;
        std::vector<int> ts = type_union_of(s.objects, tt);
        if (ts.size() < 2) continue;
        for (int t : ts) {
            Space sub;
            sub.id = s.id;
            sub.parent = s.id;
            sub.subspace_type = t;
            sub.properties = s.properties;
            for (const auto& o : s.objects)
                if (tt.type_of(o) == t) sub.objects.push_back(o);
            for (const auto& r : s.rules) {
                bool ok = true;
                for (const auto& e : r.enablers.support()) {
                    bool enabled = false;
                    auto it = owners.find(e);
                    if (it != owners.end()) {
                        for (const auto& o : spaces[it->second].objects)
                            if (tt.type_of(o) == t) {
                                enabled = true;
                                break;
                            }
                    } else {
                        for (const auto& a : init)
                            if (a.pred == e.pred &&
                                static_cast<int>(a.args.size()) >= e.pos &&
                                tt.type_of(a.args[e.pos - 1]) == t) {
                                enabled = true;
                                break;
                            }
                    }
                    if (!enabled) {
                        ok = false;
                        break;
                    }
                }
                if (ok) sub.rules.push_back(r);
            }
            // A sub-space that keeps an attribute rule is itself an attribute
            // space and supports no invariants.
            for (const auto& r : sub.rules)
                if (r.is_attribute()) sub.kind = SpaceKind::attribute;
            if (sub.kind == SpaceKind::attribute) {
                res.subspaces.push_back(std::move(sub));
                continue;
            }
            for (const auto& o : sub.objects) {
                Bag proj;
                const Bag ip = initial_properties(init, o);
                for (const auto& p : ip.items())
                    if (std::count(sub.properties.begin(), sub.properties.end(), p))
                        proj.insert(p);
                if (!proj.empty() &&
                    !std::count(sub.states.begin(), sub.states.end(), proj))
                    sub.states.push_back(proj);
            }
            if (extend_property_space(sub)) continue;  // hidden attribute: skip
            auto invs = identity_for(sub, {t}, d);
            for (auto& inv :
                 space_invariants(sub, {t}, spaces, owners, tt, d, init))
                invs.push_back(std::move(inv));
            for (auto& inv : invs) {
                inv.space = s.id;
                inv.from_subspace = true;
                inv.subspace_type = t;
                auto it = primary_bodies.find(render(*inv.formula->children[0], tt));
                if (it != primary_bodies.end() &&
                    std::count(it->second.begin(), it->second.end(), t))
                    inv.subsumed = true;
                res.invariants.push_back(std::move(inv));
            }
            res.subspaces.push_back(std::move(sub));
        }
    }
    return res;
}

}  // namespace dla
