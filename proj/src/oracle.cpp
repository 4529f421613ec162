#include "dla/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace dla {

namespace {

Atom substitute(const Atom& a, const std::map<std::string, std::string>& sub) {
    Atom g = a;
    for (auto& arg : g.args) {
        auto it = sub.find(arg);
        if (it != sub.end()) arg = it->second;
    }
    return g;
}

std::map<std::string, std::set<std::string>> unary_static_index(
    const DomainModel& d, const ProblemModel& p) {
    std::set<std::string> dyn;
    for (const auto& s : d.schemas) {
        for (const auto& a : s.add) dyn.insert(a.pred);
        for (const auto& a : s.del) dyn.insert(a.pred);
    }
    std::map<std::string, std::set<std::string>> idx;
    for (const auto& a : p.init)
        if (a.args.size() == 1 && !dyn.count(a.pred)) idx[a.pred].insert(a.args[0]);
    return idx;
}

}  // namespace

std::vector<GroundAction> ground_actions(const DomainModel& d,
                                         const ProblemModel& p) {
    auto statics = unary_static_index(d, p);
    std::vector<GroundAction> out;
    for (const auto& s : d.schemas) {
        // Candidate objects per parameter, pruned by unary static
        // preconditions.
        std::vector<std::vector<std::string>> cands(s.params.size(), p.objects);
        for (size_t i = 0; i < s.params.size(); ++i)
            for (const auto& a : s.pre)
                if (a.args.size() == 1 && a.args[0] == s.params[i] &&
                    statics.count(a.pred)) {
                    const auto& allowed = statics.at(a.pred);
                    std::erase_if(cands[i], [&](const std::string& o) {
                        return !allowed.count(o);
                    });
                }
        std::vector<size_t> idx(s.params.size(), 0);
        for (;;) {
            bool overflow = false;
            std::map<std::string, std::string> sub;
            for (size_t i = 0; i < s.params.size(); ++i) {
                if (cands[i].empty()) {
                    overflow = true;
                    break;
                }
                sub[s.params[i]] = cands[i][idx[i]];
            }
            if (overflow) break;
            GroundAction g;
            g.name = s.name;
            for (const auto& prm : s.params) g.args.push_back(sub.at(prm));
            for (const auto& a : s.pre) g.pre.push_back(substitute(a, sub));
            for (const auto& a : s.add) g.add.push_back(substitute(a, sub));
            for (const auto& a : s.del) g.del.push_back(substitute(a, sub));
            out.push_back(std::move(g));
            if (s.params.empty()) break;
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == cands[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    }
    return out;
}

ReachabilityResult enumerate_reachable(const DomainModel& d,
                                       const ProblemModel& p,
                                       size_t max_states) {
    auto actions = ground_actions(d, p);
    ReachabilityResult r;
    std::set<World> seen;
    std::deque<World> queue;
    World init(p.init.begin(), p.init.end());
    seen.insert(init);
    queue.push_back(init);
    r.worlds.push_back(std::move(init));
    while (!queue.empty()) {
        World w = std::move(queue.front());
        queue.pop_front();
        ++r.expansions;
        for (const auto& a : actions) {
            bool ok = true;
            for (const auto& pre : a.pre)
                if (!w.count(pre)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            World next = w;
            for (const auto& x : a.del) next.erase(x);
            for (const auto& x : a.add) next.insert(x);
            if (seen.insert(next).second) {
                if (r.worlds.size() >= max_states) {
                    r.complete = false;
                    return r;
                }
                r.worlds.push_back(next);
                queue.push_back(std::move(next));
            }
        }
    }
    return r;
}

std::set<Atom> relaxed_reachable_atoms(const DomainModel& d,
                                       const ProblemModel& p) {
    auto actions = ground_actions(d, p);
    std::set<Atom> atoms(p.init.begin(), p.init.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& a : actions) {
            bool ok = true;
            for (const auto& pre : a.pre)
                if (!atoms.count(pre)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (const auto& x : a.add)
                if (atoms.insert(x).second) changed = true;
        }
    }
    return atoms;
}

namespace {

struct Env {
    std::map<std::string, std::string> bind;
};

bool eval_rec(const Formula& f, const World& w, const TypeTable& tt,
              const std::vector<std::string>& objects, Env& env) {
    auto domain_of = [&](const std::vector<int>& ts) -> std::vector<std::string> {
        if (ts.empty()) return objects;
        std::vector<std::string> out;
        for (int t : ts)
            out.insert(out.end(), tt.types[t].objects.begin(),
                       tt.types[t].objects.end());
        return out;
    };
    auto resolve = [&](const std::string& name) {
        auto it = env.bind.find(name);
        return it == env.bind.end() ? name : it->second;
    };
    switch (f.kind) {
        case Formula::forall:
        case Formula::exists: {
            bool is_all = f.kind == Formula::forall;
            auto saved = env.bind.find(f.vars[0]) != env.bind.end()
                             ? std::optional<std::string>(env.bind[f.vars[0]])
                             : std::nullopt;
            for (const auto& o : domain_of(f.var_types[0])) {
                env.bind[f.vars[0]] = o;
                bool v = eval_rec(*f.children[0], w, tt, objects, env);
                if (is_all && !v) {
                    if (saved)
                        env.bind[f.vars[0]] = *saved;
                    else
                        env.bind.erase(f.vars[0]);
                    return false;
                }
                if (!is_all && v) {
                    if (saved)
                        env.bind[f.vars[0]] = *saved;
                    else
                        env.bind.erase(f.vars[0]);
                    return true;
                }
            }
            if (saved)
                env.bind[f.vars[0]] = *saved;
            else
                env.bind.erase(f.vars[0]);
            return is_all;
        }
        case Formula::atom: {
            Atom g = f.a;
            for (auto& arg : g.args) arg = resolve(arg);
            return w.count(g) > 0;
        }
        case Formula::eq:
            return resolve(f.lhs) == resolve(f.rhs);
        case Formula::conj:
            for (const auto& c : f.children)
                if (!eval_rec(*c, w, tt, objects, env)) return false;
            return true;
        case Formula::disj:
            for (const auto& c : f.children)
                if (eval_rec(*c, w, tt, objects, env)) return true;
            return false;
        case Formula::neg:
            return !eval_rec(*f.children[0], w, tt, objects, env);
        case Formula::impl:
            return !eval_rec(*f.children[0], w, tt, objects, env) ||
                   eval_rec(*f.children[1], w, tt, objects, env);
        case Formula::card: {
            long n = 0;
            for (const auto& a : w)
                if (a.pred == f.pred) ++n;
            return f.exact ? n == f.bound : n <= f.bound;
        }
    }
    return false;
}

}  // namespace

bool eval(const Formula& f, const World& w, const TypeTable& tt,
          const std::vector<std::string>& objects) {
    Env env;
    return eval_rec(f, w, tt, objects, env);
}

InvariantCheck check_invariant(const Invariant& inv,
                               const ReachabilityResult& r, const TypeTable& tt,
                               const std::vector<std::string>& objects) {
    InvariantCheck c;
    for (const auto& w : r.worlds)
        if (!eval(*inv.formula, w, tt, objects)) {
            c.holds = false;
            c.counterexample = w;
            return c;
        }
    return c;
}

Bag project_world(const World& w, const std::string& o,
                  const std::vector<Property>& props) {
    Bag b;
    for (const auto& a : w)
        for (size_t i = 0; i < a.args.size(); ++i)
            if (a.args[i] == o) {
                Property p{a.pred, static_cast<int>(i) + 1};
                if (std::count(props.begin(), props.end(), p)) b.insert(p);
            }
    return b;
}

SoundnessCheck check_projection_soundness(const std::vector<Space>& spaces,
                                          const ReachabilityResult& r) {
    SoundnessCheck c;
    for (const auto& s : spaces) {
        if (!s.is_property_space()) continue;
        for (const auto& o : s.objects) {
            for (size_t wi = 0; wi < r.worlds.size(); ++wi) {
                Bag proj = project_world(r.worlds[wi], o, s.properties);
                if (!std::count(s.states.begin(), s.states.end(), proj)) {
                    c.holds = false;
                    c.detail = "object " + o + " in space " +
                               std::to_string(s.id) + " reaches projection " +
                               to_string(proj) + " outside the state set (world " +
                               std::to_string(wi) + ")";
                    return c;
                }
            }
        }
    }
    return c;
}

}  // namespace dla
