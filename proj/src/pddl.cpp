#include "dla/pddl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace dla {
namespace {

struct SExpr {
    bool is_list = false;
    std::string sym;            // !is_list
    std::vector<SExpr> items;   // is_list
    int line = 0, column = 0;
};

struct Lexer {
    const std::string& text;
    size_t i = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void advance() {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }

    void skip_ws() {
        while (i < text.size()) {
            char c = text[i];
            if (c == ';') {
                while (i < text.size() && text[i] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    bool eof() {
        skip_ws();
        return i >= text.size();
    }

    SExpr next() {
        skip_ws();
        if (i >= text.size()) throw ParseError("unexpected end of input", line, col);
        int l = line, c = col;
        if (text[i] == '(') {
            advance();
            SExpr e;
            e.is_list = true;
            e.line = l;
            e.column = c;
            for (;;) {
                skip_ws();
                if (i >= text.size())
                    throw ParseError("unterminated list", l, c);
                if (text[i] == ')') {
                    advance();
                    return e;
                }
                e.items.push_back(next());
            }
        }
        if (text[i] == ')') throw ParseError("unexpected ')'", l, c);
        SExpr e;
        e.line = l;
        e.column = c;
        while (i < text.size() && text[i] != '(' && text[i] != ')' &&
               text[i] != ';' && !std::isspace(static_cast<unsigned char>(text[i]))) {
            e.sym += static_cast<char>(
                std::tolower(static_cast<unsigned char>(text[i])));
            advance();
        }
        return e;
    }
};

const std::string& head(const SExpr& e) {
    static const std::string empty;
    if (!e.is_list || e.items.empty() || e.items[0].is_list) return empty;
    return e.items[0].sym;
}

Atom parse_atom(const SExpr& e) {
    if (!e.is_list || e.items.empty() || e.items[0].is_list)
        throw ParseError("expected an atom", e.line, e.column);
    Atom a;
    a.pred = e.items[0].sym;
    for (size_t k = 1; k < e.items.size(); ++k) {
        if (e.items[k].is_list)
            throw ParseError("nested term in atom " + a.pred, e.line, e.column);
        a.args.push_back(e.items[k].sym);
    }
    return a;
}

std::vector<SExpr> flatten_and(const SExpr& e) {
    if (e.is_list && head(e) == "and")
        return {e.items.begin() + 1, e.items.end()};
    if (e.is_list && e.items.empty()) return {};
    return {e};
}

void sort_unique(std::vector<Atom>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

OperatorSchema parse_action(const SExpr& e) {
    OperatorSchema s;
    if (e.items.size() < 2 || e.items[1].is_list)
        throw ParseError(":action needs a name", e.line, e.column);
    s.name = e.items[1].sym;
    size_t k = 2;
    while (k < e.items.size()) {
        const std::string& key = e.items[k].sym;
        if (e.items[k].is_list || key.empty() || key[0] != ':')
            throw ParseError("expected a keyword in action " + s.name,
                             e.items[k].line, e.items[k].column);
        if (k + 1 >= e.items.size())
            throw ParseError(key + " without a value in action " + s.name,
                             e.items[k].line, e.items[k].column);
        const SExpr& val = e.items[k + 1];
        if (key == ":parameters") {
            if (!val.is_list)
                throw ParseError(":parameters must be a list", val.line, val.column);
            for (const auto& p : val.items) {
                if (p.is_list || p.sym.empty() || p.sym[0] != '?')
                    throw ParseError("bad parameter in action " + s.name, p.line,
                                     p.column);
                if (p.sym == "-" || std::count(s.params.begin(), s.params.end(), p.sym))
                    throw ParseError("typed or duplicate parameter in action " +
                                         s.name,
                                     p.line, p.column);
                s.params.push_back(p.sym);
            }
        } else if (key == ":precondition") {
            for (const auto& c : flatten_and(val)) {
                if (head(c) == "not")
                    throw ParseError("negative precondition in action " + s.name,
                                     c.line, c.column);
                s.pre.push_back(parse_atom(c));
            }
        } else if (key == ":effect") {
            for (const auto& c : flatten_and(val)) {
                if (head(c) == "not") {
                    if (c.items.size() != 2)
                        throw ParseError("malformed not-effect in action " + s.name,
                                         c.line, c.column);
                    s.del.push_back(parse_atom(c.items[1]));
                } else {
                    s.add.push_back(parse_atom(c));
                }
            }
        } else {
            throw ParseError("unsupported action section " + key + " in " + s.name,
                             e.items[k].line, e.items[k].column);
        }
        k += 2;
    }
    sort_unique(s.pre);
    sort_unique(s.add);
    sort_unique(s.del);
    // Adding and deleting the same atom is a no-op under STRIPS semantics;
    // treat it as a modelling error rather than guessing an order.
    for (const auto& a : s.add)
        if (std::count(s.del.begin(), s.del.end(), a))
            throw ParseError("atom both added and deleted in action " + s.name,
                             e.line, e.column);
    return s;
}

void check_atom(const DomainModel& d, const Atom& a, const char* where) {
    int ar = d.arity_of(a.pred);
    if (ar < 0)
        throw ParseError(std::string("undeclared predicate ") + a.pred + " in " +
                         where);
    if (ar != static_cast<int>(a.args.size()))
        throw ParseError("arity mismatch for " + a.pred + " in " + where +
                         ": declared " + std::to_string(ar) + ", used " +
                         std::to_string(a.args.size()));
}

}  // namespace

DomainModel parse_domain(const std::string& text) {
    Lexer lex(text);
    SExpr top = lex.next();
    if (!lex.eof())
        throw ParseError("trailing content after domain definition", lex.line,
                         lex.col);
    if (head(top) != "define" || top.items.size() < 2 ||
        head(top.items[1]) != "domain" || top.items[1].items.size() != 2)
        throw ParseError("expected (define (domain ...) ...)", top.line,
                         top.column);
    DomainModel d;
    d.name = top.items[1].items[1].sym;
    for (size_t k = 2; k < top.items.size(); ++k) {
        const SExpr& e = top.items[k];
        const std::string& h = head(e);
        if (h == ":requirements") {
            for (size_t j = 1; j < e.items.size(); ++j)
                if (e.items[j].sym != ":strips" && e.items[j].sym != ":equality")
                    throw ParseError("unsupported requirement " + e.items[j].sym,
                                     e.items[j].line, e.items[j].column);
        } else if (h == ":predicates") {
            for (size_t j = 1; j < e.items.size(); ++j) {
                Atom a = parse_atom(e.items[j]);
                for (const auto& arg : a.args)
                    if (arg.empty() || arg[0] != '?')
                        throw ParseError("predicate declaration " + a.pred +
                                             " must use variables",
                                         e.items[j].line, e.items[j].column);
                if (d.arity_of(a.pred) >= 0)
                    throw ParseError("predicate " + a.pred + " declared twice",
                                     e.items[j].line, e.items[j].column);
                d.predicates.emplace_back(a.pred, static_cast<int>(a.args.size()));
            }
        } else if (h == ":constants") {
            // Constants are picked up from schema bodies by lift_constants;
            // the declaration itself carries no extra information here.
            for (size_t j = 1; j < e.items.size(); ++j)
                if (e.items[j].is_list || e.items[j].sym == "-")
                    throw ParseError("typed constants are not supported",
                                     e.items[j].line, e.items[j].column);
        } else if (h == ":action") {
            d.schemas.push_back(parse_action(e));
        } else {
            throw ParseError("unsupported domain section " + h, e.line, e.column);
        }
    }
    // Well-formedness of atoms against declarations.
    for (const auto& s : d.schemas) {
        auto check = [&](const std::vector<Atom>& atoms, const char* where) {
            for (const auto& a : atoms) {
                check_atom(d, a, (s.name + " " + where).c_str());
                for (const auto& arg : a.args)
                    if (arg[0] == '?' &&
                        !std::count(s.params.begin(), s.params.end(), arg))
                        throw ParseError("unbound variable " + arg + " in action " +
                                         s.name);
            }
        };
        check(s.pre, "precondition");
        check(s.add, "effect");
        check(s.del, "effect");
    }
    return d;
}

ProblemModel parse_problem(const std::string& text) {
    Lexer lex(text);
    SExpr top = lex.next();
    if (!lex.eof())
        throw ParseError("trailing content after problem definition", lex.line,
                         lex.col);
    if (head(top) != "define" || top.items.size() < 2 ||
        head(top.items[1]) != "problem" || top.items[1].items.size() != 2)
        throw ParseError("expected (define (problem ...) ...)", top.line,
                         top.column);
    ProblemModel p;
    p.name = top.items[1].items[1].sym;
    for (size_t k = 2; k < top.items.size(); ++k) {
        const SExpr& e = top.items[k];
        const std::string& h = head(e);
        if (h == ":domain") {
            if (e.items.size() != 2 || e.items[1].is_list)
                throw ParseError("malformed :domain", e.line, e.column);
            p.domain_name = e.items[1].sym;
        } else if (h == ":objects") {
            for (size_t j = 1; j < e.items.size(); ++j) {
                if (e.items[j].is_list || e.items[j].sym == "-")
                    throw ParseError("typed objects are not supported",
                                     e.items[j].line, e.items[j].column);
                if (std::count(p.objects.begin(), p.objects.end(), e.items[j].sym))
                    throw ParseError("object declared twice: " + e.items[j].sym,
                                     e.items[j].line, e.items[j].column);
                p.objects.push_back(e.items[j].sym);
            }
        } else if (h == ":init") {
            for (size_t j = 1; j < e.items.size(); ++j)
                p.init.push_back(parse_atom(e.items[j]));
        } else if (h == ":goal") {
            if (e.items.size() != 2)
                throw ParseError("malformed :goal", e.line, e.column);
            for (const auto& c : flatten_and(e.items[1])) {
                if (head(c) == "not")
                    throw ParseError("negative goal literal", c.line, c.column);
                p.goal.push_back(parse_atom(c));
            }
        } else {
            throw ParseError("unsupported problem section " + h, e.line, e.column);
        }
    }
    sort_unique(p.init);
    sort_unique(p.goal);
    return p;
}

namespace {

// Flat-term unification of two atoms sharing a variable namespace.
bool can_unify(const Atom& a, const Atom& b) {
    if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
    std::map<std::string, std::string> sub;
    auto resolve = [&](std::string t) {
        while (t[0] == '?' && sub.count(t)) t = sub[t];
        return t;
    };
    for (size_t i = 0; i < a.args.size(); ++i) {
        std::string x = resolve(a.args[i]), y = resolve(b.args[i]);
        if (x == y) continue;
        if (x[0] == '?')
            sub[x] = y;
        else if (y[0] == '?')
            sub[y] = x;
        else
            return false;
    }
    return true;
}

}  // namespace

DomainModel validate_strips(const DomainModel& d, Diagnostics* diags) {
    for (const auto& s : d.schemas) {
        for (const auto& a : s.del)
            if (!std::count(s.pre.begin(), s.pre.end(), a))
                throw ParseError("action " + s.name + " deletes " + to_string(a) +
                                 " without requiring it");
        if (diags) {
            for (size_t i = 0; i < s.del.size(); ++i)
                for (size_t j = i + 1; j < s.del.size(); ++j)
                    if (can_unify(s.del[i], s.del[j]))
                        diags->warnings.push_back(
                            "action " + s.name + ": delete effects " +
                            to_string(s.del[i]) + " and " + to_string(s.del[j]) +
                            " can unify; bag semantics may over-count");
        }
    }
    return d;
}

void validate_problem(const DomainModel& d, const ProblemModel& p) {
    if (!p.domain_name.empty() && p.domain_name != d.name)
        throw ParseError("problem " + p.name + " names domain " + p.domain_name +
                         ", not " + d.name);
    std::set<std::string> objs(p.objects.begin(), p.objects.end());
    auto check = [&](const std::vector<Atom>& atoms, const char* where) {
        for (const auto& a : atoms) {
            check_atom(d, a, where);
            for (const auto& arg : a.args)
                if (!objs.count(arg))
                    throw ParseError("undeclared object " + arg + " in " + where);
        }
    };
    check(p.init, "init");
    check(p.goal, "goal");
}

std::pair<DomainModel, ProblemModel> lift_constants(const DomainModel& d,
                                                    const ProblemModel& p) {
    DomainModel d2 = d;
    ProblemModel p2 = p;
    std::set<std::string> lifted;
    for (auto& s : d2.schemas) {
        std::set<std::string> consts;
        for (const auto* atoms : {&s.pre, &s.add, &s.del})
            for (const auto& a : *atoms)
                for (const auto& arg : a.args)
                    if (arg[0] != '?') consts.insert(arg);
        for (const auto& c : consts) {
            std::string v = "?" + c;
            while (std::count(s.params.begin(), s.params.end(), v)) v += "_";
            s.params.push_back(v);
            for (auto* atoms : {&s.pre, &s.add, &s.del})
                for (auto& a : *atoms)
                    for (auto& arg : a.args)
                        if (arg == c) arg = v;
            Atom guard{"is-" + c, {v}};
            if (!std::count(s.pre.begin(), s.pre.end(), guard))
                s.pre.push_back(guard);
            sort_unique(s.pre);
            lifted.insert(c);
        }
    }
    for (const auto& c : lifted) {
        if (d2.arity_of("is-" + c) < 0) d2.predicates.emplace_back("is-" + c, 1);
        if (!std::count(p2.objects.begin(), p2.objects.end(), c))
            p2.objects.push_back(c);
        Atom fact{"is-" + c, {c}};
        if (!std::count(p2.init.begin(), p2.init.end(), fact))
            p2.init.push_back(fact);
    }
    sort_unique(p2.init);
    return {d2, p2};
}

namespace {

std::string sexpr_atom(const Atom& a) {
    std::string s = "(" + a.pred;
    for (const auto& arg : a.args) s += " " + arg;
    return s + ")";
}

}  // namespace

std::string print_domain(const DomainModel& d) {
    std::ostringstream os;
    os << "(define (domain " << d.name << ")\n  (:requirements :strips)\n"
       << "  (:predicates";
    for (const auto& [name, ar] : d.predicates) {
        os << " (" << name;
        for (int i = 0; i < ar; ++i) os << " ?x" << i;
        os << ")";
    }
    os << ")\n";
    for (const auto& s : d.schemas) {
        os << "  (:action " << s.name << "\n    :parameters (";
        for (size_t i = 0; i < s.params.size(); ++i)
            os << (i ? " " : "") << s.params[i];
        os << ")\n    :precondition (and";
        for (const auto& a : s.pre) os << " " << sexpr_atom(a);
        os << ")\n    :effect (and";
        for (const auto& a : s.add) os << " " << sexpr_atom(a);
        for (const auto& a : s.del) os << " (not " << sexpr_atom(a) << ")";
        os << "))\n";
    }
    os << ")\n";
    return os.str();
}

std::string print_problem(const ProblemModel& p) {
    std::ostringstream os;
    os << "(define (problem " << p.name << ")\n  (:domain " << p.domain_name
       << ")\n  (:objects";
    for (const auto& o : p.objects) os << " " << o;
    os << ")\n  (:init";
    for (const auto& a : p.init) os << " " << sexpr_atom(a);
    os << ")\n  (:goal (and";
    for (const auto& a : p.goal) os << " " << sexpr_atom(a);
    os << ")))\n";
    return os.str();
}

}  // namespace dla
