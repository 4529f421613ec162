#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <fstream>
#include <sstream>

#include "dla/pddl.hpp"
#include "doctest.h"

using namespace dla;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string kDataDir = DLA_DATA_DIR;

}  // namespace

TEST_CASE("parses the rocket domain") {
    DomainModel d = parse_domain(slurp(kDataDir + "/rocket25/domain.pddl"));
    CHECK(d.name == "rocket25");
    CHECK(d.predicates.size() == 5);
    CHECK(d.arity_of("at") == 2);
    CHECK(d.arity_of("fuelled") == 1);
    CHECK(d.arity_of("nope") == -1);
    REQUIRE(d.schemas.size() == 2);
    CHECK(d.schemas[0].name == "drive");
    CHECK(d.schemas[0].params == std::vector<std::string>{"?x", "?y", "?z"});
    CHECK(d.schemas[0].pre.size() == 3);
    CHECK(d.schemas[0].add.size() == 2);
    CHECK(d.schemas[0].del.size() == 2);
}

TEST_CASE("parses the rocket problem") {
    ProblemModel p = parse_problem(slurp(kDataDir + "/rocket25/prob01.pddl"));
    CHECK(p.name == "rocket25-01");
    CHECK(p.domain_name == "rocket25");
    CHECK(p.objects ==
          std::vector<std::string>{"rocket", "package", "london", "paris"});
    CHECK(p.init.size() == 5);
    CHECK(p.goal.size() == 1);
}

TEST_CASE("comments, case folding, bare preconditions") {
    DomainModel d = parse_domain(
        "(define (domain Tiny) ; a comment\n"
        " (:predicates (P ?x) (q ?x))\n"
        " (:action Op :parameters (?X)\n"
        "   :precondition (p ?x)\n"
        "   :effect (and (q ?X) (not (P ?x)))))\n");
    CHECK(d.name == "tiny");
    REQUIRE(d.schemas.size() == 1);
    CHECK(d.schemas[0].name == "op");
    CHECK(d.schemas[0].pre == std::vector<Atom>{{"p", {"?x"}}});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_domain("(define (domain x) (:predicates (p ?x))"),
                    ParseError);
    CHECK_THROWS_AS(parse_domain("(define (problem x))"), ParseError);
    try {
        parse_domain("(define (domain x)\n  (:predicates (p ?x)\n");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("rejects non-STRIPS input") {
    CHECK_THROWS_AS(
        parse_domain("(define (domain x) (:requirements :typing))"), ParseError);
    CHECK_THROWS_AS(
        parse_domain("(define (domain x) (:predicates (p ?x))"
                     " (:action a :parameters (?x)"
                     "  :precondition (not (p ?x)) :effect (p ?x)))"),
        ParseError);
    CHECK_THROWS_AS(
        parse_domain("(define (domain x) (:predicates (p ?x))"
                     " (:action a :parameters (?x)"
                     "  :precondition (p ?x) :effect (q ?x)))"),
        ParseError);
    // Deleting an atom that is not a precondition.
    DomainModel d = parse_domain(
        "(define (domain x) (:predicates (p ?x) (q ?x))"
        " (:action a :parameters (?x)"
        "  :precondition (p ?x) :effect (and (p ?x) (not (q ?x)))))");
    CHECK_THROWS_AS(validate_strips(d), ParseError);
}

TEST_CASE("warns on unifiable duplicate deletes") {
    DomainModel d = parse_domain(
        "(define (domain x) (:predicates (p ?x ?y))"
        " (:action a :parameters (?x ?y ?z)"
        "  :precondition (and (p ?x ?y) (p ?x ?z))"
        "  :effect (and (not (p ?x ?y)) (not (p ?x ?z)))))");
    Diagnostics diags;
    validate_strips(d, &diags);
    REQUIRE(diags.warnings.size() == 1);
    CHECK(diags.warnings[0].find("unify") != std::string::npos);
}

TEST_CASE("problem validation") {
    DomainModel d = parse_domain(slurp(kDataDir + "/rocket25/domain.pddl"));
    ProblemModel p = parse_problem(slurp(kDataDir + "/rocket25/prob01.pddl"));
    CHECK_NOTHROW(validate_problem(d, p));
    ProblemModel bad = p;
    bad.init.push_back({"at", {"rocket"}});
    CHECK_THROWS_AS(validate_problem(d, bad), ParseError);
    ProblemModel bad2 = p;
    bad2.init.push_back({"at", {"rocket", "mars"}});
    CHECK_THROWS_AS(validate_problem(d, bad2), ParseError);
}

TEST_CASE("constant lifting introduces a guarded parameter") {
    DomainModel d = parse_domain(slurp(kDataDir + "/blocks/domain.pddl"));
    ProblemModel p = parse_problem(slurp(kDataDir + "/blocks/prob01.pddl"));
    auto [d2, p2] = lift_constants(d, p);
    CHECK(d2.arity_of("is-table") == 1);
    bool guarded = false;
    for (const auto& s : d2.schemas) {
        for (const auto* atoms : {&s.pre, &s.add, &s.del})
            for (const auto& a : *atoms)
                for (const auto& arg : a.args) CHECK(arg[0] == '?');
        if (s.name == "move-to-table") {
            for (const auto& a : s.pre)
                if (a.pred == "is-table") guarded = true;
            CHECK(s.params.size() == 3);
        }
    }
    CHECK(guarded);
    CHECK(std::count(p2.init.begin(), p2.init.end(), Atom{"is-table", {"table"}}) ==
          1);
    // Lifting a domain without constants is the identity.
    DomainModel r = parse_domain(slurp(kDataDir + "/rocket25/domain.pddl"));
    ProblemModel rp = parse_problem(slurp(kDataDir + "/rocket25/prob01.pddl"));
    auto [r2, rp2] = lift_constants(r, rp);
    CHECK(r2.predicates == r.predicates);
    CHECK(rp2.init == rp.init);
}

TEST_CASE("print and reparse round-trips") {
    for (const char* dir : {"/rocket25", "/gripper", "/blocks", "/lightswitch",
                            "/underdisc"}) {
        DomainModel d =
            parse_domain(slurp(kDataDir + dir + std::string("/domain.pddl")));
        ProblemModel p =
            parse_problem(slurp(kDataDir + dir + std::string("/prob01.pddl")));
        DomainModel d2 = parse_domain(print_domain(d));
        ProblemModel p2 = parse_problem(print_problem(p));
        CHECK(d2.name == d.name);
        CHECK(d2.predicates == d.predicates);
        REQUIRE(d2.schemas.size() == d.schemas.size());
        for (size_t i = 0; i < d.schemas.size(); ++i) {
            CHECK(d2.schemas[i].params == d.schemas[i].params);
            CHECK(d2.schemas[i].pre == d.schemas[i].pre);
            CHECK(d2.schemas[i].add == d.schemas[i].add);
            CHECK(d2.schemas[i].del == d.schemas[i].del);
        }
        CHECK(p2.objects == p.objects);
        CHECK(p2.init == p.init);
        CHECK(p2.goal == p.goal);
    }
}
