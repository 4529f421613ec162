#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "dla/rules.hpp"
#include "doctest.h"

using namespace dla;

TEST_CASE("bag operations") {
    Property a{"at", 1}, f{"fuelled", 1}, i{"in", 1};
    Bag x{a, a, f};
    Bag y{a, i};
    CHECK(x.count(a) == 2);
    CHECK(x.sum(y) == Bag{a, a, a, f, i});
    CHECK(x.diff(y) == Bag{a, f});
    CHECK(y.diff(x) == Bag{i});
    CHECK(x.intersect(y) == Bag{a});
    CHECK(x.includes(Bag{a, f}));
    CHECK(!x.includes(Bag{a, i}));
    CHECK(x.strictly_includes(Bag{a, a}));
    CHECK(!x.strictly_includes(x));
    CHECK(to_string(Bag{}) == "null");
    CHECK(to_string(Bag{a, i}) == "[at_1, in_1]");
    CHECK(Bag{a, a, f}.support() == std::vector<Property>{a, f});
}

namespace {

DomainModel rocket25() {
    DomainModel d;
    d.name = "rocket25";
    d.predicates = {{"at", 2}, {"in", 2}, {"fuelled", 1}, {"unfuelled", 1},
                    {"location", 1}};
    OperatorSchema drive;
    drive.name = "drive";
    drive.params = {"?x", "?y", "?z"};
    drive.pre = {{"at", {"?x", "?y"}}, {"fuelled", {"?x"}}, {"location", {"?z"}}};
    drive.add = {{"at", {"?x", "?z"}}, {"unfuelled", {"?x"}}};
    drive.del = {{"at", {"?x", "?y"}}, {"fuelled", {"?x"}}};
    OperatorSchema load;
    load.name = "load";
    load.params = {"?x", "?y", "?z"};
    load.pre = {{"at", {"?x", "?y"}}, {"at", {"?z", "?y"}}};
    load.add = {{"in", {"?x", "?z"}}};
    load.del = {{"at", {"?x", "?y"}}};
    d.schemas = {drive, load};
    return d;
}

}  // namespace

TEST_CASE("rocket PRS construction") {
    DomainModel d = rocket25();
    PRS x = build_prs(d.schemas[0], "?x");
    CHECK(x.precs == Bag{{"at", 1}, {"fuelled", 1}});
    CHECK(x.deleted_precs == Bag{{"at", 1}, {"fuelled", 1}});
    CHECK(x.add_elements == Bag{{"at", 1}, {"unfuelled", 1}});

    PRS ly = build_prs(d.schemas[1], "?y");
    CHECK(ly.precs == Bag{{"at", 2}, {"at", 2}});
    CHECK(ly.deleted_precs == Bag{{"at", 2}});
    CHECK(ly.add_elements.empty());
}

TEST_CASE("rocket transition rules") {
    DomainModel d = rocket25();
    auto rules = build_rules(d);
    REQUIRE(rules.size() == 7);
    std::vector<std::string> got;
    for (const auto& r : rules) got.push_back(to_string(r));
    std::vector<std::string> want = {
        "fuelled_1 => at_1 -> at_1",
        "at_1 => fuelled_1 -> unfuelled_1",
        "at_2 -> null",
        "location_1 => null -> at_2",
        "at_1 -> in_1",
        "at_2 => at_2 -> null",
        "at_1 => null -> in_2",
    };
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("rocket united classes") {
    auto rules = build_rules(rocket25());
    auto classes = unite(rules);
    REQUIRE(classes.size() == 4);
    CHECK(classes[0].members == std::vector<Property>{{"at", 1}, {"in", 1}});
    CHECK(classes[1].members ==
          std::vector<Property>{{"fuelled", 1}, {"unfuelled", 1}});
    CHECK(classes[2].members == std::vector<Property>{{"at", 2}});
    CHECK(classes[3].members == std::vector<Property>{{"in", 2}});
}

TEST_CASE("split reconstructs the original bags") {
    std::mt19937 rng(7);
    std::vector<Property> pool;
    for (char c = 'a'; c <= 'e'; ++c)
        for (int pos = 1; pos <= 2; ++pos)
            pool.push_back({std::string(1, c), pos});
    auto random_bag = [&](size_t n) {
        Bag b;
        for (size_t i = 0; i < n; ++i)
            b.insert(pool[rng() % pool.size()]);
        return b;
    };
    for (int trial = 0; trial < 500; ++trial) {
        PRS p;
        p.deleted_precs = random_bag(rng() % 4);
        p.add_elements = random_bag(rng() % 4);
        p.precs = p.deleted_precs.sum(random_bag(rng() % 3));
        auto pieces = split_prs(p);
        Bag dels, adds;
        for (const auto& q : pieces) {
            dels = dels.sum(q.deleted_precs);
            adds = adds.sum(q.add_elements);
            CHECK(q.precs == p.precs);
            // Each piece is either an exchange (one property kept) or the
            // residual with nothing exchanged left.
            bool exchange = q.deleted_precs.size() == 1 &&
                            q.deleted_precs == q.add_elements;
            bool residual = q.deleted_precs.intersect(q.add_elements).empty();
            CHECK((exchange || residual));
        }
        CHECK(dels == p.deleted_precs);
        CHECK(adds == p.add_elements);
    }
}

TEST_CASE("no rule has an empty start and finish") {
    std::mt19937 rng(11);
    std::vector<Property> pool = {{"p", 1}, {"p", 2}, {"q", 1}, {"r", 1}};
    for (int trial = 0; trial < 500; ++trial) {
        PRS p;
        auto random_bag = [&](size_t n) {
            Bag b;
            for (size_t i = 0; i < n; ++i) b.insert(pool[rng() % pool.size()]);
            return b;
        };
        p.deleted_precs = random_bag(rng() % 3);
        p.add_elements = random_bag(rng() % 3);
        p.precs = p.deleted_precs.sum(random_bag(rng() % 2));
        for (const auto& piece : split_prs(p))
            for (const auto& r : prs_to_rules(piece)) {
                CHECK(!(r.start.empty() && r.finish.empty()));
                if (r.start.empty()) CHECK(r.kind == RuleKind::increasing);
                if (r.finish.empty()) CHECK(r.kind == RuleKind::decreasing);
                if (!r.start.empty() && !r.finish.empty())
                    CHECK(r.kind == RuleKind::state);
                if (r.kind == RuleKind::increasing) CHECK(r.finish.size() == 1);
            }
    }
}

TEST_CASE("unite is order independent") {
    auto rules = build_rules(rocket25());
    auto baseline = unite(rules);
    auto as_sets = [](const std::vector<PropertyClass>& cs) {
        std::vector<std::vector<Property>> out;
        for (const auto& c : cs) out.push_back(c.members);
        std::sort(out.begin(), out.end());
        return out;
    };
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto shuffled = rules;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(as_sets(unite(shuffled)) == as_sets(baseline));
    }
}
