#include <doctest.h>

#include "lawvere/oracle.hpp"
#include "lawvere/prefs.hpp"

using namespace lawvere;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

// Every map {0..na-1} -> {0..nb-1}.
std::vector<std::vector<std::size_t>> all_maps(std::size_t na, std::size_t nb) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> f(na, 0);
    while (true) {
        out.push_back(f);
        std::size_t i = 0;
        while (i < na && ++f[i] == nb) f[i++] = 0;
        if (i == na) break;
    }
    return out;
}

}  // namespace

TEST_CASE("relation helpers") {
    const auto b = Quantale::boolean();
    Relation cycle{1, 1, 0, 0, 1, 1, 1, 0, 1};
    CHECK(transitivity_witness(b, 3, cycle).has_value());
    CHECK(kleene_closure(b, 3, cycle) == Relation(9, 1));
    CHECK_FALSE(reflexivity_witness(b, 3, cycle).has_value());
    CHECK(reflexivity_witness(b, 2, Relation{0, 1, 0, 1}).has_value());
    CHECK(relation_compose(b, 2, {1, 1, 0, 1}, {1, 0, 1, 1}) == Relation{1, 1, 1, 1});
}

TEST_CASE("preference lattice basics") {
    PreferenceLattice pl(Quantale::unit_interval(TNorm::Product), kXYZ);
    Relation p{1, 0.8, 0.4, 0.2, 1, 0.5, 0.1, 0.3, 1};
    REQUIRE(pl.contains(p));
    CHECK(pl.cotensor(1, p) == p);
    std::vector<Object> pp{p, p};
    CHECK(pl.meet(pp) == p);
    CHECK(pl.join(pp) == p);
    CHECK(pl.hom(p, p) == 1);
    CHECK(pl.top() == Relation(9, 1));
    CHECK(pl.bottom() == pl.identity_relation());
    CHECK(pl.tensor(0.5, p) == Relation{1, 0.4, 0.2, 0.1, 1, 0.25, 0.05, 0.15, 1});
    CHECK_FALSE(pl.contains(Relation{1, 1, 0, 0, 1, 1, 0, 0, 1}));
    CHECK_FALSE(pl.enumerable());
}

TEST_CASE("cotensor that leaves the lattice") {
    PreferenceLattice pl(Quantale::unit_interval(TNorm::Product), kXYZ);
    Relation p{1, 0.5, 0.25, 0, 1, 0.5, 0, 0, 1};
    REQUIRE(pl.contains(p));
    CHECK_THROWS_AS(pl.cotensor(0.5, p), NoSuchObject);

    PreferenceLattice mn(Quantale::unit_interval(TNorm::Minimum), kXYZ);
    Relation m{1, 0.5, 0.5, 0, 1, 0.5, 0, 0, 1};
    CHECK(mn.cotensor(0.5, m) == Relation{1, 1, 1, 0, 1, 1, 0, 0, 1});
}

TEST_CASE("join is the least transitive relation above the pointwise join") {
    const auto q = Quantale::unit_interval(TNorm::Product);
    PreferenceLattice pl(q, kXYZ);
    Relation p{1, 0.5, 0, 0, 1, 0, 0, 0, 1};
    Relation r{1, 0, 0, 0, 1, 0.5, 0, 0, 1};
    std::vector<Object> pr{p, r};
    auto j = pl.join(pr);
    CHECK(j == Relation{1, 0.5, 0.25, 0, 1, 0.5, 0, 0, 1});
    std::vector<Value> grid{0, 0.25, 0.5, 0.75, 1};
    Relation pointwise(9);
    for (std::size_t i = 0; i < 9; ++i) pointwise[i] = std::max(p[i], r[i]);
    auto hull = oracle::grid_transitive_hull(q, 3, pointwise, grid);
    REQUIRE(hull.has_value());
    CHECK(*hull == j);
    CHECK(oracle::transitive_closure(q, 3, pointwise) == j);
}

TEST_CASE("pushforward and pullback") {
    const auto q = Quantale::unit_interval(TNorm::Minimum);
    Relation p{1, 0.7, 0.7, 0.2, 1, 0.9, 0.2, 0.3, 1};
    std::vector<std::size_t> id{0, 1, 2};
    CHECK(pushforward(q, id, 3, p) == p);
    CHECK(pullback(id, 3, p) == p);
    CHECK(pushforward(q, {0, 0, 0}, 1, p) == Relation{1});
    CHECK(pullback({0, 0, 0}, 1, Relation{1}) == Relation(9, 1));

    // collapse y and z
    auto pf = pushforward(q, {0, 1, 1}, 2, p);
    CHECK(pf == Relation{1, 0.7, 0.2, 1});
    CHECK(pullback({0, 1, 1}, 2, pf) == Relation{1, 0.7, 0.7, 0.2, 1, 1, 0.2, 1, 1});
}

TEST_CASE("pushforward is left adjoint to pullback on finite quantales") {
    for (const auto& q : {Quantale::boolean(), Quantale::finite_chain(3)}) {
        for (std::size_t na = 1; na <= 3; ++na) {
            for (std::size_t nb = 1; nb <= 2; ++nb) {
                auto a = std::make_shared<PreferenceLattice>(q, std::vector<std::string>(kXYZ.begin(), kXYZ.begin() + na));
                auto b = std::make_shared<PreferenceLattice>(q, std::vector<std::string>(kXYZ.begin(), kXYZ.begin() + nb));
                if (!a->enumerable()) continue;
                for (const auto& f : all_maps(na, nb)) {
                    auto push = pushforward_functor(a, b, f);
                    auto pull = pullback_functor(a, b, f);
                    CHECK(adjunction_defect(push, pull) == q.unit());
                    auto competitors = b->objects();
                    for (const auto& p : a->objects()) {
                        auto rep = check_pushforward_minimality(*a, *b, f, p, competitors);
                        CHECK_MESSAGE(rep.ok(), rep.summary());
                    }
                }
            }
        }
    }
}

TEST_CASE("enumerated objects are exactly the preference relations") {
    const auto q = Quantale::finite_chain(3);
    PreferenceLattice pl(q, {"x", "y"});
    auto objs = pl.objects();
    // reflexive, and any 2x2 off-diagonal pair is transitive
    CHECK(objs.size() == 9);
    for (const auto& o : objs) CHECK(pl.contains(o));
}

TEST_CASE("bounded confidence weights") {
    const auto q = Quantale::unit_interval(TNorm::Product);
    auto stalk = std::make_shared<PreferenceLattice>(q, kXYZ);
    Graph g{{"u", "v"}, {{0, 1}}};
    auto f = preference_sheaf(g, stalk);
    Cochain x{stalk->identity_relation(), Relation(9, 1)};
    auto lax = bounded_confidence_schedule(f, {0, 0})(0, x);
    REQUIRE(lax.weighting);
    CHECK((*lax.weighting)(0, 1) == 1);
    CHECK((*lax.weighting)(1, 0) == 1);
    CHECK(lax.omega1 == std::vector<Value>{1, 1});

    auto strict = bounded_confidence_schedule(f, {1, 1})(0, x);
    CHECK((*strict.weighting)(0, 1) == 0);
    auto same = bounded_confidence_schedule(f, {1, 1})(0, {x[0], x[0]});
    CHECK((*same.weighting)(0, 1) == 1);

    FlowConfig cfg;
    cfg.schedule = bounded_confidence_schedule(f, {1, 1});
    auto tr = harmonic_flow(f, Weighting::constant(g, 1), x, cfg);
    CHECK(count_updates(f, tr) == 0);
    CHECK(tr.final == x);
}
