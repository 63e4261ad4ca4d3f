#include <doctest.h>

#include "lawvere/oracle.hpp"
#include "lawvere/wlattice.hpp"
#include "support.hpp"

using namespace lawvere;

TEST_CASE("cotensors and tensors on underline Q") {
    const auto r = Quantale::lawvere_reals();
    UnderlineQ rop(r, true);
    UnderlineQ rr(r, false);
    CHECK(rop.cotensor(2, {10}) == Object{12});
    CHECK(rop.cotensor(0, {10}) == Object{10});
    CHECK(rr.tensor(3, {5}) == Object{8});
    CHECK(rr.tensor(0, {5}) == Object{5});

    UnderlineQ b(Quantale::boolean(), false);
    CHECK(b.cotensor(0, {0}) == b.top());
    CHECK(b.cotensor(0, {1}) == b.top());
    CHECK(b.cotensor(1, {0}) == Object{0});
    CHECK(b.tensor(1, {1}) == Object{1});

    UnderlineQ prod(Quantale::unit_interval(TNorm::Product), false);
    CHECK(prod.tensor(0.5, {0.4})[0] == doctest::Approx(0.2));
    // hom(tensor(q,x), y) = [q, hom(x, y)] on a grid
    const auto& Q = prod.quantale();
    for (double y = 0; y <= 1.0001; y += 0.1) {
        Object t = prod.tensor(0.5, {0.4});
        CHECK(Q.equal(prod.hom(t, {y}), Q.hom(0.5, prod.hom({0.4}, {y}))));
    }
}

TEST_CASE("weighted meets in the reversed reals") {
    UnderlineQ rop(Quantale::lawvere_reals(), true);
    WeightedDiagram d{{{10}, {3}}, {2, 5}};
    CHECK(weighted_meet(rop, d) == Object{8});
    CHECK(weighted_join(rop, d) == Object{8});  // max{10-2, (3-5)+}

    std::vector<Object> sample;
    for (double x : {0.0, 1.0, 2.5, 8.0, 9.0, 12.0, 20.0, kInfinity}) sample.push_back({x});
    CHECK(verify_universal_property(rop, d, {8}, LimitKind::Meet, sample).ok());
    auto bad = verify_universal_property(rop, d, {9}, LimitKind::Meet, sample);
    CHECK_FALSE(bad.ok());
    CHECK_FALSE(bad.find("universal-property")->witness.empty());

    WeightedDiagram crisp = WeightedDiagram::crisp(rop.quantale(), {{4}, {7}});
    CHECK(weighted_meet(rop, crisp) == Object{4});
    CHECK(weighted_join(rop, crisp) == Object{7});
    WeightedDiagram single{{{5}}, {1.5}};
    CHECK(weighted_meet(rop, single) == rop.cotensor(1.5, {5}));
    CHECK(weighted_join(rop, single) == rop.tensor(1.5, {5}));
    CHECK(weighted_meet(rop, WeightedDiagram{}) == rop.top());
    CHECK(weighted_join(rop, WeightedDiagram{}) == rop.bottom());
}

TEST_CASE("finite lattice operations") {
    auto dia = testing::diamond();
    const Object bot{0}, a{1}, b{2}, top{3};
    std::vector<Object> ab{a, b};
    CHECK(dia->meet(ab) == bot);
    CHECK(dia->join(ab) == top);
    CHECK(dia->top() == top);
    CHECK(dia->bottom() == bot);
    CHECK(dia->cotensor(0, a) == top);
    CHECK(dia->cotensor(1, a) == a);
    CHECK(dia->tensor(0, a) == bot);
    CHECK(dia->tensor(1, b) == b);

    auto chain = testing::boolean_chain(3);
    WeightedDiagram crisp = WeightedDiagram::crisp(chain->quantale(), {{2}, {1}});
    CHECK(weighted_meet(*chain, crisp) == Object{1});
    CHECK(weighted_meet_via_identity_join(*chain, crisp) == Object{1});
    CHECK(oracle::brute_weighted_meet(*chain, crisp).object == Object{1});
    CHECK(weighted_meet(*chain, WeightedDiagram{}) == Object{2});
    CHECK(weighted_meet_via_identity_join(*chain, WeightedDiagram{}) == Object{2});

    // every diagram on the diamond with Boolean weights
    const auto objs = dia->objects();
    for (std::size_t m1 = 0; m1 < 4; ++m1)
        for (std::size_t m2 = 0; m2 < 4; ++m2)
            for (Value w1 : {0.0, 1.0})
                for (Value w2 : {0.0, 1.0}) {
                    WeightedDiagram d{{objs[m1], objs[m2]}, {w1, w2}};
                    auto m = weighted_meet(*dia, d);
                    auto j = weighted_join(*dia, d);
                    CHECK(m == weighted_meet_via_identity_join(*dia, d));
                    CHECK(j == weighted_join_via_identity_meet(*dia, d));
                    CHECK(verify_universal_property(*dia, d, m, LimitKind::Meet).ok());
                    CHECK(verify_universal_property(*dia, d, j, LimitKind::Join).ok());
                }
}

TEST_CASE("incomplete finite category") {
    // two incomparable points: no bottom
    auto lat = testing::finite_lattice(Quantale::boolean(), {"x", "y"}, {{1, 0}, {0, 1}});
    std::vector<Object> both{{0}, {1}};
    CHECK_THROWS_AS(lat->join(both), NoSuchObject);
    CHECK_THROWS_AS(lat->meet(both), NoSuchObject);
}

TEST_CASE("duplicate objects resolve to lowest id") {
    auto lat = testing::finite_lattice(Quantale::boolean(), {"b", "a", "t"},
                                       {{1, 1, 1}, {1, 1, 1}, {0, 0, 1}});
    CHECK(lat->bottom() == Object{1});
}

TEST_CASE("presheaf powers") {
    const auto r = Quantale::lawvere_reals();
    PresheafPower pw(r, 2, true);
    CHECK(pw.hom({1, 5}, {3, 2}) == 3);
    CHECK(pw.hom({3, 2}, {1, 5}) == 2);
    CHECK(pw.cotensor(1, {1, 5}) == Object{2, 6});
    std::vector<Object> xs{{1, 5}, {3, 2}};
    CHECK(pw.meet(xs) == Object{1, 2});
    CHECK(pw.join(xs) == Object{3, 5});

    PresheafPower up(Quantale::unit_interval(TNorm::Product), 2, false);
    Object f{0.5, 0.8};
    Object t = up.tensor(0.5, f);
    Object c = up.cotensor(0.5, f);
    CHECK(up.hom_leq_q(t, f, 1));
    CHECK(up.hom_leq_q(f, c, 1));

    PresheafPower fin(Quantale::finite_chain(3), 2, false);
    CHECK(fin.enumerable());
    CHECK(fin.objects().size() == 9);
    CHECK_FALSE(pw.enumerable());
}
