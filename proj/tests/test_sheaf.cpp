#include <doctest.h>

#include "lawvere/paths.hpp"
#include "lawvere/sheaf.hpp"
#include "support.hpp"

using namespace lawvere;

namespace {

Graph edge() { return Graph{{"v", "w"}, {{0, 1}}}; }
Graph path3() { return Graph{{"s", "a", "t"}, {{0, 1}, {1, 2}}}; }

NetworkSheaf boolean_constant(Graph g, std::size_t n = 2) { return constant_sheaf(std::move(g), testing::boolean_chain(n)); }

}  // namespace

TEST_CASE("cochain homs") {
    auto rr = std::make_shared<UnderlineQ>(Quantale::lawvere_reals(), false);
    auto f = constant_sheaf(edge(), rr);
    CHECK(cochain_hom(f, {{0}, {0}}, {{3}, {5}}) == 5);
    CHECK(cochain_hom(f, {{3}, {5}}, {{3}, {5}}) == 0);
    CHECK(cochain_approx(f, {{0}, {0}}, {{3}, {5}}, 5));
    CHECK_FALSE(cochain_approx(f, {{0}, {0}}, {{3}, {5}}, 4));

    auto single = constant_sheaf(Graph{{"x"}, {}}, rr);
    CHECK(cochain_hom(single, {{2}}, {{7}}) == rr->hom({2}, {7}));
}

TEST_CASE("global sections of a Boolean edge") {
    auto f = boolean_constant(edge());
    auto one = Weighting::constant(f.graph(), 1);
    CHECK(global_sections(f, one) == std::vector<Cochain>{{{0}, {0}}, {{1}, {1}}});
    CHECK(is_fuzzy_global_section(f, one, {{1}, {1}}).ok);
    auto bad = is_fuzzy_global_section(f, one, {{1}, {0}});
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.witness.empty());

    auto zero = Weighting::constant(f.graph(), 0);
    CHECK(global_sections(f, zero).size() == 4);

    auto spec = testing::load_sheaf("sheaf_boolean_edge.json");
    auto s = global_sections(*spec.sheaf, spec.weighting);
    CHECK(s == std::vector<Cochain>{{{0}, {0}}, {{0}, {1}}, {{1}, {1}}});
}

TEST_CASE("metric sections have bounded disagreement") {
    auto g = path3();
    auto f = path_sheaf(g);
    auto eps = Weighting::constant(g, 2);
    CHECK(is_fuzzy_global_section(f, eps, {{0}, {1.5}, {3}}).ok);
    CHECK_FALSE(is_fuzzy_global_section(f, eps, {{0}, {2.5}, {3}}).ok);
    CHECK(is_fuzzy_global_section(f, Weighting::constant(g, 0), {{4}, {4}, {4}}).ok);
}

TEST_CASE("K3 sheaf") {
    auto spec = testing::load_sheaf("sheaf_k3.json");
    const auto& f = *spec.sheaf;
    Cochain zero{{0}, {0}, {0}};
    CHECK_FALSE(is_fuzzy_global_section(f, spec.weighting, zero).ok);
    auto step = flow_step(f, spec.weighting, std::vector<Value>(3, 0), std::vector<Value>(3, 0), zero);
    for (const auto& x : step) CHECK(x[0] > 0);
    CHECK(f.crisp());
    CHECK(f.validate().ok());
}

TEST_CASE("laplacian on a weighted path") {
    auto g = path3();
    auto f = path_sheaf(g);
    Weighting w = Weighting::constant(g, kInfinity);
    w.w[1][0] = w.w[0][1] = 1;
    w.w[1][2] = w.w[2][1] = 2;
    Cochain x{{0}, {kInfinity}, {kInfinity}};
    auto lx = laplacian(f, w, x);
    CHECK(lx[1] == Object{1});
    CHECK(lx[0] == Object{kInfinity});
    CHECK(lx[2] == Object{kInfinity});

    std::vector<Value> o1{0, 0.5, 0}, o2{0, 3, 0};
    auto y = flow_step(f, w, o1, o2, x);
    CHECK(y[1] == Object{1.5});
    CHECK(y[0] == Object{0});

    // omega1 at bottom leaves x alone
    std::vector<Value> bot(3, kInfinity), unit(3, 0);
    CHECK(flow_step(f, w, bot, unit, x) == x);

    auto isolated = path_sheaf(Graph{{"only"}, {}});
    CHECK(laplacian(isolated, Weighting::constant(isolated.graph(), 0), {{3}}) == Cochain{{kInfinity}});
}

TEST_CASE("laplacian with Boolean identity transports is the neighbour meet") {
    Graph star{{"c", "x", "y"}, {{0, 1}, {0, 2}}};
    auto f = boolean_constant(star, 3);
    auto one = Weighting::constant(star, 1);
    auto lx = laplacian(f, one, {{0}, {2}, {1}});
    CHECK(lx[0] == Object{1});
    CHECK(lx[1] == Object{0});
}

TEST_CASE("unweighted flow") {
    auto f = boolean_constant(path3(), 3);
    auto one = Weighting::constant(f.graph(), 1);
    auto tr = harmonic_flow(f, one, {{2}, {2}, {2}});
    CHECK(tr.status == FlowStatus::Converged);
    CHECK(tr.t_star == 0);

    auto tr2 = harmonic_flow(f, one, {{2}, {0}, {1}});
    CHECK(tr2.status == FlowStatus::Converged);
    CHECK(tr2.final == Cochain{{0}, {0}, {0}});
    CHECK(is_fuzzy_global_section(f, one, tr2.final).ok);
    CHECK(to_string(tr2.status) == "converged");
}

TEST_CASE("fixed points are the sections") {
    auto f = boolean_constant(path3(), 3);
    Weighting w = Weighting::constant(f.graph(), 1);
    w.w[2][1] = 0;
    auto all = enumerate_cochains(f);
    CHECK(all.size() == 27);
    auto unit = std::vector<Value>(3, 1);
    for (const auto& x : all) {
        bool fixed = flow_step(f, w, unit, unit, x) == x;
        CHECK(fixed == is_fuzzy_global_section(f, w, x).ok);
        bool suffix = f.vertex_stalk(0).quantale().leq(1, cochain_hom(f, x, laplacian(f, w, x)));
        CHECK(suffix == fixed);
    }
    auto rep = check_suffix_section_lemmas(f, w, 1, 1, all);
    CHECK_MESSAGE(rep.ok(), rep.summary());
}

TEST_CASE("projection property on a Boolean path") {
    auto f = boolean_constant(path3(), 3);
    auto one = Weighting::constant(f.graph(), 1);
    auto sections = global_sections(f, one);
    for (const auto& x0 : enumerate_cochains(f)) {
        auto rep = check_projection_property(f, one, x0, sections);
        CHECK_MESSAGE(rep.ok(), rep.summary());
    }
}

TEST_CASE("graph validation") {
    CHECK_THROWS(Graph{{"a", "a"}, {}}.validate());
    CHECK_THROWS(Graph{{"a", "b"}, {{0, 0}}}.validate());
    CHECK_THROWS(Graph{{"a", "b"}, {{0, 1}, {1, 0}}}.validate());
    CHECK_THROWS(Graph{{"a", "b"}, {{0, 2}}}.validate());
    CHECK(path3().adjacency()[1].size() == 2);
}
