#include "lawvere/adjunction.hpp"

namespace lawvere {

namespace {

Value approx_level(const Quantale& Q, Value a, Value b) { return Q.meet(Q.hom(a, b), Q.hom(b, a)); }

}  // namespace

Value adjunction_defect(const QFunctor& f, const QFunctor& g, std::span<const Object> xs, std::span<const Object> ys) {
    const auto& Q = f.dom->quantale();
    require_same(Q, f.cod->quantale(), "adjunction_defect");
    require_same(Q, g.cod->quantale(), "adjunction_defect");
    std::vector<Object> fx;
    for (const auto& x : xs) fx.push_back(f(x));
    std::vector<Object> gy;
    for (const auto& y : ys) gy.push_back(g(y));
    Value acc = Q.top();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < ys.size(); ++j) {
            acc = Q.meet(acc, approx_level(Q, f.cod->hom(fx[i], ys[j]), f.dom->hom(xs[i], gy[j])));
        }
    }
    return acc;
}

Value adjunction_defect(const QFunctor& f, const QFunctor& g) {
    auto xs = f.dom->objects();
    auto ys = f.cod->objects();
    return adjunction_defect(f, g, xs, ys);
}

LawReport check_unit_counit(const QFunctor& f, const QFunctor& g, Value q, std::span<const Object> xs,
                            std::span<const Object> ys) {
    const auto& Q = f.dom->quantale();
    const auto& C = *f.dom;
    const auto& D = *f.cod;
    LawReport rep;
    rep.declare("unit");
    rep.declare("counit");
    bool criterion = true;
    for (const auto& x : xs) {
        Value h = C.hom(x, g(f(x)));
        bool ok = Q.geq(h, q);
        criterion = criterion && ok;
        rep.record("unit", ok, [&] { return "x=" + C.describe(x) + ": hom(x,GFx)=" + Q.format(h); });
    }
    for (const auto& y : ys) {
        Value h = D.hom(f(g(y)), y);
        bool ok = Q.geq(h, q);
        criterion = criterion && ok;
        rep.record("counit", ok, [&] { return "y=" + D.describe(y) + ": hom(FGy,y)=" + Q.format(h); });
    }
    Value defect = adjunction_defect(f, g, xs, ys);
    bool adjoint = Q.geq(defect, q);
    rep.record("criterion-matches-defect", criterion == adjoint, [&] {
        return "unit/counit criterion " + std::string(criterion ? "holds" : "fails") + " but defect is " +
               Q.format(defect);
    });
    if (adjoint) {
        for (const auto& x : xs) {
            for (const auto& y : ys) {
                Value a = D.hom(f(x), y);
                Value b = C.hom(x, g(y));
                rep.record("transposition", Q.geq(a, Q.mul(q, b)) && Q.geq(b, Q.mul(q, a)), [&] {
                    return "x=" + C.describe(x) + " y=" + D.describe(y) + ": " + Q.format(a) + " vs " + Q.format(b);
                });
            }
        }
    }
    return rep;
}

LawReport perturbed_adjunction(const QFunctor& f, const QFunctor& g, const QFunctor& ftilde, Value q,
                               std::span<const Object> xs, std::span<const Object> ys) {
    const auto& Q = f.dom->quantale();
    LawReport rep;
    Value crisp = adjunction_defect(f, g, xs, ys);
    rep.record("premise-crisp", Q.equal(crisp, Q.unit()), [&] { return "defect(F,G)=" + Q.format(crisp); });
    Value close = Q.meet(functor_category_hom(f, ftilde, xs), functor_category_hom(ftilde, f, xs));
    rep.record("premise-close", Q.geq(close, q), [&] { return "F vs F~ measured at " + Q.format(close); });
    Value got = adjunction_defect(ftilde, g, xs, ys);
    rep.record("perturbed-adjunction", Q.geq(got, q),
               [&] { return "defect(F~,G)=" + Q.format(got) + " below q=" + Q.format(q); });
    return rep;
}

LawReport perturbed_right_adjunction(const QFunctor& f, const QFunctor& g, const QFunctor& gtilde, Value q,
                                     std::span<const Object> xs, std::span<const Object> ys) {
    const auto& Q = f.dom->quantale();
    LawReport rep;
    Value crisp = adjunction_defect(f, g, xs, ys);
    rep.record("premise-crisp", Q.equal(crisp, Q.unit()), [&] { return "defect(F,G)=" + Q.format(crisp); });
    Value close = Q.meet(functor_category_hom(g, gtilde, ys), functor_category_hom(gtilde, g, ys));
    rep.record("premise-close", Q.geq(close, q), [&] { return "G vs G~ measured at " + Q.format(close); });
    Value got = adjunction_defect(f, gtilde, xs, ys);
    rep.record("perturbed-adjunction", Q.geq(got, q),
               [&] { return "defect(F,G~)=" + Q.format(got) + " below q=" + Q.format(q); });
    return rep;
}

LawReport adjoint_limit_interchange(const WeightedLattice& c, const WeightedLattice& d, const QFunctor& f,
                                    const QFunctor& g, Value q, const WeightedDiagram& in_c,
                                    const WeightedDiagram& in_d) {
    const auto& Q = c.quantale();
    const Value q2 = Q.mul(q, q);
    LawReport rep;

    Object join_c = weighted_join(c, in_c);
    WeightedDiagram fs{{}, in_c.weights};
    for (const auto& s : in_c.objects) fs.objects.push_back(f(s));
    Object join_fs = weighted_join(d, fs);
    Object f_join = f(join_c);
    rep.record("left-adjoint-preserves-joins", d.approx_q(f_join, join_fs, q2), [&] {
        return "F(join)=" + d.describe(f_join) + " vs join(FS)=" + d.describe(join_fs) + " at level " + Q.format(q2);
    });

    Object meet_d = weighted_meet(d, in_d);
    WeightedDiagram gs{{}, in_d.weights};
    for (const auto& s : in_d.objects) gs.objects.push_back(g(s));
    Object meet_gs = weighted_meet(c, gs);
    Object g_meet = g(meet_d);
    rep.record("right-adjoint-preserves-meets", c.approx_q(g_meet, meet_gs, q2), [&] {
        return "G(meet)=" + c.describe(g_meet) + " vs meet(GS)=" + c.describe(meet_gs) + " at level " + Q.format(q2);
    });

    std::vector<Object> sample = in_c.objects;
    sample.push_back(join_c);
    Value p = functor_defect_on(f, sample);
    rep.record("colimit-inequality", d.hom_leq_q(join_fs, f_join, p), [&] {
        return "hom(join(FS),F(join))=" + Q.format(d.hom(join_fs, f_join)) + " below functor level " + Q.format(p);
    });
    return rep;
}

QFunctor synthesize_right_adjoint(std::shared_ptr<const WeightedLattice> c, std::shared_ptr<const WeightedLattice> d,
                                  const QFunctor& f) {
    if (!c->enumerable() || !d->enumerable())
        throw std::logic_error("synthesize_right_adjoint: both lattices must be enumerable");
    auto xs = c->objects();
    std::vector<Object> images;
    for (const auto& x : xs) images.push_back(f(x));
    auto fm = f.map;
    const Value one = c->quantale().unit();
    auto cc = c;
    auto dd = d;
    auto map = [cc, dd, xs, images, one](const Object& y) {
        std::vector<Object> below;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (dd->hom_leq_q(images[i], y, one)) below.push_back(xs[i]);
        }
        return cc->join(below);
    };
    return QFunctor{d, c, map, "synth(" + f.name + ")"};
}

LawReport check_fuzzy_left_adjoint_criterion(const WeightedLattice& c, const WeightedLattice& d, const QFunctor& f,
                                             const QFunctor& g, Value q) {
    const auto& Q = c.quantale();
    const Value one = Q.unit();
    auto xs = c.objects();
    auto ys = d.objects();
    LawReport rep;
    for (const auto& x : xs) {
        Object lhs = f(c.tensor(q, x));
        Object rhs = d.tensor(q, f(x));
        rep.record("hypothesis-tensor", d.approx_q(lhs, rhs, q),
                   [&] { return "x=" + c.describe(x) + ": F(q*x)=" + d.describe(lhs) + " vs q*Fx=" + d.describe(rhs); });
    }
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            bool a = d.hom_leq_q(f(x), y, one);
            bool b = c.hom_leq_q(x, g(y), one);
            rep.record("hypothesis-preorder-adjunction", a == b,
                       [&] { return "x=" + c.describe(x) + " y=" + d.describe(y); });
        }
    }
    Value defect = adjunction_defect(f, g, xs, ys);
    rep.record("conclusion", Q.geq(defect, q), [&] { return "defect(F,G)=" + Q.format(defect); });
    return rep;
}

}  // namespace lawvere
