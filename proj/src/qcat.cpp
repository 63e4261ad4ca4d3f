#include "lawvere/qcat.hpp"

#include <sstream>

namespace lawvere {

std::string QCategory::describe(const Object& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += quantale().format(x[i]);
    }
    return s + ")";
}

std::vector<Object> QCategory::objects() const {
    throw std::logic_error(name() + ": category is not enumerable");
}

bool QCategory::hom_leq_q(const Object& x, const Object& y, Value q) const {
    return quantale().geq(hom(x, y), q);
}

bool QCategory::approx_q(const Object& x, const Object& y, Value q) const {
    return hom_leq_q(x, y, q) && hom_leq_q(y, x, q);
}

FiniteQCategory::FiniteQCategory(Quantale q, std::vector<std::string> ids, std::vector<std::vector<Value>> hom)
    : QCategory(std::move(q)), ids_(std::move(ids)), hom_(std::move(hom)) {
    if (hom_.size() != ids_.size()) throw std::invalid_argument("finite category: hom matrix size mismatch");
    for (std::size_t i = 0; i < hom_.size(); ++i) {
        if (hom_[i].size() != ids_.size()) throw std::invalid_argument("finite category: hom matrix is not square");
        for (Value v : hom_[i]) quantale().require(v, "finite category hom(" + ids_[i] + ",-)");
    }
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        for (std::size_t j = i + 1; j < ids_.size(); ++j) {
            if (ids_[i] == ids_[j]) throw std::invalid_argument("finite category: duplicate object id " + ids_[i]);
        }
    }
}

bool FiniteQCategory::contains(const Object& x) const {
    return x.size() == 1 && x[0] >= 0 && x[0] < static_cast<double>(ids_.size()) &&
           x[0] == static_cast<double>(static_cast<std::size_t>(x[0]));
}

std::size_t FiniteQCategory::index_of(const Object& x) const {
    if (!contains(x)) throw std::out_of_range(name_ + ": not an object of this category");
    return static_cast<std::size_t>(x[0]);
}

std::size_t FiniteQCategory::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (ids_[i] == id) return i;
    }
    throw std::out_of_range(name_ + ": unknown object id " + id);
}

Value FiniteQCategory::hom(const Object& x, const Object& y) const { return hom_[index_of(x)][index_of(y)]; }

std::string FiniteQCategory::describe(const Object& x) const {
    if (!contains(x)) return QCategory::describe(x);
    return ids_[index_of(x)];
}

std::vector<Object> FiniteQCategory::objects() const {
    std::vector<Object> out;
    for (std::size_t i = 0; i < ids_.size(); ++i) out.push_back(object(i));
    return out;
}

LawReport validate_category(const FiniteQCategory& c) {
    const auto& Q = c.quantale();
    const auto& ids = c.ids();
    LawReport rep;
    rep.declare("unit");
    rep.declare("composition");
    const std::size_t n = c.size();
    for (std::size_t x = 0; x < n; ++x) {
        rep.record("unit", Q.equal(c.hom(x, x), Q.unit()),
                   [&] { return "hom(" + ids[x] + "," + ids[x] + ")=" + Q.format(c.hom(x, x)); });
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                Value lhs = Q.mul(c.hom(x, y), c.hom(y, z));
                rep.record("composition", Q.leq(lhs, c.hom(x, z)), [&] {
                    return "hom(" + ids[x] + "," + ids[y] + ")*hom(" + ids[y] + "," + ids[z] + ")=" + Q.format(lhs) +
                           " exceeds hom(" + ids[x] + "," + ids[z] + ")=" + Q.format(c.hom(x, z));
                });
            }
        }
    }
    return rep;
}

std::vector<std::vector<bool>> underlying_preorder(const FiniteQCategory& c) {
    const auto& Q = c.quantale();
    std::vector<std::vector<bool>> rel(c.size(), std::vector<bool>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) rel[i][j] = Q.geq(c.hom(i, j), Q.unit());
    }
    return rel;
}

FiniteQCategory opposite(const FiniteQCategory& c) {
    const std::size_t n = c.size();
    std::vector<std::vector<Value>> h(n, std::vector<Value>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) h[i][j] = c.hom(j, i);
    }
    FiniteQCategory out(c.quantale(), c.ids(), std::move(h));
    out.set_name(c.name() + "^op");
    return out;
}

FiniteQCategory product(const std::vector<FiniteQCategory>& factors) {
    if (factors.empty()) throw std::invalid_argument("product: no factors");
    const Quantale& Q = factors.front().quantale();
    for (const auto& f : factors) require_same(Q, f.quantale(), "product");

    std::vector<std::vector<std::size_t>> tuples{{}};
    for (const auto& f : factors) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& t : tuples) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                auto u = t;
                u.push_back(i);
                next.push_back(std::move(u));
            }
        }
        tuples = std::move(next);
    }
    std::vector<std::string> ids;
    for (const auto& t : tuples) {
        std::string s = "(";
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (k) s += ",";
            s += factors[k].ids()[t[k]];
        }
        ids.push_back(s + ")");
    }
    std::vector<std::vector<Value>> h(tuples.size(), std::vector<Value>(tuples.size()));
    for (std::size_t a = 0; a < tuples.size(); ++a) {
        for (std::size_t b = 0; b < tuples.size(); ++b) {
            Value acc = Q.top();
            for (std::size_t k = 0; k < factors.size(); ++k) {
                acc = Q.meet(acc, factors[k].hom(tuples[a][k], tuples[b][k]));
            }
            h[a][b] = acc;
        }
    }
    FiniteQCategory out(Q, std::move(ids), std::move(h));
    out.set_name("product");
    return out;
}

FiniteQCategory discrete_category(const Quantale& q, std::vector<std::string> ids) {
    const std::size_t n = ids.size();
    std::vector<std::vector<Value>> h(n, std::vector<Value>(n, q.bottom()));
    for (std::size_t i = 0; i < n; ++i) h[i][i] = q.unit();
    FiniteQCategory out(q, std::move(ids), std::move(h));
    out.set_name("discrete");
    return out;
}

FiniteQCategory full_subcategory(const QCategory& c, const std::vector<Object>& objs, std::vector<std::string> ids) {
    if (ids.empty()) {
        for (const auto& x : objs) ids.push_back(c.describe(x));
    }
    if (ids.size() != objs.size()) throw std::invalid_argument("full_subcategory: id count mismatch");
    std::vector<std::vector<Value>> h(objs.size(), std::vector<Value>(objs.size()));
    for (std::size_t i = 0; i < objs.size(); ++i) {
        for (std::size_t j = 0; j < objs.size(); ++j) h[i][j] = c.hom(objs[i], objs[j]);
    }
    FiniteQCategory out(c.quantale(), std::move(ids), std::move(h));
    out.set_name("sub(" + c.name() + ")");
    return out;
}

QFunctor QFunctor::identity(CategoryPtr c) {
    return QFunctor{c, c, [](const Object& x) { return x; }, "id"};
}

QFunctor QFunctor::constant(CategoryPtr dom, CategoryPtr cod, Object value) {
    return QFunctor{std::move(dom), std::move(cod), [value](const Object&) { return value; }, "const"};
}

QFunctor QFunctor::from_table(std::shared_ptr<const FiniteQCategory> dom, std::shared_ptr<const FiniteQCategory> cod,
                              std::vector<std::size_t> table) {
    if (table.size() != dom->size()) throw std::invalid_argument("from_table: table size must match the domain");
    for (auto t : table) {
        if (t >= cod->size()) throw std::invalid_argument("from_table: image outside the codomain");
    }
    auto d = dom;
    return QFunctor{dom, cod,
                    [d, table = std::move(table)](const Object& x) {
                        return FiniteQCategory::object(table[d->index_of(x)]);
                    },
                    "table"};
}

QFunctor compose(const QFunctor& g, const QFunctor& f) {
    require_same(f.cod->quantale(), g.dom->quantale(), "compose");
    auto gm = g.map;
    auto fm = f.map;
    return QFunctor{f.dom, g.cod, [gm, fm](const Object& x) { return gm(fm(x)); }, g.name + "." + f.name};
}

Value functor_defect(const QFunctor& f, std::span<const std::pair<Object, Object>> sample) {
    const auto& Q = f.dom->quantale();
    require_same(Q, f.cod->quantale(), "functor_defect");
    Value acc = Q.top();
    for (const auto& [x, y] : sample) {
        acc = Q.meet(acc, Q.hom(f.dom->hom(x, y), f.cod->hom(f(x), f(y))));
    }
    return acc;
}

Value functor_defect_on(const QFunctor& f, std::span<const Object> objects) {
    const auto& Q = f.dom->quantale();
    require_same(Q, f.cod->quantale(), "functor_defect");
    std::vector<Object> images;
    images.reserve(objects.size());
    for (const auto& x : objects) images.push_back(f(x));
    Value acc = Q.top();
    for (std::size_t i = 0; i < objects.size(); ++i) {
        for (std::size_t j = 0; j < objects.size(); ++j) {
            acc = Q.meet(acc, Q.hom(f.dom->hom(objects[i], objects[j]), f.cod->hom(images[i], images[j])));
        }
    }
    return acc;
}

Value functor_defect(const QFunctor& f) {
    auto objs = f.dom->objects();
    return functor_defect_on(f, objs);
}

Value functor_category_hom(const QFunctor& f, const QFunctor& g, std::span<const Object> sample) {
    const auto& Q = f.cod->quantale();
    require_same(Q, g.cod->quantale(), "functor_category_hom");
    Value acc = Q.top();
    for (const auto& x : sample) acc = Q.meet(acc, f.cod->hom(f(x), g(x)));
    return acc;
}

Value functor_category_hom(const QFunctor& f, const QFunctor& g) {
    auto objs = f.dom->objects();
    return functor_category_hom(f, g, objs);
}

LawReport check_fuzzy_yoneda(const FiniteQCategory& c) {
    const auto& Q = c.quantale();
    LawReport rep;
    rep.declare("fuzzy-yoneda");
    for (Value q : Q.carrier()) {
        for (std::size_t x = 0; x < c.size(); ++x) {
            for (std::size_t y = 0; y < c.size(); ++y) {
                bool lhs = Q.geq(c.hom(x, y), q) && Q.geq(c.hom(y, x), q);
                bool rhs = true;
                for (std::size_t z = 0; z < c.size() && rhs; ++z) {
                    rhs = Q.geq(Q.hom(c.hom(x, z), c.hom(y, z)), q) && Q.geq(Q.hom(c.hom(y, z), c.hom(x, z)), q);
                }
                rep.record("fuzzy-yoneda", lhs == rhs, [&] {
                    return "q=" + Q.format(q) + " x=" + c.ids()[x] + " y=" + c.ids()[y] +
                           (lhs ? ": approximate but representables differ" : ": representables agree but not approximate");
                });
            }
        }
    }
    return rep;
}

}  // namespace lawvere
