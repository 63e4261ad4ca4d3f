#pragma once

// Q-categories and Q-functors.
//
// An object is a short vector of doubles. Finite categories use {index};
// analytic categories give the vector its own meaning (a quantale value,
// a point of Q^m, a flattened relation matrix).

#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lawvere/law_report.hpp"
#include "lawvere/quantale.hpp"

namespace lawvere {

using Object = std::vector<Value>;

class NoSuchObject : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QCategory {
public:
    explicit QCategory(Quantale q) : quantale_(std::move(q)) {}
    virtual ~QCategory() = default;

    const Quantale& quantale() const { return quantale_; }

    virtual Value hom(const Object& x, const Object& y) const = 0;
    virtual bool contains(const Object& x) const = 0;
    virtual std::string name() const = 0;
    virtual std::string describe(const Object& x) const;

    virtual bool enumerable() const { return false; }
    /// All objects, in canonical (identifier) order. Throws std::logic_error
    /// when the category is not enumerable.
    virtual std::vector<Object> objects() const;

    /// x ⪯_q y, i.e. hom(x, y) ⪰ q.
    bool hom_leq_q(const Object& x, const Object& y, Value q) const;
    /// x ≈_q y.
    bool approx_q(const Object& x, const Object& y, Value q) const;

private:
    Quantale quantale_;
};

using CategoryPtr = std::shared_ptr<const QCategory>;

class FiniteQCategory : public QCategory {
public:
    FiniteQCategory(Quantale q, std::vector<std::string> ids, std::vector<std::vector<Value>> hom);

    Value hom(const Object& x, const Object& y) const override;
    Value hom(std::size_t i, std::size_t j) const { return hom_[i][j]; }
    bool contains(const Object& x) const override;
    std::string name() const override { return name_; }
    std::string describe(const Object& x) const override;
    bool enumerable() const override { return true; }
    std::vector<Object> objects() const override;

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::vector<std::vector<Value>>& matrix() const { return hom_; }
    std::size_t index_of(const std::string& id) const;
    std::size_t index_of(const Object& x) const;
    static Object object(std::size_t i) { return {static_cast<Value>(i)}; }

    void set_name(std::string n) { name_ = std::move(n); }

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<Value>> hom_;
    std::string name_ = "finite";
};

LawReport validate_category(const FiniteQCategory& c);

/// rel[i][j] is true iff hom(i, j) ⪰ 1.
std::vector<std::vector<bool>> underlying_preorder(const FiniteQCategory& c);

FiniteQCategory opposite(const FiniteQCategory& c);
/// Objects are tuples, ids "(a,b,...)" in lexicographic index order; the hom
/// is the meet of coordinate homs.
FiniteQCategory product(const std::vector<FiniteQCategory>& factors);
FiniteQCategory discrete_category(const Quantale& q, std::vector<std::string> ids);

/// The full subcategory on `objs` of any category, as a finite matrix.
/// Ids default to describe(x).
FiniteQCategory full_subcategory(const QCategory& c, const std::vector<Object>& objs,
                                 std::vector<std::string> ids = {});

struct QFunctor {
    CategoryPtr dom;
    CategoryPtr cod;
    std::function<Object(const Object&)> map;
    std::string name;

    Object operator()(const Object& x) const { return map(x); }

    static QFunctor identity(CategoryPtr c);
    static QFunctor constant(CategoryPtr dom, CategoryPtr cod, Object value);
    /// table[i] is the codomain index of domain object i.
    static QFunctor from_table(std::shared_ptr<const FiniteQCategory> dom,
                               std::shared_ptr<const FiniteQCategory> cod, std::vector<std::size_t> table);
};

/// g ∘ f. Throws QuantaleMismatch when the categories are over different bases.
QFunctor compose(const QFunctor& g, const QFunctor& f);

/// Meet over the sampled pairs of [hom_C(x,y), hom_D(Fx,Fy)]; the largest q
/// for which F is a q-fuzzy functor on the sample.
Value functor_defect(const QFunctor& f, std::span<const std::pair<Object, Object>> sample);
/// Over all pairs of domain objects (or of `objects` when given).
Value functor_defect(const QFunctor& f);
Value functor_defect_on(const QFunctor& f, std::span<const Object> objects);

/// Meet over domain objects x of hom_D(Fx, Gx).
Value functor_category_hom(const QFunctor& f, const QFunctor& g);
Value functor_category_hom(const QFunctor& f, const QFunctor& g, std::span<const Object> sample);

/// For every q in the carrier and x, y: x ≈_q y iff for all z both
/// [hom(x,z), hom(y,z)] and [hom(y,z), hom(x,z)] are ⪰ q.
LawReport check_fuzzy_yoneda(const FiniteQCategory& c);

}  // namespace lawvere
