#pragma once

// Complete weighted lattices: tensors, cotensors, crisp and weighted
// meets/joins. FiniteLattice resolves everything by search over its
// objects; the analytic lattices use closed forms.

#include <optional>

#include "lawvere/qcat.hpp"

namespace lawvere {

struct WeightedDiagram {
    std::vector<Object> objects;  // S
    std::vector<Value> weights;   // W

    std::size_t size() const { return objects.size(); }
    static WeightedDiagram crisp(const Quantale& q, std::vector<Object> objs);
};

enum class LimitKind { Meet, Join };

class WeightedLattice : public QCategory {
public:
    using QCategory::QCategory;

    virtual Object cotensor(Value q, const Object& y) const = 0;
    virtual Object tensor(Value q, const Object& x) const = 0;
    /// Crisp meet; the empty meet is the top object.
    virtual Object meet(std::span<const Object> xs) const = 0;
    /// Crisp join; the empty join is the bottom object.
    virtual Object join(std::span<const Object> xs) const = 0;

    Object top() const { return meet({}); }
    Object bottom() const { return join({}); }
};

using LatticePtr = std::shared_ptr<const WeightedLattice>;

/// A finite Q-category treated as a weighted lattice. Every operation
/// searches for an object with the defining universal property, taking the
/// lowest identifier among isomorphic candidates; NoSuchObject means the
/// category is not complete.
class FiniteLattice : public WeightedLattice {
public:
    explicit FiniteLattice(FiniteQCategory cat);

    Value hom(const Object& x, const Object& y) const override { return cat_.hom(x, y); }
    bool contains(const Object& x) const override { return cat_.contains(x); }
    std::string name() const override { return cat_.name(); }
    std::string describe(const Object& x) const override { return cat_.describe(x); }
    bool enumerable() const override { return true; }
    std::vector<Object> objects() const override;

    Object cotensor(Value q, const Object& y) const override;
    Object tensor(Value q, const Object& x) const override;
    Object meet(std::span<const Object> xs) const override;
    Object join(std::span<const Object> xs) const override;

    const FiniteQCategory& category() const { return cat_; }
    std::size_t size() const { return cat_.size(); }

    /// Lowest-id object m with hom(z, m) = target[z] for every z (kind Meet),
    /// or hom(m, z) = target[z] (kind Join).
    std::optional<std::size_t> represent(const std::vector<Value>& target, LimitKind kind) const;

private:
    FiniteQCategory cat_;
    std::vector<std::size_t> order_;  // indices sorted by id
};

/// Underline Q (op = false) or its opposite (op = true); objects are {value}.
class UnderlineQ : public WeightedLattice {
public:
    UnderlineQ(Quantale q, bool op);

    Value hom(const Object& x, const Object& y) const override;
    bool contains(const Object& x) const override;
    std::string name() const override;
    std::string describe(const Object& x) const override;
    bool enumerable() const override { return quantale().finite(); }
    std::vector<Object> objects() const override;

    Object cotensor(Value q, const Object& y) const override;
    Object tensor(Value q, const Object& x) const override;
    Object meet(std::span<const Object> xs) const override;
    Object join(std::span<const Object> xs) const override;

    bool op() const { return op_; }

private:
    bool op_;
};

/// Q-valued functions on a discrete m-object category, pointwise (op = false)
/// or with the opposite order (op = true). For op over the reals the hom is
/// max_i (x_i - y_i)_+.
class PresheafPower : public WeightedLattice {
public:
    PresheafPower(Quantale q, std::size_t m, bool op);

    Value hom(const Object& x, const Object& y) const override;
    bool contains(const Object& x) const override;
    std::string name() const override;
    bool enumerable() const override;
    std::vector<Object> objects() const override;

    Object cotensor(Value q, const Object& y) const override;
    Object tensor(Value q, const Object& x) const override;
    Object meet(std::span<const Object> xs) const override;
    Object join(std::span<const Object> xs) const override;

    std::size_t dimension() const { return m_; }
    bool op() const { return op_; }

private:
    std::size_t m_;
    bool op_;
};

/// ⋀_c (W(c) ⋔ S(c)).
Object weighted_meet(const WeightedLattice& lat, const WeightedDiagram& d);
/// ⋁_c (W(c) ⊗ S(c)).
Object weighted_join(const WeightedLattice& lat, const WeightedDiagram& d);

/// ⋁^V 1 with V(x) = ⋀_c [W(c), hom(x, S(c))], over every object of an
/// enumerable lattice.
Object weighted_meet_via_identity_join(const WeightedLattice& lat, const WeightedDiagram& d);
/// Dual: ⋀^V 1 with V(x) = ⋀_c [W(c), hom(S(c), x)].
Object weighted_join_via_identity_meet(const WeightedLattice& lat, const WeightedDiagram& d);

/// Checks hom(x, cand) = ⋀_c [W(c), hom(x, S(c))] (Meet) or
/// hom(cand, x) = ⋀_c [W(c), hom(S(c), x)] (Join) for every x in `sample`,
/// or for every object when `sample` is empty. Also records the weight
/// bound W(c) ⪯ hom(cand, S(c)) (resp. hom(S(c), cand)).
LawReport verify_universal_property(const QCategory& lat, const WeightedDiagram& d, const Object& cand,
                                    LimitKind kind, std::span<const Object> sample = {});

}  // namespace lawvere
