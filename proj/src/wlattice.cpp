#include "lawvere/wlattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lawvere {

WeightedDiagram WeightedDiagram::crisp(const Quantale& q, std::vector<Object> objs) {
    WeightedDiagram d;
    d.weights.assign(objs.size(), q.unit());
    d.objects = std::move(objs);
    return d;
}

FiniteLattice::FiniteLattice(FiniteQCategory cat) : WeightedLattice(cat.quantale()), cat_(std::move(cat)) {
    order_.resize(cat_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(),
              [&](std::size_t a, std::size_t b) { return cat_.ids()[a] < cat_.ids()[b]; });
}

std::vector<Object> FiniteLattice::objects() const {
    std::vector<Object> out;
    for (auto i : order_) out.push_back(FiniteQCategory::object(i));
    return out;
}

std::optional<std::size_t> FiniteLattice::represent(const std::vector<Value>& target, LimitKind kind) const {
    const auto& Q = quantale();
    const std::size_t n = cat_.size();
    for (auto m : order_) {
        bool ok = true;
        for (std::size_t z = 0; z < n && ok; ++z) {
            Value h = kind == LimitKind::Meet ? cat_.hom(z, m) : cat_.hom(m, z);
            ok = Q.equal(h, target[z]);
        }
        if (ok) return m;
    }
    return std::nullopt;
}

namespace {

Object found(const FiniteLattice& lat, std::optional<std::size_t> m, const char* what) {
    if (!m) throw NoSuchObject(lat.name() + ": no object has the universal property of the " + what);
    return FiniteQCategory::object(*m);
}

}  // namespace

Object FiniteLattice::cotensor(Value q, const Object& y) const {
    quantale().require(q, "cotensor weight");
    std::vector<Value> t(cat_.size());
    for (std::size_t z = 0; z < cat_.size(); ++z) t[z] = quantale().hom(q, cat_.hom(FiniteQCategory::object(z), y));
    return found(*this, represent(t, LimitKind::Meet), "cotensor");
}

Object FiniteLattice::tensor(Value q, const Object& x) const {
    quantale().require(q, "tensor weight");
    std::vector<Value> t(cat_.size());
    for (std::size_t z = 0; z < cat_.size(); ++z) t[z] = quantale().hom(q, cat_.hom(x, FiniteQCategory::object(z)));
    return found(*this, represent(t, LimitKind::Join), "tensor");
}

Object FiniteLattice::meet(std::span<const Object> xs) const {
    const auto& Q = quantale();
    std::vector<Value> t(cat_.size(), Q.top());
    for (std::size_t z = 0; z < cat_.size(); ++z) {
        for (const auto& x : xs) t[z] = Q.meet(t[z], cat_.hom(FiniteQCategory::object(z), x));
    }
    return found(*this, represent(t, LimitKind::Meet), "crisp meet");
}

Object FiniteLattice::join(std::span<const Object> xs) const {
    const auto& Q = quantale();
    std::vector<Value> t(cat_.size(), Q.top());
    for (std::size_t z = 0; z < cat_.size(); ++z) {
        for (const auto& x : xs) t[z] = Q.meet(t[z], cat_.hom(x, FiniteQCategory::object(z)));
    }
    return found(*this, represent(t, LimitKind::Join), "crisp join");
}

UnderlineQ::UnderlineQ(Quantale q, bool op) : WeightedLattice(std::move(q)), op_(op) {}

Value UnderlineQ::hom(const Object& x, const Object& y) const {
    return op_ ? quantale().hom(y[0], x[0]) : quantale().hom(x[0], y[0]);
}

bool UnderlineQ::contains(const Object& x) const { return x.size() == 1 && quantale().contains(x[0]); }

std::string UnderlineQ::name() const { return "underline(" + quantale().name() + (op_ ? ")^op" : ")"); }

std::string UnderlineQ::describe(const Object& x) const { return quantale().format(x[0]); }

std::vector<Object> UnderlineQ::objects() const {
    std::vector<Object> out;
    for (Value v : quantale().carrier()) out.push_back({v});
    return out;
}

Object UnderlineQ::cotensor(Value q, const Object& y) const {
    return {op_ ? quantale().mul(q, y[0]) : quantale().hom(q, y[0])};
}

Object UnderlineQ::tensor(Value q, const Object& x) const {
    return {op_ ? quantale().hom(q, x[0]) : quantale().mul(q, x[0])};
}

Object UnderlineQ::meet(std::span<const Object> xs) const {
    const auto& Q = quantale();
    Value acc = op_ ? Q.bottom() : Q.top();
    for (const auto& x : xs) acc = op_ ? Q.join(acc, x[0]) : Q.meet(acc, x[0]);
    return {acc};
}

Object UnderlineQ::join(std::span<const Object> xs) const {
    const auto& Q = quantale();
    Value acc = op_ ? Q.top() : Q.bottom();
    for (const auto& x : xs) acc = op_ ? Q.meet(acc, x[0]) : Q.join(acc, x[0]);
    return {acc};
}

PresheafPower::PresheafPower(Quantale q, std::size_t m, bool op) : WeightedLattice(std::move(q)), m_(m), op_(op) {
    if (m_ == 0) throw std::invalid_argument("presheaf power: dimension must be positive");
}

Value PresheafPower::hom(const Object& x, const Object& y) const {
    const auto& Q = quantale();
    Value acc = Q.top();
    for (std::size_t i = 0; i < m_; ++i) acc = Q.meet(acc, op_ ? Q.hom(y[i], x[i]) : Q.hom(x[i], y[i]));
    return acc;
}

bool PresheafPower::contains(const Object& x) const {
    if (x.size() != m_) return false;
    return std::all_of(x.begin(), x.end(), [&](Value v) { return quantale().contains(v); });
}

std::string PresheafPower::name() const {
    return quantale().name() + "^" + std::to_string(m_) + (op_ ? " (op)" : "");
}

bool PresheafPower::enumerable() const {
    if (!quantale().finite()) return false;
    double count = std::pow(static_cast<double>(quantale().size()), static_cast<double>(m_));
    return count <= 4096;
}

std::vector<Object> PresheafPower::objects() const {
    if (!enumerable()) return QCategory::objects();
    auto carrier = quantale().carrier();
    std::vector<Object> out{{}};
    for (std::size_t i = 0; i < m_; ++i) {
        std::vector<Object> next;
        for (const auto& o : out) {
            for (Value v : carrier) {
                auto p = o;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        }
        out = std::move(next);
    }
    return out;
}

Object PresheafPower::cotensor(Value q, const Object& y) const {
    Object out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i] = op_ ? quantale().mul(q, y[i]) : quantale().hom(q, y[i]);
    return out;
}

Object PresheafPower::tensor(Value q, const Object& x) const {
    Object out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i] = op_ ? quantale().hom(q, x[i]) : quantale().mul(q, x[i]);
    return out;
}

Object PresheafPower::meet(std::span<const Object> xs) const {
    const auto& Q = quantale();
    Object out(m_, op_ ? Q.bottom() : Q.top());
    for (const auto& x : xs) {
        for (std::size_t i = 0; i < m_; ++i) out[i] = op_ ? Q.join(out[i], x[i]) : Q.meet(out[i], x[i]);
    }
    return out;
}

Object PresheafPower::join(std::span<const Object> xs) const {
    const auto& Q = quantale();
    Object out(m_, op_ ? Q.top() : Q.bottom());
    for (const auto& x : xs) {
        for (std::size_t i = 0; i < m_; ++i) out[i] = op_ ? Q.meet(out[i], x[i]) : Q.join(out[i], x[i]);
    }
    return out;
}

namespace {

void check_diagram(const QCategory& lat, const WeightedDiagram& d) {
    if (d.objects.size() != d.weights.size()) throw std::invalid_argument("weighted diagram: S and W differ in length");
    for (Value w : d.weights) lat.quantale().require(w, "diagram weight");
}

}  // namespace

Object weighted_meet(const WeightedLattice& lat, const WeightedDiagram& d) {
    check_diagram(lat, d);
    std::vector<Object> parts;
    parts.reserve(d.size());
    for (std::size_t c = 0; c < d.size(); ++c) parts.push_back(lat.cotensor(d.weights[c], d.objects[c]));
    return lat.meet(parts);
}

Object weighted_join(const WeightedLattice& lat, const WeightedDiagram& d) {
    check_diagram(lat, d);
    std::vector<Object> parts;
    parts.reserve(d.size());
    for (std::size_t c = 0; c < d.size(); ++c) parts.push_back(lat.tensor(d.weights[c], d.objects[c]));
    return lat.join(parts);
}

Object weighted_meet_via_identity_join(const WeightedLattice& lat, const WeightedDiagram& d) {
    check_diagram(lat, d);
    const auto& Q = lat.quantale();
    WeightedDiagram v;
    v.objects = lat.objects();
    for (const auto& x : v.objects) {
        Value acc = Q.top();
        for (std::size_t c = 0; c < d.size(); ++c) acc = Q.meet(acc, Q.hom(d.weights[c], lat.hom(x, d.objects[c])));
        v.weights.push_back(acc);
    }
    return weighted_join(lat, v);
}

Object weighted_join_via_identity_meet(const WeightedLattice& lat, const WeightedDiagram& d) {
    check_diagram(lat, d);
    const auto& Q = lat.quantale();
    WeightedDiagram v;
    v.objects = lat.objects();
    for (const auto& x : v.objects) {
        Value acc = Q.top();
        for (std::size_t c = 0; c < d.size(); ++c) acc = Q.meet(acc, Q.hom(d.weights[c], lat.hom(d.objects[c], x)));
        v.weights.push_back(acc);
    }
    return weighted_meet(lat, v);
}

LawReport verify_universal_property(const QCategory& lat, const WeightedDiagram& d, const Object& cand,
                                    LimitKind kind, std::span<const Object> sample) {
    check_diagram(lat, d);
    const auto& Q = lat.quantale();
    std::vector<Object> all;
    if (sample.empty()) {
        all = lat.objects();
        sample = all;
    }
    const bool meet = kind == LimitKind::Meet;
    LawReport rep;
    rep.declare("universal-property");
    for (const auto& x : sample) {
        Value expected = Q.top();
        for (std::size_t c = 0; c < d.size(); ++c) {
            Value h = meet ? lat.hom(x, d.objects[c]) : lat.hom(d.objects[c], x);
            expected = Q.meet(expected, Q.hom(d.weights[c], h));
        }
        Value actual = meet ? lat.hom(x, cand) : lat.hom(cand, x);
        rep.record("universal-property", Q.equal(actual, expected), [&] {
            return "x=" + lat.describe(x) + ": hom=" + Q.format(actual) + " but weighted bound=" + Q.format(expected) +
                   " (candidate " + lat.describe(cand) + ")";
        });
    }
    for (std::size_t c = 0; c < d.size(); ++c) {
        Value h = meet ? lat.hom(cand, d.objects[c]) : lat.hom(d.objects[c], cand);
        rep.record("weight-bound", Q.leq(d.weights[c], h), [&] {
            return "c=" + std::to_string(c) + ": W(c)=" + Q.format(d.weights[c]) + " exceeds hom=" + Q.format(h);
        });
    }
    return rep;
}

}  // namespace lawvere
