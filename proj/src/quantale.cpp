#include "lawvere/quantale.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace lawvere {

struct Quantale::Tables {
    std::size_t n = 0;
    std::vector<std::vector<bool>> leq;
    std::vector<std::vector<std::size_t>> mul;
    std::vector<std::vector<std::size_t>> hom;
    std::vector<std::vector<std::size_t>> join;
    std::vector<std::vector<std::size_t>> meet;
    std::size_t top = 0;
    std::size_t bottom = 0;
    std::size_t unit = 0;
    std::vector<std::string> labels;
};

namespace {

// Least upper bound of {a, b} under `leq`, found by search.
std::size_t search_lub(const std::vector<std::vector<bool>>& leq, std::size_t a, std::size_t b) {
    const std::size_t n = leq.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (!leq[a][u] || !leq[b][u]) continue;
        bool least = true;
        for (std::size_t v = 0; v < n && least; ++v) {
            if (leq[a][v] && leq[b][v] && !leq[u][v]) least = false;
        }
        if (least) return u;
    }
    throw std::invalid_argument("finite quantale: order is not a lattice (missing join)");
}

std::size_t search_glb(const std::vector<std::vector<bool>>& leq, std::size_t a, std::size_t b) {
    const std::size_t n = leq.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (!leq[u][a] || !leq[u][b]) continue;
        bool greatest = true;
        for (std::size_t v = 0; v < n && greatest; ++v) {
            if (leq[v][a] && leq[v][b] && !leq[v][u]) greatest = false;
        }
        if (greatest) return u;
    }
    throw std::invalid_argument("finite quantale: order is not a lattice (missing meet)");
}

std::string format_real(double x) {
    if (std::isinf(x)) return "inf";
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc()) return "nan";
    return std::string(buf.data(), ptr);
}

}  // namespace

Quantale Quantale::from_tables(std::string name, std::vector<std::vector<bool>> leq,
                               std::vector<std::vector<std::size_t>> mul, std::vector<std::string> labels) {
    const std::size_t n = leq.size();
    if (n == 0) throw std::invalid_argument("finite quantale: empty carrier");
    if (mul.size() != n) throw std::invalid_argument("finite quantale: multiplication table size");
    for (std::size_t i = 0; i < n; ++i) {
        if (leq[i].size() != n || mul[i].size() != n)
            throw std::invalid_argument("finite quantale: tables must be square");
        for (auto m : mul[i]) {
            if (m >= n) throw std::invalid_argument("finite quantale: product outside carrier");
        }
    }
    if (labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n) throw std::invalid_argument("finite quantale: one label per element");
    Quantale q;
    q.kind_ = QuantaleKind::FiniteTable;
    q.name_ = std::move(name);
    q.tables_ = make_tables(std::move(leq), std::move(mul), std::move(labels));
    return q;
}

std::shared_ptr<const Quantale::Tables> Quantale::make_tables(std::vector<std::vector<bool>> leq,
                                                              std::vector<std::vector<std::size_t>> mul,
                                                              std::vector<std::string> labels) {
    auto t = std::make_shared<Tables>();
    const std::size_t n = leq.size();
    t->n = n;
    t->leq = std::move(leq);
    t->mul = std::move(mul);
    t->labels = std::move(labels);
    t->join.assign(n, std::vector<std::size_t>(n));
    t->meet.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            t->join[a][b] = search_lub(t->leq, a, b);
            t->meet[a][b] = search_glb(t->leq, a, b);
        }
    }
    std::size_t top = 0;
    std::size_t bottom = 0;
    for (std::size_t a = 1; a < n; ++a) {
        top = t->join[top][a];
        bottom = t->meet[bottom][a];
    }
    t->top = top;
    t->bottom = bottom;

    t->unit = top;
    for (std::size_t e = 0; e < n; ++e) {
        bool is_unit = true;
        for (std::size_t x = 0; x < n && is_unit; ++x) {
            is_unit = t->mul[e][x] == x && t->mul[x][e] == x;
        }
        if (is_unit) {
            t->unit = e;
            break;
        }
    }

    // Residual by exhaustive join of {r : p * r <= q}.
    t->hom.assign(n, std::vector<std::size_t>(n));
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            std::size_t acc = bottom;
            for (std::size_t r = 0; r < n; ++r) {
                if (t->leq[t->mul[p][r]][q]) acc = t->join[acc][r];
            }
            t->hom[p][q] = acc;
        }
    }
    return t;
}

Quantale Quantale::boolean() {
    Quantale q = finite_chain(2);
    q.kind_ = QuantaleKind::Boolean;
    q.name_ = "boolean";
    return q;
}

Quantale Quantale::finite_chain(std::size_t n) {
    if (n < 2) throw std::invalid_argument("finite_chain: n must be at least 2");
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            leq[i][j] = i <= j;
            mul[i][j] = std::min(i, j);
        }
    }
    Quantale q;
    q.kind_ = QuantaleKind::FiniteChain;
    q.name_ = "finite_chain(" + std::to_string(n) + ")";
    q.tables_ = make_tables(std::move(leq), std::move(mul), std::move(labels));
    return q;
}

Quantale Quantale::finite_powerset(std::size_t ground) {
    if (ground < 1 || ground > 5) throw std::invalid_argument("finite_powerset: ground size must be 1..5");
    const std::size_t n = std::size_t{1} << ground;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = "{";
        for (std::size_t b = 0; b < ground; ++b) {
            if (i & (std::size_t{1} << b)) {
                if (s.size() > 1) s += ",";
                s += static_cast<char>('a' + b);
            }
        }
        labels.push_back(s + "}");
        for (std::size_t j = 0; j < n; ++j) {
            leq[i][j] = (i & j) == i;
            mul[i][j] = i & j;
        }
    }
    Quantale q;
    q.kind_ = QuantaleKind::FinitePowerset;
    q.name_ = "finite_powerset(" + std::to_string(ground) + ")";
    q.tables_ = make_tables(std::move(leq), std::move(mul), std::move(labels));
    return q;
}

Quantale Quantale::unit_interval(TNorm tnorm, double tolerance) {
    if (!(tolerance >= 0)) throw std::invalid_argument("unit_interval: tolerance must be nonnegative");
    Quantale q;
    q.kind_ = QuantaleKind::UnitInterval;
    q.tnorm_ = tnorm;
    q.tolerance_ = tolerance;
    switch (tnorm) {
        case TNorm::Product: q.name_ = "unit_interval(product)"; break;
        case TNorm::Lukasiewicz: q.name_ = "unit_interval(lukasiewicz)"; break;
        case TNorm::Minimum: q.name_ = "unit_interval(min)"; break;
    }
    return q;
}

Quantale Quantale::lawvere_reals(double tolerance) {
    if (!(tolerance >= 0)) throw std::invalid_argument("lawvere_reals: tolerance must be nonnegative");
    Quantale q;
    q.kind_ = QuantaleKind::LawvereReals;
    q.tolerance_ = tolerance;
    q.name_ = "lawvere_reals";
    return q;
}

std::size_t Quantale::size() const {
    if (!tables_) throw std::logic_error(name_ + ": carrier is not finite");
    return tables_->n;
}

std::vector<Value> Quantale::carrier() const {
    std::vector<Value> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(static_cast<Value>(i));
    return out;
}

bool Quantale::contains(Value p) const {
    if (std::isnan(p)) return false;
    if (tables_) {
        return p >= 0 && p < static_cast<double>(tables_->n) && std::floor(p) == p;
    }
    if (kind_ == QuantaleKind::UnitInterval) return p >= 0.0 && p <= 1.0;
    return p >= 0.0;  // LawvereReals, infinity included
}

void Quantale::require(Value p, const std::string& what) const {
    if (!contains(p)) {
        throw std::domain_error(what + ": value " + format_real(p) + " is not in the carrier of " + name_);
    }
}

std::size_t Quantale::index(Value p) const { return static_cast<std::size_t>(p); }

bool Quantale::leq(Value p, Value q) const {
    if (tables_) return tables_->leq[index(p)][index(q)];
    if (kind_ == QuantaleKind::UnitInterval) return p <= q + tolerance_;
    // LawvereReals: reversed numeric order.
    if (p == kInfinity) return true;
    if (q == kInfinity) return false;
    return p + tolerance_ >= q;
}

bool Quantale::equal(Value p, Value q) const { return leq(p, q) && leq(q, p); }

Value Quantale::top() const {
    if (tables_) return static_cast<Value>(tables_->top);
    return kind_ == QuantaleKind::UnitInterval ? 1.0 : 0.0;
}

Value Quantale::bottom() const {
    if (tables_) return static_cast<Value>(tables_->bottom);
    return kind_ == QuantaleKind::UnitInterval ? 0.0 : kInfinity;
}

Value Quantale::unit() const {
    if (tables_) return static_cast<Value>(tables_->unit);
    return kind_ == QuantaleKind::UnitInterval ? 1.0 : 0.0;
}

Value Quantale::join(Value p, Value q) const {
    if (tables_) return static_cast<Value>(tables_->join[index(p)][index(q)]);
    if (kind_ == QuantaleKind::UnitInterval) return std::max(p, q);
    return std::min(p, q);
}

Value Quantale::meet(Value p, Value q) const {
    if (tables_) return static_cast<Value>(tables_->meet[index(p)][index(q)]);
    if (kind_ == QuantaleKind::UnitInterval) return std::min(p, q);
    return std::max(p, q);
}

Value Quantale::join(std::span<const Value> ps) const {
    Value acc = bottom();
    for (Value p : ps) acc = join(acc, p);
    return acc;
}

Value Quantale::meet(std::span<const Value> ps) const {
    Value acc = top();
    for (Value p : ps) acc = meet(acc, p);
    return acc;
}

Value Quantale::mul(Value p, Value q) const {
    if (tables_) return static_cast<Value>(tables_->mul[index(p)][index(q)]);
    if (kind_ == QuantaleKind::LawvereReals) return p + q;  // inf absorbs
    switch (tnorm_) {
        case TNorm::Product: return p * q;
        case TNorm::Lukasiewicz: return std::max(0.0, p + q - 1.0);
        case TNorm::Minimum: return std::min(p, q);
    }
    return 0.0;
}

Value Quantale::hom(Value p, Value q) const {
    if (tables_) return static_cast<Value>(tables_->hom[index(p)][index(q)]);
    if (kind_ == QuantaleKind::LawvereReals) {
        if (p == kInfinity) return 0.0;
        if (q == kInfinity) return kInfinity;
        return std::max(q - p, 0.0);
    }
    switch (tnorm_) {
        case TNorm::Product: return p <= q ? 1.0 : q / p;
        case TNorm::Lukasiewicz: return std::min(1.0, 1.0 - p + q);
        case TNorm::Minimum: return p <= q ? 1.0 : q;
    }
    return 0.0;
}

std::string Quantale::format(Value p) const {
    if (tables_ && contains(p)) return tables_->labels[index(p)];
    return format_real(p);
}

bool Quantale::operator==(const Quantale& other) const {
    if (kind_ != other.kind_ || name_ != other.name_) return false;
    if (kind_ == QuantaleKind::UnitInterval && tnorm_ != other.tnorm_) return false;
    if (kind_ == QuantaleKind::FiniteTable) {
        return tables_ == other.tables_ ||
               (tables_->leq == other.tables_->leq && tables_->mul == other.tables_->mul);
    }
    return true;
}

void require_same(const Quantale& a, const Quantale& b, const char* context) {
    if (!(a == b)) {
        throw QuantaleMismatch(std::string(context) + ": quantale mismatch (" + a.name() + " vs " + b.name() + ")");
    }
}

namespace {

void check_triple(const Quantale& Q, Value p, Value q, Value r, LawReport& rep) {
    auto f = [&](Value x) { return Q.format(x); };
    auto w3 = [&](const std::string& detail) {
        return [=, &f]() { return "p=" + f(p) + " q=" + f(q) + " r=" + f(r) + ": " + detail; };
    };
    const Value one = Q.unit();

    // Monotonicity of the hom in each argument.
    if (Q.leq(q, r)) {
        rep.record("hom-monotone-covariant", Q.leq(Q.hom(p, q), Q.hom(p, r)),
                   w3("[p,q]=" + f(Q.hom(p, q)) + " not below [p,r]=" + f(Q.hom(p, r))));
    }
    if (Q.leq(p, r)) {
        rep.record("hom-monotone-contravariant", Q.geq(Q.hom(p, q), Q.hom(r, q)),
                   w3("[p,q]=" + f(Q.hom(p, q)) + " not above [r,q]=" + f(Q.hom(r, q))));
    }
    // Exchange with meets and joins.
    {
        Value lhs = Q.hom(p, Q.meet(q, r));
        Value rhs = Q.meet(Q.hom(p, q), Q.hom(p, r));
        rep.record("hom-preserves-meets", Q.equal(lhs, rhs), w3(f(lhs) + " != " + f(rhs)));
        Value lhs2 = Q.hom(Q.join(q, r), p);
        Value rhs2 = Q.meet(Q.hom(q, p), Q.hom(r, p));
        rep.record("hom-joins-to-meets", Q.equal(lhs2, rhs2), w3(f(lhs2) + " != " + f(rhs2)));
    }
    rep.record("hom-unit", Q.equal(Q.hom(one, q), q), w3("[1,q]=" + f(Q.hom(one, q))));
    rep.record("hom-order", Q.leq(q, p) == Q.leq(one, Q.hom(q, p)),
               w3("q<=p is " + std::string(Q.leq(q, p) ? "true" : "false") + " but [q,p]=" + f(Q.hom(q, p))));
    {
        Value lhs = Q.mul(Q.hom(p, q), r);
        Value rhs = Q.hom(p, Q.mul(q, r));
        rep.record("hom-tensor", Q.leq(lhs, rhs), w3(f(lhs) + " not below " + f(rhs)));
    }
    {
        Value a = Q.hom(p, Q.hom(q, r));
        Value b = Q.hom(Q.mul(p, q), r);
        Value c = Q.hom(q, Q.hom(p, r));
        rep.record("hom-currying", Q.equal(a, b) && Q.equal(b, c), w3(f(a) + ", " + f(b) + ", " + f(c)));
    }
    {
        Value lhs = Q.mul(Q.mul(p, q), r);
        Value rhs = Q.mul(p, Q.mul(q, r));
        rep.record("associativity", Q.equal(lhs, rhs), w3(f(lhs) + " != " + f(rhs)));
    }
    rep.record("commutativity", Q.equal(Q.mul(p, q), Q.mul(q, p)),
               w3(f(Q.mul(p, q)) + " != " + f(Q.mul(q, p))));
    rep.record("unit-law", Q.equal(Q.mul(one, p), p), w3("1*p=" + f(Q.mul(one, p))));
    {
        Value lhs = Q.mul(p, Q.join(q, r));
        Value rhs = Q.join(Q.mul(p, q), Q.mul(p, r));
        rep.record("distributivity", Q.equal(lhs, rhs),
                   w3("p*(q v r)=" + f(lhs) + " but p*q v p*r=" + f(rhs)));
    }
    rep.record("distributivity-empty", Q.equal(Q.mul(p, Q.bottom()), Q.bottom()),
               w3("p*bottom=" + f(Q.mul(p, Q.bottom()))));
    rep.record("affine", Q.leq(Q.mul(p, q), Q.meet(p, q)),
               w3("p*q=" + f(Q.mul(p, q)) + " not below p^q=" + f(Q.meet(p, q))));
    rep.record("residuation", Q.leq(Q.mul(p, r), q) == Q.leq(r, Q.hom(p, q)),
               w3("p*r<=q disagrees with r<=[p,q]"));
    rep.record("residuation-counit", Q.leq(Q.mul(p, Q.hom(p, q)), q),
               w3("p*[p,q]=" + f(Q.mul(p, Q.hom(p, q)))));
    rep.record("hom-empty-meet", Q.equal(Q.hom(p, Q.top()), Q.top()) && Q.equal(Q.hom(Q.bottom(), p), Q.top()),
               w3("[p,top] or [bottom,p] is not top"));
}

}  // namespace

LawReport check_quantale_laws(const Quantale& q, std::span<const Value> samples) {
    LawReport rep;
    rep.record("unit-is-top", q.equal(q.unit(), q.top()),
               [&] { return "unit=" + q.format(q.unit()) + " top=" + q.format(q.top()); });
    for (Value s : samples) q.require(s, "check_quantale_laws sample");
    for (Value a : samples) {
        for (Value b : samples) {
            for (Value c : samples) check_triple(q, a, b, c, rep);
        }
    }
    return rep;
}

LawReport check_quantale_laws(const Quantale& q) {
    if (!q.finite()) throw std::invalid_argument("check_quantale_laws: exhaustive mode needs a finite carrier");
    auto carrier = q.carrier();
    return check_quantale_laws(q, carrier);
}

LawReport check_quantale_laws_triples(const Quantale& q, std::span<const std::array<Value, 3>> triples) {
    LawReport rep;
    rep.record("unit-is-top", q.equal(q.unit(), q.top()),
               [&] { return "unit=" + q.format(q.unit()) + " top=" + q.format(q.top()); });
    for (const auto& t : triples) {
        for (Value s : t) q.require(s, "check_quantale_laws sample");
        check_triple(q, t[0], t[1], t[2], rep);
    }
    return rep;
}

}  // namespace lawvere
