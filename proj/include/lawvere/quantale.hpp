#pragma once

// Commutative, unital, affine quantales.
//
// Every carrier is encoded in a double:
//   Boolean          0 / 1
//   UnitInterval     [0, 1]
//   LawvereReals     [0, inf], ordered by numeric >= (so join = min, top = 0)
//   finite carriers  an index 0..n-1 (for FinitePowerset the index is the bitmask)
//
// Finite carriers are exact. Real carriers compare with a tolerance.

#include <array>
#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lawvere/law_report.hpp"

namespace lawvere {

using Value = double;

inline constexpr Value kInfinity = std::numeric_limits<double>::infinity();

enum class QuantaleKind { Boolean, UnitInterval, LawvereReals, FiniteChain, FinitePowerset, FiniteTable };
enum class TNorm { Product, Lukasiewicz, Minimum };

class QuantaleMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Quantale {
public:
    static Quantale boolean();
    static Quantale unit_interval(TNorm tnorm, double tolerance = 1e-9);
    static Quantale lawvere_reals(double tolerance = 1e-9);
    static Quantale finite_chain(std::size_t n);
    static Quantale finite_powerset(std::size_t ground);

    /// A finite quantale given by its order relation (leq[i][j] = i <= j) and
    /// multiplication table. Lattice structure is derived from the order; the
    /// internal hom is the exhaustive residual join. Laws are not enforced
    /// here; run check_quantale_laws on the result.
    static Quantale from_tables(std::string name, std::vector<std::vector<bool>> leq,
                                std::vector<std::vector<std::size_t>> mul, std::vector<std::string> labels = {});

    QuantaleKind kind() const { return kind_; }
    TNorm tnorm() const { return tnorm_; }
    double tolerance() const { return tolerance_; }
    const std::string& name() const { return name_; }

    bool finite() const { return tables_ != nullptr; }
    std::size_t size() const;              // finite carriers only
    std::vector<Value> carrier() const;    // finite carriers only
    bool contains(Value p) const;
    /// Throws std::domain_error naming `what` when p is outside the carrier.
    void require(Value p, const std::string& what) const;

    bool leq(Value p, Value q) const;
    bool geq(Value p, Value q) const { return leq(q, p); }
    bool equal(Value p, Value q) const;

    Value top() const;
    Value bottom() const;
    Value unit() const;

    Value join(Value p, Value q) const;
    Value meet(Value p, Value q) const;
    Value join(std::span<const Value> ps) const;
    Value meet(std::span<const Value> ps) const;

    Value mul(Value p, Value q) const;
    /// Residual [p, q]: the largest r with p * r <= q.
    Value hom(Value p, Value q) const;

    bool idempotent(Value p) const { return equal(mul(p, p), p); }

    std::string format(Value p) const;

    /// Same instance (kind, parameters, and tables).
    bool operator==(const Quantale& other) const;

private:
    struct Tables;

    Quantale() = default;
    static std::shared_ptr<const Tables> make_tables(std::vector<std::vector<bool>> leq,
                                                     std::vector<std::vector<std::size_t>> mul,
                                                     std::vector<std::string> labels);
    std::size_t index(Value p) const;

    QuantaleKind kind_ = QuantaleKind::Boolean;
    TNorm tnorm_ = TNorm::Minimum;
    double tolerance_ = 0.0;
    std::string name_;
    std::shared_ptr<const Tables> tables_;
};

/// Throws QuantaleMismatch unless a and b are the same instance.
void require_same(const Quantale& a, const Quantale& b, const char* context);

/// Checks the residuation laws (monotonicity, hom/meet and hom/join exchange,
/// unit law, the order characterization, tensor-hom inequality, currying),
/// plus associativity, commutativity, unit, distributivity over finite joins,
/// affineness and the residuation adjunction, on every triple drawn from
/// `samples`. Violations are reported, never thrown.
LawReport check_quantale_laws(const Quantale& q, std::span<const Value> samples);

/// Exhaustive variant; requires a finite carrier.
LawReport check_quantale_laws(const Quantale& q);

/// Same laws, checked only on the given triples (p, q, r).
LawReport check_quantale_laws_triples(const Quantale& q, std::span<const std::array<Value, 3>> triples);

}  // namespace lawvere
