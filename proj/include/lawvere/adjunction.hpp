#pragma once

// q-fuzzy adjunctions between Q-categories.

#include "lawvere/wlattice.hpp"

namespace lawvere {

struct FuzzyAdjunction {
    QFunctor left;   // F: C -> D
    QFunctor right;  // G: D -> C
    Value level;
};

/// Meet over x in xs, y in ys of hom_D(Fx,y) ≈ hom_C(x,Gy) measured as
/// [a,b] ∧ [b,a].
Value adjunction_defect(const QFunctor& f, const QFunctor& g, std::span<const Object> xs, std::span<const Object> ys);
/// All objects of both categories.
Value adjunction_defect(const QFunctor& f, const QFunctor& g);

/// hom(x, GFx) ⪰ q and hom(FGy, y) ⪰ q, plus agreement of that criterion
/// with adjunction_defect ⪰ q and the transposition inequalities.
LawReport check_unit_counit(const QFunctor& f, const QFunctor& g, Value q, std::span<const Object> xs,
                            std::span<const Object> ys);

/// Given F ⊣ G crisp and F ≈_q F~ on xs, checks F~ ⊣_q G on xs × ys.
/// Records the premises too, so a failing premise is visible.
LawReport perturbed_adjunction(const QFunctor& f, const QFunctor& g, const QFunctor& ftilde, Value q,
                               std::span<const Object> xs, std::span<const Object> ys);
/// The mirrored statement: F ⊣ G crisp and G ≈_q G~ gives F ⊣_q G~.
LawReport perturbed_right_adjunction(const QFunctor& f, const QFunctor& g, const QFunctor& gtilde, Value q,
                                     std::span<const Object> xs, std::span<const Object> ys);

/// For F ⊣_q G between weighted lattices C and D: F(⋁^W S) ≈_{q·q} ⋁^W FS
/// for `in_c`, G(⋀^W S') ≈_{q·q} ⋀^W GS' for `in_d`, and
/// ⋁^W FS ⪯_p F(⋁^W S) where p is F's measured functor defect.
LawReport adjoint_limit_interchange(const WeightedLattice& c, const WeightedLattice& d, const QFunctor& f,
                                    const QFunctor& g, Value q, const WeightedDiagram& in_c,
                                    const WeightedDiagram& in_d);

/// G(y) = ⋁ {x : Fx ⪯_1 y}, computed by crisp join in `c`. Non-skeletal
/// inputs are handled by the lattice's lowest-identifier choice.
QFunctor synthesize_right_adjoint(std::shared_ptr<const WeightedLattice> c, std::shared_ptr<const WeightedLattice> d,
                                  const QFunctor& f);

/// The two hypotheses of the fuzzy left adjoint criterion at the single
/// scalar q: F(q ⊗ x) ≈_q q ⊗ Fx for every x, and F ⊣ G on the underlying
/// preorders. Also records whether the conclusion F ⊣_q G holds.
LawReport check_fuzzy_left_adjoint_criterion(const WeightedLattice& c, const WeightedLattice& d, const QFunctor& f,
                                             const QFunctor& g, Value q);

}  // namespace lawvere
