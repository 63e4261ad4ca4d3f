#pragma once

// Max-plus discrete-event synchronization over a network sheaf.

#include "lawvere/sheaf.hpp"

namespace lawvere {

using Matrix = std::vector<std::vector<Value>>;

struct DesSystem {
    std::size_t m = 0;            // events
    Graph graph;
    std::vector<Matrix> delays;   // A_v, one m×m matrix per vertex
    Weighting weights;

    void validate() const;
};

/// Fx(j) = max_i {x(i) + A(i,j)}.
Object maxplus_apply(const Matrix& a, const Object& x);
/// Gy(i) = min_j (y(j) - A(i,j))_+, clipping inside the minimum.
Object minplus_transpose_apply(const Matrix& a, const Object& y);

/// Stalks are the reversed presheaf power of the reals in dimension m;
/// restriction at v is maxplus_apply(A_v), corestriction its transpose.
/// Adjunction levels are measured on the region y ⪰ F(0) of each edge
/// stalk, where the transposed map is an exact adjoint.
NetworkSheaf des_sheaf(const DesSystem& sys);

/// The displayed closed form, evaluated as written:
/// (Lx)_v(i') = min_w W(v,w) + min_j (A_v(i',j) - max_i {A_w(i,j) + x_w(i)})_+.
Cochain des_laplacian_closed_form(const DesSystem& sys, const Cochain& x);

/// Compares the closed form with the generic Laplacian on `x`; a mismatch
/// is recorded with the first differing vertex and event.
LawReport compare_des_laplacian(const DesSystem& sys, const NetworkSheaf& f, const Cochain& x);

struct DesSlack {
    std::size_t v = 0;
    std::size_t w = 0;
    Value slack = 0;  // W - lhs, numerically; negative means violated
};

/// The two synchronization inequalities for every edge, evaluated directly:
/// min_j (F_w x_w - F_v x_v)_+ <= W(v,w) and the mirror with W(w,v).
/// Returns the smallest slack over all edges and both inequalities.
DesSlack des_gs_slack(const DesSystem& sys, const Cochain& x);

}  // namespace lawvere
