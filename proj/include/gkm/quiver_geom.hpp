#pragma once

#include "gkm/cartan.hpp"
#include "gkm/linalg.hpp"

namespace gkm {

/// A framed representation point (x, t, s) of a doubled quiver over the
/// exact rationals: x_h for every arrow h (the listed pair and its
/// reversal), t_i : V_i -> W_i and s_i : W_i -> V_i.
struct RepPoint {
    QuiverPresentation quiver;
    std::vector<size_t> dim_v;       // per vertex
    std::vector<size_t> dim_w;       // per vertex
    std::vector<QMat> x_pair;        // per pair: matrix of h, dim V_to x dim V_from
    std::vector<QMat> x_bar;         // per pair: matrix of h-bar, dim V_from x dim V_to
    std::vector<QMat> t;             // per vertex: dim W_i x dim V_i
    std::vector<QMat> s;             // per vertex: dim V_i x dim W_i

    /// Throws ShapeMismatch unless every matrix agrees with dim_v/dim_w.
    void validate() const;
};

/// mu_i(x,t,s) = sum over arrows h out of i of eps(h) x_{h-bar} x_h plus
/// s_i t_i, with eps = +1 on listed pairs and -1 on their reversals.
std::vector<QMat> moment_map(const RepPoint& p);

/// omega((x,t,s),(x',t',s')) = sum_h eps(h) Tr(x_{h-bar} x'_h)
///                           + sum_i Tr(s_i t'_i - s'_i t_i).
Rat symplectic_form(const RepPoint& p, const RepPoint& q);

/// True iff the characteristic polynomial is squarefree (distinct
/// eigenvalues).
bool check_regular_semisimple(const QMat& m);

struct FlagResult {
    bool exists = false;
    /// Chosen lines bottom-up: (vertex, spanning vector in the original
    /// coordinates of V_vertex).
    std::vector<std::pair<size_t, std::vector<Rat>>> flag;
};

/// Decides whether an I-graded complete flag exists that the reversed loop
/// maps preserve and every other arrow strictly lowers. Backtracking: pick a
/// graded line inside the common kernel of the strictly-lowering maps that
/// is a joint eigenvector of the reversed loop maps, quotient and recurse.
/// Requires the reversed loop maps to split over Q; otherwise throws
/// IrrationalSpectrum.
FlagResult check_flag_condition(const RepPoint& p);

struct MembershipReport {
    bool mu_zero = false;
    bool flag = false;
    bool regular_semisimple = false;
    bool member() const { return mu_zero && flag && regular_semisimple; }
};

/// The three membership conditions for the loop-quiver variety: vanishing
/// moment map, graded flag, reversed loops regular semisimple.
MembershipReport check_membership_N(const RepPoint& p);

struct StabilityResult {
    bool stable = false;
    /// When unstable: per-vertex basis of the largest x-stable graded
    /// subspace killed by t.
    std::vector<QMat> witness;
};

/// Greatest-fixpoint iteration starting from ker t, shrinking each vertex
/// component until it is x-stable; the point is stable iff the limit is 0.
/// The maps s play no role.
StabilityResult check_stability(const RepPoint& p);

/// codim in V_i of the closure of sum of images of non-loop arrows into i
/// under the algebra generated by the loop maps at i (both orientations).
size_t eps_omega(const RepPoint& p, size_t i);

/// Weight inequality gating the string correspondences: for real i require
/// <h_i, lambda - alpha> >= l; for imaginary i with l > 0 require
/// <h_i, lambda - alpha> > 0.
bool check_eps_condition(const CartanDatum& datum, const std::vector<long long>& lambda,
                         const std::vector<long long>& alpha, size_t i, long long l);

} // namespace gkm
