#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gkm/error.hpp"

namespace gkm {

/// Symmetric even integral Cartan matrix of Borcherds type on a finite
/// ordered index set: a_ii in {2, 0, -2, -4, ...}, a_ij = a_ji <= 0 off the
/// diagonal. Indices with a_ii = 2 are real, the rest imaginary.
class CartanDatum {
public:
    /// Checks the defining conditions and builds the real/imaginary
    /// partition. Throws NotSymmetric, OddOrPositiveDiagonal or
    /// PositiveOffDiagonal on bad input.
    static CartanDatum validate(std::vector<std::vector<long long>> matrix,
                                std::vector<std::string> names = {});

    size_t rank() const { return a_.size(); }
    long long a(size_t i, size_t j) const;
    bool is_real(size_t i) const;
    bool is_imaginary(size_t i) const { return !is_real(i); }
    const std::vector<size_t>& real_indices() const { return real_; }
    const std::vector<size_t>& imaginary_indices() const { return imaginary_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<long long>>& matrix() const { return a_; }

    void require_index(size_t i) const;
    /// Position of a named index, or UnknownIndex.
    size_t index_of(const std::string& name) const;

    bool operator==(const CartanDatum& other) const { return a_ == other.a_; }

private:
    CartanDatum() = default;
    std::vector<std::vector<long long>> a_;
    std::vector<std::string> names_;
    std::vector<size_t> real_, imaginary_;
};

using DatumPtr = std::shared_ptr<const CartanDatum>;

/// A weight of the form (base) - sum_j alpha_j * (simple root j), where the
/// dominant base is stored by its pairing values <h_i, base>. All weights the
/// engine manipulates have this shape; simple roots are linearly independent,
/// so equality of base pairings plus equality of the root part decides
/// equality of weights.
class Weight {
public:
    Weight(std::vector<long long> base, std::vector<long long> alpha);
    static Weight zero(size_t rank);

    size_t rank() const { return base_.size(); }
    const std::vector<long long>& base() const { return base_; }
    const std::vector<long long>& alpha() const { return alpha_; }

    /// Total root-part height sum_j alpha_j.
    long long height() const;

    Weight plus(const Weight& other) const;
    Weight minus_alpha(size_t i) const;
    Weight plus_alpha(size_t i) const;

    bool operator==(const Weight& other) const {
        return base_ == other.base_ && alpha_ == other.alpha_;
    }
    bool operator<(const Weight& other) const {
        return base_ != other.base_ ? base_ < other.base_ : alpha_ < other.alpha_;
    }

    /// "[b1,b2|k1,k2]"
    std::string str() const;

private:
    std::vector<long long> base_;
    std::vector<long long> alpha_;
};

/// <h_i, w> = base_i - sum_j a_ij alpha_j. Throws UnknownIndex.
long long pairing(const CartanDatum& datum, const Weight& w, size_t i);

/// Checks that every base pairing is >= 0 (the root part is ignored).
bool dominant_base(const Weight& w);

/// One generating arrow of a doubled quiver; the reversed partner is
/// implicit. Distinct ids keep parallel arrows and their partners apart.
struct ArrowPair {
    std::string id;
    size_t from = 0;
    size_t to = 0;

    bool is_loop() const { return from == to; }
};

/// Finite quiver given by an orientation: the arrow set H is the disjoint
/// union of the listed pairs and their reversals, and the bar involution
/// swaps the two members of each pair (fixed-point-free by construction).
class QuiverPresentation {
public:
    QuiverPresentation(std::vector<std::string> vertices, std::vector<ArrowPair> pairs);

    size_t num_vertices() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<ArrowPair>& pairs() const { return pairs_; }
    size_t vertex_of(const std::string& name) const;

private:
    std::vector<std::string> vertices_;
    std::vector<ArrowPair> pairs_;
};

/// a_ii = 2 - (number of loops at i in H), a_ij = -(number of arrows in H
/// from i to j). Always yields a valid datum: loops pair under the
/// involution, so the loop count is even.
CartanDatum cartan_from_quiver(const QuiverPresentation& q);

} // namespace gkm
