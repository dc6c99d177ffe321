#include "gkm/cartan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gkm {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotSymmetric: return "NotSymmetric";
        case Errc::OddOrPositiveDiagonal: return "OddOrPositiveDiagonal";
        case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
        case Errc::UnknownIndex: return "UnknownIndex";
        case Errc::UnknownFormat: return "UnknownFormat";
        case Errc::NonDominantWeight: return "NonDominantWeight";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::IrrationalSpectrum: return "IrrationalSpectrum";
        case Errc::InternalInvariant: return "InternalInvariant";
        case Errc::ParseError: return "ParseError";
    }
    return "Error";
}

CartanDatum CartanDatum::validate(std::vector<std::vector<long long>> matrix,
                                  std::vector<std::string> names) {
    const size_t n = matrix.size();
    for (const auto& row : matrix)
        if (row.size() != n)
            throw Error(Errc::NotSymmetric, "matrix is not square");

    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (matrix[i][j] != matrix[j][i])
                throw Error(Errc::NotSymmetric,
                            "a[" + std::to_string(i) + "][" + std::to_string(j) + "] != a[" +
                                std::to_string(j) + "][" + std::to_string(i) + "]");

    for (size_t i = 0; i < n; ++i) {
        const long long d = matrix[i][i];
        if (d > 2 || d % 2 != 0)
            throw Error(Errc::OddOrPositiveDiagonal,
                        "a[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                            std::to_string(d) + " is not in {2, 0, -2, ...}");
        for (size_t j = 0; j < n; ++j)
            if (i != j && matrix[i][j] > 0)
                throw Error(Errc::PositiveOffDiagonal,
                            "a[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                                std::to_string(matrix[i][j]) + " > 0");
    }

    if (names.empty())
        for (size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    if (names.size() != n)
        throw Error(Errc::ShapeMismatch, "index name count does not match matrix size");

    CartanDatum d;
    d.a_ = std::move(matrix);
    d.names_ = std::move(names);
    for (size_t i = 0; i < n; ++i)
        (d.a_[i][i] == 2 ? d.real_ : d.imaginary_).push_back(i);
    return d;
}

long long CartanDatum::a(size_t i, size_t j) const {
    require_index(i);
    require_index(j);
    return a_[i][j];
}

bool CartanDatum::is_real(size_t i) const {
    require_index(i);
    return a_[i][i] == 2;
}

void CartanDatum::require_index(size_t i) const {
    if (i >= a_.size())
        throw Error(Errc::UnknownIndex, "index " + std::to_string(i) + " out of range");
}

size_t CartanDatum::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error(Errc::UnknownIndex, "no index named '" + name + "'");
    return static_cast<size_t>(it - names_.begin());
}

Weight::Weight(std::vector<long long> base, std::vector<long long> alpha)
    : base_(std::move(base)), alpha_(std::move(alpha)) {
    if (base_.size() != alpha_.size())
        throw Error(Errc::ShapeMismatch, "weight base and root part have different ranks");
}

Weight Weight::zero(size_t rank) {
    return Weight(std::vector<long long>(rank, 0), std::vector<long long>(rank, 0));
}

long long Weight::height() const {
    long long h = 0;
    for (long long k : alpha_) h += k;
    return h;
}

Weight Weight::plus(const Weight& other) const {
    if (rank() != other.rank())
        throw Error(Errc::ShapeMismatch, "weight ranks differ");
    Weight w = *this;
    for (size_t j = 0; j < rank(); ++j) {
        w.base_[j] += other.base_[j];
        w.alpha_[j] += other.alpha_[j];
    }
    return w;
}

Weight Weight::minus_alpha(size_t i) const {
    Weight w = *this;
    w.alpha_.at(i) += 1;
    return w;
}

Weight Weight::plus_alpha(size_t i) const {
    Weight w = *this;
    w.alpha_.at(i) -= 1;
    return w;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t j = 0; j < base_.size(); ++j) os << (j ? "," : "") << base_[j];
    os << '|';
    for (size_t j = 0; j < alpha_.size(); ++j) os << (j ? "," : "") << alpha_[j];
    os << ']';
    return os.str();
}

long long pairing(const CartanDatum& datum, const Weight& w, size_t i) {
    datum.require_index(i);
    if (w.rank() != datum.rank())
        throw Error(Errc::ShapeMismatch, "weight rank does not match datum rank");
    long long p = w.base()[i];
    for (size_t j = 0; j < datum.rank(); ++j) p -= datum.matrix()[i][j] * w.alpha()[j];
    return p;
}

bool dominant_base(const Weight& w) {
    return std::all_of(w.base().begin(), w.base().end(), [](long long b) { return b >= 0; });
}

QuiverPresentation::QuiverPresentation(std::vector<std::string> vertices,
                                       std::vector<ArrowPair> pairs)
    : vertices_(std::move(vertices)), pairs_(std::move(pairs)) {
    std::set<std::string> seen_v(vertices_.begin(), vertices_.end());
    if (seen_v.size() != vertices_.size())
        throw Error(Errc::ParseError, "duplicate vertex name");
    std::set<std::string> seen_a;
    for (const auto& p : pairs_) {
        if (p.from >= vertices_.size() || p.to >= vertices_.size())
            throw Error(Errc::UnknownIndex, "arrow '" + p.id + "' has an endpoint outside the vertex set");
        if (!seen_a.insert(p.id).second)
            throw Error(Errc::ParseError, "duplicate arrow id '" + p.id + "'");
    }
}

size_t QuiverPresentation::vertex_of(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end())
        throw Error(Errc::UnknownIndex, "no vertex named '" + name + "'");
    return static_cast<size_t>(it - vertices_.begin());
}

CartanDatum cartan_from_quiver(const QuiverPresentation& q) {
    const size_t n = q.num_vertices();
    // c[i][j] = number of arrows in H from i to j; each pair contributes
    // itself and its reversal.
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
    for (const auto& p : q.pairs()) {
        c[p.from][p.to] += 1;
        c[p.to][p.from] += 1;
    }
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            a[i][j] = (i == j) ? 2 - c[i][i] : -c[i][j];
    return CartanDatum::validate(std::move(a), q.vertices());
}

} // namespace gkm
