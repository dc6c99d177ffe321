#include "gkm/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace gkm {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw Error(Errc::ParseError, "empty rational literal");
    try {
        mpq_class q(s, 10);
        if (q.get_den() == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(Errc::ParseError, "bad rational literal '" + s + "'");
    }
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

QMat QMat::identity(size_t n) {
    QMat m(n, n);
    for (size_t k = 0; k < n; ++k) m.at(k, k) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw Error(Errc::ShapeMismatch, "ragged matrix rows");
        for (size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

QMat QMat::operator*(const QMat& other) const {
    if (cols_ != other.rows_)
        throw Error(Errc::ShapeMismatch,
                    "cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        " by " + std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
    QMat out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& v = at(r, k);
            if (v == 0) continue;
            for (size_t c = 0; c < other.cols_; ++c) out.at(r, c) += v * other.at(k, c);
        }
    return out;
}

QMat QMat::operator+(const QMat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(Errc::ShapeMismatch, "matrix addition shape mismatch");
    QMat out = *this;
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] += other.a_[k];
    return out;
}

QMat QMat::operator-(const QMat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(Errc::ShapeMismatch, "matrix subtraction shape mismatch");
    QMat out = *this;
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] -= other.a_[k];
    return out;
}

QMat QMat::scaled(const Rat& k) const {
    QMat out = *this;
    for (auto& v : out.a_) v *= k;
    return out;
}

QMat QMat::transpose() const {
    QMat out(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

Rat QMat::trace() const {
    if (rows_ != cols_) throw Error(Errc::ShapeMismatch, "trace of a non-square matrix");
    Rat t = 0;
    for (size_t k = 0; k < rows_; ++k) t += at(k, k);
    return t;
}

bool QMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& v) { return v == 0; });
}

QMat QMat::hcat(const QMat& other) const {
    if (rows_ != other.rows_ && cols_ != 0 && other.cols_ != 0)
        throw Error(Errc::ShapeMismatch, "hcat row mismatch");
    if (cols_ == 0) return other;
    if (other.cols_ == 0) return *this;
    QMat out(rows_, cols_ + other.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
        for (size_t c = 0; c < other.cols_; ++c) out.at(r, cols_ + c) = other.at(r, c);
    }
    return out;
}

QMat QMat::vcat(const QMat& other) const {
    if (cols_ != other.cols_ && rows_ != 0 && other.rows_ != 0)
        throw Error(Errc::ShapeMismatch, "vcat column mismatch");
    if (rows_ == 0) return other;
    if (other.rows_ == 0) return *this;
    QMat out(rows_ + other.rows_, cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (size_t r = 0; r < other.rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) out.at(rows_ + r, c) = other.at(r, c);
    return out;
}

QMat QMat::column(size_t c) const {
    QMat out(rows_, 1);
    for (size_t r = 0; r < rows_; ++r) out.at(r, 0) = at(r, c);
    return out;
}

namespace {

/// Row echelon form in place; returns pivot column per row.
std::vector<size_t> echelon(QMat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(piv, c));
        Rat lead = m.at(row, col);
        for (size_t c = col; c < m.cols(); ++c) m.at(row, c) /= lead;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rat factor = m.at(r, col);
            for (size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t QMat::rank() const {
    QMat m = *this;
    return echelon(m).size();
}

QMat QMat::column_space_basis() const {
    QMat m = *this;
    auto pivots = echelon(m);
    QMat out(rows_, pivots.size());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t r = 0; r < rows_; ++r) out.at(r, k) = at(r, pivots[k]);
    return out;
}

QMat QMat::kernel_basis() const {
    QMat m = *this;
    auto pivots = echelon(m);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    QMat out(cols_, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        out.at(fc, k) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) out.at(pivots[r], k) = -m.at(r, fc);
    }
    return out;
}

QMat QMat::inverse() const {
    if (rows_ != cols_) throw Error(Errc::ShapeMismatch, "inverse of a non-square matrix");
    QMat aug = hcat(identity(rows_));
    auto pivots = echelon(aug);
    if (pivots.size() != rows_)
        throw Error(Errc::ShapeMismatch, "matrix is singular");
    QMat out(rows_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < rows_; ++c) out.at(r, c) = aug.at(r, cols_ + c);
    return out;
}

std::vector<Rat> QMat::charpoly() const {
    if (rows_ != cols_) throw Error(Errc::ShapeMismatch, "charpoly of a non-square matrix");
    const size_t n = rows_;
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    QMat m = identity(n);
    for (size_t k = 1; k <= n; ++k) {
        m = *this * m;
        Rat ck = -m.trace() / Rat(static_cast<long>(k));
        c[n - k] = ck;
        for (size_t d = 0; d < n; ++d) m.at(d, d) += ck;
    }
    return c;
}

std::string QMat::str() const {
    std::ostringstream os;
    os << '[';
    for (size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << at(r, c);
    }
    os << ']';
    return os.str();
}

bool subspace_contains(const QMat& a, const QMat& m) {
    return a.hcat(m).rank() == a.rank();
}

QMat subspace_intersection(const QMat& a, const QMat& b) {
    if (a.cols() == 0 || b.cols() == 0) return QMat(a.rows(), 0);
    QMat joint = a.hcat(b.scaled(-1));
    QMat null = joint.kernel_basis();
    // intersection vectors are A * (top block of the kernel)
    QMat top(a.cols(), null.cols());
    for (size_t r = 0; r < a.cols(); ++r)
        for (size_t c = 0; c < null.cols(); ++c) top.at(r, c) = null.at(r, c);
    return (a * top).column_space_basis();
}

QMat left_annihilator(const QMat& b) {
    return b.transpose().kernel_basis().transpose();
}

std::vector<Rat> poly_derivative(const std::vector<Rat>& p) {
    std::vector<Rat> d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rat(static_cast<long>(k)));
    return d;
}

namespace {

void poly_trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat factor = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
        poly_trim(a);
    }
    return a;
}

} // namespace

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& v : a) v /= lead;
    }
    return a;
}

bool poly_squarefree(const std::vector<Rat>& p) {
    return poly_gcd(p, poly_derivative(p)).size() <= 1;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
    Rat acc = 0;
    for (size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

namespace {

std::vector<long long> divisors(long long v) {
    v = v < 0 ? -v : v;
    std::vector<long long> out;
    for (long long d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d != v / d) out.push_back(v / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

RationalRoots rational_roots(std::vector<Rat> p) {
    poly_trim(p);
    RationalRoots out;
    if (p.size() <= 1) return out;

    // strip roots at zero
    size_t zero_mult = 0;
    while (p.size() > 1 && p.front() == 0) {
        p.erase(p.begin());
        zero_mult++;
    }
    if (zero_mult) out.roots.emplace_back(Rat(0), zero_mult);

    while (p.size() > 1) {
        // integer polynomial with the same roots
        mpz_class den(1);
        for (const auto& c : p) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
        mpz_class a0 = Rat(p.front() * den).get_num();
        mpz_class an = Rat(p.back() * den).get_num();
        if (!a0.fits_slong_p() || !an.fits_slong_p())
            throw Error(Errc::InternalInvariant,
                        "characteristic polynomial coefficients exceed the search range");
        bool found = false;
        Rat root;
        for (long long r : divisors(a0.get_si())) {
            for (long long s : divisors(an.get_si())) {
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    Rat cand = Rat(static_cast<long>(sign * r)) / Rat(static_cast<long>(s));
                    if (poly_eval(p, cand) == 0) {
                        root = cand;
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
        // deflate by (x - root), counting multiplicity across iterations
        std::vector<Rat> q(p.size() - 1);
        Rat carry = 0;
        for (size_t k = p.size(); k-- > 1;) {
            carry = p[k] + carry * root;
            q[k - 1] = carry;
        }
        p = std::move(q);
        bool merged = false;
        for (auto& [r0, mult] : out.roots)
            if (r0 == root) {
                mult++;
                merged = true;
            }
        if (!merged) out.roots.emplace_back(root, 1);
    }
    out.remaining_degree = p.size() <= 1 ? 0 : p.size() - 1;
    return out;
}

} // namespace gkm
