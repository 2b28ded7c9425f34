#include "grassclique/matfq.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grassclique {

MatFq::MatFq(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, 0) {
    if (!field_) throw std::invalid_argument("matrix requires a field");
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix dimensions must be positive");
}

MatFq::MatFq(FieldPtr field, int rows, int cols, std::vector<std::uint8_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (!field_) throw std::invalid_argument("matrix requires a field");
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match rows*cols");
    for (std::uint8_t v : entries_)
        if (v >= field_->q())
            throw std::invalid_argument("entry " + std::to_string(int(v)) +
                                        " out of range for GF(" + std::to_string(field_->q()) + ")");
}

MatFq MatFq::from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw std::invalid_argument("matrix must have at least one row and column");
    const int nc = static_cast<int>(rows.front().size());
    std::vector<std::uint8_t> entries;
    entries.reserve(rows.size() * nc);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != nc)
            throw std::invalid_argument("ragged rows in matrix literal");
        for (int v : r) {
            if (v < 0 || v >= field->q())
                throw std::invalid_argument("entry " + std::to_string(v) +
                                            " out of range for GF(" + std::to_string(field->q()) + ")");
            entries.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return MatFq(std::move(field), static_cast<int>(rows.size()), nc, std::move(entries));
}

bool MatFq::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::uint8_t v) { return v == 0; });
}

bool MatFq::operator==(const MatFq& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           field_->same_as(*other.field_) && entries_ == other.entries_;
}

RrefResult rref(const MatFq& m) {
    MatFq a = m;
    const Field& F = a.field();
    const int nr = a.rows(), nc = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int pr = -1;
        for (int i = r; i < nr; ++i)
            if (a.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < nc; ++j) std::swap(a.at(r, j), a.at(pr, j));
        const std::uint8_t iv = F.inv(a.at(r, c));
        for (int j = c; j < nc; ++j) a.at(r, j) = F.mul(a.at(r, j), iv);
        for (int i = 0; i < nr; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const std::uint8_t f = a.at(i, c);
            for (int j = c; j < nc; ++j)
                a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

int rank(const MatFq& m) { return rref(m).rank; }

MatFq mat_mul(const MatFq& a, const MatFq& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    const Field& F = a.field();
    MatFq out(a.field_ptr(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const std::uint8_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(aik, b.at(k, j)));
        }
    return out;
}

MatFq permute_columns(const MatFq& m, std::span<const int> sigma) {
    if (static_cast<int>(sigma.size()) != m.cols())
        throw std::invalid_argument("permutation length must equal column count");
    std::vector<bool> seen(m.cols(), false);
    for (int v : sigma) {
        if (v < 0 || v >= m.cols() || seen[v])
            throw std::invalid_argument("not a permutation of the column indices");
        seen[v] = true;
    }
    MatFq out(m.field_ptr(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.at(i, j) = m.at(i, sigma[j]);
    return out;
}

MatFq stack_rows(const MatFq& top, const MatFq& bottom) {
    require_same_field(top.field(), bottom.field());
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("stacked matrices must share the column count");
    std::vector<std::uint8_t> entries(top.data().begin(), top.data().end());
    entries.insert(entries.end(), bottom.data().begin(), bottom.data().end());
    return MatFq(top.field_ptr(), top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

MatFq stack_row(const MatFq& top, std::span<const std::uint8_t> row) {
    if (static_cast<int>(row.size()) != top.cols())
        throw std::invalid_argument("stacked row must share the column count");
    std::vector<std::uint8_t> entries(top.data().begin(), top.data().end());
    entries.insert(entries.end(), row.begin(), row.end());
    return MatFq(top.field_ptr(), top.rows() + 1, top.cols(), std::move(entries));
}

bool column_is_zero(const MatFq& m, int c) {
    for (int i = 0; i < m.rows(); ++i)
        if (m.at(i, c) != 0) return false;
    return true;
}

bool columns_proportional(const MatFq& m, int a, int b) {
    const Field& F = m.field();
    int lead = -1;
    for (int i = 0; i < m.rows(); ++i)
        if (m.at(i, a) != 0 || m.at(i, b) != 0) { lead = i; break; }
    if (lead < 0) return false;  // both zero: not handled here
    if (m.at(lead, a) == 0 || m.at(lead, b) == 0) return false;
    const std::uint8_t lambda = F.div(m.at(lead, a), m.at(lead, b));
    for (int i = lead + 1; i < m.rows(); ++i)
        if (m.at(i, a) != F.mul(lambda, m.at(i, b))) return false;
    return true;
}

Subspace Subspace::rowspace(const MatFq& m) {
    if (m.is_zero())
        throw std::invalid_argument("zero matrix generates a zero-dimensional code");
    RrefResult r = rref(m);
    if (r.rank == m.rows()) return Subspace(std::move(r.mat), std::move(r.pivots));
    std::vector<std::uint8_t> entries(r.mat.data().begin(),
                                      r.mat.data().begin() +
                                          static_cast<std::size_t>(r.rank) * m.cols());
    return Subspace(MatFq(m.field_ptr(), r.rank, m.cols(), std::move(entries)),
                    std::move(r.pivots));
}

Subspace Subspace::from_rref(MatFq basis, std::vector<int> pivots) {
    return Subspace(std::move(basis), std::move(pivots));
}

bool Subspace::operator==(const Subspace& other) const { return basis_ == other.basis_; }

bool Subspace::operator<(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim()) return ambient_dim() < other.ambient_dim();
    if (dim() != other.dim()) return dim() < other.dim();
    const auto a = basis_.data(), b = other.basis_.data();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int intersect_dim(const Subspace& a, const Subspace& b) {
    require_same_field(a.field(), b.field());
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspaces live in different ambient spaces");
    return a.dim() + b.dim() - rank(stack_rows(a.basis(), b.basis()));
}

bool contains(const Subspace& outer, const Subspace& inner) {
    require_same_field(outer.field(), inner.field());
    if (outer.ambient_dim() != inner.ambient_dim())
        throw std::invalid_argument("subspaces live in different ambient spaces");
    return rank(stack_rows(outer.basis(), inner.basis())) == outer.dim();
}

std::size_t SubspaceHash::operator()(const Subspace& s) const {
    // FNV-1a over dims and entry bytes
    std::size_t h = 1469598103934665603ull;
    const auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::size_t>(s.dim()));
    mix(static_cast<std::size_t>(s.ambient_dim()));
    for (std::uint8_t b : s.basis().data()) mix(b);
    return h;
}

}  // namespace grassclique
