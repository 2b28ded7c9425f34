#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "grassclique/gf.hpp"

namespace grassclique {

/// Dense row-major matrix over GF(q). Entries are raw element codes.
class MatFq {
public:
    MatFq(FieldPtr field, int rows, int cols);
    MatFq(FieldPtr field, int rows, int cols, std::vector<std::uint8_t> entries);

    /// Convenience builder from integer rows; validates shape and range.
    static MatFq from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

    std::uint8_t at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::uint8_t& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::span<const std::uint8_t> row(int r) const {
        return {entries_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
    }
    std::span<const std::uint8_t> data() const { return entries_; }

    bool is_zero() const;
    bool operator==(const MatFq& other) const;

private:
    FieldPtr field_;
    int rows_, cols_;
    std::vector<std::uint8_t> entries_;
};

struct RrefResult {
    MatFq mat;
    int rank;
    std::vector<int> pivots;  // strictly increasing pivot column indices
};

/// Unique reduced row echelon form: pivot entries 1, zeros above and below
/// pivots, pivot columns strictly increasing.
RrefResult rref(const MatFq& m);

/// Rank only (no canonical matrix kept).
int rank(const MatFq& m);

MatFq mat_mul(const MatFq& a, const MatFq& b);

/// Column j of the result is column sigma[j] of the input.
MatFq permute_columns(const MatFq& m, std::span<const int> sigma);

MatFq stack_rows(const MatFq& top, const MatFq& bottom);
MatFq stack_row(const MatFq& top, std::span<const std::uint8_t> row);

/// Column proportionality: u ~ v iff u = lambda * v for some lambda != 0,
/// decided by the first nonzero coordinate ratio. A zero column is not
/// proportional to anything here; zero columns are counted separately by the
/// column profile.
bool columns_proportional(const MatFq& m, int a, int b);
bool column_is_zero(const MatFq& m, int c);

/// A linear code: a k-dimensional subspace of F_q^n held in canonical RREF
/// form. Two Subspace values are equal iff their bases are entry-identical.
class Subspace {
public:
    /// The code generated by the rows of m. Throws std::invalid_argument on a
    /// zero matrix (zero-dimensional codes are unsupported).
    static Subspace rowspace(const MatFq& m);

    /// Trusted fast path for matrices already in RREF with no zero rows
    /// (enumeration produces these by construction).
    static Subspace from_rref(MatFq basis, std::vector<int> pivots);

    int ambient_dim() const { return basis_.cols(); }
    int dim() const { return basis_.rows(); }
    const MatFq& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const Field& field() const { return basis_.field(); }
    const FieldPtr& field_ptr() const { return basis_.field_ptr(); }

    bool operator==(const Subspace& other) const;
    bool operator<(const Subspace& other) const;  // ambient, dim, then entries

private:
    Subspace(MatFq basis, std::vector<int> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    MatFq basis_;
    std::vector<int> pivots_;
};

/// Free-function alias matching the operation vocabulary.
inline Subspace rowspace(const MatFq& m) { return Subspace::rowspace(m); }

/// dim(a) + dim(b) - rank([a; b]).
int intersect_dim(const Subspace& a, const Subspace& b);

/// True iff every basis row of inner lies in outer.
bool contains(const Subspace& outer, const Subspace& inner);

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const;
};

}  // namespace grassclique
