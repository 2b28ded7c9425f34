#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grassclique/matfq.hpp"

namespace grassclique {

struct GrassmannParams {
    FieldPtr field;
    int n;  // ambient dimension
    int k;  // subspace dimension

    /// Throws unless 1 < k < n-1 (the standing assumption for graph work).
    void require_graph_range() const;
};

/// Number of k-subspaces of F_q^n, exact. k < 0 or k > n gives 0; negative n
/// throws. Throws std::overflow_error if the value exceeds 64 bits.
std::uint64_t gaussian_binomial(int n, int k, int q);

/// [m]_q = (q^m - 1)/(q - 1), the number of projective points of F_q^m.
std::uint64_t q_bracket(int m, int q);

/// Streams every k-subspace of F_q^n exactly once, in a deterministic order:
/// pivot-column patterns in lexicographic order, then free entries counted
/// base q (row-major free cells, last cell fastest). Single-consumer.
class GrassmannStream {
public:
    GrassmannStream(FieldPtr field, int n, int k);

    std::optional<Subspace> next();
    std::uint64_t yielded() const { return yielded_; }

private:
    bool advance_values();
    bool advance_pivots();
    void rebuild_free_cells();
    Subspace current() const;

    FieldPtr field_;
    int n_, k_;
    bool done_ = false;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_cells_;  // (row, col), row-major
    std::vector<std::uint8_t> values_;
    std::uint64_t yielded_ = 0;
};

/// Convenience: materialize the whole Grassmannian (desk scale only).
std::vector<Subspace> all_subspaces(const FieldPtr& field, int n, int k);

/// One representative per 1-subspace of F_q^m: nonzero vectors whose first
/// nonzero coordinate is 1, in lexicographic order. (q^m - 1)/(q - 1) vectors.
std::vector<std::vector<std::uint8_t>> projective_reps(const Field& field, int m);

/// All (dim s + 1)-dimensional superspaces of s, one per extension direction;
/// |result| = [n - dim s]_q. Throws if s is the full space.
std::vector<Subspace> star_superspaces(const Subspace& s);

/// All k-dimensional subspaces of u where dim u = k + 1 (the hyperplanes of
/// u); |result| = [k+1]_q. Throws unless dim u = k + 1.
std::vector<Subspace> top_subspaces(const Subspace& u, int k);

/// Grassmann graph adjacency: dim(a) = dim(b) = k and dim(a ∩ b) = k - 1.
bool adjacent(const Subspace& a, const Subspace& b);

}  // namespace grassclique
