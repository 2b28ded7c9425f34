#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "grassclique/codeprof.hpp"
#include "grassclique/grassmann.hpp"

namespace grassclique {

enum class StarKind { Empty, NotMaximal, Star };

std::string to_string(StarKind kind);

/// Verdict of the classification tables for [S>^Pi, plus the star-equals-top
/// refinement: equals_top holds exactly when the star is maximal and the span
/// of the extension vectors is a plane, in which case the unique witness top
/// is spanned by S and two extension vectors.
struct Classification {
    StarKind kind = StarKind::Empty;
    bool equals_top = false;
    std::optional<Subspace> top_witness;
};

struct OracleResult {
    bool maximal = false;
    std::optional<Subspace> witness;  // projective extender when not maximal
};

/// Everything known about one star [S>^Pi.
struct StarReport {
    Subspace s;
    ColumnProfile profile;
    std::uint64_t predicted_size = 0;
    std::vector<std::vector<std::uint8_t>> extensions;  // normalized w vectors
    std::vector<Subspace> members;                      // aligned with extensions
    int w_dim = 0;
    Classification theorem_class;
    std::optional<bool> oracle_maximal;  // empty star: no verdict
    std::optional<Subspace> oracle_witness;

    bool formula_ok() const { return predicted_size == members.size(); }
    bool verdict_ok() const;
    bool agree() const { return formula_ok() && verdict_ok(); }
};

/// The normalized extension vectors of S: one vector w per k-dimensional
/// projective code containing S, with zeros at the pivot columns of S and the
/// first nonzero free coordinate scaled to 1, in lexicographic order of the
/// free coordinates. Their span is <W>.
std::vector<std::vector<std::uint8_t>> star_extension_vectors(const Subspace& s);

/// All k-dimensional projective codes containing S (dim S = k-1), canonical
/// and deterministically ordered; pairs with star_extension_vectors.
std::vector<Subspace> star_pi(const Subspace& s);

/// All k-dimensional projective codes inside u (dim u = k+1).
std::vector<Subspace> top_pi(const Subspace& u);

/// dim<W>; 0 exactly when the star is empty.
int w_dim(const Subspace& s);

/// Predicted number of k-dimensional projective codes containing S, from the
/// column profile alone:
///   c(S) >= 2 or some class larger than q      -> 0
///   S projective                               -> [n-k+1]_q
///   S non-degenerate, not projective           -> prod_L (q-1)...(q-l+1) * q^(l(S)-k+1) / (q-1)
///   c(S) = 1, punctured code projective        -> q^(n-k)
///   c(S) = 1, punctured code not projective    -> prod_L (q-1)...(q-l+1) * q^(l(S')-k+1)
std::uint64_t predicted_star_size(const Subspace& s);

/// The classification tables for stars of the projective-code graph.
Classification classify_star(const Subspace& s);

/// Brute-force maximality check: scans every k-dimensional projective code in
/// enumeration order and reports the first non-member adjacent to all members,
/// if any. Throws std::invalid_argument unless members is a nonempty clique of
/// projective codes of equal dimension.
OracleResult is_maximal_clique_oracle(std::span<const Subspace> members);

/// Same, scanning a caller-supplied universe (must be the projective codes in
/// enumeration order for reproducible witnesses).
OracleResult is_maximal_clique_oracle(std::span<const Subspace> members,
                                      std::span<const Subspace> universe);

/// Full report for one S, oracle included.
StarReport analyze_star(const Subspace& s);
StarReport analyze_star(const Subspace& s, std::span<const Subspace> universe);

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumerationGuard {
    std::uint64_t limit = 10'000'000;
    bool force = false;

    void check(int n, int k, int q) const;
};

struct CensusRow {
    Subspace s;
    int c = 0;
    std::vector<int> class_sizes;  // first-occurrence order
    int big_l = 0;
    std::uint64_t predicted = 0;
    std::uint64_t actual = 0;
    int w_dim = 0;
    StarKind kind = StarKind::Empty;
    bool equals_top = false;
    std::optional<bool> oracle_maximal;
    bool agree = false;
};

struct CensusSummary {
    std::uint64_t total = 0;
    std::uint64_t empty = 0;
    std::uint64_t not_maximal = 0;
    std::uint64_t star = 0;
    std::uint64_t mismatches = 0;
    double wall_seconds = 0.0;  // reported on stderr, never serialized
};

struct CensusResult {
    int q = 0, n = 0, k = 0;
    std::vector<CensusRow> rows;  // enumeration order of G_{k-1}
    CensusSummary summary;
};

struct CensusOptions {
    int jobs = 1;  // <= 0 picks hardware concurrency
    EnumerationGuard guard;
};

/// One row per S in G_{k-1}(V), theorem tables versus brute-force oracle.
/// Output is independent of the job count.
CensusResult census(const GrassmannParams& params, const CensusOptions& options = {});

struct GraphStats {
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint64_t components = 0;

    bool operator==(const GraphStats&) const = default;
};

/// Vertex/edge/component counts of the projective-code graph.
GraphStats graph_stats(const GrassmannParams& params, const EnumerationGuard& guard = {});

/// Connected components via breadth-first traversal; 0 for an empty graph.
std::uint64_t component_count(const GrassmannParams& params,
                              const EnumerationGuard& guard = {});

}  // namespace grassclique
