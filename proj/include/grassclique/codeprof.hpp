#pragma once

#include <vector>

#include "grassclique/matfq.hpp"

namespace grassclique {

/// One proportionality class of nonzero generator-matrix columns. The
/// representative is the class column scaled so its first nonzero coordinate
/// is 1; size is the number of columns in the class.
struct ColumnClass {
    std::vector<std::uint8_t> rep;
    int size;
};

/// Column-equivalence profile of a code: the zero-column count c(S), the
/// proportionality classes of the nonzero columns in first-occurrence order,
/// and the derived quantities l(S), L and max l(k_j). Zero columns are kept
/// out of the classes; every formula downstream reads off this convention.
struct ColumnProfile {
    int zero_count = 0;               // c(S)
    std::vector<ColumnClass> classes; // nonzero classes only

    int class_count() const { return static_cast<int>(classes.size()); }  // l(S)
    int big_l_count() const;                                              // |L|
    int max_class_size() const;
    std::vector<int> class_sizes() const;
    std::vector<ColumnClass> big_l() const;  // classes with size > 1
};

/// Profile of the canonical generator matrix of s. The zero/proportionality
/// structure of columns is the same for every generator matrix of s.
ColumnProfile column_profile(const Subspace& s);

/// No zero column in the generator matrix.
bool is_nondegenerate(const Subspace& s);

/// Columns nonzero and pairwise non-proportional (a property of the code).
bool is_projective(const Subspace& s);

/// The code of ambient dimension n-1 obtained by deleting the unique zero
/// column; dimension is preserved. Throws unless c(S) = 1.
Subspace puncture_zero(const Subspace& s);

}  // namespace grassclique
