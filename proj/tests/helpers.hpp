#pragma once

#include <random>

#include "grassclique/grassmann.hpp"

namespace grassclique::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline int rand_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline MatFq random_matrix(const FieldPtr& field, int rows, int cols) {
    MatFq m(field, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<std::uint8_t>(rand_int(0, field->q() - 1));
    return m;
}

inline MatFq random_nonzero_matrix(const FieldPtr& field, int rows, int cols) {
    for (;;) {
        MatFq m = random_matrix(field, rows, cols);
        if (!m.is_zero()) return m;
    }
}

inline MatFq random_invertible(const FieldPtr& field, int size) {
    for (;;) {
        MatFq m = random_matrix(field, size, size);
        if (rank(m) == size) return m;
    }
}

inline Subspace random_subspace(const FieldPtr& field, int n, int k) {
    for (;;) {
        MatFq m = random_matrix(field, k, n);
        if (rank(m) == k) return Subspace::rowspace(m);
    }
}

inline std::vector<int> random_permutation(int size) {
    std::vector<int> sigma(size);
    for (int i = 0; i < size; ++i) sigma[i] = i;
    std::shuffle(sigma.begin(), sigma.end(), rng());
    return sigma;
}

}  // namespace grassclique::testing
