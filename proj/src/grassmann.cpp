#include "grassclique/grassmann.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace grassclique {

void GrassmannParams::require_graph_range() const {
    if (!(1 < k && k < n - 1))
        throw std::invalid_argument("parameters require 1 < k < n-1, got k=" +
                                    std::to_string(k) + ", n=" + std::to_string(n));
}

std::uint64_t gaussian_binomial(int n, int k, int q) {
    if (n < 0) throw std::invalid_argument("negative ambient dimension");
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);  // symmetric; keeps partial products nondecreasing

    using u128 = unsigned __int128;
    constexpr std::uint64_t u64max = std::numeric_limits<std::uint64_t>::max();

    // q^m - 1 for the largest needed exponent must fit 64 bits
    u128 top = 1;
    for (int i = 0; i < n; ++i) {
        top *= static_cast<unsigned>(q);
        if (top - 1 > u64max)
            throw std::overflow_error("gaussian_binomial exceeds 64-bit range");
    }

    const auto pow_q = [q](int m) {
        u128 r = 1;
        for (int i = 0; i < m; ++i) r *= static_cast<unsigned>(q);
        return r;
    };

    u128 result = 1;
    for (int i = 0; i < k; ++i) {
        const u128 num = pow_q(n - i) - 1;
        const u128 den = pow_q(i + 1) - 1;
        result = result * num / den;  // each partial product is itself a q-binomial
        if (result > u64max)
            throw std::overflow_error("gaussian_binomial exceeds 64-bit range");
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t q_bracket(int m, int q) { return gaussian_binomial(m, 1, q); }

GrassmannStream::GrassmannStream(FieldPtr field, int n, int k)
    : field_(std::move(field)), n_(n), k_(k) {
    if (!field_) throw std::invalid_argument("enumeration requires a field");
    if (k <= 0 || k > n)
        throw std::invalid_argument("enumeration requires 0 < k <= n");
    pivots_.resize(k_);
    for (int i = 0; i < k_; ++i) pivots_[i] = i;
    rebuild_free_cells();
}

void GrassmannStream::rebuild_free_cells() {
    free_cells_.clear();
    std::vector<bool> is_pivot(n_, false);
    for (int p : pivots_) is_pivot[p] = true;
    for (int i = 0; i < k_; ++i)
        for (int j = pivots_[i] + 1; j < n_; ++j)
            if (!is_pivot[j]) free_cells_.emplace_back(i, j);
    values_.assign(free_cells_.size(), 0);
}

Subspace GrassmannStream::current() const {
    MatFq m(field_, k_, n_);
    for (int i = 0; i < k_; ++i) m.at(i, pivots_[i]) = 1;
    for (std::size_t t = 0; t < free_cells_.size(); ++t)
        m.at(free_cells_[t].first, free_cells_[t].second) = values_[t];
    return Subspace::from_rref(std::move(m), pivots_);
}

bool GrassmannStream::advance_values() {
    const int q = field_->q();
    for (int t = static_cast<int>(values_.size()) - 1; t >= 0; --t) {
        if (values_[t] + 1 < q) {
            ++values_[t];
            return true;
        }
        values_[t] = 0;
    }
    return false;
}

bool GrassmannStream::advance_pivots() {
    // next k-combination of {0..n-1} in lexicographic order
    for (int i = k_ - 1; i >= 0; --i) {
        if (pivots_[i] < n_ - k_ + i) {
            ++pivots_[i];
            for (int j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
            rebuild_free_cells();
            return true;
        }
    }
    return false;
}

std::optional<Subspace> GrassmannStream::next() {
    if (done_) return std::nullopt;
    Subspace out = current();
    ++yielded_;
    if (!advance_values() && !advance_pivots()) done_ = true;
    return out;
}

std::vector<Subspace> all_subspaces(const FieldPtr& field, int n, int k) {
    std::vector<Subspace> out;
    GrassmannStream stream(field, n, k);
    while (auto s = stream.next()) out.push_back(std::move(*s));
    return out;
}

std::vector<std::vector<std::uint8_t>> projective_reps(const Field& field, int m) {
    const int q = field.q();
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(static_cast<std::size_t>(q_bracket(m, q)));
    std::vector<std::uint8_t> v(m, 0);
    for (int lead = m - 1; lead >= 0; --lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        while (true) {
            out.push_back(v);
            int t = m - 1;
            for (; t > lead; --t) {
                if (v[t] + 1 < q) { ++v[t]; break; }
                v[t] = 0;
            }
            if (t == lead) break;
        }
    }
    return out;
}

std::vector<Subspace> star_superspaces(const Subspace& s) {
    const int n = s.ambient_dim(), d = s.dim();
    if (d >= n)
        throw std::invalid_argument("the full space has no proper superspaces");
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (int p : s.pivots()) is_pivot[p] = true;
        for (int j = 0; j < n; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
    }
    std::vector<Subspace> out;
    std::vector<std::uint8_t> w(n, 0);
    for (const auto& rep : projective_reps(s.field(), n - d)) {
        std::fill(w.begin(), w.end(), 0);
        for (std::size_t t = 0; t < rep.size(); ++t) w[free_cols[t]] = rep[t];
        out.push_back(Subspace::rowspace(stack_row(s.basis(), w)));
    }
    return out;
}

std::vector<Subspace> top_subspaces(const Subspace& u, int k) {
    if (u.dim() != k + 1)
        throw std::invalid_argument("top enumeration requires dim(u) = k+1");
    std::vector<Subspace> out;
    GrassmannStream stream(u.field_ptr(), k + 1, k);
    while (auto b = stream.next())
        out.push_back(Subspace::rowspace(mat_mul(b->basis(), u.basis())));
    return out;
}

bool adjacent(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("adjacency requires equal dimensions");
    return !(a == b) && intersect_dim(a, b) == a.dim() - 1;
}

}  // namespace grassclique
