#include "grassclique/codeprof.hpp"

#include <algorithm>
#include <stdexcept>

namespace grassclique {

int ColumnProfile::big_l_count() const {
    return static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                          [](const ColumnClass& c) { return c.size > 1; }));
}

int ColumnProfile::max_class_size() const {
    int m = 0;
    for (const auto& c : classes) m = std::max(m, c.size);
    return m;
}

std::vector<int> ColumnProfile::class_sizes() const {
    std::vector<int> out;
    out.reserve(classes.size());
    for (const auto& c : classes) out.push_back(c.size);
    return out;
}

std::vector<ColumnClass> ColumnProfile::big_l() const {
    std::vector<ColumnClass> out;
    for (const auto& c : classes)
        if (c.size > 1) out.push_back(c);
    return out;
}

ColumnProfile column_profile(const Subspace& s) {
    const MatFq& m = s.basis();
    const Field& F = m.field();
    const int d = m.rows(), n = m.cols();

    ColumnProfile prof;
    for (int j = 0; j < n; ++j) {
        int lead = -1;
        for (int i = 0; i < d; ++i)
            if (m.at(i, j) != 0) { lead = i; break; }
        if (lead < 0) {
            ++prof.zero_count;
            continue;
        }
        std::vector<std::uint8_t> rep(d);
        const std::uint8_t iv = F.inv(m.at(lead, j));
        for (int i = 0; i < d; ++i) rep[i] = F.mul(m.at(i, j), iv);
        auto it = std::find_if(prof.classes.begin(), prof.classes.end(),
                               [&rep](const ColumnClass& c) { return c.rep == rep; });
        if (it != prof.classes.end())
            ++it->size;
        else
            prof.classes.push_back({std::move(rep), 1});
    }
    return prof;
}

bool is_nondegenerate(const Subspace& s) { return column_profile(s).zero_count == 0; }

bool is_projective(const Subspace& s) {
    const ColumnProfile p = column_profile(s);
    return p.zero_count == 0 && p.max_class_size() <= 1;
}

Subspace puncture_zero(const Subspace& s) {
    const MatFq& m = s.basis();
    int zero_col = -1;
    for (int j = 0; j < m.cols(); ++j) {
        if (!column_is_zero(m, j)) continue;
        if (zero_col >= 0)
            throw std::invalid_argument("puncture requires exactly one zero column");
        zero_col = j;
    }
    if (zero_col < 0)
        throw std::invalid_argument("puncture requires exactly one zero column");
    MatFq out(m.field_ptr(), m.rows(), m.cols() - 1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0, t = 0; j < m.cols(); ++j)
            if (j != zero_col) out.at(i, t++) = m.at(i, j);
    return Subspace::rowspace(out);
}

}  // namespace grassclique
