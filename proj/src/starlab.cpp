#include "grassclique/starlab.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <thread>
#include <unordered_set>

namespace grassclique {

std::string to_string(StarKind kind) {
    switch (kind) {
        case StarKind::Empty: return "Empty";
        case StarKind::NotMaximal: return "NotMaximal";
        case StarKind::Star: return "Star";
    }
    return "?";
}

bool StarReport::verdict_ok() const {
    if (members.empty()) return theorem_class.kind == StarKind::Empty;
    if (theorem_class.kind == StarKind::Empty) return false;
    return oracle_maximal.has_value() &&
           ((theorem_class.kind == StarKind::Star) == *oracle_maximal);
}

namespace {

void require_star_range(const Subspace& s) {
    const int k = s.dim() + 1, n = s.ambient_dim();
    if (!(1 < k && k < n - 1))
        throw std::invalid_argument("star operations require 1 < k < n-1, got k=" +
                                    std::to_string(k) + ", n=" + std::to_string(n));
}

// Extension vectors and the codes they generate, aligned.
struct Extensions {
    std::vector<std::vector<std::uint8_t>> vectors;
    std::vector<Subspace> members;
};

// Candidate vectors w (zeros at the pivot columns of S, free part running over
// projective representatives) parameterize the k-dimensional superspaces of S;
// keep those whose superspace is a projective code.
Extensions enumerate_extensions(const Subspace& s) {
    require_star_range(s);
    const int n = s.ambient_dim(), d = s.dim();
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(n, false);
        for (int p : s.pivots()) is_pivot[p] = true;
        for (int j = 0; j < n; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
    }
    Extensions out;
    std::vector<std::uint8_t> w(n, 0);
    for (const auto& rep : projective_reps(s.field(), n - d)) {
        std::fill(w.begin(), w.end(), 0);
        for (std::size_t t = 0; t < rep.size(); ++t) w[free_cols[t]] = rep[t];
        Subspace q = Subspace::rowspace(stack_row(s.basis(), w));
        if (!is_projective(q)) continue;
        out.vectors.push_back(w);
        out.members.push_back(std::move(q));
    }
    return out;
}

int span_dim(const std::vector<std::vector<std::uint8_t>>& vectors, int n, FieldPtr fp) {
    if (vectors.empty()) return 0;
    std::vector<std::uint8_t> entries;
    entries.reserve(vectors.size() * n);
    for (const auto& v : vectors) entries.insert(entries.end(), v.begin(), v.end());
    return rank(MatFq(std::move(fp), static_cast<int>(vectors.size()), n, std::move(entries)));
}

Classification classify_from(const Subspace& s, const ColumnProfile& prof,
                             std::uint64_t predicted, const Extensions& ext, int wdim) {
    const int q = s.field().q();
    const int n = s.ambient_dim();
    const int k = s.dim() + 1;
    const int cc = prof.class_count();
    const int nl = prof.big_l_count();

    Classification out;
    if (predicted == 0) {
        out.kind = StarKind::Empty;
        return out;
    }

    bool star = false;
    if (prof.zero_count == 0) {
        if (prof.max_class_size() <= 1) {
            star = true;  // projective S: the whole Grassmann star survives
        } else if (q == 2) {
            star = (cc == k && k == 3 && n == 6) || cc >= k + 1;
        } else if (q == 3) {
            star = (cc == k - 1 && nl >= 3) || (cc == k && nl >= 2) || cc >= k + 1;
        } else if (q == 4) {
            star = (cc == k - 1 && k - 1 == 1) || (cc == k - 1 && nl >= 2) || cc >= k;
        } else {
            star = true;  // q >= 5
        }
    } else {  // exactly one zero column; the counts below are those of the punctured code
        if (prof.max_class_size() <= 1) {
            star = true;  // punctured code projective
        } else if (q == 2) {
            star = (cc == k && k == 3 && k < n - 2) || (cc >= k + 1 && k < n - 2);
        } else if (q == 3) {
            star = (cc == k - 1 && k - 1 == 1) || (cc == k - 1 && nl >= 2) || cc >= k;
        } else {
            star = true;  // q >= 4
        }
    }

    out.kind = star ? StarKind::Star : StarKind::NotMaximal;
    if (out.kind == StarKind::Star && wdim == 2) {
        out.equals_top = true;
        // two distinct normalized extension vectors are independent and span <W>
        MatFq gen = stack_row(stack_row(s.basis(), ext.vectors.at(0)), ext.vectors.at(1));
        out.top_witness = Subspace::rowspace(gen);
    }
    return out;
}

StarReport build_report(const Subspace& s) {
    StarReport rep{s, column_profile(s)};
    rep.predicted_size = predicted_star_size(s);
    Extensions ext = enumerate_extensions(s);
    rep.w_dim = span_dim(ext.vectors, s.ambient_dim(), s.field_ptr());
    rep.theorem_class = classify_from(s, rep.profile, rep.predicted_size, ext, rep.w_dim);
    rep.extensions = std::move(ext.vectors);
    rep.members = std::move(ext.members);
    return rep;
}

void attach_oracle(StarReport& rep, std::span<const Subspace> universe) {
    if (rep.members.empty()) return;
    OracleResult res = is_maximal_clique_oracle(rep.members, universe);
    rep.oracle_maximal = res.maximal;
    rep.oracle_witness = std::move(res.witness);
}

std::vector<Subspace> projective_universe(const FieldPtr& field, int n, int k) {
    std::vector<Subspace> out;
    GrassmannStream stream(field, n, k);
    while (auto s = stream.next())
        if (is_projective(*s)) out.push_back(std::move(*s));
    return out;
}

}  // namespace

std::vector<std::vector<std::uint8_t>> star_extension_vectors(const Subspace& s) {
    return enumerate_extensions(s).vectors;
}

std::vector<Subspace> star_pi(const Subspace& s) { return enumerate_extensions(s).members; }

std::vector<Subspace> top_pi(const Subspace& u) {
    const int k = u.dim() - 1;
    if (k < 1) throw std::invalid_argument("top requires dim(u) >= 2");
    std::vector<Subspace> out;
    for (auto& q : top_subspaces(u, k))
        if (is_projective(q)) out.push_back(std::move(q));
    return out;
}

int w_dim(const Subspace& s) {
    Extensions ext = enumerate_extensions(s);
    return span_dim(ext.vectors, s.ambient_dim(), s.field_ptr());
}

std::uint64_t predicted_star_size(const Subspace& s) {
    const ColumnProfile prof = column_profile(s);
    const int q = s.field().q();
    const int n = s.ambient_dim(), d = s.dim();

    if (prof.zero_count >= 2) return 0;
    if (prof.max_class_size() > q) return 0;

    if (prof.max_class_size() <= 1) {
        if (prof.zero_count == 0) return q_bracket(n - d, q);  // projective S
        std::uint64_t r = 1;                                   // punctured code projective
        for (int i = 0; i < n - d - 1; ++i) r *= q;
        return r;
    }

    using u128 = unsigned __int128;
    constexpr std::uint64_t u64max = std::numeric_limits<std::uint64_t>::max();
    u128 product = 1;
    for (const auto& cls : prof.classes)
        for (int i = 1; i < cls.size; ++i) {
            product *= static_cast<unsigned>(q - i);
            if (product > u64max) throw std::overflow_error("star size exceeds 64-bit range");
        }
    for (int i = 0; i < prof.class_count() - d; ++i) {
        product *= static_cast<unsigned>(q);
        if (product > u64max) throw std::overflow_error("star size exceeds 64-bit range");
    }
    // one of the big classes contributes the exact q-1 divisor
    if (prof.zero_count == 0) product /= static_cast<unsigned>(q - 1);
    return static_cast<std::uint64_t>(product);
}

Classification classify_star(const Subspace& s) { return build_report(s).theorem_class; }

OracleResult is_maximal_clique_oracle(std::span<const Subspace> members) {
    if (members.empty()) throw std::invalid_argument("oracle requires a nonempty clique");
    const Subspace& first = members.front();
    std::vector<Subspace> universe =
        projective_universe(first.field_ptr(), first.ambient_dim(), first.dim());
    return is_maximal_clique_oracle(members, universe);
}

OracleResult is_maximal_clique_oracle(std::span<const Subspace> members,
                                      std::span<const Subspace> universe) {
    if (members.empty()) throw std::invalid_argument("oracle requires a nonempty clique");
    const int k = members.front().dim(), n = members.front().ambient_dim();
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i].dim() != k || members[i].ambient_dim() != n)
            throw std::invalid_argument("oracle members must share dimension and ambient space");
        if (!is_projective(members[i]))
            throw std::invalid_argument("oracle members must be projective codes");
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!adjacent(members[i], members[j]))
                throw std::invalid_argument("oracle input is not a clique");
    }
    std::unordered_set<Subspace, SubspaceHash> member_set(members.begin(), members.end());
    for (const Subspace& q : universe) {
        if (member_set.count(q)) continue;
        bool extends = true;
        for (const Subspace& m : members)
            if (!adjacent(q, m)) { extends = false; break; }
        if (extends) return {false, q};
    }
    return {true, std::nullopt};
}

StarReport analyze_star(const Subspace& s) {
    StarReport rep = build_report(s);
    if (!rep.members.empty()) {
        std::vector<Subspace> universe =
            projective_universe(s.field_ptr(), s.ambient_dim(), s.dim() + 1);
        attach_oracle(rep, universe);
    }
    return rep;
}

StarReport analyze_star(const Subspace& s, std::span<const Subspace> universe) {
    StarReport rep = build_report(s);
    attach_oracle(rep, universe);
    return rep;
}

void EnumerationGuard::check(int n, int k, int q) const {
    if (force) return;
    std::uint64_t count;
    try {
        count = gaussian_binomial(n, k, q);
    } catch (const std::overflow_error&) {
        throw GuardExceeded("enumeration of " + std::to_string(k) + "-subspaces at n=" +
                            std::to_string(n) + ", q=" + std::to_string(q) +
                            " overflows the size guard");
    }
    if (count > limit)
        throw GuardExceeded("enumeration size " + std::to_string(count) +
                            " exceeds the guard limit " + std::to_string(limit) +
                            " (use --force or raise GRASSCLIQUE_GUARD)");
}

namespace {

CensusRow make_row(const StarReport& rep) {
    CensusRow row{rep.s};
    row.c = rep.profile.zero_count;
    row.class_sizes = rep.profile.class_sizes();
    row.big_l = rep.profile.big_l_count();
    row.predicted = rep.predicted_size;
    row.actual = rep.members.size();
    row.w_dim = rep.w_dim;
    row.kind = rep.theorem_class.kind;
    row.equals_top = rep.theorem_class.equals_top;
    row.oracle_maximal = rep.oracle_maximal;
    row.agree = rep.agree();
    return row;
}

}  // namespace

CensusResult census(const GrassmannParams& params, const CensusOptions& options) {
    params.require_graph_range();
    const int q = params.field->q(), n = params.n, k = params.k;
    options.guard.check(n, k - 1, q);
    options.guard.check(n, k, q);

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Subspace> universe = projective_universe(params.field, n, k);
    const std::uint64_t total = gaussian_binomial(n, k - 1, q);

    int jobs = options.jobs;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = static_cast<int>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1)));

    std::vector<std::optional<CensusRow>> slots(total);
    auto worker = [&](int shard) {
        GrassmannStream stream(params.field, n, k - 1);
        std::uint64_t index = 0;
        while (auto s = stream.next()) {
            if (static_cast<int>(index % jobs) == shard)
                slots[index] = make_row(analyze_star(*s, universe));
            ++index;
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    CensusResult out{q, n, k};
    out.rows.reserve(total);
    for (auto& slot : slots) out.rows.push_back(std::move(*slot));
    out.summary.total = total;
    for (const CensusRow& row : out.rows) {
        switch (row.kind) {
            case StarKind::Empty: ++out.summary.empty; break;
            case StarKind::NotMaximal: ++out.summary.not_maximal; break;
            case StarKind::Star: ++out.summary.star; break;
        }
        if (!row.agree) ++out.summary.mismatches;
        // a punctured code with proportional columns has at most n-2 classes,
        // so l(S') >= k+1 cannot meet the k = n-2 boundary of the q=2 table
        const int cc = static_cast<int>(row.class_sizes.size());
        const bool proportional =
            std::any_of(row.class_sizes.begin(), row.class_sizes.end(),
                        [](int l) { return l > 1; });
        if (q == 2 && row.c == 1 && proportional && cc >= k + 1 && k >= n - 2)
            throw std::logic_error("unreachable case in the q=2 classification table");
    }
    out.summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

GraphStats graph_stats(const GrassmannParams& params, const EnumerationGuard& guard) {
    params.require_graph_range();
    guard.check(params.n, params.k, params.field->q());

    const std::vector<Subspace> vertices =
        projective_universe(params.field, params.n, params.k);
    const std::size_t v = vertices.size();

    GraphStats out;
    out.vertices = v;
    std::vector<std::vector<std::uint32_t>> adj(v);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (adjacent(vertices[i], vertices[j])) {
                ++out.edges;
                adj[i].push_back(static_cast<std::uint32_t>(j));
                adj[j].push_back(static_cast<std::uint32_t>(i));
            }

    std::vector<bool> seen(v, false);
    std::vector<std::uint32_t> queue;
    for (std::size_t start = 0; start < v; ++start) {
        if (seen[start]) continue;
        ++out.components;
        queue.assign(1, static_cast<std::uint32_t>(start));
        seen[start] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t u = queue[head];
            for (std::uint32_t w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        }
    }
    return out;
}

std::uint64_t component_count(const GrassmannParams& params, const EnumerationGuard& guard) {
    return graph_stats(params, guard).components;
}

}  // namespace grassclique
