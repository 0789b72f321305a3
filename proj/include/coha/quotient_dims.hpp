#pragma once

// Length-graded dimensions of C[Q]/<relations> for relations homogeneous in
// path length, by exact sparse elimination.  The degree-k ideal slice is
// spanned by p.r.q over relations r and complementary-length paths p, q; we
// build it with the recurrence  I_k = (arrows).I_{k-1} + sum_r r.C[Q]_{k-l_r},
// which covers every p.r.q once.

#include <coha/path_algebra.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace coha {

struct inhomogeneous_relation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// rows are sparse vectors sorted by column; pivot is the lowest column
struct sparse_eliminator {
    using row = std::vector<std::pair<int, rational>>;
    std::map<int, row> pivots;

    void reduce(row& r) const {
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) return;
            axpy(r, -r.front().second, it->second);
        }
    }
    bool insert(row r) {
        reduce(r);
        if (r.empty()) return false;
        rational inv = rational(1) / r.front().second;
        for (auto& [c, v] : r) v *= inv;
        int p = r.front().first;
        pivots.emplace(p, std::move(r));
        return true;
    }
    std::size_t rank() const { return pivots.size(); }

    // r += f * s, keeping r sorted and zero-free
    static void axpy(row& r, const rational& f, const row& s) {
        row out;
        out.reserve(r.size() + s.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < s.size()) {
            if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || s[j].first < r[i].first) {
                rational v = f * s[j].second;
                if (v != 0) out.emplace_back(s[j].first, std::move(v));
                ++j;
            } else {
                rational v = r[i].second + f * s[j].second;
                if (v != 0) out.emplace_back(r[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        r = std::move(out);
    }
};

}  // namespace detail

// dim_k C[Q]/<relations> for k = 0..max_length.
inline std::vector<std::int64_t> truncated_quotient_dims(const std::shared_ptr<const quiver>& qp,
                                                         const std::vector<path_sum>& relations,
                                                         int max_length) {
    const quiver& q = *qp;
    if (max_length < 0) throw std::invalid_argument("truncated_quotient_dims: negative cutoff");

    // validate homogeneity, record each relation's length
    std::vector<int> rel_len;
    for (const path_sum& r : relations) {
        int len = -1;
        for (const auto& [p, c] : r.terms()) {
            if (len < 0)
                len = p.length();
            else if (p.length() != len)
                throw inhomogeneous_relation_error("truncated_quotient_dims: relation not length-homogeneous: " +
                                                   r.to_string());
        }
        if (len == 0) throw std::invalid_argument("truncated_quotient_dims: length-0 relation");
        rel_len.push_back(len);
    }

    // paths of each length up to max_length, with an index per degree
    std::vector<std::vector<path>> paths(static_cast<std::size_t>(max_length) + 1);
    for (int i = 0; i < q.n_vertices(); ++i) paths[0].push_back(path{i, {}});
    for (int k = 1; k <= max_length; ++k) {
        for (const path& p : paths[static_cast<std::size_t>(k - 1)]) {
            for (int a = 0; a < q.n_arrows(); ++a) {
                if (path_tgt(q, p) != q.arrow_at(a).src) continue;
                path np;
                np.arrows = p.arrows;
                np.arrows.push_back(a);
                paths[static_cast<std::size_t>(k)].push_back(std::move(np));
            }
        }
        std::sort(paths[static_cast<std::size_t>(k)].begin(), paths[static_cast<std::size_t>(k)].end());
    }
    std::vector<std::map<path, int>> index(static_cast<std::size_t>(max_length) + 1);
    for (int k = 0; k <= max_length; ++k)
        for (std::size_t i = 0; i < paths[static_cast<std::size_t>(k)].size(); ++i)
            index[static_cast<std::size_t>(k)][paths[static_cast<std::size_t>(k)][i]] = static_cast<int>(i);

    auto to_row = [&](const path_sum& s, int k) {
        detail::sparse_eliminator::row r;
        for (const auto& [p, c] : s.terms()) r.emplace_back(index[static_cast<std::size_t>(k)].at(p), c);
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    };

    std::vector<std::int64_t> dims(static_cast<std::size_t>(max_length) + 1);
    dims[0] = static_cast<std::int64_t>(paths[0].size());

    // echelon basis of the previous ideal slice, kept as path sums for the
    // left-multiplication step
    std::vector<path_sum> prev_basis;
    for (int k = 1; k <= max_length; ++k) {
        detail::sparse_eliminator elim;
        std::vector<path_sum> basis;
        auto feed = [&](const path_sum& s) {
            if (s.is_zero()) return;
            if (elim.insert(to_row(s, k))) basis.push_back(s);
        };
        // arrows . I_{k-1}
        for (const path_sum& b : prev_basis)
            for (int a = 0; a < q.n_arrows(); ++a) {
                path_sum left = path_sum::word(qp, {q.arrow_at(a).name}, 1);
                feed(left * b);
            }
        // r . C[Q]_{k - len(r)}
        for (std::size_t ri = 0; ri < relations.size(); ++ri) {
            const int tail = k - rel_len[ri];
            if (tail < 0) continue;
            for (const path& p : paths[static_cast<std::size_t>(tail)]) {
                path_sum right(qp);
                right.add_term(p, 1);
                feed(relations[ri] * right);
            }
        }
        dims[static_cast<std::size_t>(k)] =
            static_cast<std::int64_t>(paths[static_cast<std::size_t>(k)].size()) - static_cast<std::int64_t>(elim.rank());
        prev_basis = std::move(basis);
    }
    return dims;
}

// All cyclic derivatives of a potential, the defining relations of Jac(Q,W).
inline std::vector<path_sum> jacobi_relations(const potential& w) {
    std::vector<path_sum> rels;
    const quiver& q = *w.quiver_ptr();
    for (const arrow& a : q.arrows()) {
        path_sum d = cyclic_derivative(w, a.name);
        if (!d.is_zero()) rels.push_back(std::move(d));
    }
    return rels;
}

}  // namespace coha
