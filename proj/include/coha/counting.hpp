#pragma once

// Point-counting kernels over F_q for double-quiver representations: the
// moment-map fiber (naive full enumeration vs the fast kernel that is linear
// in the starred arrows) and the fully nilpotent locus.  Enumeration order is
// row-major over arrows in declaration order with entries in 0..q-1, so
// parallel partitions are contiguous index blocks and the integer-sum
// reduction is schedule-independent.

#include <coha/fq.hpp>
#include <coha/numeric.hpp>
#include <coha/quiver.hpp>
#include <coha/rep_fq.hpp>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace coha {

struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct count_options {
    std::uint64_t max_configurations = 200'000'000;  // COHA_WORKBENCH_BUDGET overrides via CLI
    int jobs = 1;
};

enum class count_mode { fast, naive };

// |GL_d(F_q)| = prod_i prod_{k<d_i} (q^{d_i} - q^k)
inline integer gl_order(const dim_vector& d, std::uint32_t q) {
    prime_field check(q);  // validates primality
    (void)check;
    integer total = 1;
    for (int i = 0; i < d.size(); ++i) {
        const integer qn = ipow(integer(q), static_cast<unsigned long>(d[i]));
        for (std::int64_t k = 0; k < d[i]; ++k)
            total *= qn - ipow(integer(q), static_cast<unsigned long>(k));
    }
    return total;
}

namespace detail {

// entry layout of a set of arrow matrices, mixed-radix base q
struct entry_layout {
    std::vector<int> arrow_ids;
    std::vector<int> sizes;  // entries per arrow
    int total = 0;

    entry_layout(const quiver& q, const dim_vector& d, const std::vector<int>& arrows_sel) {
        for (int a : arrows_sel) {
            const arrow& ar = q.arrow_at(a);
            arrow_ids.push_back(a);
            sizes.push_back(static_cast<int>(d[ar.tgt] * d[ar.src]));
            total += sizes.back();
        }
    }
    // checked q^total
    std::uint64_t configurations(std::uint32_t q, std::uint64_t limit) const {
        std::uint64_t n = 1;
        for (int i = 0; i < total; ++i) {
            if (n > limit / q + 1) return limit + 1;
            n *= q;
            if (n > limit) return limit + 1;
        }
        return n;
    }
    void decode(std::uint64_t index, std::uint32_t q, const quiver& quiv, const dim_vector& d,
                std::vector<fq_matrix>& mats) const {
        for (std::size_t k = 0; k < arrow_ids.size(); ++k) {
            const arrow& ar = quiv.arrow_at(arrow_ids[k]);
            fq_matrix& m = mats[static_cast<std::size_t>(arrow_ids[k])];
            m = fq_matrix(static_cast<int>(d[ar.tgt]), static_cast<int>(d[ar.src]));
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) {
                    m.at(r, c) = static_cast<std::uint32_t>(index % q);
                    index /= q;
                }
        }
    }
};

// sum f(i) for i in [0, n) over contiguous blocks; deterministic by summation
// in block order (integer addition is associative anyway)
template <typename F>
integer parallel_sum(std::uint64_t n, int jobs, F&& f) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || n < 1024) {
        integer acc = 0;
        for (std::uint64_t i = 0; i < n; ++i) acc += f(i);
        return acc;
    }
    std::vector<integer> partial(static_cast<std::size_t>(jobs), integer(0));
    std::vector<std::thread> threads;
    const std::uint64_t block = (n + static_cast<std::uint64_t>(jobs) - 1) / static_cast<std::uint64_t>(jobs);
    for (int t = 0; t < jobs; ++t) {
        threads.emplace_back([&, t]() {
            std::uint64_t lo = static_cast<std::uint64_t>(t) * block;
            std::uint64_t hi = std::min(n, lo + block);
            integer acc = 0;
            for (std::uint64_t i = lo; i < hi; ++i) acc += f(i);
            partial[static_cast<std::size_t>(t)] = std::move(acc);
        });
    }
    for (auto& th : threads) th.join();
    integer total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

}  // namespace detail

// #{double-quiver representations of dimension d with moment map zero}.
// naive: full enumeration of all arrow matrices.  fast: for each assignment
// of the unstarred arrows the equation is linear in the starred ones, so each
// assignment contributes q^{nullity} by exact elimination.
inline integer count_preprojective(const quiver& base_q, const dim_vector& d, std::uint32_t q, count_mode mode,
                                   const count_options& opt = {}) {
    prime_field F(q);
    auto dq = std::make_shared<const quiver>(build_double(base_q));
    const auto pairs = double_quiver_pairs(*dq);
    std::vector<int> unstarred, starred;
    for (const auto& [a, s] : pairs) {
        unstarred.push_back(a);
        starred.push_back(s);
    }

    if (mode == count_mode::naive) {
        std::vector<int> all = unstarred;
        all.insert(all.end(), starred.begin(), starred.end());
        detail::entry_layout layout(*dq, d, all);
        std::uint64_t n = layout.configurations(q, opt.max_configurations);
        if (n > opt.max_configurations)
            throw budget_exceeded_error("count_preprojective(naive): q^" + std::to_string(layout.total) +
                                        " configurations exceed the budget of " +
                                        std::to_string(opt.max_configurations));
        return detail::parallel_sum(n, opt.jobs, [&](std::uint64_t idx) -> integer {
            quiver_rep_fq rep = zero_rep(dq, F, d);
            layout.decode(idx, q, *dq, d, rep.mats);
            return moment_map_vanishes(rep) ? 1 : 0;
        });
    }

    detail::entry_layout xlayout(*dq, d, unstarred);
    std::uint64_t nx = xlayout.configurations(q, opt.max_configurations);
    if (nx > opt.max_configurations)
        throw budget_exceeded_error("count_preprojective(fast): q^" + std::to_string(xlayout.total) +
                                    " unstarred configurations exceed the budget of " +
                                    std::to_string(opt.max_configurations));

    // variable layout for the starred entries
    std::vector<int> star_off(starred.size() + 1, 0);
    for (std::size_t k = 0; k < starred.size(); ++k) {
        const arrow& ar = dq->arrow_at(starred[k]);
        star_off[k + 1] = star_off[k] + static_cast<int>(d[ar.tgt] * d[ar.src]);
    }
    const int nvars = star_off[starred.size()];
    int neqs = 0;
    for (int i = 0; i < dq->n_vertices(); ++i) neqs += static_cast<int>(d[i] * d[i]);
    std::vector<int> eq_off(static_cast<std::size_t>(dq->n_vertices()) + 1, 0);
    for (int i = 0; i < dq->n_vertices(); ++i)
        eq_off[static_cast<std::size_t>(i) + 1] = eq_off[static_cast<std::size_t>(i)] + static_cast<int>(d[i] * d[i]);

    return detail::parallel_sum(nx, opt.jobs, [&](std::uint64_t idx) -> integer {
        quiver_rep_fq rep = zero_rep(dq, F, d);
        xlayout.decode(idx, q, *dq, d, rep.mats);
        if (nvars == 0) return moment_map_vanishes(rep) ? 1 : 0;
        fq_matrix sys(std::max(neqs, 1), nvars);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto& [a, s] = pairs[k];
            const arrow& ar = dq->arrow_at(a);
            const fq_matrix& X = rep.mats[static_cast<std::size_t>(a)];
            const int dt = static_cast<int>(d[ar.tgt]), ds = static_cast<int>(d[ar.src]);
            // component at t(a): entry (r,c) += sum_m X(r,m) Y(m,c)
            for (int r = 0; r < dt; ++r)
                for (int c = 0; c < dt; ++c) {
                    int eq = eq_off[static_cast<std::size_t>(ar.tgt)] + r * dt + c;
                    for (int m = 0; m < ds; ++m) {
                        int v = star_off[k] + m * dt + c;  // Y entry (m,c), shape ds x dt
                        sys.at(eq, v) = F.add(sys.at(eq, v), X.at(r, m));
                    }
                }
            // component at s(a): entry (r,c) -= sum_m Y(r,m) X(m,c)
            for (int r = 0; r < ds; ++r)
                for (int c = 0; c < ds; ++c) {
                    int eq = eq_off[static_cast<std::size_t>(ar.src)] + r * ds + c;
                    for (int m = 0; m < dt; ++m) {
                        int v = star_off[k] + r * dt + m;  // Y entry (r,m)
                        sys.at(eq, v) = F.sub(sys.at(eq, v), X.at(m, c));
                    }
                }
        }
        int nullity = nvars - fq_rank(F, sys);
        return ipow(integer(q), static_cast<unsigned long>(nullity));
    });
}

// does the arrow algebra act nilpotently: iterate W_{k+1} = sum_a X_a(W_k)
// from the total space; nilpotent iff W reaches 0 within total-dimension steps
inline bool rep_is_nilpotent(const quiver_rep_fq& rep) {
    const quiver& q = *rep.q;
    std::int64_t total_dim = rep.d.total();
    // subspace per vertex as an echelonized list of column vectors
    std::vector<std::vector<std::vector<std::uint32_t>>> w(static_cast<std::size_t>(q.n_vertices()));
    for (int i = 0; i < q.n_vertices(); ++i)
        for (std::int64_t k = 0; k < rep.d[i]; ++k) {
            std::vector<std::uint32_t> e(static_cast<std::size_t>(rep.d[i]), 0);
            e[static_cast<std::size_t>(k)] = 1;
            w[static_cast<std::size_t>(i)].push_back(std::move(e));
        }
    auto echelonize = [&](std::vector<std::vector<std::uint32_t>>& vecs) {
        std::vector<std::vector<std::uint32_t>> basis;
        for (auto v : vecs) {
            for (const auto& b : basis) {
                // find b's pivot, eliminate it from v
                std::size_t p = 0;
                while (p < b.size() && b[p] == 0) ++p;
                if (p < b.size() && v[p] != 0) {
                    std::uint32_t f = rep.F.mul(v[p], rep.F.inv(b[p]));
                    for (std::size_t c = 0; c < v.size(); ++c) v[c] = rep.F.sub(v[c], rep.F.mul(f, b[c]));
                }
            }
            bool nonzero = false;
            for (auto x : v)
                if (x) nonzero = true;
            if (nonzero) basis.push_back(std::move(v));
        }
        vecs = std::move(basis);
    };
    for (std::int64_t step = 0; step <= total_dim; ++step) {
        std::int64_t dim_sum = 0;
        for (const auto& vecs : w) dim_sum += static_cast<std::int64_t>(vecs.size());
        if (dim_sum == 0) return true;
        std::vector<std::vector<std::vector<std::uint32_t>>> next(static_cast<std::size_t>(q.n_vertices()));
        for (int a = 0; a < q.n_arrows(); ++a) {
            const arrow& ar = q.arrow_at(a);
            const fq_matrix& X = rep.mats[static_cast<std::size_t>(a)];
            for (const auto& v : w[static_cast<std::size_t>(ar.src)]) {
                std::vector<std::uint32_t> img(static_cast<std::size_t>(rep.d[ar.tgt]), 0);
                for (int r = 0; r < X.rows(); ++r)
                    for (int c = 0; c < X.cols(); ++c)
                        img[static_cast<std::size_t>(r)] =
                            rep.F.add(img[static_cast<std::size_t>(r)], rep.F.mul(X.at(r, c), v[static_cast<std::size_t>(c)]));
                next[static_cast<std::size_t>(ar.tgt)].push_back(std::move(img));
            }
        }
        for (auto& vecs : next) echelonize(vecs);
        w = std::move(next);
    }
    return false;
}

// #{double-quiver representations with moment map zero and nilpotent arrow
// algebra}; full enumeration
inline integer count_nilpotent(const quiver& base_q, const dim_vector& d, std::uint32_t q,
                               const count_options& opt = {}) {
    prime_field F(q);
    auto dq = std::make_shared<const quiver>(build_double(base_q));
    std::vector<int> all;
    for (int a = 0; a < dq->n_arrows(); ++a) all.push_back(a);
    detail::entry_layout layout(*dq, d, all);
    std::uint64_t n = layout.configurations(q, opt.max_configurations);
    if (n > opt.max_configurations)
        throw budget_exceeded_error("count_nilpotent: q^" + std::to_string(layout.total) +
                                    " configurations exceed the budget of " + std::to_string(opt.max_configurations));
    return detail::parallel_sum(n, opt.jobs, [&](std::uint64_t idx) -> integer {
        quiver_rep_fq rep = zero_rep(dq, F, d);
        layout.decode(idx, q, *dq, d, rep.mats);
        return (moment_map_vanishes(rep) && rep_is_nilpotent(rep)) ? 1 : 0;
    });
}

// one row of a counting report: stack count = raw / |GL_d| exactly
struct count_row {
    std::uint32_t q = 0;
    dim_vector d;
    integer raw;
    integer gl;
    rational stack;
};

inline count_row make_count_row(const dim_vector& d, std::uint32_t q, const integer& raw) {
    count_row r;
    r.q = q;
    r.d = d;
    r.raw = raw;
    r.gl = gl_order(d, q);
    r.stack = rational(raw) / rational(r.gl);
    return r;
}

}  // namespace coha
