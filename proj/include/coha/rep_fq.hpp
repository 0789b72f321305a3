#pragma once

// Quiver representations over a prime field: moment map on double quivers,
// Hom/Ext^1 by exact intertwiner solves, and Ext-quivers of collections of
// simples together with the Euler-form compatibility check
// <zeta(m), zeta(m')>_Q = <m, m'>_ext.

#include <coha/fq.hpp>
#include <coha/numeric.hpp>
#include <coha/quiver.hpp>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace coha {

struct quiver_rep_fq {
    std::shared_ptr<const quiver> q;
    prime_field F;
    dim_vector d;
    std::vector<fq_matrix> mats;  // per arrow, shape d_tgt x d_src

    void validate() const {
        if (static_cast<int>(mats.size()) != q->n_arrows())
            throw std::invalid_argument("quiver_rep_fq: one matrix per arrow required");
        for (int a = 0; a < q->n_arrows(); ++a) {
            const arrow& ar = q->arrow_at(a);
            if (mats[static_cast<std::size_t>(a)].rows() != d[ar.tgt] ||
                mats[static_cast<std::size_t>(a)].cols() != d[ar.src])
                throw std::invalid_argument("quiver_rep_fq: matrix shape mismatch at arrow '" + ar.name + "'");
        }
    }
};

inline quiver_rep_fq zero_rep(std::shared_ptr<const quiver> q, const prime_field& F, const dim_vector& d) {
    quiver_rep_fq rep{q, F, d, {}};
    for (int a = 0; a < q->n_arrows(); ++a) {
        const arrow& ar = q->arrow_at(a);
        rep.mats.emplace_back(static_cast<int>(d[ar.tgt]), static_cast<int>(d[ar.src]));
    }
    return rep;
}

// unstarred/starred arrow pairing of a double quiver built by build_double
inline std::vector<std::pair<int, int>> double_quiver_pairs(const quiver& dq) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < dq.n_arrows(); ++a) {
        const std::string& nm = dq.arrow_at(a).name;
        if (nm.size() >= 1 && nm.back() == '*') continue;
        std::string star = nm + "*";
        if (!dq.has_arrow(star))
            throw std::invalid_argument("double_quiver_pairs: no starred partner for arrow '" + nm + "'");
        int s = dq.arrow_index(star);
        if (dq.arrow_at(s).src != dq.arrow_at(a).tgt || dq.arrow_at(s).tgt != dq.arrow_at(a).src)
            throw std::invalid_argument("double_quiver_pairs: '" + star + "' does not reverse '" + nm + "'");
        pairs.emplace_back(a, s);
    }
    return pairs;
}

// moment map of a double-quiver representation: the component at vertex i is
// sum_{t(a)=i} X_a X_{a*} - sum_{s(a)=i} X_{a*} X_a.
inline std::vector<fq_matrix> moment_map(const quiver_rep_fq& rep) {
    rep.validate();
    const quiver& dq = *rep.q;
    std::vector<fq_matrix> comp;
    for (int i = 0; i < dq.n_vertices(); ++i)
        comp.emplace_back(static_cast<int>(rep.d[i]), static_cast<int>(rep.d[i]));
    for (const auto& [a, s] : double_quiver_pairs(dq)) {
        const arrow& ar = dq.arrow_at(a);
        const fq_matrix& xa = rep.mats[static_cast<std::size_t>(a)];
        const fq_matrix& xs = rep.mats[static_cast<std::size_t>(s)];
        comp[static_cast<std::size_t>(ar.tgt)] =
            comp[static_cast<std::size_t>(ar.tgt)].add(rep.F, xa.mul(rep.F, xs));
        comp[static_cast<std::size_t>(ar.src)] =
            comp[static_cast<std::size_t>(ar.src)].sub(rep.F, xs.mul(rep.F, xa));
    }
    return comp;
}

inline bool moment_map_vanishes(const quiver_rep_fq& rep) {
    for (const auto& c : moment_map(rep))
        if (!c.is_zero()) return false;
    return true;
}

namespace detail {

// intertwiner system: phi_{t(a)} M_a = N_a phi_{s(a)} for every arrow; the
// unknowns are the stacked entries of the phi_i
inline fq_matrix hom_system(const quiver_rep_fq& m, const quiver_rep_fq& n) {
    const quiver& q = *m.q;
    std::vector<int> var_offset(static_cast<std::size_t>(q.n_vertices()) + 1, 0);
    for (int i = 0; i < q.n_vertices(); ++i)
        var_offset[static_cast<std::size_t>(i) + 1] =
            var_offset[static_cast<std::size_t>(i)] + static_cast<int>(n.d[i] * m.d[i]);
    const int nvars = var_offset[static_cast<std::size_t>(q.n_vertices())];
    int neqs = 0;
    for (int a = 0; a < q.n_arrows(); ++a) {
        const arrow& ar = q.arrow_at(a);
        neqs += static_cast<int>(n.d[ar.tgt] * m.d[ar.src]);
    }
    fq_matrix sys(std::max(neqs, 1), std::max(nvars, 1));
    if (neqs == 0 || nvars == 0) return fq_matrix(neqs, nvars);
    auto var = [&](int vtx, int r, int c) {  // phi_vtx entry (r,c), r < n.d, c < m.d
        return var_offset[static_cast<std::size_t>(vtx)] + r * static_cast<int>(m.d[vtx]) + c;
    };
    int eq = 0;
    for (int a = 0; a < q.n_arrows(); ++a) {
        const arrow& ar = q.arrow_at(a);
        const fq_matrix& Ma = m.mats[static_cast<std::size_t>(a)];
        const fq_matrix& Na = n.mats[static_cast<std::size_t>(a)];
        for (int r = 0; r < static_cast<int>(n.d[ar.tgt]); ++r)
            for (int c = 0; c < static_cast<int>(m.d[ar.src]); ++c) {
                // (phi_t M_a)_{rc} - (N_a phi_s)_{rc} = 0
                for (int k = 0; k < static_cast<int>(m.d[ar.tgt]); ++k)
                    sys.at(eq, var(ar.tgt, r, k)) = m.F.add(sys.at(eq, var(ar.tgt, r, k)), Ma.at(k, c));
                for (int k = 0; k < static_cast<int>(n.d[ar.src]); ++k)
                    sys.at(eq, var(ar.src, k, c)) = m.F.sub(sys.at(eq, var(ar.src, k, c)), Na.at(r, k));
                ++eq;
            }
    }
    return sys;
}

}  // namespace detail

inline int hom_dim(const quiver_rep_fq& m, const quiver_rep_fq& n) {
    m.validate();
    n.validate();
    int nvars = 0;
    for (int i = 0; i < m.q->n_vertices(); ++i) nvars += static_cast<int>(n.d[i] * m.d[i]);
    if (nvars == 0) return 0;
    fq_matrix sys = detail::hom_system(m, n);
    return nvars - fq_rank(m.F, sys);
}

// basis of End(M) as tuples of per-vertex matrices
inline std::vector<std::vector<fq_matrix>> end_basis(const quiver_rep_fq& m) {
    const quiver& q = *m.q;
    int nvars = 0;
    for (int i = 0; i < q.n_vertices(); ++i) nvars += static_cast<int>(m.d[i] * m.d[i]);
    std::vector<std::vector<fq_matrix>> basis;
    if (nvars == 0) return basis;
    auto null_basis = fq_nullspace(m.F, detail::hom_system(m, m));
    for (const auto& vec : null_basis) {
        std::vector<fq_matrix> endo;
        int off = 0;
        for (int i = 0; i < q.n_vertices(); ++i) {
            int di = static_cast<int>(m.d[i]);
            fq_matrix phi(di, di);
            for (int r = 0; r < di; ++r)
                for (int c = 0; c < di; ++c) phi.at(r, c) = vec[static_cast<std::size_t>(off + r * di + c)];
            off += di * di;
            endo.push_back(std::move(phi));
        }
        basis.push_back(std::move(endo));
    }
    return basis;
}

// dim Hom(M,N) - <dim M, dim N>; valid for the hereditary path algebra
inline int ext1_dim(const quiver_rep_fq& m, const quiver_rep_fq& n) {
    integer e = integer(hom_dim(m, n)) - euler_form(*m.q).evaluate(m.d, n.d);
    if (e < 0)
        throw std::logic_error("ext1_dim: negative value (bug or non-hereditary input)");
    return static_cast<int>(e);
}

struct ext_quiver_result {
    quiver ext_q;
    std::vector<dim_vector> simple_dims;
    // zeta(m) = sum_j m_j dim(S_j)
    dim_vector zeta(const dim_vector& m) const {
        dim_vector out = dim_vector::zero(simple_dims.front().size());
        for (int j = 0; j < m.size(); ++j) out = out + m[j] * simple_dims[static_cast<std::size_t>(j)];
        return out;
    }
    bool lemma_pass = false;  // <zeta(e_i), zeta(e_j)>_Q == <e_i, e_j>_ext on basis pairs
};

inline ext_quiver_result ext_quiver(const std::vector<quiver_rep_fq>& simples,
                                    const std::vector<std::string>& labels = {}) {
    if (simples.empty()) throw std::invalid_argument("ext_quiver: empty input");
    const int r = static_cast<int>(simples.size());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int h = hom_dim(simples[static_cast<std::size_t>(i)], simples[static_cast<std::size_t>(j)]);
            if (i == j && h != 1)
                throw std::invalid_argument("ext_quiver: input " + std::to_string(i) +
                                            " is not simple (dim End != 1)");
            if (i != j && h != 0)
                throw std::invalid_argument("ext_quiver: inputs " + std::to_string(i) + ", " + std::to_string(j) +
                                            " are isomorphic or not simple (Hom != 0)");
        }

    std::vector<std::string> vs;
    for (int i = 0; i < r; ++i)
        vs.push_back(labels.empty() ? "S" + std::to_string(i + 1) : labels[static_cast<std::size_t>(i)]);
    std::vector<arrow> as;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int e = ext1_dim(simples[static_cast<std::size_t>(i)], simples[static_cast<std::size_t>(j)]);
            for (int k = 0; k < e; ++k)
                as.push_back({"x_{" + vs[static_cast<std::size_t>(i)] + "," + vs[static_cast<std::size_t>(j)] + "," +
                                  std::to_string(k) + "}",
                              i, j});
        }
    ext_quiver_result res{quiver(vs, as), {}, false};
    for (const auto& s : simples) res.simple_dims.push_back(s.d);

    const int_bilinear_form eq_form = euler_form(*simples.front().q);
    const int_bilinear_form ext_form = euler_form(res.ext_q);
    bool pass = true;
    for (int i = 0; i < r && pass; ++i)
        for (int j = 0; j < r && pass; ++j) {
            dim_vector ei = dim_vector::unit(r, i), ej = dim_vector::unit(r, j);
            if (eq_form.evaluate(res.zeta(ei), res.zeta(ej)) != ext_form.evaluate(ei, ej)) pass = false;
        }
    res.lemma_pass = pass;
    return res;
}

}  // namespace coha
