#pragma once

// Numerical shadow of the type D_n Kleinian relation x^2 + y^{n-1} + y z^2 = 0:
// sample complex points of the moment fiber of the affine D_n double quiver
// at the indivisible imaginary root, evaluate the trace words y, x, z = u - v,
// and test that the rows (x^2, y^{n-1}, y z^2) over the samples have numerical
// rank <= 2.  The test is normalization-free (scalars between the trace
// generators and the singularity coordinates are absorbed by the rank).

#include <coha/quiver.hpp>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <array>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace coha {

struct degenerate_sampling_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dn_options {
    int n = 4;
    int samples = 25;
    std::uint64_t seed = 0;
    bool zero_samples = false;  // force the zero representation (error path)
};

struct dn_report {
    int n = 4;
    int samples_kept = 0;
    double sv_ratio = 0.0;  // sigma_3 / sigma_1
    bool pass = false;      // ratio < 1e-6
    std::vector<double> singular_values;
    std::vector<std::array<std::complex<double>, 3>> points;  // (x, y, z) per kept sample
};

namespace detail {

using cmat = Eigen::MatrixXcd;

// matrix of a path word (arrow names left to right): column-vector action
// composes in reverse order
inline cmat word_matrix(const quiver& dq, const std::vector<cmat>& mats, const std::vector<std::string>& names) {
    int a0 = dq.arrow_index(names.front());
    cmat m = mats[static_cast<std::size_t>(a0)];
    for (std::size_t k = 1; k < names.size(); ++k) {
        int a = dq.arrow_index(names[k]);
        m = mats[static_cast<std::size_t>(a)] * m;
    }
    return m;
}

}  // namespace detail

inline dn_report dn_singularity_check(const dn_options& opt) {
    if (opt.n < 4) throw std::invalid_argument("dn_singularity_check: need n >= 4");
    if (opt.samples < 10) throw std::invalid_argument("dn_singularity_check: need at least 10 samples");
    const int n = opt.n;
    const quiver dq = affine_dn_double_quiver(n);
    const dim_vector delta = affine_dn_delta(n);
    auto nm = [](int i, int j) { return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };

    // forward arrows are sampled, backward arrows are solved for
    std::vector<std::pair<int, int>> fwd = {{0, 2}, {1, 2}};
    for (int i = 2; i < n - 2; ++i) fwd.emplace_back(i, i + 1);
    fwd.emplace_back(n - 2, n - 1);
    fwd.emplace_back(n - 2, n);

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_entry = [&]() { return std::complex<double>(gauss(rng), gauss(rng)); };

    // variable layout for the backward arrows
    std::vector<int> bwd_arrow, bwd_off;
    int nvars = 0;
    for (const auto& [i, j] : fwd) {
        int a = dq.arrow_index(nm(j, i));
        bwd_arrow.push_back(a);
        bwd_off.push_back(nvars);
        const arrow& ar = dq.arrow_at(a);
        nvars += static_cast<int>(delta[ar.tgt] * delta[ar.src]);
    }
    int neqs = 0;
    std::vector<int> eq_off;
    for (int v = 0; v <= n; ++v) {
        eq_off.push_back(neqs);
        neqs += static_cast<int>(delta[v] * delta[v]);
    }

    // trace words
    std::vector<std::string> word_y = {nm(2, 0), nm(0, 2)};
    std::vector<std::string> word_x, word_u, word_v;
    word_x.push_back(nm(0, 2));
    for (int i = 2; i < n - 2; ++i) word_x.push_back(nm(i, i + 1));
    word_x.push_back(nm(n - 2, n - 1));
    word_x.push_back(nm(n - 1, n - 2));
    word_x.push_back(nm(n - 2, n));
    word_x.push_back(nm(n, n - 2));
    for (int i = n - 2; i > 2; --i) word_x.push_back(nm(i, i - 1));
    word_x.push_back(nm(2, 0));
    word_u.push_back(nm(0, 2));
    for (int i = 2; i < n - 2; ++i) word_u.push_back(nm(i, i + 1));
    word_u.push_back(nm(n - 2, n - 1));
    word_u.push_back(nm(n - 1, n - 2));
    for (int i = n - 2; i > 2; --i) word_u.push_back(nm(i, i - 1));
    word_u.push_back(nm(2, 0));
    word_v.push_back(nm(0, 2));
    for (int i = 2; i < n - 2; ++i) word_v.push_back(nm(i, i + 1));
    word_v.push_back(nm(n - 2, n));
    word_v.push_back(nm(n, n - 2));
    for (int i = n - 2; i > 2; --i) word_v.push_back(nm(i, i - 1));
    word_v.push_back(nm(2, 0));

    std::vector<std::array<std::complex<double>, 3>> kept;  // (x, y, z) per sample
    int max_rank_seen = -1;
    std::vector<int> sample_rank(static_cast<std::size_t>(opt.samples), 0);
    std::vector<std::vector<detail::cmat>> sample_mats;

    for (int s = 0; s < opt.samples; ++s) {
        std::vector<detail::cmat> mats(static_cast<std::size_t>(dq.n_arrows()));
        for (int a = 0; a < dq.n_arrows(); ++a) {
            const arrow& ar = dq.arrow_at(a);
            mats[static_cast<std::size_t>(a)] =
                detail::cmat::Zero(static_cast<int>(delta[ar.tgt]), static_cast<int>(delta[ar.src]));
        }
        for (const auto& [i, j] : fwd) {
            int a = dq.arrow_index(nm(i, j));
            auto& m = mats[static_cast<std::size_t>(a)];
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m(r, c) = opt.zero_samples ? 0.0 : random_entry();
        }

        // linear system for the backward arrows: moment map components
        detail::cmat sys = detail::cmat::Zero(neqs, nvars);
        for (std::size_t k = 0; k < fwd.size(); ++k) {
            const auto& [i, j] = fwd[k];
            int fa = dq.arrow_index(nm(i, j));
            const detail::cmat& X = mats[static_cast<std::size_t>(fa)];
            const int dt = static_cast<int>(delta[j]), ds = static_cast<int>(delta[i]);
            // +X Y at vertex j, entries (r,c) of dt x dt
            for (int r = 0; r < dt; ++r)
                for (int c = 0; c < dt; ++c)
                    for (int m = 0; m < ds; ++m)
                        sys(eq_off[static_cast<std::size_t>(j)] + r * dt + c, bwd_off[k] + m * dt + c) += X(r, m);
            // -Y X at vertex i, entries (r,c) of ds x ds
            for (int r = 0; r < ds; ++r)
                for (int c = 0; c < ds; ++c)
                    for (int m = 0; m < dt; ++m)
                        sys(eq_off[static_cast<std::size_t>(i)] + r * ds + c, bwd_off[k] + r * dt + m) -= X(m, c);
        }
        Eigen::FullPivLU<detail::cmat> lu(sys);
        lu.setThreshold(1e-9);
        sample_rank[static_cast<std::size_t>(s)] = static_cast<int>(lu.rank());
        max_rank_seen = std::max(max_rank_seen, static_cast<int>(lu.rank()));
        detail::cmat kernel = lu.kernel();
        // random kernel combination (consumes rng deterministically)
        detail::cmat y = detail::cmat::Zero(nvars, 1);
        for (int c = 0; c < kernel.cols(); ++c) y += kernel.col(c) * random_entry();
        if (opt.zero_samples) y.setZero();
        // Y entry (r,c) sits at variable index r * cols + c
        for (std::size_t k = 0; k < bwd_arrow.size(); ++k) {
            auto& m = mats[static_cast<std::size_t>(bwd_arrow[k])];
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m(r, c) = y(bwd_off[k] + r * static_cast<int>(m.cols()) + c, 0);
        }
        sample_mats.push_back(std::move(mats));
    }

    // keep only samples whose linear solve has the generic (maximal) rank
    dn_report rep;
    rep.n = n;
    std::vector<std::array<std::complex<double>, 3>> points;
    for (int s = 0; s < opt.samples; ++s) {
        if (sample_rank[static_cast<std::size_t>(s)] != max_rank_seen) continue;
        const auto& mats = sample_mats[static_cast<std::size_t>(s)];
        std::complex<double> y = detail::word_matrix(dq, mats, word_y).trace();
        std::complex<double> x = detail::word_matrix(dq, mats, word_x).trace();
        std::complex<double> u = detail::word_matrix(dq, mats, word_u).trace();
        std::complex<double> v = detail::word_matrix(dq, mats, word_v).trace();
        points.push_back({x, y, u - v});
    }
    rep.samples_kept = static_cast<int>(points.size());
    rep.points = points;

    detail::cmat rows(3, static_cast<int>(points.size()));
    for (std::size_t s = 0; s < points.size(); ++s) {
        const auto& [x, y, z] = points[s];
        std::complex<double> yn = 1.0;
        for (int k = 0; k < n - 1; ++k) yn *= y;
        rows(0, static_cast<int>(s)) = x * x;
        rows(1, static_cast<int>(s)) = yn;
        rows(2, static_cast<int>(s)) = y * z * z;
    }
    if (rows.norm() < 1e-12)
        throw degenerate_sampling_error("dn_singularity_check: all sampled trace rows vanish");

    Eigen::JacobiSVD<detail::cmat> svd(rows);
    auto sv = svd.singularValues();
    for (int i = 0; i < sv.size(); ++i) rep.singular_values.push_back(sv(i));
    rep.sv_ratio = (sv(0) > 0.0) ? sv(sv.size() - 1) / sv(0) : 0.0;
    rep.pass = rep.sv_ratio < 1e-6;
    return rep;
}

}  // namespace coha
