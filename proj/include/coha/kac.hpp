#pragma once

// Kac polynomials a_d(q) two independent ways.
//
// kac_bruteforce: enumerate all d-dimensional representations over F_q,
// partition into GL_d(F_q)-orbits by BFS under elementary generators, and
// test one representative per orbit for absolute indecomposability.  The
// test counts nilpotent elements of End(M): M is absolutely indecomposable
// iff #nilpotents = q^{dim End - 1}.  (End/rad is a product of matrix rings
// over F_{q^m}; nilpotent counting via Fine-Herstein gives
// #nilpotents <= q^{dim End - sum m_i n_i}, with equality to q^{dim End - 1}
// exactly in the local case End/rad = F_q, i.e. dim End - dim rad = 1.)
//
// kac_hua: Hua's generating function.  With <l,m> = sum_k l'_k m'_k on
// partitions and b_l(t) = prod_k prod_{j<=mult_k} (1-t^j),
//   sum_{multipartitions l} prod_{a} q^{<l^{s(a)},l^{t(a)}>}
//     / ( prod_i q^{<l^i,l^i>} b_{l^i}(q^{-1}) ) t^{|l|}
//     = Exp( sum_d a_d(q) t^d / (q-1) ),
// solved for a_d by plethystic log over exact polynomial fractions in q.

#include <coha/counting.hpp>
#include <coha/fq.hpp>
#include <coha/numeric.hpp>
#include <coha/quiver.hpp>
#include <coha/rep_fq.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace coha {

// ---- dense integer polynomials in q and their fractions ----

class qpoly {
public:
    qpoly() = default;
    qpoly(std::initializer_list<integer> c) : c_(c) { trim(); }
    static qpoly constant(integer v) { return qpoly({std::move(v)}); }
    static qpoly monomial(unsigned long deg, integer v = 1) {
        qpoly p;
        p.c_.assign(deg + 1, integer(0));
        p.c_.back() = std::move(v);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<integer>& coeffs() const { return c_; }
    integer coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c_.size())) ? integer(0) : c_[static_cast<std::size_t>(i)];
    }
    const integer& leading() const { return c_.back(); }

    integer eval(const integer& x) const {
        integer r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }
    qpoly subst_power(int n) const {  // q -> q^n
        qpoly r;
        if (is_zero()) return r;
        r.c_.assign(static_cast<std::size_t>(degree()) * n + 1, integer(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * static_cast<std::size_t>(n)] = c_[i];
        r.trim();
        return r;
    }

    friend qpoly operator+(const qpoly& a, const qpoly& b) {
        qpoly r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), integer(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend qpoly operator-(const qpoly& a, const qpoly& b) {
        qpoly r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), integer(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        r.trim();
        return r;
    }
    friend qpoly operator*(const qpoly& a, const qpoly& b) {
        qpoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend bool operator==(const qpoly&, const qpoly&) = default;

    // exact division; throws if not divisible
    qpoly divexact(const qpoly& b) const {
        if (b.is_zero()) throw std::domain_error("qpoly: division by zero");
        qpoly rem = *this, quo;
        if (rem.is_zero()) return quo;
        quo.c_.assign(static_cast<std::size_t>(std::max(0, rem.degree() - b.degree())) + 1, integer(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            integer f = rem.leading() / b.leading();
            if (f * b.leading() != rem.leading()) throw std::domain_error("qpoly: inexact division");
            int shift = rem.degree() - b.degree();
            quo.c_[static_cast<std::size_t>(shift)] = f;
            rem = rem - qpoly::monomial(static_cast<unsigned long>(shift), f) * b;
        }
        if (!rem.is_zero()) throw std::domain_error("qpoly: inexact division");
        quo.trim();
        return quo;
    }

    integer content() const {
        integer g = 0;
        for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
        return g;
    }
    qpoly primitive() const {
        if (is_zero()) return *this;
        integer g = content();
        if (leading() < 0) g = -g;
        qpoly r = *this;
        for (auto& v : r.c_) v /= g;
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<integer> c_;
};

inline qpoly qpoly_gcd(qpoly a, qpoly b) {
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        // pseudo-remainder: lc(b)^(da-db+1) * a mod b
        int da = a.degree(), db = b.degree();
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        qpoly scaled = a;
        integer lb = b.leading();
        for (int k = 0; k < da - db + 1; ++k) scaled = scaled * qpoly::constant(lb);
        qpoly rem = scaled;
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            integer f = rem.leading() / b.leading();
            rem = rem - qpoly::monomial(static_cast<unsigned long>(rem.degree() - b.degree()), f) * b;
        }
        a = b;
        b = rem.primitive();
    }
    return a.primitive();
}

// fraction of integer polynomials in q, kept reduced
class qfrac {
public:
    qfrac() : num_(), den_(qpoly::constant(1)) {}
    qfrac(qpoly n, qpoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    static qfrac from_poly(qpoly p) { return qfrac(std::move(p), qpoly::constant(1)); }
    static qfrac qpower(long e) {
        if (e >= 0) return from_poly(qpoly::monomial(static_cast<unsigned long>(e)));
        return qfrac(qpoly::constant(1), qpoly::monomial(static_cast<unsigned long>(-e)));
    }

    const qpoly& num() const { return num_; }
    const qpoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend qfrac operator+(const qfrac& a, const qfrac& b) {
        return qfrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend qfrac operator-(const qfrac& a, const qfrac& b) {
        return qfrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend qfrac operator*(const qfrac& a, const qfrac& b) { return qfrac(a.num_ * b.num_, a.den_ * b.den_); }
    friend qfrac operator/(const qfrac& a, const qfrac& b) {
        if (b.is_zero()) throw std::domain_error("qfrac: division by zero");
        return qfrac(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const qfrac& a, const qfrac& b) { return (a - b).is_zero(); }

    qfrac subst_power(int n) const { return qfrac(num_.subst_power(n), den_.subst_power(n)); }

    // must be a polynomial
    qpoly to_poly() const { return num_.divexact(den_); }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("qfrac: zero denominator");
        if (num_.is_zero()) {
            den_ = qpoly::constant(1);
            return;
        }
        qpoly g = qpoly_gcd(num_, den_);
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
        // normalize: positive leading coefficient downstairs, integer content
        if (den_.leading() < 0) {
            num_ = num_ * qpoly::constant(-1);
            den_ = den_ * qpoly::constant(-1);
        }
        integer cn = num_.content(), cd = den_.content();
        integer g2 = boost::multiprecision::gcd(cn, cd);
        if (g2 > 1) {
            qpoly inv = qpoly::constant(g2);
            num_ = num_.divexact(inv);
            den_ = den_.divexact(inv);
        }
    }
    qpoly num_, den_;
};

// ---- brute-force Kac polynomial values ----

struct kac_options {
    std::uint64_t max_orbit_space = 1'000'000;  // bound on q^{#entries}
};

namespace detail {

// <l,m> = sum_k l'_k m'_k for partitions written as weakly decreasing parts
inline long partition_pairing(const std::vector<int>& l, const std::vector<int>& m) {
    long total = 0;
    int maxk = 0;
    if (!l.empty()) maxk = std::max(maxk, l.front());
    if (!m.empty()) maxk = std::max(maxk, m.front());
    for (int k = 1; k <= maxk; ++k) {
        long lk = 0, mk = 0;
        for (int part : l)
            if (part >= k) ++lk;
        for (int part : m)
            if (part >= k) ++mk;
        total += lk * mk;
    }
    return total;
}

}  // namespace detail

// number of absolutely indecomposable d-dimensional representations of Q
// over F_q, by exhaustive orbit enumeration
inline integer kac_bruteforce(const quiver& q, const dim_vector& d, std::uint32_t qprime,
                              const kac_options& opt = {}) {
    prime_field F(qprime);
    auto qp = std::make_shared<const quiver>(q);
    std::vector<int> all;
    for (int a = 0; a < q.n_arrows(); ++a) all.push_back(a);
    detail::entry_layout layout(q, d, all);
    std::uint64_t nstates = layout.configurations(qprime, opt.max_orbit_space);
    if (nstates > opt.max_orbit_space)
        throw budget_exceeded_error("kac_bruteforce: orbit space q^" + std::to_string(layout.total) +
                                    " exceeds the budget of " + std::to_string(opt.max_orbit_space));

    auto encode = [&](const quiver_rep_fq& rep) -> std::uint64_t {
        std::uint64_t idx = 0, base = 1;
        for (std::size_t k = 0; k < layout.arrow_ids.size(); ++k) {
            const fq_matrix& m = rep.mats[static_cast<std::size_t>(layout.arrow_ids[k])];
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) {
                    idx += base * m.at(r, c);
                    base *= qprime;
                }
        }
        return idx;
    };

    // per-vertex GL generators: transvections E_{ij}(1) and one primitive
    // diagonal; pairs (g, g^{-1})
    struct vertex_gen {
        int vertex;
        fq_matrix g, ginv;
    };
    std::vector<vertex_gen> gens;
    std::uint32_t prim = F.primitive_root();
    for (int v = 0; v < q.n_vertices(); ++v) {
        int n = static_cast<int>(d[v]);
        if (n == 0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                fq_matrix g = fq_matrix::identity(n), ginv = fq_matrix::identity(n);
                g.at(i, j) = 1;
                ginv.at(i, j) = F.neg(1);
                gens.push_back({v, std::move(g), std::move(ginv)});
            }
        if (qprime > 2) {
            fq_matrix g = fq_matrix::identity(n), ginv = fq_matrix::identity(n);
            g.at(0, 0) = prim;
            ginv.at(0, 0) = F.inv(prim);
            gens.push_back({v, std::move(g), std::move(ginv)});
        }
    }

    std::vector<bool> visited(nstates, false);
    integer count = 0;
    const std::int64_t total_dim = d.total();

    for (std::uint64_t start = 0; start < nstates; ++start) {
        if (visited[start]) continue;
        // BFS the orbit
        std::vector<std::uint64_t> stack{start};
        visited[start] = true;
        quiver_rep_fq rep = zero_rep(qp, F, d);
        while (!stack.empty()) {
            std::uint64_t cur = stack.back();
            stack.pop_back();
            layout.decode(cur, qprime, q, d, rep.mats);
            for (const auto& gen : gens) {
                quiver_rep_fq next = rep;
                for (int a = 0; a < q.n_arrows(); ++a) {
                    const arrow& ar = q.arrow_at(a);
                    if (ar.tgt == gen.vertex)
                        next.mats[static_cast<std::size_t>(a)] =
                            gen.g.mul(F, next.mats[static_cast<std::size_t>(a)]);
                    if (ar.src == gen.vertex)
                        next.mats[static_cast<std::size_t>(a)] =
                            next.mats[static_cast<std::size_t>(a)].mul(F, gen.ginv);
                }
                std::uint64_t ni = encode(next);
                if (!visited[ni]) {
                    visited[ni] = true;
                    stack.push_back(ni);
                }
            }
        }

        // absolute indecomposability of the representative
        layout.decode(start, qprime, q, d, rep.mats);
        auto basis = end_basis(rep);
        const int D = static_cast<int>(basis.size());
        if (D == 0) continue;  // zero module
        std::uint64_t nilpotents = 0, total_elems = 1;
        for (int i = 0; i < D; ++i) total_elems *= qprime;
        std::vector<std::uint32_t> digits(static_cast<std::size_t>(D), 0);
        for (std::uint64_t e = 0; e < total_elems; ++e) {
            std::uint64_t t = e;
            for (int i = 0; i < D; ++i) {
                digits[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t % qprime);
                t /= qprime;
            }
            bool nil = true;
            for (int v = 0; v < q.n_vertices() && nil; ++v) {
                int n = static_cast<int>(d[v]);
                if (n == 0) continue;
                fq_matrix phi(n, n);
                for (int i = 0; i < D; ++i)
                    if (digits[static_cast<std::size_t>(i)])
                        phi = phi.add(F, basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)].scale(
                                             F, digits[static_cast<std::size_t>(i)]));
                if (!phi.nilpotent(F)) nil = false;
            }
            if (nil) ++nilpotents;
        }
        (void)total_dim;
        std::uint64_t expected = 1;
        for (int i = 0; i < D - 1; ++i) expected *= qprime;
        if (nilpotents == expected) ++count;
    }
    return count;
}

// ---- Hua's formula ----

// a_d(q) as an exact integer polynomial, for all 0 < d <= dmax at once
inline std::map<dim_vector, qpoly> kac_hua_upto(const quiver& q, const dim_vector& dmax) {
    const int nv = q.n_vertices();
    // partitions per vertex entry
    std::vector<std::vector<std::vector<int>>> parts(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        for (int k = 0; k <= dmax[i]; ++k) {
            auto pk = partitions_of(k);
            parts[static_cast<std::size_t>(i)].insert(parts[static_cast<std::size_t>(i)].end(), pk.begin(),
                                                      pk.end());
        }
    }

    // t-series with qfrac coefficients, truncated at dmax
    using tseries = std::map<dim_vector, qfrac>;
    auto series_add = [&](tseries& a, const dim_vector& d, const qfrac& v) {
        auto [it, ins] = a.emplace(d, v);
        if (!ins) it->second = it->second + v;
    };
    auto series_mul = [&](const tseries& a, const tseries& b) {
        tseries r;
        for (const auto& [da, va] : a)
            for (const auto& [db, vb] : b) {
                dim_vector s = da + db;
                if (!s.leq(dmax)) continue;
                series_add(r, s, va * vb);
            }
        return r;
    };

    // Hua's sum over multipartitions
    tseries S;
    std::vector<const std::vector<int>*> choice(static_cast<std::size_t>(nv), nullptr);
    auto rec = [&](auto&& self, int vtx) -> void {
        if (vtx == nv) {
            dim_vector deg = dim_vector::zero(nv);
            for (int i = 0; i < nv; ++i) {
                std::int64_t sz = 0;
                for (int part : *choice[static_cast<std::size_t>(i)]) sz += part;
                deg[i] = sz;
            }
            if (!deg.leq(dmax)) return;
            long num_exp = 0;
            for (const arrow& a : q.arrows())
                num_exp += detail::partition_pairing(*choice[static_cast<std::size_t>(a.src)],
                                                     *choice[static_cast<std::size_t>(a.tgt)]);
            long den_exp = 0;
            qpoly bden = qpoly::constant(1);
            long bq_shift = 0;  // b_l(q^{-1}) = prod (q^j - 1)/q^j
            for (int i = 0; i < nv; ++i) {
                const auto& l = *choice[static_cast<std::size_t>(i)];
                den_exp += detail::partition_pairing(l, l);
                // multiplicities
                std::map<int, int> mult;
                for (int part : l) mult[part]++;
                for (const auto& [part, m] : mult)
                    for (int j = 1; j <= m; ++j) {
                        bden = bden * (qpoly::monomial(static_cast<unsigned long>(j)) - qpoly::constant(1));
                        bq_shift += j;
                    }
            }
            qfrac term = qfrac::qpower(num_exp - den_exp + bq_shift) / qfrac::from_poly(bden);
            series_add(S, deg, term);
            return;
        }
        for (const auto& l : parts[static_cast<std::size_t>(vtx)]) {
            choice[static_cast<std::size_t>(vtx)] = &l;
            self(self, vtx + 1);
        }
    };
    rec(rec, 0);

    // L = log S  (S has constant term 1)
    tseries sm1 = S;
    sm1.erase(dim_vector::zero(nv));
    tseries L, power = sm1;
    const std::int64_t maxtot = dmax.total();
    for (std::int64_t m = 1; m <= maxtot && !power.empty(); ++m) {
        qfrac c = qfrac::from_poly(qpoly::constant((m % 2) ? 1 : -1)) /
                  qfrac::from_poly(qpoly::constant(static_cast<long>(m)));
        for (const auto& [dd, v] : power) series_add(L, dd, v * c);
        power = series_mul(power, sm1);
    }

    // Moebius inversion of Exp: f = sum_n mu(n)/n psi_n(L)
    tseries f;
    for (std::int64_t n = 1; n <= maxtot; ++n) {
        int mu = moebius(static_cast<unsigned long>(n));
        if (mu == 0) continue;
        qfrac c = qfrac::from_poly(qpoly::constant(mu)) / qfrac::from_poly(qpoly::constant(static_cast<long>(n)));
        for (const auto& [dd, v] : L) {
            dim_vector nd = static_cast<std::int64_t>(n) * dd;
            if (!nd.leq(dmax)) continue;
            series_add(f, nd, v.subst_power(static_cast<int>(n)) * c);
        }
    }

    // a_d = (q-1) f_d, a polynomial
    std::map<dim_vector, qpoly> out;
    qfrac qm1 = qfrac::from_poly(qpoly({integer(-1), integer(1)}));
    for (const auto& [dd, v] : f) {
        if (dd.is_zero()) continue;
        out[dd] = (v * qm1).to_poly();
    }
    return out;
}

inline qpoly kac_hua(const quiver& q, const dim_vector& d) {
    auto all = kac_hua_upto(q, d);
    auto it = all.find(d);
    return it == all.end() ? qpoly() : it->second;
}

}  // namespace coha
