#pragma once

// Exact path-algebra arithmetic: potentials, cyclic derivatives, the
// canonical cubic potential of a triple quiver, preprojective relations and
// quasi-homogeneity of potentials under torus weights on the arrows.
//
// Path composition reads left to right: in a word a1...ar consecutive arrows
// satisfy tgt(a_k) = src(a_{k+1}).  This is the convention under which the
// D_n trace words x_{2,0}x_{0,2} etc. compose; it is applied everywhere.

#include <coha/numeric.hpp>
#include <coha/quiver.hpp>

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coha {

struct path {
    int base = -1;           // >= 0: lazy path e_base, arrows empty
    std::vector<int> arrows;  // arrow indices, nonempty iff base < 0

    bool lazy() const { return base >= 0; }
    int length() const { return static_cast<int>(arrows.size()); }
    friend auto operator<=>(const path&, const path&) = default;
};

inline int path_src(const quiver& q, const path& p) {
    return p.lazy() ? p.base : q.arrow_at(p.arrows.front()).src;
}
inline int path_tgt(const quiver& q, const path& p) {
    return p.lazy() ? p.base : q.arrow_at(p.arrows.back()).tgt;
}
inline bool path_is_cycle(const quiver& q, const path& p) { return path_src(q, p) == path_tgt(q, p); }

inline bool path_composable(const quiver& q, const path& p) {
    if (p.lazy()) return true;
    if (p.arrows.empty()) return false;
    for (std::size_t k = 0; k + 1 < p.arrows.size(); ++k)
        if (q.arrow_at(p.arrows[k]).tgt != q.arrow_at(p.arrows[k + 1]).src) return false;
    return true;
}

inline std::string path_to_string(const quiver& q, const path& p) {
    if (p.lazy()) return "e_" + q.vertex_id(p.base);
    std::string s;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += ".";
        s += q.arrow_at(p.arrows[k]).name;
    }
    return s;
}

class path_sum {
public:
    path_sum() = default;
    explicit path_sum(std::shared_ptr<const quiver> q) : q_(std::move(q)) {}

    static path_sum zero(std::shared_ptr<const quiver> q) { return path_sum(std::move(q)); }
    static path_sum lazy(std::shared_ptr<const quiver> q, const std::string& vertex, rational c = 1) {
        path_sum s(q);
        s.add_term(path{q->vertex_index(vertex), {}}, std::move(c));
        return s;
    }
    // e = sum_i e_i, the unit of the path algebra
    static path_sum unit(std::shared_ptr<const quiver> q) {
        path_sum s(q);
        for (int i = 0; i < q->n_vertices(); ++i) s.add_term(path{i, {}}, 1);
        return s;
    }
    static path_sum word(std::shared_ptr<const quiver> q, const std::vector<std::string>& arrow_names,
                         rational c = 1) {
        path p;
        for (const auto& nm : arrow_names) p.arrows.push_back(q->arrow_index(nm));
        if (p.arrows.empty()) throw std::invalid_argument("path_sum::word: empty word (use lazy)");
        if (!path_composable(*q, p))
            throw std::invalid_argument("path_sum::word: arrows are not composable left-to-right");
        path_sum s(q);
        s.add_term(std::move(p), std::move(c));
        return s;
    }

    const std::shared_ptr<const quiver>& quiver_ptr() const { return q_; }
    const quiver& base_quiver() const { return *q_; }
    const std::map<path, rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t n_terms() const { return terms_.size(); }
    rational coeff(const path& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? rational(0) : it->second;
    }

    void add_term(path p, rational c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(p), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend path_sum operator+(const path_sum& a, const path_sum& b) {
        check_same(a, b);
        path_sum r = a;
        for (const auto& [p, c] : b.terms_) r.add_term(p, c);
        return r;
    }
    friend path_sum operator-(const path_sum& a, const path_sum& b) { return a + (rational(-1) * b); }
    friend path_sum operator*(const rational& c, const path_sum& a) {
        path_sum r(a.q_);
        if (c == 0) return r;
        for (const auto& [p, pc] : a.terms_) r.terms_[p] = c * pc;
        return r;
    }
    // bilinear extension of concatenation; incomposable products vanish and
    // the lazy paths act as partial identities
    friend path_sum operator*(const path_sum& a, const path_sum& b) {
        check_same(a, b);
        const quiver& q = *a.q_;
        path_sum r(a.q_);
        for (const auto& [p, pc] : a.terms_)
            for (const auto& [s, sc] : b.terms_) {
                if (path_tgt(q, p) != path_src(q, s)) continue;
                path prod;
                if (p.lazy())
                    prod = s;
                else if (s.lazy())
                    prod = p;
                else {
                    prod = p;
                    prod.arrows.insert(prod.arrows.end(), s.arrows.begin(), s.arrows.end());
                }
                r.add_term(std::move(prod), pc * sc);
            }
        return r;
    }
    friend bool operator==(const path_sum& a, const path_sum& b) {
        check_same(a, b);
        return a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [p, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")" + path_to_string(*q_, p);
        }
        return s;
    }

private:
    static void check_same(const path_sum& a, const path_sum& b) {
        if (a.q_ == b.q_) return;
        if (!a.q_ || !b.q_) throw std::invalid_argument("path_sum: uninitialized operand");
        const quiver &x = *a.q_, &y = *b.q_;
        if (x.vertices() != y.vertices() || x.n_arrows() != y.n_arrows())
            throw std::invalid_argument("path_sum: operands over different quivers");
        for (int i = 0; i < x.n_arrows(); ++i) {
            const arrow &u = x.arrow_at(i), &v = y.arrow_at(i);
            if (u.name != v.name || u.src != v.src || u.tgt != v.tgt)
                throw std::invalid_argument("path_sum: operands over different quivers");
        }
    }

    std::shared_ptr<const quiver> q_;
    std::map<path, rational> terms_;
};

// A potential is a path sum all of whose stored paths are cycles.
class potential {
public:
    potential() = default;
    explicit potential(path_sum s) : sum_(std::move(s)) {
        for (const auto& [p, c] : sum_.terms())
            if (!path_is_cycle(sum_.base_quiver(), p))
                throw std::invalid_argument("potential: non-cycle term " + path_to_string(sum_.base_quiver(), p));
    }
    const path_sum& sum() const { return sum_; }
    const std::shared_ptr<const quiver>& quiver_ptr() const { return sum_.quiver_ptr(); }

private:
    path_sum sum_;
};

// d(a1...ar)/da = sum over occurrences a_i = a of a_{i+1}...a_r a_1...a_{i-1};
// the empty rotation of a length-1 cycle is the lazy path at the loop vertex.
inline path_sum cyclic_derivative(const potential& w, const std::string& arrow_name) {
    const auto& qp = w.quiver_ptr();
    const int a = qp->arrow_index(arrow_name);
    path_sum out(qp);
    for (const auto& [p, c] : w.sum().terms()) {
        if (p.lazy()) continue;
        const int r = p.length();
        for (int i = 0; i < r; ++i) {
            if (p.arrows[static_cast<std::size_t>(i)] != a) continue;
            path rot;
            for (int k = i + 1; k < r; ++k) rot.arrows.push_back(p.arrows[static_cast<std::size_t>(k)]);
            for (int k = 0; k < i; ++k) rot.arrows.push_back(p.arrows[static_cast<std::size_t>(k)]);
            if (rot.arrows.empty()) rot = path{qp->arrow_at(a).src, {}};
            out.add_term(std::move(rot), c);
        }
    }
    return out;
}

// W~ = (sum_i w_i)(sum_a [a,a*]) on the triple quiver, expanded into the
// composable words: sum_a ( w_{s(a)} a a*  -  w_{t(a)} a* a ).
inline potential canonical_cubic(const std::shared_ptr<const quiver>& triple_q, const quiver& base_q) {
    path_sum w(triple_q);
    for (const arrow& a : base_q.arrows()) {
        const std::string star = detail::star_name(a.name);
        const std::string ws = detail::omega_name(base_q.vertex_id(a.src));
        const std::string wt = detail::omega_name(base_q.vertex_id(a.tgt));
        w = w + path_sum::word(triple_q, {ws, a.name, star}, 1);
        w = w + path_sum::word(triple_q, {wt, star, a.name}, -1);
    }
    return potential(std::move(w));
}

inline std::pair<std::shared_ptr<const quiver>, potential> canonical_cubic(const quiver& q) {
    auto tq = std::make_shared<const quiver>(build_triple(q));
    return {tq, canonical_cubic(tq, q)};
}

// rho = sum_a [a, a*] in the double (or triple) quiver of base_q.
inline path_sum preprojective_relation(const std::shared_ptr<const quiver>& doubled, const quiver& base_q) {
    path_sum rho(doubled);
    for (const arrow& a : base_q.arrows()) {
        const std::string star = detail::star_name(a.name);
        rho = rho + path_sum::word(doubled, {a.name, star}, 1);
        rho = rho + path_sum::word(doubled, {star, a.name}, -1);
    }
    return rho;
}

// e_i rho e_i per vertex; the components sum back to rho.
inline std::map<std::string, path_sum> preprojective_components(const quiver& base_q) {
    auto dq = std::make_shared<const quiver>(build_double(base_q));
    path_sum rho = preprojective_relation(dq, base_q);
    std::map<std::string, path_sum> comp;
    for (int i = 0; i < base_q.n_vertices(); ++i) comp.emplace(base_q.vertex_id(i), path_sum::zero(dq));
    for (const auto& [p, c] : rho.terms()) comp.at(dq->vertex_id(path_src(*dq, p))).add_term(p, c);
    return comp;
}

struct dimred_report {
    struct item {
        std::string name;
        bool pass = false;
    };
    std::vector<item> items;
    bool all_pass = true;

    void record(std::string name, bool pass) {
        all_pass = all_pass && pass;
        items.push_back({std::move(name), pass});
    }
};

// Relation-level shadow of Jac(Q~,W~) ~ Pi_Q[w]: the derivative along w_i is
// the preprojective component e_i rho e_i, and the derivatives along a, a*
// are the commutation relations of w = sum_i w_i with a*, a.
inline dimred_report verify_dimensional_reduction_relations(const quiver& base_q) {
    auto [tq, wtilde] = canonical_cubic(base_q);
    dimred_report rep;

    path_sum rho = preprojective_relation(tq, base_q);
    // omega as a path sum on the triple
    path_sum omega(tq);
    for (int i = 0; i < base_q.n_vertices(); ++i)
        omega = omega + path_sum::word(tq, {detail::omega_name(base_q.vertex_id(i))}, 1);

    for (int i = 0; i < base_q.n_vertices(); ++i) {
        const std::string v = base_q.vertex_id(i);
        path_sum lhs = cyclic_derivative(wtilde, detail::omega_name(v));
        path_sum ei = path_sum::lazy(tq, v);
        path_sum rhs = ei * rho * ei;
        rep.record("dW/d" + detail::omega_name(v) + " == e_" + v + " rho e_" + v, lhs == rhs);
    }
    for (const arrow& a : base_q.arrows()) {
        const std::string star = detail::star_name(a.name);
        path_sum astar = path_sum::word(tq, {star}, 1);
        path_sum aa = path_sum::word(tq, {a.name}, 1);
        rep.record("dW/d" + a.name + " == [" + star + ", omega]",
                   cyclic_derivative(wtilde, a.name) == astar * omega - omega * astar);
        rep.record("dW/d" + star + " == [omega, " + a.name + "]",
                   cyclic_derivative(wtilde, star) == omega * aa - aa * omega);
    }
    return rep;
}

// ---- torus weights on arrows ----

// arrow name -> integer weight vector of a fixed rank r >= 1
using weight_assignment = std::map<std::string, std::vector<std::int64_t>>;

inline std::vector<std::int64_t> path_weight(const quiver& q, const path& p, const weight_assignment& w,
                                             int rank) {
    std::vector<std::int64_t> acc(static_cast<std::size_t>(rank), 0);
    for (int a : p.arrows) {
        const auto& wa = w.at(q.arrow_at(a).name);
        if (static_cast<int>(wa.size()) != rank) throw std::invalid_argument("path_weight: rank mismatch");
        for (int k = 0; k < rank; ++k) acc[static_cast<std::size_t>(k)] += wa[static_cast<std::size_t>(k)];
    }
    return acc;
}

// Common weight vector of all stored paths, or nullopt if they differ (or the
// sum is zero, which has no well-defined weight).
inline std::optional<std::vector<std::int64_t>> homogeneous_weight(const path_sum& s, const weight_assignment& w,
                                                                   int rank) {
    std::optional<std::vector<std::int64_t>> common;
    for (const auto& [p, c] : s.terms()) {
        auto pw = path_weight(s.base_quiver(), p, w, rank);
        if (!common)
            common = std::move(pw);
        else if (*common != pw)
            return std::nullopt;
    }
    return common;
}

// Searches for rank-1 integer arrow weights giving every cycle of W one
// common weight >= 1.  The constraints "weight(c) = weight(c0)" are linear in
// the arrow weights; we compute a kernel basis by exact elimination and scan
// it for a vector on which the common weight is nonzero.  Returns nullopt
// when the solution space forces weight 0.
inline std::optional<weight_assignment> solve_positive_weight(const potential& w) {
    const quiver& q = w.quiver_ptr() ? *w.quiver_ptr() : throw std::invalid_argument("solve_positive_weight: empty");
    const int na = q.n_arrows();
    std::vector<std::vector<rational>> occ;  // occurrence-count vector per cycle
    for (const auto& [p, c] : w.sum().terms()) {
        std::vector<rational> row(static_cast<std::size_t>(na), 0);
        for (int a : p.arrows) row[static_cast<std::size_t>(a)] += 1;
        occ.push_back(std::move(row));
    }
    if (occ.empty()) return std::nullopt;

    // constraint matrix: occ[i] - occ[0] for i >= 1
    std::vector<std::vector<rational>> m;
    for (std::size_t i = 1; i < occ.size(); ++i) {
        std::vector<rational> row(static_cast<std::size_t>(na));
        for (int j = 0; j < na; ++j)
            row[static_cast<std::size_t>(j)] = occ[i][static_cast<std::size_t>(j)] - occ[0][static_cast<std::size_t>(j)];
        m.push_back(std::move(row));
    }

    // RREF, then kernel basis from the free columns
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int col = 0; col < na && rank < m.size(); ++col) {
        std::size_t piv = m.size();
        for (std::size_t r = rank; r < m.size(); ++r)
            if (m[r][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        rational inv = rational(1) / m[rank][static_cast<std::size_t>(col)];
        for (auto& x : m[rank]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][static_cast<std::size_t>(col)] == 0) continue;
            rational f = m[r][static_cast<std::size_t>(col)];
            for (int j = 0; j < na; ++j) m[r][static_cast<std::size_t>(j)] -= f * m[rank][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(na), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    for (int free_col = 0; free_col < na; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<rational> v(static_cast<std::size_t>(na), 0);
        v[static_cast<std::size_t>(free_col)] = 1;
        for (std::size_t r = 0; r < rank; ++r)
            v[static_cast<std::size_t>(pivot_col[r])] = -m[r][static_cast<std::size_t>(free_col)];
        rational t = 0;
        for (int j = 0; j < na; ++j) t += occ[0][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
        if (t == 0) continue;
        if (t < 0)
            for (auto& x : v) x = -x;
        integer lcm = 1;
        for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
        weight_assignment out;
        for (int j = 0; j < na; ++j) {
            rational scaled = v[static_cast<std::size_t>(j)] * rational(lcm);
            out[q.arrow_at(j).name] = {static_cast<std::int64_t>(boost::multiprecision::numerator(scaled))};
        }
        return out;
    }
    return std::nullopt;
}

// The affine D_n deformation W0 = x_{2,0} x_{0,2}, a 2-cycle at vertex 2 of
// the double quiver in the labelling of affine_dn_double_quiver.
inline std::pair<std::shared_ptr<const quiver>, potential> dn_deformation_potential(int n) {
    if (n < 4) throw std::invalid_argument("dn_deformation_potential: need n >= 4");
    auto dq = std::make_shared<const quiver>(affine_dn_double_quiver(n));
    path_sum w0 = path_sum::word(dq, {"x_{2,0}", "x_{0,2}"}, 1);
    return {dq, potential(std::move(w0))};
}

}  // namespace coha
