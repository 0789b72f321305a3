#pragma once

// Quivers, dimension vectors and the integral / mod-2 bilinear forms attached
// to them: Euler form, symmetrized Euler form, the form tau and its
// upper-triangular square root psi used to sign-twist multiplications.
//
// Conventions: vertex and arrow ids are strings; the declaration order fixes
// matrix indexing and the psi tie-break.  double(Q) adds a reversed arrow
// "<name>*" per arrow, triple(Q) additionally one loop "ω_<vertex>" per
// vertex; both suffixes are reserved.

#include <coha/numeric.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace coha {

struct arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

class quiver {
public:
    quiver() = default;
    quiver(std::vector<std::string> vertices, std::vector<arrow> arrows)
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (!vertex_index_.emplace(vertices_[i], static_cast<int>(i)).second)
                throw std::invalid_argument("quiver: duplicate vertex id '" + vertices_[i] + "'");
        }
        for (std::size_t i = 0; i < arrows_.size(); ++i) {
            const arrow& a = arrows_[i];
            if (a.src < 0 || a.src >= n_vertices() || a.tgt < 0 || a.tgt >= n_vertices())
                throw std::invalid_argument("quiver: arrow '" + a.name + "' has an undeclared endpoint");
            if (!arrow_index_.emplace(a.name, static_cast<int>(i)).second)
                throw std::invalid_argument("quiver: duplicate arrow name '" + a.name + "'");
        }
    }

    static quiver from_named_arrows(std::vector<std::string> vertices,
                                    const std::vector<std::tuple<std::string, std::string, std::string>>& arr) {
        std::map<std::string, int> idx;
        for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = static_cast<int>(i);
        std::vector<arrow> as;
        for (const auto& [name, s, t] : arr) {
            auto is = idx.find(s), it = idx.find(t);
            if (is == idx.end() || it == idx.end())
                throw std::invalid_argument("quiver: arrow '" + name + "' has an undeclared endpoint");
            as.push_back({name, is->second, it->second});
        }
        return quiver(std::move(vertices), std::move(as));
    }

    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    int n_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<arrow>& arrows() const { return arrows_; }
    const arrow& arrow_at(int i) const { return arrows_.at(static_cast<std::size_t>(i)); }
    const std::string& vertex_id(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }

    int vertex_index(const std::string& id) const {
        auto it = vertex_index_.find(id);
        if (it == vertex_index_.end()) throw std::out_of_range("quiver: unknown vertex '" + id + "'");
        return it->second;
    }
    int arrow_index(const std::string& name) const {
        auto it = arrow_index_.find(name);
        if (it == arrow_index_.end()) throw std::out_of_range("quiver: unknown arrow '" + name + "'");
        return it->second;
    }
    bool has_arrow(const std::string& name) const { return arrow_index_.count(name) != 0; }

private:
    std::vector<std::string> vertices_;
    std::vector<arrow> arrows_;
    std::map<std::string, int> vertex_index_;
    std::map<std::string, int> arrow_index_;
};

// Dimension vector: nonnegative integral grading indexed by the vertices.
class dim_vector {
public:
    dim_vector() = default;
    explicit dim_vector(std::vector<std::int64_t> e) : entries_(std::move(e)) {
        for (auto v : entries_)
            if (v < 0) throw std::invalid_argument("dim_vector: negative entry");
    }
    static dim_vector zero(int n) { return dim_vector(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }
    static dim_vector unit(int n, int i) {
        auto d = zero(n);
        d.entries_[static_cast<std::size_t>(i)] = 1;
        return d;
    }

    int size() const { return static_cast<int>(entries_.size()); }
    std::int64_t operator[](int i) const { return entries_.at(static_cast<std::size_t>(i)); }
    std::int64_t& operator[](int i) { return entries_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::int64_t>& entries() const { return entries_; }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto v : entries_) s += v;
        return s;
    }
    bool is_zero() const { return total() == 0; }

    friend dim_vector operator+(const dim_vector& a, const dim_vector& b) {
        if (a.size() != b.size()) throw std::invalid_argument("dim_vector: size mismatch");
        dim_vector r = a;
        for (int i = 0; i < b.size(); ++i) r[i] += b[i];
        return r;
    }
    friend dim_vector operator*(std::int64_t k, const dim_vector& d) {
        dim_vector r = d;
        for (auto& v : r.entries_) v *= k;
        return r;
    }
    // componentwise <=
    bool leq(const dim_vector& other) const {
        if (size() != other.size()) throw std::invalid_argument("dim_vector: size mismatch");
        for (int i = 0; i < size(); ++i)
            if ((*this)[i] > other[i]) return false;
        return true;
    }
    friend bool operator==(const dim_vector&, const dim_vector&) = default;
    friend bool operator<(const dim_vector& a, const dim_vector& b) { return a.entries_ < b.entries_; }

private:
    std::vector<std::int64_t> entries_;
};

class int_bilinear_form {
public:
    int_bilinear_form() = default;
    explicit int_bilinear_form(std::vector<std::vector<integer>> m) : m_(std::move(m)) {
        for (const auto& row : m_)
            if (row.size() != m_.size()) throw std::invalid_argument("int_bilinear_form: matrix not square");
    }
    int size() const { return static_cast<int>(m_.size()); }
    const integer& at(int i, int j) const { return m_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }

    integer evaluate(const dim_vector& d, const dim_vector& e) const {
        if (d.size() != size() || e.size() != size())
            throw std::invalid_argument("int_bilinear_form: dimension mismatch");
        integer acc = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) acc += integer(d[i]) * at(i, j) * integer(e[j]);
        return acc;
    }

    int_bilinear_form plus_transpose() const {
        auto m = m_;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j) + at(j, i);
        return int_bilinear_form(std::move(m));
    }
    bool is_symmetric() const {
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < i; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }
    friend bool operator==(const int_bilinear_form&, const int_bilinear_form&) = default;

private:
    std::vector<std::vector<integer>> m_;
};

class mod2_form {
public:
    mod2_form() = default;
    explicit mod2_form(std::vector<std::vector<std::uint8_t>> m) : m_(std::move(m)) {
        for (auto& row : m_) {
            if (row.size() != m_.size()) throw std::invalid_argument("mod2_form: matrix not square");
            for (auto& v : row) v &= 1;
        }
    }
    static mod2_form zero(int n) {
        return mod2_form(std::vector<std::vector<std::uint8_t>>(static_cast<std::size_t>(n),
                                                                std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)));
    }
    int size() const { return static_cast<int>(m_.size()); }
    std::uint8_t at(int i, int j) const { return m_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
    void set(int i, int j, std::uint8_t v) { m_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)) = v & 1; }

    int evaluate(const dim_vector& d, const dim_vector& e) const {
        if (d.size() != size() || e.size() != size()) throw std::invalid_argument("mod2_form: dimension mismatch");
        std::int64_t acc = 0;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) acc += (d[i] & 1) * at(i, j) * (e[j] & 1);
        return static_cast<int>(acc & 1);
    }
    friend mod2_form operator+(const mod2_form& a, const mod2_form& b) {
        if (a.size() != b.size()) throw std::invalid_argument("mod2_form: dimension mismatch");
        mod2_form r = a;
        for (int i = 0; i < a.size(); ++i)
            for (int j = 0; j < a.size(); ++j) r.set(i, j, static_cast<std::uint8_t>(a.at(i, j) ^ b.at(i, j)));
        return r;
    }
    mod2_form transpose() const {
        mod2_form r = *this;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j) r.set(i, j, at(j, i));
        return r;
    }
    friend bool operator==(const mod2_form&, const mod2_form&) = default;

private:
    std::vector<std::vector<std::uint8_t>> m_;
};

struct non_bilinear_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct mixed_signs_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// <d,e> = sum_i d_i e_i - sum_{a} d_{s(a)} e_{t(a)}, as the matrix I - A with
// A[i][j] the number of arrows i -> j.
inline int_bilinear_form euler_form(const quiver& q) {
    const int n = q.n_vertices();
    std::vector<std::vector<integer>> m(static_cast<std::size_t>(n), std::vector<integer>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (const arrow& a : q.arrows()) m[static_cast<std::size_t>(a.src)][static_cast<std::size_t>(a.tgt)] -= 1;
    return int_bilinear_form(std::move(m));
}

inline int_bilinear_form symmetrized_euler(const quiver& q) { return euler_form(q).plus_transpose(); }

namespace detail {
inline std::string star_name(const std::string& base) { return base + "*"; }
inline std::string omega_name(const std::string& vertex) { return "\xcf\x89_" + vertex; }  // "ω_" + vertex
}  // namespace detail

inline quiver build_double(const quiver& q) {
    std::vector<arrow> arrows = q.arrows();
    for (const arrow& a : q.arrows()) {
        std::string sn = detail::star_name(a.name);
        if (q.has_arrow(sn))
            throw std::invalid_argument("build_double: arrow name '" + sn + "' collides with a reserved starred name");
        arrows.push_back({sn, a.tgt, a.src});
    }
    return quiver(q.vertices(), std::move(arrows));
}

inline quiver build_triple(const quiver& q) {
    quiver dbl = build_double(q);
    std::vector<arrow> arrows = dbl.arrows();
    for (int i = 0; i < q.n_vertices(); ++i) {
        std::string on = detail::omega_name(q.vertex_id(i));
        if (q.has_arrow(on))
            throw std::invalid_argument("build_triple: arrow name '" + on + "' collides with a reserved loop name");
        arrows.push_back({on, i, i});
    }
    return quiver(q.vertices(), std::move(arrows));
}

namespace detail {
// tau(d,e) = <d,e> + <d,d><e,e> mod 2, straight from the definition (the
// second term is quadratic before any linearity assumption).
inline int tau_definition(const int_bilinear_form& euler, const dim_vector& d, const dim_vector& e) {
    integer v = euler.evaluate(d, e) + euler.evaluate(d, d) * euler.evaluate(e, e);
    return static_cast<int>(v % 2 != 0);
}
}  // namespace detail

// Builds the matrix of tau on basis vectors and verifies that tau really is
// bilinear mod 2: exact on basis pairs by construction, and checked against
// the quadratic definition on 100 pseudo-random pairs with entries <= 4.
// Raises non_bilinear_error otherwise (happens e.g. for the plain A2 quiver;
// for double and triple quivers the diagonal <d,d> is even and tau is honest).
inline mod2_form tau_form(const quiver& q) {
    const int n = q.n_vertices();
    const int_bilinear_form euler = euler_form(q);
    mod2_form tau = mod2_form::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            tau.set(i, j, static_cast<std::uint8_t>(
                              detail::tau_definition(euler, dim_vector::unit(n, i), dim_vector::unit(n, j))));

    std::mt19937_64 rng(0xc0ffee);
    std::uniform_int_distribution<std::int64_t> entry(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        dim_vector d = dim_vector::zero(n), e = dim_vector::zero(n);
        for (int i = 0; i < n; ++i) {
            d[i] = entry(rng);
            e[i] = entry(rng);
        }
        if (detail::tau_definition(euler, d, e) != tau.evaluate(d, e))
            throw non_bilinear_error(
                "tau_form: <d,d> mod 2 is not additive for this quiver, tau is not bilinear "
                "(supply tau only on double/triple quivers)");
    }
    return tau;
}

// Deterministic solution of psi + psi^T = tau over Z/2: upper triangle copies
// tau, strict lower triangle and diagonal are zero.  Valid because
// tau(d,d) = <d,d> + <d,d>^2 = 0 mod 2.
inline mod2_form solve_psi(const quiver& q) {
    mod2_form tau = tau_form(q);
    mod2_form psi = mod2_form::zero(tau.size());
    for (int i = 0; i < tau.size(); ++i)
        for (int j = i + 1; j < tau.size(); ++j) psi.set(i, j, tau.at(i, j));
    return psi;
}

inline bool verify_psi(const quiver& q, const mod2_form& psi) {
    mod2_form tau = tau_form(q);
    if (psi.size() != tau.size()) throw std::invalid_argument("verify_psi: dimension mismatch");
    return psi + psi.transpose() == tau;
}

inline mod2_form mod2_reduction(const int_bilinear_form& f) {
    mod2_form r = mod2_form::zero(f.size());
    for (int i = 0; i < f.size(); ++i)
        for (int j = 0; j < f.size(); ++j) r.set(i, j, static_cast<std::uint8_t>(f.at(i, j) % 2 != 0));
    return r;
}

// |d| = sum_i r_i d_i for a determinant-line-bundle weight r: all r_i of one
// strict sign, so |d| != 0 off d = 0 and |-| is a monoid homomorphism.
inline integer det_weight(const std::vector<std::int64_t>& r, const dim_vector& d) {
    if (static_cast<int>(r.size()) != d.size()) throw std::invalid_argument("det_weight: dimension mismatch");
    bool any_pos = false, any_nonpos = false;
    for (auto v : r) (v > 0 ? any_pos : any_nonpos) = true;
    if (r.empty() || (any_pos && any_nonpos))
        throw mixed_signs_error("det_weight: weights must be all strictly positive or all strictly negative");
    integer s = 0;
    for (int i = 0; i < d.size(); ++i) s += integer(r[static_cast<std::size_t>(i)]) * d[i];
    return s;
}

// ---- small standard quivers used throughout ----

inline quiver jordan_quiver() { return quiver::from_named_arrows({"v"}, {{"a", "v", "v"}}); }

inline quiver a2_quiver() { return quiver::from_named_arrows({"1", "2"}, {{"a", "1", "2"}}); }

inline quiver a3_quiver() {
    return quiver::from_named_arrows({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
}

inline quiver kronecker_quiver() {
    return quiver::from_named_arrows({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
}

// Affine D_n quiver with the vertex labels 0,...,n: outer vertices 0,1 attach
// to 2 and n-1,n attach to n-2, with a chain 2 - 3 - ... - (n-2) in between.
// Arrow names x_{i,j} follow the labelling used for its double below.
inline quiver affine_dn_quiver(int n) {
    if (n < 4) throw std::invalid_argument("affine_dn_quiver: need n >= 4");
    auto nm = [](int i, int j) { return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };
    std::vector<std::string> vs;
    for (int i = 0; i <= n; ++i) vs.push_back(std::to_string(i));
    std::vector<std::tuple<std::string, std::string, std::string>> as;
    as.emplace_back(nm(0, 2), "0", "2");
    as.emplace_back(nm(1, 2), "1", "2");
    for (int i = 2; i < n - 2; ++i) as.emplace_back(nm(i, i + 1), std::to_string(i), std::to_string(i + 1));
    as.emplace_back(nm(n - 2, n - 1), std::to_string(n - 2), std::to_string(n - 1));
    as.emplace_back(nm(n - 2, n), std::to_string(n - 2), std::to_string(n));
    return quiver::from_named_arrows(std::move(vs), as);
}

// The double of affine D_n with every arrow (forward and backward) named
// x_{i,j}, i.e. the presentation in which the D_n trace relations are written.
inline quiver affine_dn_double_quiver(int n) {
    if (n < 4) throw std::invalid_argument("affine_dn_double_quiver: need n >= 4");
    auto nm = [](int i, int j) { return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };
    std::vector<std::string> vs;
    for (int i = 0; i <= n; ++i) vs.push_back(std::to_string(i));
    std::vector<std::tuple<std::string, std::string, std::string>> as;
    auto both = [&](int i, int j) {
        as.emplace_back(nm(i, j), std::to_string(i), std::to_string(j));
        as.emplace_back(nm(j, i), std::to_string(j), std::to_string(i));
    };
    both(0, 2);
    both(1, 2);
    for (int i = 2; i < n - 2; ++i) both(i, i + 1);
    both(n - 2, n - 1);
    both(n - 2, n);
    return quiver::from_named_arrows(std::move(vs), as);
}

// Indivisible imaginary root of affine D_n: 1 on the four outer vertices,
// 2 on the chain 2..n-2.
inline dim_vector affine_dn_delta(int n) {
    if (n < 4) throw std::invalid_argument("affine_dn_delta: need n >= 4");
    std::vector<std::int64_t> e(static_cast<std::size_t>(n + 1), 2);
    e[0] = e[1] = e[static_cast<std::size_t>(n - 1)] = e[static_cast<std::size_t>(n)] = 1;
    return dim_vector(std::move(e));
}

}  // namespace coha
