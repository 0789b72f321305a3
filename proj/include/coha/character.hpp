#pragma once

// Truncated bigraded characters: cohomological degree q (integer band) times
// dimension-vector degree t^d (componentwise cutoff).  Arithmetic silently
// truncates to the declared window; reading a coefficient outside it throws.

#include <coha/lie_presentation.hpp>
#include <coha/numeric.hpp>
#include <coha/quiver.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace coha {

class character {
public:
    character() = default;
    character(dim_vector cutoff, int kmin, int kmax) : cutoff_(std::move(cutoff)), kmin_(kmin), kmax_(kmax) {
        if (kmin_ > kmax_) throw std::invalid_argument("character: empty cohomological band");
    }
    static character unit(dim_vector cutoff, int kmin, int kmax) {
        character c(std::move(cutoff), kmin, kmax);
        c.add(dim_vector::zero(c.cutoff_.size()), 0, 1);
        return c;
    }

    const dim_vector& cutoff() const { return cutoff_; }
    int kmin() const { return kmin_; }
    int kmax() const { return kmax_; }
    const std::map<std::pair<dim_vector, int>, rational>& coeffs() const { return c_; }

    bool in_window(const dim_vector& d, int k) const { return d.leq(cutoff_) && k >= kmin_ && k <= kmax_; }

    rational coeff(const dim_vector& d, int k) const {
        if (!in_window(d, k))
            throw std::out_of_range("character: coefficient outside the declared cutoff/band window");
        auto it = c_.find({d, k});
        return it == c_.end() ? rational(0) : it->second;
    }

    // truncating add: contributions outside the window are dropped
    void add(const dim_vector& d, int k, const rational& v) {
        if (v == 0 || !in_window(d, k)) return;
        auto [it, ins] = c_.emplace(std::make_pair(d, k), v);
        if (!ins) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    bool zero_d0_slice() const {
        for (const auto& [key, v] : c_)
            if (key.first.is_zero()) return false;
        return true;
    }

    friend character operator+(const character& a, const character& b) {
        check_window(a, b);
        character r = a;
        for (const auto& [key, v] : b.c_) r.add(key.first, key.second, v);
        return r;
    }
    friend character operator*(const rational& f, const character& a) {
        character r(a.cutoff_, a.kmin_, a.kmax_);
        for (const auto& [key, v] : a.c_) r.add(key.first, key.second, f * v);
        return r;
    }
    friend character operator*(const character& a, const character& b) {
        check_window(a, b);
        character r(a.cutoff_, a.kmin_, a.kmax_);
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_) r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    friend bool operator==(const character& a, const character& b) {
        check_window(a, b);
        return a.c_ == b.c_;
    }

private:
    static void check_window(const character& a, const character& b) {
        if (!(a.cutoff_ == b.cutoff_) || a.kmin_ != b.kmin_ || a.kmax_ != b.kmax_)
            throw std::invalid_argument("character: mismatched truncation windows");
    }

    dim_vector cutoff_;
    int kmin_ = 0, kmax_ = 0;
    std::map<std::pair<dim_vector, int>, rational> c_;
};

// Adams operation psi_n: (q,t) -> (q^n, t^n); in the signed (super) variant an
// odd-degree class picks up the sign (-1)^{(n+1)k}, which makes Exp produce
// exterior algebras on odd classes.
inline character adams(const character& f, int n, bool signed_mode) {
    character r(f.cutoff(), f.kmin(), f.kmax());
    for (const auto& [key, v] : f.coeffs()) {
        const auto& [d, k] = key;
        rational c = v;
        if (signed_mode && (k & 1) && (n % 2 == 0)) c = -c;
        r.add(static_cast<std::int64_t>(n) * d, n * k, c);
    }
    return r;
}

// Exp(f) = exp(sum_n psi_n(f)/n), the character of Sym (super-Sym when
// signed) of the graded space with character f.  Requires zero d=0 slice.
inline character plethystic_exp(const character& f, bool signed_mode = true) {
    if (!f.zero_d0_slice()) throw std::invalid_argument("plethystic_exp: nonzero d=0 slice");
    const std::int64_t nmax = f.cutoff().total();
    character g(f.cutoff(), f.kmin(), f.kmax());
    for (std::int64_t n = 1; n <= std::max<std::int64_t>(nmax, 1); ++n)
        g = g + rational(1, n) * adams(f, static_cast<int>(n), signed_mode);

    character result = character::unit(f.cutoff(), f.kmin(), f.kmax());
    character term = character::unit(f.cutoff(), f.kmin(), f.kmax());
    for (std::int64_t m = 1; m <= std::max<std::int64_t>(nmax, 1); ++m) {
        term = rational(1, m) * (term * g);
        if (term.coeffs().empty()) break;
        result = result + term;
    }
    return result;
}

// Multiply by (1/(1-q^2))^rank: the character of tensoring with a polynomial
// ring on `rank` generators of cohomological degree 2.
inline character tensor_polynomial_ring(const character& f, int rank) {
    if (rank < 1) throw std::invalid_argument("tensor_polynomial_ring: rank must be >= 1");
    character series(f.cutoff(), f.kmin(), f.kmax());
    for (int k = 0; k <= f.kmax(); k += 2) series.add(dim_vector::zero(f.cutoff().size()), k, 1);
    character r = f;
    for (int i = 0; i < rank; ++i) r = r * series;
    return r;
}

// ---- PBW character identity ----

struct pbw_report {
    bool pass = true;
    std::string witness;
};

// char U(n[u]) two ways: (a) Exp(n_char * 1/(1-q^2)) (PBW: U = Sym as graded
// objects), (b) direct enumeration of PBW monomials: multisets of
// (basis slot, u-power) letters, odd letters used at most once.
inline pbw_report pbw_character_check(const character& n_char) {
    if (!n_char.zero_d0_slice()) throw std::invalid_argument("pbw_character_check: nonzero d=0 slice");
    character exp_side = plethystic_exp(tensor_polynomial_ring(n_char, 1), true);

    struct letter {
        dim_vector d;
        int k = 0;
        bool odd = false;
    };
    std::vector<letter> letters;
    for (const auto& [key, v] : n_char.coeffs()) {
        const auto& [d, k] = key;
        if (boost::multiprecision::denominator(v) != 1 || v < 0)
            throw std::invalid_argument("pbw_character_check: character is not a dimension series");
        long copies = static_cast<long>(boost::multiprecision::numerator(v));
        for (long c = 0; c < copies; ++c)
            for (int p = 0; k + 2 * p <= n_char.kmax(); ++p) letters.push_back({d, k + 2 * p, (k & 1) != 0});
    }

    character direct(n_char.cutoff(), n_char.kmin(), n_char.kmax());
    dim_vector dacc = dim_vector::zero(n_char.cutoff().size());
    auto rec = [&](auto&& self, std::size_t li, int kacc) -> void {
        if (li == letters.size()) {
            direct.add(dacc, kacc, 1);
            return;
        }
        const letter& L = letters[li];
        self(self, li + 1, kacc);  // multiplicity 0
        int m = 0;
        dim_vector saved = dacc;
        while (true) {
            ++m;
            if (L.odd && m > 1) break;
            dacc = dacc + L.d;
            int knew = kacc + m * L.k;
            if (!dacc.leq(n_char.cutoff()) || knew > n_char.kmax()) break;
            self(self, li + 1, knew);
        }
        dacc = saved;
    };
    rec(rec, 0, 0);

    pbw_report rep;
    if (!(exp_side == direct)) {
        rep.pass = false;
        for (const auto& [key, v] : exp_side.coeffs())
            if (direct.coeff(key.first, key.second) != v) {
                rep.witness = "coefficient mismatch at k=" + std::to_string(key.second);
                break;
            }
        if (rep.witness.empty()) rep.witness = "direct side has extra support";
    }
    return rep;
}

// character of a graded_lie_data basis (cohomological degrees as declared)
inline character lie_character(const graded_lie_data& g, int kmin, int kmax) {
    character c(g.cutoff, kmin, kmax);
    for (const auto& b : g.basis) c.add(b.degree, b.cohom_degree, 1);
    return c;
}

}  // namespace coha
