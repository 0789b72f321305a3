#pragma once

// Free (super-)Lie algebra machinery over a graded alphabet, in tensor
// coordinates.  Basis: standard-factorization bracketings b(w) of Lyndon
// words w, plus [b(u),b(u)] for Lyndon u of odd cohomological parity.  Both
// families are triangular with lex-least leading word (w, resp. uu), which is
// what the coordinate conversion below relies on.

#include <coha/numeric.hpp>
#include <coha/quiver.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace coha {

struct letter_info {
    std::string label;
    dim_vector degree;
    int cohom_degree = 0;
};

using word = std::vector<int>;
using lie_elem = std::map<word, rational>;  // word -> coefficient

class free_lie_context {
public:
    explicit free_lie_context(std::vector<letter_info> letters) : letters_(std::move(letters)) {
        if (letters_.empty()) return;
        const int n = letters_.front().degree.size();
        for (const auto& l : letters_) {
            if (l.degree.size() != n) throw std::invalid_argument("free_lie_context: mixed degree ranks");
            if (l.degree.is_zero()) throw std::invalid_argument("free_lie_context: generator of degree 0");
        }
    }

    const std::vector<letter_info>& letters() const { return letters_; }
    int parity(int letter) const { return letters_[static_cast<std::size_t>(letter)].cohom_degree & 1; }
    int word_parity(const word& w) const {
        int p = 0;
        for (int l : w) p ^= parity(l);
        return p;
    }
    int word_cohom_degree(const word& w) const {
        int d = 0;
        for (int l : w) d += letters_[static_cast<std::size_t>(l)].cohom_degree;
        return d;
    }
    dim_vector word_degree(const word& w) const {
        dim_vector d = dim_vector::zero(letters_.front().degree.size());
        for (int l : w) d = d + letters_[static_cast<std::size_t>(l)].degree;
        return d;
    }
    std::string word_label(const word& w) const {
        std::string s;
        for (int l : w) s += letters_[static_cast<std::size_t>(l)].label;
        return s;
    }

    static bool is_lyndon(const word& w) {
        if (w.empty()) return false;
        for (std::size_t i = 1; i < w.size(); ++i) {
            word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
            if (!(w < suffix)) return false;
        }
        return true;
    }

    // all words of the given multidegree, sorted lexicographically
    const std::vector<word>& words_of_degree(const dim_vector& d) const {
        auto it = word_cache_.find(d);
        if (it != word_cache_.end()) return it->second;
        std::vector<word> out;
        word cur;
        auto rec = [&](auto&& self, const dim_vector& rest) -> void {
            if (rest.is_zero()) {
                if (!cur.empty()) out.push_back(cur);
                return;
            }
            for (int l = 0; l < static_cast<int>(letters_.size()); ++l) {
                const dim_vector& dl = letters_[static_cast<std::size_t>(l)].degree;
                if (!dl.leq(rest)) continue;
                dim_vector next = rest;
                for (int i = 0; i < next.size(); ++i) next[i] -= dl[i];
                cur.push_back(l);
                self(self, next);
                cur.pop_back();
            }
        };
        rec(rec, d);
        std::sort(out.begin(), out.end());
        return word_cache_.emplace(d, std::move(out)).first->second;
    }

    // super-commutator of homogeneous-word sums
    lie_elem bracket(const lie_elem& x, const lie_elem& y) const {
        lie_elem out;
        for (const auto& [wx, cx] : x)
            for (const auto& [wy, cy] : y) {
                word xy = wx;
                xy.insert(xy.end(), wy.begin(), wy.end());
                word yx = wy;
                yx.insert(yx.end(), wx.begin(), wx.end());
                rational c = cx * cy;
                add_to(out, xy, c);
                int sign = (word_parity(wx) && word_parity(wy)) ? 1 : 0;
                add_to(out, yx, sign ? c : -c);
            }
        return out;
    }

    static void add_to(lie_elem& e, const word& w, const rational& c) {
        if (c == 0) return;
        auto [it, ins] = e.emplace(w, c);
        if (!ins) {
            it->second += c;
            if (it->second == 0) e.erase(it);
        }
    }

    lie_elem letter_elem(int l) const { return lie_elem{{word{l}, rational(1)}}; }

    // bracketing along the standard factorization w = uv, v the longest
    // proper Lyndon suffix
    const lie_elem& lyndon_bracketing(const word& w) const {
        auto it = bracketing_cache_.find(w);
        if (it != bracketing_cache_.end()) return it->second;
        lie_elem val;
        if (w.size() == 1) {
            val = letter_elem(w[0]);
        } else {
            std::size_t split = 0;
            for (std::size_t i = 1; i < w.size(); ++i) {
                word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
                if (is_lyndon(suffix)) {
                    split = i;
                    break;
                }
            }
            if (split == 0) throw std::logic_error("lyndon_bracketing: not a Lyndon word");
            word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
            word v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
            val = bracket(lyndon_bracketing(u), lyndon_bracketing(v));
        }
        return bracketing_cache_.emplace(w, std::move(val)).first->second;
    }

    // basis of the free super Lie algebra in one multidegree
    struct basis_entry {
        word w;            // Lyndon word; the element is b(w), or [b(w),b(w)]/1 if square
        bool square = false;
    };
    std::vector<basis_entry> lie_basis(const dim_vector& d) const {
        std::vector<basis_entry> out;
        for (const word& w : words_of_degree(d))
            if (is_lyndon(w)) out.push_back({w, false});
        // odd squares: u Lyndon of odd parity with 2*deg(u) = d
        bool even = true;
        dim_vector half = d;
        for (int i = 0; i < d.size(); ++i) {
            if (d[i] % 2 != 0) {
                even = false;
                break;
            }
            half[i] = d[i] / 2;
        }
        if (even) {
            for (const word& u : words_of_degree(half))
                if (is_lyndon(u) && word_parity(u)) out.push_back({u, true});
        }
        return out;
    }

    lie_elem basis_element(const basis_entry& b) const {
        if (!b.square) return lyndon_bracketing(b.w);
        return bracket(lyndon_bracketing(b.w), lyndon_bracketing(b.w));
    }

    // leading (lex-least) word of a basis element: w itself, or ww
    word leading_word(const basis_entry& b) const {
        if (!b.square) return b.w;
        word ww = b.w;
        ww.insert(ww.end(), b.w.begin(), b.w.end());
        return ww;
    }

    // coordinates of a Lie element on the lie_basis of its degree, by
    // triangular reduction against leading words
    std::vector<rational> to_basis_coords(lie_elem e, const std::vector<basis_entry>& basis) const {
        std::map<word, int> lead_index;
        for (std::size_t i = 0; i < basis.size(); ++i) lead_index[leading_word(basis[i])] = static_cast<int>(i);
        std::vector<rational> coords(basis.size(), 0);
        while (!e.empty()) {
            const word& w = e.begin()->first;
            rational c = e.begin()->second;
            auto it = lead_index.find(w);
            if (it == lead_index.end())
                throw std::logic_error("to_basis_coords: element is not in the free Lie algebra");
            const basis_entry& b = basis[static_cast<std::size_t>(it->second)];
            lie_elem be = basis_element(b);
            rational lead = be.at(w);  // 1 for b(w), 2 for odd squares
            rational f = c / lead;
            coords[static_cast<std::size_t>(it->second)] += f;
            for (const auto& [bw, bc] : be) add_to(e, bw, -f * bc);
        }
        return coords;
    }

private:
    std::vector<letter_info> letters_;
    mutable std::map<dim_vector, std::vector<word>> word_cache_;
    mutable std::map<word, lie_elem> bracketing_cache_;
};

}  // namespace coha
