#pragma once

// Dimension-vector-graded Lie algebras presented by generators and Serre
// relations ad(G_d)^{1-(d,d')}(G_{d'}), taken over the ordered pairs selected
// by the presentation rule (default: (d,d)=2 or (d,d')=0, distinct letters).
// The quotient is computed degreewise: the ideal slice at a multidegree is
// spanned by the relators there plus brackets of generators with lower ideal
// slices.

#include <coha/lyndon.hpp>
#include <coha/numeric.hpp>
#include <coha/quiver.hpp>

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coha {

struct graded_generator {
    std::string label;
    dim_vector degree;
    int cohom_degree = 0;
    int multiplicity = 1;
};

struct cutoff_too_small_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct lie_presentation {
    std::vector<graded_generator> generators;
    int_bilinear_form pairing;  // symmetric
    // optional explicit list of ordered generator-label pairs; overrides the
    // default Serre rule when set
    std::optional<std::vector<std::pair<std::string, std::string>>> explicit_pairs;
    bool no_relations = false;  // free Lie algebra mode

    void validate() const {
        if (!pairing.is_symmetric()) throw std::invalid_argument("lie_presentation: pairing not symmetric");
        for (const auto& g : generators) {
            if (g.degree.is_zero()) throw std::invalid_argument("lie_presentation: generator of degree 0");
            if (g.multiplicity < 1) throw std::invalid_argument("lie_presentation: multiplicity < 1");
            if (g.degree.size() != pairing.size())
                throw std::invalid_argument("lie_presentation: degree rank != pairing size");
        }
    }
};

struct graded_lie_data {
    struct basis_elem {
        std::string label;
        dim_vector degree;
        int cohom_degree = 0;
    };

    dim_vector cutoff;
    std::vector<basis_elem> basis;
    std::map<dim_vector, std::vector<int>> by_degree;
    // structure constants on basis pairs with degree sum inside the cutoff
    std::map<std::pair<int, int>, std::vector<std::pair<int, rational>>> brackets;

    int dim_at(const dim_vector& d) const {
        auto it = by_degree.find(d);
        return it == by_degree.end() ? 0 : static_cast<int>(it->second.size());
    }
    bool pair_in_cutoff(int i, int j) const {
        return (basis[static_cast<std::size_t>(i)].degree + basis[static_cast<std::size_t>(j)].degree).leq(cutoff);
    }
    const std::vector<std::pair<int, rational>>& bracket_of(int i, int j) const {
        auto it = brackets.find({i, j});
        if (it == brackets.end()) throw std::out_of_range("graded_lie_data: bracket outside cutoff");
        return it->second;
    }
};

namespace detail {

inline std::vector<letter_info> expand_letters(const std::vector<graded_generator>& gens) {
    std::vector<letter_info> letters;
    for (const auto& g : gens) {
        for (int c = 0; c < g.multiplicity; ++c) {
            std::string label = g.label;
            if (g.multiplicity > 1) label += "#" + std::to_string(c + 1);
            letters.push_back({label, g.degree, g.cohom_degree});
        }
    }
    return letters;
}

// enumerate the grid 0 < d <= cutoff sorted by (total degree, lex)
inline std::vector<dim_vector> degree_grid(const dim_vector& cutoff) {
    std::vector<dim_vector> grid;
    dim_vector cur = dim_vector::zero(cutoff.size());
    auto rec = [&](auto&& self, int i) -> void {
        if (i == cutoff.size()) {
            if (!cur.is_zero()) grid.push_back(cur);
            return;
        }
        for (std::int64_t v = 0; v <= cutoff[i]; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    std::sort(grid.begin(), grid.end(), [](const dim_vector& a, const dim_vector& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a < b;
    });
    return grid;
}

// dense row reduction over the rationals; returns pivot column per row
struct dense_rref {
    std::vector<std::vector<rational>> rows;
    std::vector<int> pivot_cols;

    void insert(std::vector<rational> r) {
        reduce(r);
        int p = -1;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) {
                p = static_cast<int>(c);
                break;
            }
        if (p < 0) return;
        rational inv = rational(1) / r[static_cast<std::size_t>(p)];
        for (auto& x : r) x *= inv;
        // back-substitute into existing rows
        for (std::size_t k = 0; k < rows.size(); ++k) {
            rational f = rows[k][static_cast<std::size_t>(p)];
            if (f == 0) continue;
            for (std::size_t c = 0; c < r.size(); ++c) rows[k][c] -= f * r[c];
        }
        rows.push_back(std::move(r));
        pivot_cols.push_back(p);
    }
    void reduce(std::vector<rational>& r) const {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            rational f = r[static_cast<std::size_t>(pivot_cols[k])];
            if (f == 0) continue;
            for (std::size_t c = 0; c < r.size(); ++c) r[c] -= f * rows[k][c];
        }
    }
    std::size_t rank() const { return rows.size(); }
};

}  // namespace detail

// Graded dimensions of the free Lie algebra on the expanded alphabet, via the
// Lyndon basis (plus odd squares when generators carry odd cohomological
// degree).
inline std::map<dim_vector, std::int64_t> free_lie_dims(const std::vector<graded_generator>& gens,
                                                        const dim_vector& cutoff) {
    free_lie_context ctx(detail::expand_letters(gens));
    std::map<dim_vector, std::int64_t> out;
    for (const dim_vector& d : detail::degree_grid(cutoff))
        out[d] = static_cast<std::int64_t>(ctx.lie_basis(d).size());
    return out;
}

// The Serre quotient up to the cutoff: basis (with deterministic labels from
// Lyndon words), graded dimensions and exact rational structure constants.
inline graded_lie_data serre_quotient(const lie_presentation& pres, const dim_vector& cutoff) {
    pres.validate();
    std::vector<letter_info> letters = detail::expand_letters(pres.generators);
    free_lie_context ctx(letters);
    const int nl = static_cast<int>(letters.size());

    // selected ordered pairs of expanded letters
    std::vector<std::pair<int, int>> pairs;
    if (!pres.no_relations) {
        if (pres.explicit_pairs) {
            for (const auto& [la, lb] : *pres.explicit_pairs)
                for (int i = 0; i < nl; ++i)
                    for (int j = 0; j < nl; ++j) {
                        if (i == j) continue;
                        auto base = [](const std::string& s) {
                            auto h = s.find('#');
                            return h == std::string::npos ? s : s.substr(0, h);
                        };
                        if (base(letters[static_cast<std::size_t>(i)].label) == la &&
                            base(letters[static_cast<std::size_t>(j)].label) == lb)
                            pairs.emplace_back(i, j);
                    }
        } else {
            for (int i = 0; i < nl; ++i)
                for (int j = 0; j < nl; ++j) {
                    if (i == j) continue;
                    const dim_vector &di = letters[static_cast<std::size_t>(i)].degree,
                                     &dj = letters[static_cast<std::size_t>(j)].degree;
                    if (pres.pairing.evaluate(di, di) == 2 || pres.pairing.evaluate(di, dj) == 0)
                        pairs.emplace_back(i, j);
                }
        }
    }

    // Serre relators, indexed by their multidegree
    std::map<dim_vector, std::vector<lie_elem>> relators;
    for (const auto& [i, j] : pairs) {
        const dim_vector &di = letters[static_cast<std::size_t>(i)].degree,
                         &dj = letters[static_cast<std::size_t>(j)].degree;
        integer exp_i = 1 - pres.pairing.evaluate(di, dj);
        if (exp_i < 1)
            throw std::invalid_argument("serre_quotient: Serre exponent 1-(d,d') = " + exp_i.str() +
                                        " < 1 for a selected pair");
        long n = static_cast<long>(exp_i);
        dim_vector deg = dj;
        lie_elem r = ctx.letter_elem(j);
        lie_elem xi = ctx.letter_elem(i);
        for (long k = 0; k < n; ++k) {
            r = ctx.bracket(xi, r);
            deg = deg + di;
        }
        if (!deg.leq(cutoff))
            throw cutoff_too_small_error("serre_quotient: relator of degree beyond the cutoff "
                                         "(the quotient would be silently free there)");
        relators[deg].push_back(std::move(r));
    }

    const std::vector<dim_vector> grid = detail::degree_grid(cutoff);

    // ideal slices: per degree, an echelon basis in word coordinates plus a
    // spanning list of lie_elems for the bracket-up step
    std::map<dim_vector, std::vector<lie_elem>> ideal_span;
    std::map<dim_vector, detail::dense_rref> ideal_lyndon;  // in Lyndon coords, for the quotient

    graded_lie_data out;
    out.cutoff = cutoff;
    std::map<dim_vector, std::vector<int>> quotient_rep;  // basis-entry index of each surviving rep

    for (const dim_vector& d : grid) {
        const auto basis = ctx.lie_basis(d);
        const auto& wordlist = ctx.words_of_degree(d);
        std::map<word, int> widx;
        for (std::size_t i = 0; i < wordlist.size(); ++i) widx[wordlist[i]] = static_cast<int>(i);

        auto to_word_row = [&](const lie_elem& e) {
            std::vector<rational> row(wordlist.size(), 0);
            for (const auto& [w, c] : e) row[static_cast<std::size_t>(widx.at(w))] = c;
            return row;
        };

        detail::dense_rref word_rref;
        std::vector<lie_elem> span;
        auto feed = [&](lie_elem e) {
            if (e.empty()) return;
            std::size_t before = word_rref.rank();
            word_rref.insert(to_word_row(e));
            if (word_rref.rank() > before) span.push_back(std::move(e));
        };

        if (auto it = relators.find(d); it != relators.end())
            for (const auto& r : it->second) feed(r);
        for (int l = 0; l < nl; ++l) {
            const dim_vector& dl = letters[static_cast<std::size_t>(l)].degree;
            if (!dl.leq(d)) continue;
            dim_vector rest = d;
            for (int i = 0; i < rest.size(); ++i) rest[i] -= dl[i];
            if (rest.is_zero()) continue;
            auto it = ideal_span.find(rest);
            if (it == ideal_span.end()) continue;
            for (const lie_elem& v : it->second) feed(ctx.bracket(ctx.letter_elem(l), v));
        }

        // ideal slice in Lyndon coordinates, echelonized for the quotient
        detail::dense_rref lyn;
        for (const lie_elem& v : span) lyn.insert(ctx.to_basis_coords(v, basis));
        std::set<int> pivots(lyn.pivot_cols.begin(), lyn.pivot_cols.end());

        std::vector<int> reps;
        for (std::size_t bi = 0; bi < basis.size(); ++bi)
            if (!pivots.count(static_cast<int>(bi))) reps.push_back(static_cast<int>(bi));

        std::vector<int> global;
        for (int bi : reps) {
            const auto& be = basis[static_cast<std::size_t>(bi)];
            std::string label = be.square ? "(" + ctx.word_label(be.w) + ")^2" : ctx.word_label(be.w);
            global.push_back(static_cast<int>(out.basis.size()));
            out.basis.push_back({label, d, ctx.word_cohom_degree(ctx.leading_word(be))});
        }
        out.by_degree[d] = global;
        quotient_rep[d] = reps;
        ideal_span.emplace(d, std::move(span));
        ideal_lyndon.emplace(d, std::move(lyn));
    }

    // structure constants on pairs with in-cutoff degree sum: bracket the
    // free representatives, reduce modulo the ideal slice, read coordinates
    // off the non-pivot Lyndon entries
    for (const dim_vector& d1 : grid)
        for (const dim_vector& d2 : grid) {
            dim_vector sum = d1 + d2;
            if (!sum.leq(cutoff)) continue;
            const auto &idx1 = out.by_degree.at(d1), &idx2 = out.by_degree.at(d2);
            const auto &reps1 = quotient_rep.at(d1), &reps2 = quotient_rep.at(d2);
            const auto basis1 = ctx.lie_basis(d1), basis2 = ctx.lie_basis(d2), basis_sum = ctx.lie_basis(sum);
            const auto& lyn = ideal_lyndon.at(sum);
            const auto& reps_sum = quotient_rep.at(sum);
            std::map<int, int> col_of_rep;
            for (std::size_t k = 0; k < reps_sum.size(); ++k) col_of_rep[reps_sum[k]] = static_cast<int>(k);

            for (std::size_t i = 0; i < reps1.size(); ++i)
                for (std::size_t j = 0; j < reps2.size(); ++j) {
                    lie_elem br = ctx.bracket(ctx.basis_element(basis1[static_cast<std::size_t>(reps1[i])]),
                                              ctx.basis_element(basis2[static_cast<std::size_t>(reps2[j])]));
                    std::vector<rational> coords =
                        br.empty() ? std::vector<rational>(basis_sum.size(), 0) : ctx.to_basis_coords(br, basis_sum);
                    lyn.reduce(coords);
                    std::vector<std::pair<int, rational>> entry;
                    for (std::size_t c = 0; c < coords.size(); ++c) {
                        if (coords[c] == 0) continue;
                        auto it = col_of_rep.find(static_cast<int>(c));
                        if (it == col_of_rep.end())
                            throw std::logic_error("serre_quotient: reduced bracket hit a pivot column");
                        entry.emplace_back(out.by_degree.at(sum)[static_cast<std::size_t>(it->second)], coords[c]);
                    }
                    out.brackets[{idx1[i], idx2[j]}] = std::move(entry);
                }
        }
    return out;
}

// Expands a user-supplied set of primitive simple positive roots into the set
// Phi+ = sigma together with l*d (l >= 2) for isotropic d, within the cutoff.
// Multiplicities default to 1; the override hook supplies e.g. Kac-polynomial
// data for imaginary roots.
inline std::vector<graded_generator> preprojective_root_data(
    const quiver& q, const std::vector<dim_vector>& sigma, const dim_vector& cutoff,
    const std::function<std::optional<int>(const dim_vector&)>& multiplicity_override = nullptr) {
    int_bilinear_form sym = symmetrized_euler(q);
    auto mult = [&](const dim_vector& d) {
        if (multiplicity_override)
            if (auto m = multiplicity_override(d)) return *m;
        return 1;
    };
    std::vector<graded_generator> gens;
    int counter = 0;
    for (const dim_vector& d : sigma) {
        ++counter;
        std::string base = "G" + std::to_string(counter);
        if (!d.leq(cutoff)) continue;
        gens.push_back({base, d, 0, mult(d)});
        if (sym.evaluate(d, d) == 0) {
            for (std::int64_t l = 2;; ++l) {
                dim_vector ld = l * d;
                if (!ld.leq(cutoff)) break;
                gens.push_back({base + "x" + std::to_string(l), ld, 0, mult(ld)});
            }
        }
    }
    return gens;
}

// ---- structure-constant table export (exchange format for current-algebra) ----

struct structure_table {
    struct row {
        std::string left, right;
        std::vector<std::pair<std::string, rational>> value;
    };
    std::vector<graded_lie_data::basis_elem> basis;
    dim_vector cutoff;
    std::vector<row> rows;
};

inline structure_table structure_constants(const graded_lie_data& g) {
    structure_table t;
    t.basis = g.basis;
    t.cutoff = g.cutoff;
    for (const auto& [pair, combo] : g.brackets) {
        structure_table::row r;
        r.left = g.basis[static_cast<std::size_t>(pair.first)].label;
        r.right = g.basis[static_cast<std::size_t>(pair.second)].label;
        for (const auto& [k, c] : combo) r.value.emplace_back(g.basis[static_cast<std::size_t>(k)].label, c);
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline graded_lie_data from_structure_table(const structure_table& t) {
    graded_lie_data g;
    g.cutoff = t.cutoff;
    g.basis = t.basis;
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
        if (!idx.emplace(g.basis[i].label, static_cast<int>(i)).second)
            throw std::invalid_argument("from_structure_table: duplicate basis label");
        g.by_degree[g.basis[i].degree].push_back(static_cast<int>(i));
    }
    for (const auto& r : t.rows) {
        std::vector<std::pair<int, rational>> combo;
        for (const auto& [label, c] : r.value) combo.emplace_back(idx.at(label), c);
        g.brackets[{idx.at(r.left), idx.at(r.right)}] = std::move(combo);
    }
    return g;
}

}  // namespace coha
