#pragma once

// JSON exchange formats.
//   quiver:        {"vertices": ["0","1"], "arrows": [{"name":"a","src":"0","tgt":"1"}]}
//   potential:     [{"coeff": "p/q", "cycle": ["a","b*"]}]
//   presentation:  {"generators":[{"label":..,"degree":[..],"cohom_degree":0,"multiplicity":1}],
//                   "pairing": [[..]], "serre_pairs": [["G1","G2"],...]? , "free": false?}
//   character:     [{"d":[..],"k":0,"c":"p/q"}]
//   structure table: {"basis":[{"label":..,"degree":[..],"cohom_degree":..}], "cutoff":[..],
//                     "brackets":[{"left":..,"right":..,"value":[{"label":..,"c":"p/q"}]}]}

#include <coha/character.hpp>
#include <coha/lie_presentation.hpp>
#include <coha/path_algebra.hpp>
#include <coha/quiver.hpp>

#include <json.hpp>

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

namespace coha {

using json = nlohmann::ordered_json;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline rational parse_rational(const std::string& s) {
    try {
        return rational(s);
    } catch (const std::exception&) {
        throw parse_error("invalid rational '" + s + "'");
    }
}
inline std::string rational_str(const rational& r) { return r.str(); }

// ---- quiver ----

inline quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw parse_error("quiver: expected object with 'vertices' and 'arrows'");
    std::vector<std::string> vs;
    for (const auto& v : j.at("vertices")) vs.push_back(v.get<std::string>());
    std::vector<std::tuple<std::string, std::string, std::string>> as;
    for (const auto& a : j.at("arrows"))
        as.emplace_back(a.at("name").get<std::string>(), a.at("src").get<std::string>(),
                        a.at("tgt").get<std::string>());
    try {
        return quiver::from_named_arrows(std::move(vs), as);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("quiver: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw parse_error(std::string("quiver: ") + e.what());
    }
}

inline json quiver_to_json(const quiver& q) {
    json j;
    j["vertices"] = q.vertices();
    json arrows = json::array();
    for (const arrow& a : q.arrows())
        arrows.push_back({{"name", a.name}, {"src", q.vertex_id(a.src)}, {"tgt", q.vertex_id(a.tgt)}});
    j["arrows"] = arrows;
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw parse_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

inline quiver load_quiver(const std::string& path) { return quiver_from_json(load_json_file(path)); }

// ---- potential ----

inline potential potential_from_json(const std::shared_ptr<const quiver>& q, const json& j) {
    if (!j.is_array()) throw parse_error("potential: expected an array of {coeff, cycle} terms");
    path_sum s(q);
    for (const auto& term : j) {
        rational c = parse_rational(term.at("coeff").get<std::string>());
        std::vector<std::string> cyc;
        for (const auto& a : term.at("cycle")) cyc.push_back(a.get<std::string>());
        if (cyc.empty()) throw parse_error("potential: empty cycle");
        path_sum w = [&] {
            try {
                return path_sum::word(q, cyc, c);
            } catch (const std::exception& e) {
                throw parse_error(std::string("potential: ") + e.what());
            }
        }();
        for (const auto& [p, pc] : w.terms())
            if (!path_is_cycle(*q, p)) throw parse_error("potential: term is not a cycle");
        s = s + w;
    }
    return potential(std::move(s));
}

inline json potential_to_json(const potential& w) {
    json j = json::array();
    const quiver& q = *w.quiver_ptr();
    for (const auto& [p, c] : w.sum().terms()) {
        json cyc = json::array();
        for (int a : p.arrows) cyc.push_back(q.arrow_at(a).name);
        j.push_back({{"coeff", rational_str(c)}, {"cycle", cyc}});
    }
    return j;
}

// ---- dimension vectors ----

inline dim_vector dim_vector_from_json(const json& j) {
    std::vector<std::int64_t> e;
    for (const auto& v : j) e.push_back(v.get<std::int64_t>());
    return dim_vector(std::move(e));
}
inline json dim_vector_to_json(const dim_vector& d) {
    json j = json::array();
    for (int i = 0; i < d.size(); ++i) j.push_back(d[i]);
    return j;
}

// ---- presentation ----

inline lie_presentation presentation_from_json(const json& j) {
    lie_presentation p;
    if (!j.contains("generators") || !j.contains("pairing"))
        throw parse_error("presentation: expected 'generators' and 'pairing'");
    for (const auto& g : j.at("generators")) {
        graded_generator gg;
        gg.label = g.at("label").get<std::string>();
        gg.degree = dim_vector_from_json(g.at("degree"));
        gg.cohom_degree = g.value("cohom_degree", 0);
        gg.multiplicity = g.value("multiplicity", 1);
        p.generators.push_back(std::move(gg));
    }
    std::vector<std::vector<integer>> m;
    for (const auto& row : j.at("pairing")) {
        std::vector<integer> r;
        for (const auto& v : row) r.push_back(integer(v.get<std::int64_t>()));
        m.push_back(std::move(r));
    }
    p.pairing = int_bilinear_form(std::move(m));
    if (j.contains("serre_pairs")) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& pr : j.at("serre_pairs"))
            pairs.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
        p.explicit_pairs = std::move(pairs);
    }
    p.no_relations = j.value("free", false);
    p.validate();
    return p;
}

inline lie_presentation load_presentation(const std::string& path) {
    return presentation_from_json(load_json_file(path));
}

// ---- character ----

inline character character_from_json(const json& j, const dim_vector& cutoff, int kmin, int kmax) {
    character c(cutoff, kmin, kmax);
    for (const auto& t : j)
        c.add(dim_vector_from_json(t.at("d")), t.at("k").get<int>(), parse_rational(t.at("c").get<std::string>()));
    return c;
}
inline json character_to_json(const character& c) {
    json j = json::array();
    for (const auto& [key, v] : c.coeffs())
        j.push_back({{"d", dim_vector_to_json(key.first)}, {"k", key.second}, {"c", rational_str(v)}});
    return j;
}

// ---- structure table ----

inline json structure_table_to_json(const structure_table& t) {
    json j;
    json basis = json::array();
    for (const auto& b : t.basis)
        basis.push_back(
            {{"label", b.label}, {"degree", dim_vector_to_json(b.degree)}, {"cohom_degree", b.cohom_degree}});
    j["basis"] = basis;
    j["cutoff"] = dim_vector_to_json(t.cutoff);
    json rows = json::array();
    for (const auto& r : t.rows) {
        json value = json::array();
        for (const auto& [label, c] : r.value) value.push_back({{"label", label}, {"c", rational_str(c)}});
        rows.push_back({{"left", r.left}, {"right", r.right}, {"value", value}});
    }
    j["brackets"] = rows;
    return j;
}

inline structure_table structure_table_from_json(const json& j) {
    structure_table t;
    for (const auto& b : j.at("basis"))
        t.basis.push_back({b.at("label").get<std::string>(), dim_vector_from_json(b.at("degree")),
                           b.at("cohom_degree").get<int>()});
    t.cutoff = dim_vector_from_json(j.at("cutoff"));
    for (const auto& r : j.at("brackets")) {
        structure_table::row row;
        row.left = r.at("left").get<std::string>();
        row.right = r.at("right").get<std::string>();
        for (const auto& v : r.at("value"))
            row.value.emplace_back(v.at("label").get<std::string>(), parse_rational(v.at("c").get<std::string>()));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace coha
