#ifndef HODGEMICRO_JSONIO_HPP
#define HODGEMICRO_JSONIO_HPP

#include <hodgemicro/bidegree.hpp>
#include <hodgemicro/monodromic.hpp>
#include <hodgemicro/pathalg.hpp>
#include <json.hpp>
#include <stdexcept>
#include <string>

namespace hodgemicro {

using json = nlohmann::json;

/// Rationals travel as strings "p" / "p/q" so nothing is ever rounded.
inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw std::invalid_argument("matrix_from_json: bad row count");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix_from_json: bad column count");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Rational::parse(row[c].get<std::string>());
    }
    return m;
}

inline json tuple_to_json(const MonodromicTuple& t) {
    return json{{"psi", t.psi},
                {"phi", t.phi},
                {"can", matrix_to_json(t.can)},
                {"var", matrix_to_json(t.var)}};
}

inline MonodromicTuple tuple_from_json(const json& j) {
    std::size_t psi = j.at("psi").get<std::size_t>();
    std::size_t phi = j.at("phi").get<std::size_t>();
    return MonodromicTuple(psi, phi, matrix_from_json(j.at("can"), phi, psi),
                           matrix_from_json(j.at("var"), psi, phi));
}

inline json normal_form_to_json(const NormalForm& nf) {
    json blocks = json::array();
    for (const Block& b : nf.blocks)
        blocks.push_back(json{{"kind", kind_name(b.kind)},
                              {"size", b.size},
                              {"shift", b.shift},
                              {"twist_halves", b.twist.halves}});
    return json{{"blocks", std::move(blocks)}};
}

inline NormalForm normal_form_from_json(const json& j) {
    NormalForm nf;
    for (const json& b : j.at("blocks"))
        nf.add(Block(parse_kind(b.at("kind").get<std::string>()),
                     b.at("size").get<std::size_t>(), b.value("shift", 0),
                     HalfTwist{b.value("twist_halves", 0)}));
    return nf;
}

inline json bidegree_table_to_json(const BidegreeTable& t) {
    json rows = json::array();
    for (const auto& [key, dim] : t.entries)
        rows.push_back(json{{"a", key.first}, {"b", key.second}, {"dim", dim}});
    return rows;
}

inline json algebra_to_json(const PresentedAlgebra& alg) {
    json vertices = json::array();
    for (std::size_t v = 1; v <= alg.quiver.vertex_count; ++v) vertices.push_back(v);
    json arrows = json::array();
    for (const Arrow& a : alg.quiver.arrows)
        arrows.push_back(json{{"id", a.name},
                              {"src", a.src},
                              {"tgt", a.tgt},
                              {"deg", json::array({a.cohdeg, a.adams})}});
    json relations = json::array();
    for (const PathCombo& rel : alg.relations) {
        json combo = json::array();
        for (const PathTerm& term : rel) {
            json word = json::array();
            for (std::size_t a : term.path.arrows)
                word.push_back(alg.quiver.arrows[a].name);
            combo.push_back(json{{"path", std::move(word)}, {"coef", term.coef.str()}});
        }
        relations.push_back(std::move(combo));
    }
    return json{{"vertices", std::move(vertices)},
                {"arrows", std::move(arrows)},
                {"relations", std::move(relations)}};
}

}  // namespace hodgemicro

#endif
