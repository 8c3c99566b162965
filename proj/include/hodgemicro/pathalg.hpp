#ifndef HODGEMICRO_PATHALG_HPP
#define HODGEMICRO_PATHALG_HPP

#include <hodgemicro/bidegree.hpp>
#include <hodgemicro/matrix.hpp>
#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodgemicro {

/// Arrow of a bigraded quiver. Vertices are 1-based ids.
struct Arrow {
    std::string name;
    std::size_t src = 0;
    std::size_t tgt = 0;
    int cohdeg = 1;
    int adams = 0;
};

struct Quiver {
    std::size_t vertex_count = 0;
    std::vector<Arrow> arrows;

    void validate() const {
        for (const Arrow& a : arrows) {
            if (a.src < 1 || a.src > vertex_count || a.tgt < 1 || a.tgt > vertex_count)
                throw std::invalid_argument("Quiver: arrow endpoint out of range");
            if (a.cohdeg < 1)
                throw std::invalid_argument("Quiver: arrow cohdeg must be positive");
        }
    }
};

/// Composable arrow word. Arrows are listed in application order (index 0
/// acts first); composition is function-style, so the product xy applies y
/// first. A trivial path carries its vertex only.
struct Path {
    std::size_t src = 0;
    std::vector<std::size_t> arrows;

    std::size_t tgt(const Quiver& q) const {
        return arrows.empty() ? src : q.arrows[arrows.back()].tgt;
    }
    int cohdeg(const Quiver& q) const {
        int d = 0;
        for (std::size_t a : arrows) d += q.arrows[a].cohdeg;
        return d;
    }
    int adams(const Quiver& q) const {
        int d = 0;
        for (std::size_t a : arrows) d += q.arrows[a].adams;
        return d;
    }
    friend auto operator<=>(const Path&, const Path&) = default;
};

/// First p, then q. Throws on endpoint mismatch.
inline Path concat(const Quiver& qv, const Path& p, const Path& q) {
    if (p.tgt(qv) != q.src) throw std::invalid_argument("concat: endpoint mismatch");
    Path r = p;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

struct PathTerm {
    Path path;
    Rational coef;
};
using PathCombo = std::vector<PathTerm>;

struct PresentedAlgebra {
    Quiver quiver;
    std::vector<PathCombo> relations;
};

/// Differential maps each listed arrow to a path combination of bidegree
/// (cohdeg+1, same adams); unlisted arrows are closed.
struct DGAlgebra {
    Quiver quiver;
    std::map<std::size_t, PathCombo> differential;
};

namespace detail {

// All paths from src with exact cohdeg budget, lexicographically ordered.
inline void paths_from_rec(const Quiver& q, std::size_t cur, int remaining, Path& acc,
                           std::vector<Path>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].src != cur || q.arrows[a].cohdeg > remaining) continue;
        acc.arrows.push_back(a);
        paths_from_rec(q, q.arrows[a].tgt, remaining - q.arrows[a].cohdeg, acc, out);
        acc.arrows.pop_back();
    }
}

inline std::vector<Path> paths_from(const Quiver& q, std::size_t src, int cohdeg) {
    std::vector<Path> out;
    Path acc{src, {}};
    paths_from_rec(q, src, cohdeg, acc, out);
    return out;
}

inline std::vector<Path> all_paths(const Quiver& q, int cohdeg) {
    std::vector<Path> out;
    for (std::size_t v = 1; v <= q.vertex_count; ++v) {
        std::vector<Path> part = paths_from(q, v, cohdeg);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// Paths with |adams| exactly the given budget (driver for the Ginzburg side).
inline void paths_from_adams_rec(const Quiver& q, std::size_t cur, int remaining,
                                 Path& acc, std::vector<Path>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int w = std::abs(q.arrows[a].adams);
        if (q.arrows[a].src != cur || w == 0 || w > remaining) continue;
        acc.arrows.push_back(a);
        paths_from_adams_rec(q, q.arrows[a].tgt, remaining - w, acc, out);
        acc.arrows.pop_back();
    }
}

inline std::vector<Path> all_paths_abs_adams(const Quiver& q, int abs_adams) {
    std::vector<Path> out;
    for (std::size_t v = 1; v <= q.vertex_count; ++v) {
        Path acc{v, {}};
        paths_from_adams_rec(q, v, abs_adams, acc, out);
    }
    return out;
}

using SparseRow = std::map<std::size_t, Rational>;

// Incremental Gaussian elimination; rows are consumed. Deterministic: pivots
// on the smallest remaining column index of each reduced row.
class SparseEchelon {
  public:
    // Returns true if the row was independent (a new pivot was created).
    bool insert(SparseRow row) {
        reduce(row);
        if (row.empty()) return false;
        std::size_t p = row.begin()->first;
        Rational lead = row.begin()->second;
        for (auto& [c, x] : row) x = x / lead;
        pivots_[p] = std::move(row);
        return true;
    }

    void reduce(SparseRow& row) const {
        for (auto it = row.begin(); it != row.end();) {
            auto pv = pivots_.find(it->first);
            if (pv == pivots_.end()) {
                ++it;
                continue;
            }
            Rational c = it->second;
            for (const auto& [col, x] : pv->second) {
                auto slot = row.find(col);
                if (slot == row.end())
                    row.emplace(col, -(c * x));
                else {
                    slot->second = slot->second - c * x;
                    if (slot->second == Rational(0)) row.erase(slot);
                }
            }
            it = row.lower_bound(pv->first);
        }
    }

    std::size_t rank() const { return pivots_.size(); }
    const std::map<std::size_t, SparseRow>& rows() const { return pivots_; }

  private:
    std::map<std::size_t, SparseRow> pivots_;  // pivot column -> unit row
};

inline std::size_t sparse_rank(std::vector<SparseRow> rows) {
    SparseEchelon ech;
    for (auto& r : rows) ech.insert(std::move(r));
    return ech.rank();
}

}  // namespace detail

/// Dimension of the degree-d part of the quotient algebra: the span of paths
/// of cohomological degree d modulo the two-sided relation ideal.
inline std::size_t graded_dim(const PresentedAlgebra& alg, int degree) {
    if (degree < 0) return 0;
    if (degree == 0) return alg.quiver.vertex_count;
    std::vector<Path> paths = detail::all_paths(alg.quiver, degree);
    std::sort(paths.begin(), paths.end());
    std::map<Path, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;

    detail::SparseEchelon ech;
    for (const PathCombo& rel : alg.relations) {
        if (rel.empty()) continue;
        int dr = rel.front().path.cohdeg(alg.quiver);
        std::size_t sr = rel.front().path.src;
        std::size_t tr = rel.front().path.tgt(alg.quiver);
        if (dr > degree) continue;
        for (int dl = 0; dl + dr <= degree; ++dl) {
            int drr = degree - dr - dl;
            // x * r * y with y ending at src(r) and x starting at tgt(r)
            for (std::size_t v = 1; v <= alg.quiver.vertex_count; ++v) {
                for (const Path& y : detail::paths_from(alg.quiver, v, dl)) {
                    if (y.tgt(alg.quiver) != sr) continue;
                    for (const Path& x : detail::paths_from(alg.quiver, tr, drr)) {
                        detail::SparseRow row;
                        for (const PathTerm& t : rel) {
                            Path w = concat(alg.quiver, concat(alg.quiver, y, t.path), x);
                            row[index.at(w)] = row[index.at(w)] + t.coef;
                        }
                        std::erase_if(row, [](const auto& kv) {
                            return kv.second == Rational(0);
                        });
                        ech.insert(std::move(row));
                    }
                }
            }
        }
    }
    return paths.size() - ech.rank();
}

/// dim of e_j . alg^degree . e_i: paths starting at i and ending at j.
inline std::size_t path_count_table(const PresentedAlgebra& alg, std::size_t i,
                                    std::size_t j, int degree) {
    if (i < 1 || i > alg.quiver.vertex_count || j < 1 || j > alg.quiver.vertex_count)
        throw std::out_of_range("path_count_table: vertex out of range");
    if (degree < 0) return 0;
    if (degree == 0) return i == j ? 1 : 0;
    std::vector<Path> paths;
    for (const Path& p : detail::paths_from(alg.quiver, i, degree))
        if (p.tgt(alg.quiver) == j) paths.push_back(p);
    std::sort(paths.begin(), paths.end());
    std::map<Path, std::size_t> index;
    for (std::size_t k = 0; k < paths.size(); ++k) index[paths[k]] = k;

    detail::SparseEchelon ech;
    for (const PathCombo& rel : alg.relations) {
        if (rel.empty()) continue;
        int dr = rel.front().path.cohdeg(alg.quiver);
        std::size_t sr = rel.front().path.src;
        std::size_t tr = rel.front().path.tgt(alg.quiver);
        for (int dl = 0; dl + dr <= degree; ++dl) {
            int drr = degree - dr - dl;
            for (const Path& y : detail::paths_from(alg.quiver, i, dl)) {
                if (y.tgt(alg.quiver) != sr) continue;
                for (const Path& x : detail::paths_from(alg.quiver, tr, drr)) {
                    if (x.tgt(alg.quiver) != j) continue;
                    detail::SparseRow row;
                    for (const PathTerm& t : rel) {
                        Path w = concat(alg.quiver, concat(alg.quiver, y, t.path), x);
                        row[index.at(w)] = row[index.at(w)] + t.coef;
                    }
                    std::erase_if(row,
                                  [](const auto& kv) { return kv.second == Rational(0); });
                    ech.insert(std::move(row));
                }
            }
        }
    }
    return paths.size() - ech.rank();
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// Zigzag-type algebra of the A_n tree: degree-(1,-1) generators e_{vw} for
/// adjacent pairs, degree-(2,-2) loops w_v; e_{vw}e_{wv} = w_v, all other
/// length-two products vanish.
inline PresentedAlgebra construct_AGamma(std::size_t n) {
    if (n < 1) throw std::invalid_argument("construct_AGamma: n must be >= 1");
    PresentedAlgebra alg;
    alg.quiver.vertex_count = n;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge;  // (v,w) -> e_{vw}
    for (std::size_t v = 1; v <= n; ++v)
        for (std::size_t w : {v - 1, v + 1}) {
            if (w < 1 || w > n) continue;
            // e_{vw} runs w -> v, so that e_{vw} e_{wv} is a loop at v
            edge[{v, w}] = alg.quiver.arrows.size();
            alg.quiver.arrows.push_back(
                {"e" + std::to_string(v) + std::to_string(w), w, v, 1, -1});
        }
    std::vector<std::size_t> loop(n + 1);
    for (std::size_t v = 1; v <= n; ++v) {
        loop[v] = alg.quiver.arrows.size();
        alg.quiver.arrows.push_back({"w" + std::to_string(v), v, v, 2, -2});
    }
    const Quiver& q = alg.quiver;
    auto word2 = [&](std::size_t first, std::size_t second) {
        Path p{q.arrows[first].src, {first, second}};
        return p;
    };
    // every composable length-two word in the generators
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        for (std::size_t b = 0; b < q.arrows.size(); ++b) {
            if (q.arrows[a].tgt != q.arrows[b].src) continue;
            bool a_edge = q.arrows[a].cohdeg == 1;
            bool b_edge = q.arrows[b].cohdeg == 1;
            if (a_edge && b_edge && q.arrows[a].src == q.arrows[b].tgt) {
                // matched pair: e_{vw} e_{wv} = w_v at v = tgt(b)
                std::size_t v = q.arrows[b].tgt;
                PathCombo rel;
                rel.push_back({word2(a, b), Rational(1)});
                rel.push_back({Path{v, {loop[v]}}, Rational(-1)});
                alg.relations.push_back(rel);
            } else {
                alg.relations.push_back({{word2(a, b), Rational(1)}});
            }
        }
    return alg;
}

namespace detail {

// A_n quiver with f_i: i -> i+1 and g_i: i+1 -> i, both of bidegree (1,1).
// Returns arrow indices: f[i] and g[i] for 1 <= i <= n-1.
inline Quiver an_double(std::size_t n, std::vector<std::size_t>& f,
                        std::vector<std::size_t>& g) {
    Quiver q;
    q.vertex_count = n;
    f.assign(n + 1, 0);
    g.assign(n + 1, 0);
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        f[i] = q.arrows.size();
        q.arrows.push_back({"f" + std::to_string(i), i, i + 1, 1, 1});
        g[i] = q.arrows.size();
        q.arrows.push_back({"g" + std::to_string(i), i + 1, i, 1, 1});
    }
    return q;
}

inline Path word(const Quiver& q, std::initializer_list<std::size_t> arrows) {
    Path p;
    p.arrows.assign(arrows);
    p.src = q.arrows[p.arrows.front()].src;
    return p;
}

}  // namespace detail

/// g_1 f_1 and f_i g_i - g_{i+1} f_{i+1} (1 <= i <= n-2).
inline PresentedAlgebra construct_LGamma(std::size_t n) {
    if (n < 2) throw std::invalid_argument("construct_LGamma: n must be >= 2");
    PresentedAlgebra alg;
    std::vector<std::size_t> f, g;
    alg.quiver = detail::an_double(n, f, g);
    const Quiver& q = alg.quiver;
    alg.relations.push_back({{detail::word(q, {f[1], g[1]}), Rational(1)}});
    for (std::size_t i = 1; i + 2 <= n; ++i)
        alg.relations.push_back({{detail::word(q, {g[i], f[i]}), Rational(1)},
                                 {detail::word(q, {f[i + 1], g[i + 1]}), Rational(-1)}});
    return alg;
}

/// f_{n-1} g_{n-1}, f_i g_i - g_{i+1} f_{i+1}, f_{i+1} f_i, g_i g_{i+1}.
inline PresentedAlgebra construct_MGamma(std::size_t n) {
    if (n < 2) throw std::invalid_argument("construct_MGamma: n must be >= 2");
    PresentedAlgebra alg;
    std::vector<std::size_t> f, g;
    alg.quiver = detail::an_double(n, f, g);
    const Quiver& q = alg.quiver;
    alg.relations.push_back({{detail::word(q, {g[n - 1], f[n - 1]}), Rational(1)}});
    for (std::size_t i = 1; i + 2 <= n; ++i) {
        alg.relations.push_back({{detail::word(q, {g[i], f[i]}), Rational(1)},
                                 {detail::word(q, {f[i + 1], g[i + 1]}), Rational(-1)}});
        alg.relations.push_back({{detail::word(q, {f[i], f[i + 1]}), Rational(1)}});
        alg.relations.push_back({{detail::word(q, {g[i + 1], g[i]}), Rational(1)}});
    }
    return alg;
}

/// Truncated polynomial quotient on one vertex: x of the given bidegree with
/// x^power = 0. Used as a Koszulity counterexample.
inline PresentedAlgebra construct_truncated_poly(int power, int cohdeg, int adams) {
    if (power < 2) throw std::invalid_argument("construct_truncated_poly: power >= 2");
    PresentedAlgebra alg;
    alg.quiver.vertex_count = 1;
    alg.quiver.arrows.push_back({"x", 1, 1, cohdeg, adams});
    Path p{1, std::vector<std::size_t>(static_cast<std::size_t>(power), 0)};
    alg.relations.push_back({{p, Rational(1)}});
    return alg;
}

enum class GinzburgOrientation { Forward, Backward };

/// Ginzburg dga of the A_n quiver: doubled arrows g, g* at (1,-1), loops h_v
/// at (1,-2); dg = dg* = 0 and dh_v = g_{v-1} g*_{v-1} - g*_v g_v (terms
/// present when in range). d^2 = 0 is verified on construction.
inline DGAlgebra construct_Ginzburg(
    std::size_t n, GinzburgOrientation orient = GinzburgOrientation::Forward) {
    if (n < 1) throw std::invalid_argument("construct_Ginzburg: n must be >= 1");
    DGAlgebra dga;
    dga.quiver.vertex_count = n;
    std::vector<std::size_t> g(n + 1), gs(n + 1), h(n + 1);
    bool fwd = orient == GinzburgOrientation::Forward;
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        std::size_t a = fwd ? i : i + 1, b = fwd ? i + 1 : i;
        g[i] = dga.quiver.arrows.size();
        dga.quiver.arrows.push_back({"g" + std::to_string(i), a, b, 1, -1});
        gs[i] = dga.quiver.arrows.size();
        dga.quiver.arrows.push_back({"gs" + std::to_string(i), b, a, 1, -1});
    }
    for (std::size_t v = 1; v <= n; ++v) {
        h[v] = dga.quiver.arrows.size();
        dga.quiver.arrows.push_back({"h" + std::to_string(v), v, v, 1, -2});
    }
    const Quiver& q = dga.quiver;
    for (std::size_t v = 1; v <= n; ++v) {
        PathCombo dh;
        // g g* through the edge entering v, minus g* g through the edge leaving v
        std::size_t in = fwd ? v - 1 : v, out = fwd ? v : v - 1;
        if (in >= 1 && in + 1 <= n)
            dh.push_back({detail::word(q, {gs[in], g[in]}), Rational(1)});
        if (out >= 1 && out + 1 <= n)
            dh.push_back({detail::word(q, {g[out], gs[out]}), Rational(-1)});
        if (!dh.empty()) dga.differential[h[v]] = dh;
    }
    return dga;
}

namespace detail {

// Leibniz extension of the differential to a path; generators all have
// cohdeg 1, the Koszul sign counts letters applied after position i.
inline std::map<Path, Rational> d_path(const DGAlgebra& dga, const Path& p) {
    std::map<Path, Rational> out;
    const Quiver& q = dga.quiver;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        auto it = dga.differential.find(p.arrows[i]);
        if (it == dga.differential.end()) continue;
        int after = 0;
        for (std::size_t l = i + 1; l < p.arrows.size(); ++l)
            after += q.arrows[p.arrows[l]].cohdeg;
        Rational sign(after % 2 == 0 ? 1 : -1);
        for (const PathTerm& t : it->second) {
            Path w;
            w.src = p.src;
            w.arrows.assign(p.arrows.begin(), p.arrows.begin() + i);
            w.arrows.insert(w.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
            w.arrows.insert(w.arrows.end(), p.arrows.begin() + i + 1, p.arrows.end());
            out[w] = out[w] + sign * t.coef;
            if (out[w] == Rational(0)) out.erase(w);
        }
    }
    return out;
}

inline void check_d_squared(const DGAlgebra& dga) {
    for (const auto& [a, da] : dga.differential) {
        std::map<Path, Rational> dd;
        for (const PathTerm& t : da) {
            (void)a;
            for (const auto& [p, c] : d_path(dga, t.path)) {
                dd[p] = dd[p] + t.coef * c;
                if (dd[p] == Rational(0)) dd.erase(p);
            }
        }
        if (!dd.empty()) throw std::logic_error("DGAlgebra: d^2 != 0");
    }
}

}  // namespace detail

/// Cohomology dimensions of the free dg path algebra, per bidegree
/// (cohdeg a, adams -b), computed for 0 <= b <= b_cutoff. Splits by path
/// endpoints; exact sparse rank.
inline BidegreeTable dg_cohomology_table(const DGAlgebra& dga, int b_cutoff) {
    if (b_cutoff < 0) throw std::invalid_argument("dg_cohomology_table: bad cutoff");
    detail::check_d_squared(dga);
    const Quiver& q = dga.quiver;
    BidegreeTable table;
    for (int b = 0; b <= b_cutoff; ++b) {
        std::vector<Path> paths = detail::all_paths_abs_adams(q, b);
        // bucket by (src, tgt, cohdeg)
        std::map<std::tuple<std::size_t, std::size_t, int>, std::vector<Path>> bucket;
        for (Path& p : paths) {
            if (p.adams(q) != -b) continue;  // mixed-sign quivers are out of scope
            bucket[{p.src, p.tgt(q), p.cohdeg(q)}].push_back(std::move(p));
        }
        for (auto& [key, list] : bucket) std::sort(list.begin(), list.end());
        for (std::size_t s = 1; s <= q.vertex_count; ++s)
            for (std::size_t t = 1; t <= q.vertex_count; ++t) {
                // ranks of d: cohdeg a -> a+1 within this endpoint block
                std::map<int, std::size_t> rk;
                for (const auto& [key, list] : bucket) {
                    auto [ks, kt, a] = key;
                    if (ks != s || kt != t) continue;
                    auto up = bucket.find({s, t, a + 1});
                    if (up == bucket.end()) continue;
                    std::map<Path, std::size_t> index;
                    for (std::size_t i = 0; i < up->second.size(); ++i)
                        index[up->second[i]] = i;
                    std::vector<detail::SparseRow> rows;
                    for (const Path& p : list) {
                        detail::SparseRow row;
                        for (const auto& [w, c] : detail::d_path(dga, p))
                            row[index.at(w)] = c;
                        if (!row.empty()) rows.push_back(std::move(row));
                    }
                    rk[a] = detail::sparse_rank(std::move(rows));
                }
                for (const auto& [key, list] : bucket) {
                    auto [ks, kt, a] = key;
                    if (ks != s || kt != t) continue;
                    std::size_t r_out = rk.count(a) ? rk[a] : 0;
                    std::size_t r_in = rk.count(a - 1) ? rk[a - 1] : 0;
                    table.add(a, b, list.size() - r_out - r_in);
                }
            }
    }
    return table;
}

inline std::size_t dg_cohomology_dim(const DGAlgebra& dga, int cohdeg, int adams) {
    if (adams > 0) return 0;
    return dg_cohomology_table(dga, -adams).at(cohdeg, -adams);
}

// ---------------------------------------------------------------------------
// Finite-dimensional quotient model and minimal resolutions
// ---------------------------------------------------------------------------

/// Basis-level model of a presented algebra with finite total dimension:
/// per-degree path bases with reduction against the relation ideal, and a
/// structure-constant multiplication.
class FiniteAlgebra {
  public:
    struct Element {
        Path path;  // chosen representative
        std::size_t src, tgt;
        int cohdeg;
        int adams;
    };

    explicit FiniteAlgebra(const PresentedAlgebra& alg, int degree_cap = 64)
        : alg_(alg) {
        alg.quiver.validate();
        int zeros = 0;
        for (int d = 0; d <= degree_cap; ++d) {
            std::size_t dim = build_degree(d);
            if (d > 0 && dim == 0)
                ++zeros;
            else if (d > 0)
                zeros = 0;
            if (zeros == 2) break;  // arrow degrees <= 2: stays zero
        }
        if (top_ + 2 > degree_cap && zeros < 2)
            throw std::invalid_argument("FiniteAlgebra: dimension cap exceeded");
    }

    const Quiver& quiver() const { return alg_.quiver; }
    std::size_t size() const { return basis_.size(); }
    const Element& element(std::size_t i) const { return basis_[i]; }
    int top_degree() const { return top_; }
    std::size_t dim_at(int degree) const {
        std::size_t c = 0;
        for (const Element& e : basis_)
            if (e.cohdeg == degree) ++c;
        return c;
    }
    std::size_t vertex_unit(std::size_t v) const { return unit_[v]; }

    /// Structure constants of element(i) * element(j) (j acts first).
    const std::vector<std::pair<std::size_t, Rational>>& product(std::size_t i,
                                                                 std::size_t j) const {
        auto it = mult_.find({i, j});
        if (it != mult_.end()) return it->second;
        static const std::vector<std::pair<std::size_t, Rational>> zero;
        const Element& x = basis_[i];
        const Element& y = basis_[j];
        if (y.tgt != x.src) return mult_[{i, j}] = zero;
        int d = x.cohdeg + y.cohdeg;
        if (d > top_) return mult_[{i, j}] = zero;
        detail::SparseRow v;
        v[path_index_.at(concat(alg_.quiver, y.path, x.path))] = Rational(1);
        return mult_[{i, j}] = reduce_at(d, std::move(v));
    }

    /// Expands a path-indexed vector at the given degree in the basis.
    std::vector<std::pair<std::size_t, Rational>> reduce_at(int degree,
                                                            detail::SparseRow v) const {
        const DegreeData& dd = degrees_.at(degree);
        dd.ideal.reduce(v);
        std::vector<std::pair<std::size_t, Rational>> out;
        for (const auto& [col, c] : v) out.emplace_back(dd.basis_of_col.at(col), c);
        return out;
    }

  private:
    struct DegreeData {
        std::vector<Path> paths;
        detail::SparseEchelon ideal;
        std::map<std::size_t, std::size_t> basis_of_col;  // path column -> basis index
    };

    std::size_t build_degree(int d) {
        DegreeData dd;
        dd.paths = detail::all_paths(alg_.quiver, d);
        std::sort(dd.paths.begin(), dd.paths.end());
        std::map<Path, std::size_t> index;
        for (std::size_t i = 0; i < dd.paths.size(); ++i) {
            index[dd.paths[i]] = i;
            path_index_[dd.paths[i]] = i;
        }
        for (const PathCombo& rel : alg_.relations) {
            if (rel.empty()) continue;
            int dr = rel.front().path.cohdeg(alg_.quiver);
            std::size_t sr = rel.front().path.src;
            std::size_t tr = rel.front().path.tgt(alg_.quiver);
            if (dr > d) continue;
            for (int dl = 0; dl + dr <= d; ++dl) {
                int drr = d - dr - dl;
                for (std::size_t v = 1; v <= alg_.quiver.vertex_count; ++v)
                    for (const Path& y : detail::paths_from(alg_.quiver, v, dl)) {
                        if (y.tgt(alg_.quiver) != sr) continue;
                        for (const Path& x : detail::paths_from(alg_.quiver, tr, drr)) {
                            detail::SparseRow row;
                            for (const PathTerm& t : rel) {
                                Path w = concat(alg_.quiver,
                                                concat(alg_.quiver, y, t.path), x);
                                row[index.at(w)] = row[index.at(w)] + t.coef;
                            }
                            std::erase_if(row, [](const auto& kv) {
                                return kv.second == Rational(0);
                            });
                            dd.ideal.insert(std::move(row));
                        }
                    }
            }
        }
        std::size_t dim = 0;
        for (std::size_t i = 0; i < dd.paths.size(); ++i) {
            if (dd.ideal.rows().count(i)) continue;
            dd.basis_of_col[i] = basis_.size();
            const Path& p = dd.paths[i];
            basis_.push_back({p, p.src, p.tgt(alg_.quiver), d, p.adams(alg_.quiver)});
            if (d == 0) {
                if (unit_.size() <= p.src) unit_.resize(p.src + 1, 0);
                unit_[p.src] = basis_.size() - 1;
            }
            ++dim;
        }
        if (dim > 0) top_ = d;
        degrees_[d] = std::move(dd);
        return dim;
    }

    PresentedAlgebra alg_;
    std::vector<Element> basis_;
    std::vector<std::size_t> unit_;
    std::map<int, DegreeData> degrees_;
    std::map<Path, std::size_t> path_index_;
    mutable std::map<std::pair<std::size_t, std::size_t>,
                     std::vector<std::pair<std::size_t, Rational>>>
        mult_;
    int top_ = 0;
};

/// One homological step of a minimal graded free resolution of k: the chosen
/// minimal generators, recorded as (vertex, degree).
struct ResolutionStep {
    struct Gen {
        std::size_t vertex;
        int degree;
    };
    std::vector<Gen> gens;
};

namespace detail {

// Free-module bookkeeping for the resolution: component basis element
// (generator slot t, algebra basis element x with src(x) = vertex(t)).
struct FreeBasisElt {
    std::size_t slot;
    std::size_t alg_elt;
};

struct FreeModule {
    std::vector<ResolutionStep::Gen> gens;
    // basis grouped by (total degree, tgt vertex), deterministic order
    std::map<std::pair<int, std::size_t>, std::vector<FreeBasisElt>> blocks;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;  // elt -> pos

    void build(const FiniteAlgebra& fa, int degree_cutoff) {
        for (std::size_t t = 0; t < gens.size(); ++t)
            for (std::size_t e = 0; e < fa.size(); ++e) {
                const FiniteAlgebra::Element& x = fa.element(e);
                if (x.src != gens[t].vertex) continue;
                int d = gens[t].degree + x.cohdeg;
                if (d > degree_cutoff) continue;
                blocks[{d, x.tgt}].push_back({t, e});
            }
        for (auto& [key, list] : blocks)
            for (std::size_t i = 0; i < list.size(); ++i)
                index[{list[i].slot, list[i].alg_elt}] = i;
    }
};

}  // namespace detail

/// Minimal graded free resolution of the augmentation module k, truncated at
/// the homological and internal-degree cutoffs.
inline std::vector<ResolutionStep> minimal_resolution(const PresentedAlgebra& alg,
                                                      int steps, int degree_cutoff) {
    if (steps < 0 || degree_cutoff < 0)
        throw std::invalid_argument("minimal_resolution: bad cutoffs");
    FiniteAlgebra fa(alg, std::max(64, degree_cutoff + 2));
    std::vector<ResolutionStep> out;

    // step 0: P_0 = A, kernel = augmentation ideal
    detail::FreeModule cur;
    for (std::size_t v = 1; v <= alg.quiver.vertex_count; ++v)
        cur.gens.push_back({v, 0});
    out.push_back({cur.gens});
    cur.build(fa, degree_cutoff);

    // kernel basis per (degree, tgt vertex) as sparse vectors over cur blocks
    std::map<std::pair<int, std::size_t>, std::vector<detail::SparseRow>> kernel;
    for (const auto& [key, list] : cur.blocks) {
        if (key.first == 0) continue;
        std::vector<detail::SparseRow>& vecs = kernel[key];
        for (std::size_t i = 0; i < list.size(); ++i) vecs.push_back({{i, Rational(1)}});
    }

    for (int h = 1; h <= steps; ++h) {
        // minimal generators: complement of A+ . kernel inside kernel
        detail::FreeModule next;
        std::map<std::pair<int, std::size_t>, std::vector<detail::SparseRow>> gen_vecs;
        for (auto& [key, vecs] : kernel) {
            auto [d, w] = key;
            detail::SparseEchelon span;
            for (std::size_t e = 0; e < fa.size(); ++e) {
                const FiniteAlgebra::Element& a = fa.element(e);
                if (a.cohdeg < 1 || a.tgt != w) continue;
                auto low = kernel.find({d - a.cohdeg, a.src});
                if (low == kernel.end()) continue;
                auto lowblk = cur.blocks.find({d - a.cohdeg, a.src});
                for (const detail::SparseRow& m : low->second) {
                    detail::SparseRow img;
                    for (const auto& [pos, c] : m) {
                        const detail::FreeBasisElt& fe = lowblk->second[pos];
                        for (const auto& [prod, pc] : fa.product(e, fe.alg_elt)) {
                            std::size_t tp = cur.index.at({fe.slot, prod});
                            img[tp] = img[tp] + c * pc;
                            if (img[tp] == Rational(0)) img.erase(tp);
                        }
                    }
                    span.insert(std::move(img));
                }
            }
            for (const detail::SparseRow& m : vecs) {
                detail::SparseRow r = m;
                span.reduce(r);
                if (r.empty()) continue;
                span.insert(r);
                next.gens.push_back({w, d});
                gen_vecs[key].push_back(m);
            }
        }
        out.push_back({next.gens});
        if (next.gens.empty()) break;
        next.build(fa, degree_cutoff);

        // differential next -> cur, then its kernel per block
        std::map<std::pair<int, std::size_t>, std::vector<detail::SparseRow>> new_kernel;
        // generator slot -> its vector in cur coordinates
        std::vector<detail::SparseRow> images;
        std::vector<std::pair<int, std::size_t>> gen_keys;
        for (auto& [key, vecs] : gen_vecs)
            for (auto& m : vecs) {
                images.push_back(m);
                gen_keys.push_back(key);
            }
        for (const auto& [key, list] : next.blocks) {
            auto [d, w] = key;
            auto curblk = cur.blocks.find(key);
            std::size_t rows_n = curblk == cur.blocks.end() ? 0 : curblk->second.size();
            Matrix mat(rows_n, list.size());
            for (std::size_t cidx = 0; cidx < list.size(); ++cidx) {
                const detail::FreeBasisElt& fe = list[cidx];
                // x . gen_slot with x = fe.alg_elt
                const detail::SparseRow& m = images[fe.slot];
                auto genblk = cur.blocks.find(gen_keys[fe.slot]);
                for (const auto& [pos, c] : m) {
                    const detail::FreeBasisElt& ge = genblk->second[pos];
                    for (const auto& [prod, pc] : fa.product(fe.alg_elt, ge.alg_elt)) {
                        std::size_t tp = cur.index.at({ge.slot, prod});
                        mat(tp, cidx) = mat(tp, cidx) + c * pc;
                    }
                }
            }
            Matrix kb = mat.kernel_basis();
            std::vector<detail::SparseRow>& vecs = new_kernel[key];
            for (std::size_t j = 0; j < kb.cols(); ++j) {
                detail::SparseRow v;
                for (std::size_t i = 0; i < kb.rows(); ++i)
                    if (!(kb(i, j) == Rational(0))) v[i] = kb(i, j);
                if (!v.empty()) vecs.push_back(std::move(v));
            }
            if (vecs.empty()) new_kernel.erase(key);
        }
        cur = std::move(next);
        kernel = std::move(new_kernel);
    }
    return out;
}

/// Bigraded dims of the minimal generators: entry (homological step, degree).
inline BidegreeTable ext_kk_table(const PresentedAlgebra& alg, int steps,
                                  int degree_cutoff) {
    std::vector<ResolutionStep> res = minimal_resolution(alg, steps, degree_cutoff);
    BidegreeTable table;
    for (std::size_t h = 0; h < res.size(); ++h)
        for (const ResolutionStep::Gen& g : res[h].gens)
            table.add(static_cast<int>(h), g.degree, 1);
    return table;
}

enum class KoszulMode { Classical, Adams };

/// Classical: the Ext table is concentrated on the diagonal step = degree.
/// Adams: cohomological degree and Adams weight agree on every arrow (hence
/// on every resolution generator), so dg-Ext sits in He-Wu degree 0.
inline bool koszul_check(const PresentedAlgebra& alg, KoszulMode mode, int cutoff) {
    if (mode == KoszulMode::Classical) {
        BidegreeTable t = ext_kk_table(alg, cutoff, cutoff);
        for (const auto& [key, dim] : t.entries)
            if (key.first != key.second) return false;
        return true;
    }
    for (const Arrow& a : alg.quiver.arrows)
        if (a.cohdeg != std::abs(a.adams)) return false;
    std::vector<ResolutionStep> res = minimal_resolution(alg, cutoff, cutoff);
    for (std::size_t h = 1; h < res.size(); ++h)
        for (const ResolutionStep::Gen& g : res[h].gens)
            if (g.degree < static_cast<int>(h)) return false;
    return true;
}

/// Closed formula for dim L_Gamma^i with p_m = max(n - m, 0):
/// [i even] p_{i/2} + 2 sum_{m = floor(i/2)+1}^{i} p_m.
inline std::size_t lgamma_dim_formula(std::size_t n, int i) {
    if (i < 0) return 0;
    auto p = [&](int m) {
        return m > static_cast<int>(n) ? 0 : static_cast<int>(n) - m;
    };
    int total = i % 2 == 0 ? p(i / 2) : 0;
    for (int m = i / 2 + 1; m <= i; ++m) total += 2 * p(m);
    return static_cast<std::size_t>(total);
}

/// Checks exactness of 0 -> L'(-2) -> L'(-1) + L''(-1) -> L -> k -> 0 in
/// every degree by rank counting. The maps send e_j to g_j, e_j to f_{j-1}
/// and e_j to v_j with v_1 = (0, g_1), v_j = (f_{j-1}, g_j). The perturbed
/// variant drops the g_1 component of v_1 (the "f_0" slot is empty), which
/// must break exactness.
inline bool verify_LGamma_resolution(std::size_t n, bool perturb_v1 = false) {
    if (n < 2) throw std::invalid_argument("verify_LGamma_resolution: n must be >= 2");
    PresentedAlgebra L = construct_LGamma(n);
    FiniteAlgebra fa(L);
    std::vector<std::size_t> f, g;
    detail::an_double(n, f, g);  // arrow indices match construct_LGamma

    auto arrow_elt = [&](std::size_t a) {
        for (std::size_t e = 0; e < fa.size(); ++e)
            if (fa.element(e).path.arrows == std::vector<std::size_t>{a}) return e;
        throw std::logic_error("verify_LGamma_resolution: arrow killed by relations");
    };

    const int top = fa.top_degree() + 2;
    auto make = [&](std::vector<ResolutionStep::Gen> gens) {
        detail::FreeModule m;
        m.gens = std::move(gens);
        m.build(fa, top);
        return m;
    };
    std::vector<ResolutionStep::Gen> gl, gm, gr;
    for (std::size_t j = 1; j <= n; ++j) gl.push_back({j, 0});      // L
    for (std::size_t j = 1; j + 1 <= n; ++j) gm.push_back({j, 1});  // L'(-1)
    for (std::size_t j = 2; j <= n; ++j) gm.push_back({j, 1});      // L''(-1)
    for (std::size_t j = 1; j + 1 <= n; ++j) gr.push_back({j, 2});  // L'(-2)
    detail::FreeModule ml = make(gl), mm = make(gm), mr = make(gr);

    // generator images: lists of (codomain slot, algebra basis element, coef)
    struct Comp {
        std::size_t cslot, elt;
        Rational coef;
    };
    using Image = std::vector<Comp>;
    std::vector<Image> phi(gm.size()), psi(gr.size());
    for (std::size_t j = 1; j + 1 <= n; ++j)
        phi[j - 1] = {{j, arrow_elt(g[j]), Rational(1)}};  // src(g_j) = j+1, ml slot j
    for (std::size_t j = 2; j <= n; ++j)
        phi[n - 1 + (j - 2)] = {{j - 2, arrow_elt(f[j - 1]), Rational(1)}};  // src = j-1
    // v_j = (f_{j-1}, -g_j): the minus makes phi(psi(e_j)) = f_{j-1}g_{j-1} -
    // g_j f_j, zero by the commutation relation
    for (std::size_t j = 1; j + 1 <= n; ++j) {
        if (j == 1) {
            if (!perturb_v1)
                psi[0] = {{n - 1, arrow_elt(g[1]), Rational(-1)}};  // L'' slot of e_2
        } else {
            psi[j - 1] = {{j - 2, arrow_elt(f[j - 1]), Rational(1)},
                          {n - 1 + (j + 1 - 2), arrow_elt(g[j]), Rational(-1)}};
        }
    }

    auto build_matrix = [&](const detail::FreeModule& dom, const detail::FreeModule& cod,
                            const std::vector<Image>& images, int d, std::size_t w) {
        auto domblk = dom.blocks.find({d, w});
        auto codblk = cod.blocks.find({d, w});
        std::size_t ncols = domblk == dom.blocks.end() ? 0 : domblk->second.size();
        std::size_t nrows = codblk == cod.blocks.end() ? 0 : codblk->second.size();
        Matrix mat(nrows, ncols);
        for (std::size_t cidx = 0; cidx < ncols; ++cidx) {
            const detail::FreeBasisElt& fe = domblk->second[cidx];
            for (const Comp& im : images[fe.slot])
                for (const auto& [prod, pc] : fa.product(fe.alg_elt, im.elt)) {
                    std::size_t r = cod.index.at({im.cslot, prod});
                    mat(r, cidx) = mat(r, cidx) + im.coef * pc;
                }
        }
        return mat;
    };

    for (int d = 0; d <= top; ++d)
        for (std::size_t w = 1; w <= n; ++w) {
            Matrix mphi = build_matrix(mm, ml, phi, d, w);
            Matrix mpsi = build_matrix(mr, mm, psi, d, w);
            std::size_t dim_l = mphi.rows(), dim_m = mphi.cols(), dim_r = mpsi.cols();
            if (mpsi.rows() != dim_m) return false;
            std::size_t rphi = mphi.rank();
            std::size_t rpsi = mpsi.rank();
            if (d >= 1 && rphi != dim_l) return false;  // surjectivity onto L+
            if (rpsi != dim_r) return false;            // injectivity
            if (dim_m - rphi != rpsi) return false;     // exactness in the middle
            if (dim_m > 0 && dim_r > 0 && !(mphi * mpsi).is_zero()) return false;
        }
    return true;
}

}  // namespace hodgemicro

#endif
