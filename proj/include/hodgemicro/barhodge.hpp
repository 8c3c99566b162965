#ifndef HODGEMICRO_BARHODGE_HPP
#define HODGEMICRO_BARHODGE_HPP

#include <hodgemicro/bidegree.hpp>
#include <hodgemicro/rational.hpp>
#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodgemicro {

/// Finite-dimensional graded-commutative algebra with an extra weight
/// grading. Index 0 is the unit; every other basis element must have
/// positive cohomological degree.
struct WeightedAlgebra {
    struct BasisElt {
        std::string name;
        int cohdeg = 0;
        int weight = 0;
    };
    std::vector<BasisElt> basis;
    // (i, j) -> expansion of basis[i] * basis[j]; absent means zero
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>
        mult;

    void validate() const {
        if (basis.empty() || basis[0].cohdeg != 0)
            throw std::invalid_argument("WeightedAlgebra: missing unit");
        for (std::size_t i = 1; i < basis.size(); ++i)
            if (basis[i].cohdeg < 1)
                throw std::invalid_argument("WeightedAlgebra: degree-0 non-unit");
    }
};

/// C[x]/x^{power+1} with deg x^k = deg_x * k, weight x^k = weight_x * k.
inline WeightedAlgebra truncated_weighted(std::size_t power, int deg_x, int weight_x) {
    if (power < 1) throw std::invalid_argument("truncated_weighted: power must be >= 1");
    WeightedAlgebra a;
    for (std::size_t k = 0; k <= power; ++k) {
        std::string name = k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k));
        a.basis.push_back({name, deg_x * static_cast<int>(k), weight_x * static_cast<int>(k)});
    }
    for (std::size_t i = 0; i <= power; ++i)
        for (std::size_t j = 0; j <= power; ++j)
            if (i + j <= power) a.mult[{i, j}] = {{i + j, Rational(1)}};
    a.validate();
    return a;
}

/// H*(P^n): C[x]/x^{n+1} with deg x = weight x = 2.
inline WeightedAlgebra cohomology_ring_Pn(std::size_t n) {
    return truncated_weighted(n, 2, 2);
}

namespace detail {

// word in the augmentation ideal, letters are basis indices >= 1
using BarWord = std::vector<std::size_t>;

inline int bar_degree(const WeightedAlgebra& a, const BarWord& w) {
    int d = 0;
    for (std::size_t l : w) d += a.basis[l].cohdeg - 1;
    return d;
}

inline int bar_weight(const WeightedAlgebra& a, const BarWord& w) {
    int d = 0;
    for (std::size_t l : w) d += a.basis[l].weight;
    return d;
}

// d[a_1|...|a_i] = sum_j (-1)^{e_j} [a_1|...|a_j a_{j+1}|...|a_i] with
// e_j the sum of shifted degrees up to position j; raises bar degree by 1.
inline std::map<BarWord, Rational> bar_d(const WeightedAlgebra& a, const BarWord& w) {
    std::map<BarWord, Rational> out;
    int e = 0;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        e += a.basis[w[j]].cohdeg - 1;
        auto it = a.mult.find({w[j], w[j + 1]});
        if (it == a.mult.end()) continue;
        Rational sign(e % 2 == 0 ? 1 : -1);
        for (const auto& [k, c] : it->second) {
            if (k == 0)
                throw std::invalid_argument("bar_d: product leaves the augmentation ideal");
            BarWord m;
            m.reserve(w.size() - 1);
            m.insert(m.end(), w.begin(), w.begin() + j);
            m.push_back(k);
            m.insert(m.end(), w.begin() + j + 2, w.end());
            out[m] = out[m] + sign * c;
            if (out[m] == Rational(0)) out.erase(m);
        }
    }
    return out;
}

inline void bar_words_rec(const WeightedAlgebra& a, int budget, BarWord& acc,
                          std::vector<BarWord>& out) {
    out.push_back(acc);
    for (std::size_t l = 1; l < a.basis.size(); ++l) {
        int c = a.basis[l].cohdeg - 1;
        if (c < 1 || c > budget) continue;
        acc.push_back(l);
        bar_words_rec(a, budget - c, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

/// Cohomology of the reduced bar complex per (bar degree, weight), up to the
/// degree cutoff. Exact ranks over Q; d^2 = 0 is verified on the word basis.
inline BidegreeTable bar_cohomology_table(const WeightedAlgebra& alg, int degree_cutoff) {
    if (degree_cutoff < 0) throw std::invalid_argument("bar_cohomology_table: bad cutoff");
    alg.validate();
    for (std::size_t l = 1; l < alg.basis.size(); ++l)
        if (alg.basis[l].cohdeg < 2)
            throw std::invalid_argument("bar_cohomology_table: degree-1 classes unsupported");
    std::vector<detail::BarWord> words;
    {
        detail::BarWord acc;
        detail::bar_words_rec(alg, degree_cutoff + 1, acc, words);
    }
    std::map<std::pair<int, int>, std::vector<detail::BarWord>> bucket;
    for (detail::BarWord& w : words)
        bucket[{detail::bar_degree(alg, w), detail::bar_weight(alg, w)}].push_back(
            std::move(w));
    for (auto& [key, list] : bucket) std::sort(list.begin(), list.end());

    for (const auto& [key, list] : bucket)
        for (const detail::BarWord& w : list) {
            std::map<detail::BarWord, Rational> dd;
            for (const auto& [m, c] : detail::bar_d(alg, w))
                for (const auto& [m2, c2] : detail::bar_d(alg, m)) {
                    dd[m2] = dd[m2] + c * c2;
                    if (dd[m2] == Rational(0)) dd.erase(m2);
                }
            if (!dd.empty()) throw std::logic_error("bar_cohomology_table: d^2 != 0");
        }

    // rank of d out of each (degree, weight) block
    std::map<std::pair<int, int>, std::size_t> rk;
    for (const auto& [key, list] : bucket) {
        auto up = bucket.find({key.first + 1, key.second});
        if (up == bucket.end()) continue;
        std::map<detail::BarWord, std::size_t> index;
        for (std::size_t i = 0; i < up->second.size(); ++i) index[up->second[i]] = i;
        std::vector<std::vector<Rational>> rows;
        for (const detail::BarWord& w : list) {
            auto img = detail::bar_d(alg, w);
            if (img.empty()) continue;
            std::vector<Rational> row(up->second.size(), Rational(0));
            for (const auto& [m, c] : img) row[index.at(m)] = c;
            rows.push_back(std::move(row));
        }
        // gaussian elimination
        std::size_t rank = 0;
        for (std::size_t col = 0; col < up->second.size() && rank < rows.size(); ++col) {
            std::size_t p = rank;
            while (p < rows.size() && rows[p][col] == Rational(0)) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[rank], rows[p]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == Rational(0)) continue;
                Rational f = rows[r][col] / rows[rank][col];
                for (std::size_t c2 = col; c2 < up->second.size(); ++c2)
                    rows[r][c2] = rows[r][c2] - f * rows[rank][c2];
            }
            ++rank;
        }
        rk[key] = rank;
    }

    BidegreeTable table;
    for (const auto& [key, list] : bucket) {
        if (key.first > degree_cutoff) continue;
        auto out = rk.find(key);
        auto in = rk.find({key.first - 1, key.second});
        std::size_t r_out = out == rk.end() ? 0 : out->second;
        std::size_t r_in = in == rk.end() ? 0 : in->second;
        table.add(key.first, key.second, list.size() - r_out - r_in);
    }
    return table;
}

/// The (degree, weight) support pattern for the based loop space of P^n:
/// pairs (2mn, 2mn + 2m) and (2mn + 1, 2mn + 2m + 2), in degree order.
inline std::vector<std::pair<int, int>> wrapping_weight_sequence(std::size_t n,
                                                                 std::size_t count) {
    if (n < 1 || count < 1)
        throw std::invalid_argument("wrapping_weight_sequence: bad parameters");
    std::vector<std::pair<int, int>> out;
    for (int m = 0; out.size() < count; ++m) {
        int d = 2 * m * static_cast<int>(n);
        out.emplace_back(d, d + 2 * m);
        if (out.size() < count) out.emplace_back(d + 1, d + 2 * m + 2);
    }
    return out;
}

/// True iff the bar cohomology is exactly one class at each entry of the
/// wrapping weight sequence within the degree cutoff.
inline bool compare_loop_hodge(const WeightedAlgebra& alg, std::size_t n,
                               int degree_cutoff) {
    BidegreeTable table = bar_cohomology_table(alg, degree_cutoff);
    std::map<std::pair<int, int>, std::size_t> expect;
    for (const auto& [d, w] : wrapping_weight_sequence(n, 4 * static_cast<std::size_t>(degree_cutoff) + 4))
        if (d <= degree_cutoff) expect[{d, w}] = 1;
    return table.entries == expect;
}

inline bool compare_loop_hodge(std::size_t n, int degree_cutoff) {
    return compare_loop_hodge(cohomology_ring_Pn(n), n, degree_cutoff);
}

}  // namespace hodgemicro

#endif
