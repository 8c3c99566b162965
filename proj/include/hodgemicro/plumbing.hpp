#ifndef HODGEMICRO_PLUMBING_HPP
#define HODGEMICRO_PLUMBING_HPP

#include <hodgemicro/bidegree.hpp>
#include <hodgemicro/monodromic.hpp>
#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hodgemicro {

enum class PlumbingVariant { Core, Relcore };

struct PlumbingShape {
    std::size_t n = 1;
    PlumbingVariant variant = PlumbingVariant::Core;
    bool with_stops = true;
};

/// One side of a slot: a finite list of blocks (several for tower layers).
struct SlotObject {
    std::vector<Block> terms;
};

/// An n-tuple of paired slot objects over the A_n chain.
struct PlumbingObject {
    PlumbingShape shape;
    std::vector<std::pair<SlotObject, SlotObject>> slots;
};

/// Hodge twist data for the j-th block: w and the tower step wtilde.
struct TwistTable {
    std::size_t n;
    std::size_t j;
    Rational w;
    Rational wtilde;
};

namespace detail {

// w_j = (n - 2j + 1)/2 for 2j <= n, mirrored otherwise; in halves.
inline int w_halves(std::size_t n, std::size_t j) {
    std::size_t jj = 2 * j <= n ? j : n - j + 1;
    return static_cast<int>(n) - 2 * static_cast<int>(jj) + 1;
}

// wtilde = w_1 + 1 = (n+1)/2, the wrapping twist step, uniform in j; in
// halves. The j-dependent variant fails the Ginzburg cross-check for n >= 3.
inline int wtilde_halves(std::size_t n, std::size_t j) {
    (void)j;
    return static_cast<int>(n) + 1;
}

}  // namespace detail

inline TwistTable twist_table(std::size_t n, std::size_t j) {
    if (j < 1 || j > n) throw std::out_of_range("twist_table: index out of range");
    return TwistTable{n, j, Rational(detail::w_halves(n, j), 2),
                      Rational(detail::wtilde_halves(n, j), 2)};
}

/// Reverses the slot order and swaps the two sides of every slot.
inline PlumbingObject flip(const PlumbingObject& obj) {
    PlumbingObject out;
    out.shape = obj.shape;
    out.slots.reserve(obj.slots.size());
    for (auto it = obj.slots.rbegin(); it != obj.slots.rend(); ++it)
        out.slots.emplace_back(it->second, it->first);
    return out;
}

/// The building block H_j over the A_n chain, with Hodge twists. The primed
/// variant replaces the und-decorated middle entries by their plain versions.
inline PlumbingObject build_block_H(std::size_t n, std::size_t j, bool primed = false) {
    if (n < 1 || j < 1 || j > n) throw std::out_of_range("build_block_H: index out of range");
    PlumbingObject obj;
    obj.shape = PlumbingShape{n, PlumbingVariant::Core, true};

    auto slot = [](Block l, Block r) {
        return std::make_pair(SlotObject{{l}}, SlotObject{{r}});
    };

    if (n == 1) {
        if (primed)
            obj.slots.push_back(slot(Block(BlockKind::P, 1), Block(BlockKind::P, 1)));
        else
            obj.slots.push_back(
                slot(Block(BlockKind::TildeUndP, 1), Block(BlockKind::TildeUndP, 1)));
        return obj;
    }

    if (n % 2 == 1 && 2 * j == n + 1) {
        // odd middle: symmetric profile around an ove-und peak
        std::size_t n0 = (n - 1) / 2;
        for (std::size_t i = 1; i <= n0; ++i) {
            HalfTwist tw{static_cast<int>(n0 + 1 - i)};
            obj.slots.push_back(
                slot(Block(BlockKind::P, i, 0, tw), Block(BlockKind::Q, i + 1, 0, tw)));
        }
        BlockKind mid = primed ? BlockKind::OveP : BlockKind::OveUndP;
        obj.slots.push_back(slot(Block(mid, n0 + 1), Block(mid, n0 + 1)));
        for (std::size_t t = 1; t <= n0; ++t) {
            HalfTwist tw{static_cast<int>(t)};
            obj.slots.push_back(slot(Block(BlockKind::Q, n0 + 2 - t, 0, tw),
                                     Block(BlockKind::P, n0 + 1 - t, 0, tw)));
        }
        return obj;
    }

    if (2 * j > n) return flip(build_block_H(n, n - j + 1, primed));

    const int wj = detail::w_halves(n, j);
    for (std::size_t i = 1; i < j; ++i) {
        HalfTwist tw{static_cast<int>(j - i)};
        obj.slots.push_back(
            slot(Block(BlockKind::P, i, 0, tw), Block(BlockKind::Q, i + 1, 0, tw)));
    }
    if (primed)
        obj.slots.push_back(slot(Block(BlockKind::P, j), Block(BlockKind::A, j)));
    else
        obj.slots.push_back(slot(Block(BlockKind::UndP, j), Block(BlockKind::UndA, j)));
    for (std::size_t i = j + 1; i < n - j + 1; ++i) {
        HalfTwist tw{static_cast<int>(i - j)};
        obj.slots.push_back(
            slot(Block(BlockKind::B, j, 0, tw), Block(BlockKind::A, j, 0, tw)));
    }
    obj.slots.push_back(
        slot(Block(BlockKind::OveB, j, 0, {wj}), Block(BlockKind::OveP, j, 0, {wj})));
    for (std::size_t t = 1; t < j; ++t) {
        HalfTwist tw{wj + static_cast<int>(t)};
        obj.slots.push_back(
            slot(Block(BlockKind::Q, j - t + 1, 0, tw), Block(BlockKind::P, j - t, 0, tw)));
    }
    return obj;
}

/// Associated-graded model of the tower H_j^k: layer u carries the block
/// (u even) or its flip (u odd), shifted by u and twisted by u*wtilde_j.
/// Layer 0 is primed iff primed.
inline PlumbingObject build_tower(std::size_t n, std::size_t j, std::size_t k,
                                  bool primed = false) {
    PlumbingObject base = build_block_H(n, j, false);
    PlumbingObject base0 = primed ? build_block_H(n, j, true) : base;
    PlumbingObject flipped = flip(base);
    const int step = detail::wtilde_halves(n, j);

    PlumbingObject out;
    out.shape = base.shape;
    out.slots.resize(n);
    for (std::size_t u = 0; u <= k; ++u) {
        const PlumbingObject& layer = u == 0 ? base0 : (u % 2 == 0 ? base : flipped);
        for (std::size_t i = 0; i < n; ++i) {
            for (Block b : layer.slots[i].first.terms) {
                b.shift += static_cast<int>(u);
                b.twist.halves += static_cast<int>(u) * step;
                out.slots[i].first.terms.push_back(b);
            }
            for (Block b : layer.slots[i].second.terms) {
                b.shift += static_cast<int>(u);
                b.twist.halves += static_cast<int>(u) * step;
                out.slots[i].second.terms.push_back(b);
            }
        }
    }
    return out;
}

/// Fourier gluing compatibility at every interior junction:
/// FL(nu_0(right of slot i)) must match nu_0(left of slot i+1),
/// as normal forms with twists.
inline bool check_compat(const PlumbingObject& obj) {
    for (std::size_t i = 0; i + 1 < obj.slots.size(); ++i) {
        NormalForm right, left;
        for (const Block& b : obj.slots[i].second.terms) right.add(specialize_nu0(b));
        for (const Block& b : obj.slots[i + 1].first.terms) left.add(specialize_nu0(b));
        if (!(fourier(right) == left)) return false;
    }
    return true;
}

/// s(j, i) = min(j, n-j+1, i, n-i+1).
inline std::size_t restriction_size(std::size_t n, std::size_t j, std::size_t i) {
    return std::min(std::min(j, n - j + 1), std::min(i, n - i + 1));
}

namespace detail {

// d^{j,i}_u in halves: |j-i| for even u, |n-j+1-i| for odd u.
inline int d_halves(std::size_t n, std::size_t j, std::size_t i, std::size_t u) {
    long long v = u % 2 == 0 ? static_cast<long long>(j) - static_cast<long long>(i)
                             : static_cast<long long>(n - j + 1) - static_cast<long long>(i);
    return static_cast<int>(std::llabs(v));
}

// e^{j,i}_u in halves.
inline int e_halves(std::size_t n, std::size_t j, std::size_t i, std::size_t u) {
    return static_cast<int>(u) * wtilde_halves(n, j) + d_halves(n, j, i, u);
}

}  // namespace detail

/// Restriction of the tower H_j^k to the i-th open stratum: the layers
/// L_{s(j,i)}[u](e^{j,i}_u) for u = 0..k. The top layer u = k is decorated
/// ambiguously (plain or ove depending on j, i, k); the caller picks the
/// decoration to expose, plain by default.
inline std::vector<LocalSystemTerm> restrict_tower(std::size_t n, std::size_t j,
                                                   std::size_t k, std::size_t i,
                                                   Decoration top = Decoration::Plain) {
    if (j < 1 || j > n || i < 1 || i > n)
        throw std::out_of_range("restrict_tower: index out of range");
    std::vector<LocalSystemTerm> out;
    const std::size_t s = restriction_size(n, j, i);
    for (std::size_t u = 0; u <= k; ++u) {
        LocalSystemTerm t;
        t.size = s;
        t.shift = static_cast<int>(u);
        t.twist = HalfTwist{detail::e_halves(n, j, i, u)};
        t.decorated = u == k ? top : Decoration::Plain;
        out.push_back(t);
    }
    return out;
}

/// Closed-form endomorphism dimension of the core towers at (k, s):
/// 1 iff k <= 0, s <= 0, e^{i,j}_{-k} + s/2 is an integer and
/// 0 <= -(e^{i,j}_{-k} + s/2) <= s(i,j) - 1.
inline std::size_t endo_dim_core(std::size_t n, std::size_t i, std::size_t j, int k, int s) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("endo_dim_core: index out of range");
    if (k > 0 || s > 0) return 0;
    const int e = detail::e_halves(n, i, j, static_cast<std::size_t>(-k));
    if ((e + s) % 2 != 0) return 0;
    const int val = -(e + s) / 2;
    const int bound = static_cast<int>(restriction_size(n, i, j)) - 1;
    return (0 <= val && val <= bound) ? 1 : 0;
}

/// Relative-core version: supported at k = 0 only, with
/// 0 <= -(s/2 + |j-i|/2) <= min(i,j) - 1.
inline std::size_t endo_dim_relcore(std::size_t n, std::size_t i, std::size_t j, int k,
                                    int s) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("endo_dim_relcore: index out of range");
    if (k != 0) return 0;
    const int d = static_cast<int>(i > j ? i - j : j - i);
    if ((s + d) % 2 != 0) return 0;
    const int val = -(s + d) / 2;
    const int bound = static_cast<int>(std::min(i, j)) - 1;
    return (0 <= val && val <= bound) ? 1 : 0;
}

/// Bigraded endomorphism table, entry (a, b) with a = k - s, b = -s.
inline BidegreeTable endo_table(std::size_t n, PlumbingVariant variant, int a_cutoff,
                                int b_cutoff) {
    if (a_cutoff < 0 || b_cutoff < 0) throw std::invalid_argument("endo_table: bad cutoff");
    BidegreeTable table;
    for (int a = -a_cutoff; a <= a_cutoff; ++a)
        for (int b = -b_cutoff; b <= b_cutoff; ++b) {
            const int k = a - b;
            const int s = -b;
            std::size_t dim = 0;
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j)
                    dim += variant == PlumbingVariant::Core
                               ? endo_dim_core(n, i, j, k, s)
                               : endo_dim_relcore(n, i, j, k, s);
            table.add(a, b, dim);
        }
    return table;
}

/// The McBreen-Webster chain: window copies of C[y]/y^N with junction maps
/// (y, id) left of center and (id, y) right of it, in the monomial basis.
struct SkyscraperChain {
    std::size_t module_dim;
    std::size_t window;
    std::size_t center;
    // junction t sits between modules t and t+1 (1-based), as (can, var)
    std::vector<std::pair<Matrix, Matrix>> junctions;
};

inline SkyscraperChain unipotent_skyscraper_chain(std::size_t N, std::size_t window,
                                                  std::size_t center) {
    if (N < 1) throw std::invalid_argument("unipotent_skyscraper_chain: N must be >= 1");
    if (window < 1 || center < 1 || center > window)
        throw std::out_of_range("unipotent_skyscraper_chain: bad window/center");
    SkyscraperChain chain{N, window, center, {}};
    const Matrix y = detail::jordan(N);  // multiplication by y on {1, y, ..., y^{N-1}}
    const Matrix id = Matrix::identity(N);
    for (std::size_t t = 1; t < window; ++t) {
        auto [can, var] = t < center ? std::make_pair(y, id) : std::make_pair(id, y);
        if (!(var * can == y))
            throw std::logic_error("unipotent_skyscraper_chain: var*can != y");
        chain.junctions.emplace_back(can, var);
    }
    return chain;
}

}  // namespace hodgemicro

#endif
