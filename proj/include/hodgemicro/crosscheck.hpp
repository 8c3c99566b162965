#ifndef HODGEMICRO_CROSSCHECK_HPP
#define HODGEMICRO_CROSSCHECK_HPP

#include <hodgemicro/pathalg.hpp>
#include <hodgemicro/plumbing.hpp>
#include <cstdlib>
#include <string>
#include <vector>

namespace hodgemicro {

/// One fixture comparison, with printable expected/actual values.
struct CheckRow {
    std::string name;
    bool pass;
    std::string expected;
    std::string actual;
};

namespace detail {

inline std::string pair_str(std::pair<std::size_t, std::size_t> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace detail

/// Hom/Ext fixtures against the catalog tables, for all sizes up to smax:
/// homext(A_s, A_s') = (s', s') for s' < s, homext(A_s, P_s') = (s', s') for
/// s' <= s, and homext(Sky, A_s) = (1, 1).
inline std::vector<CheckRow> homtable_checks(std::size_t smax) {
    if (smax < 1) throw std::invalid_argument("homtable_checks: smax must be >= 1");
    std::vector<CheckRow> rows;
    auto push = [&](std::string name, std::pair<std::size_t, std::size_t> expect,
                    std::pair<std::size_t, std::size_t> got) {
        rows.push_back(
            {std::move(name), expect == got, detail::pair_str(expect), detail::pair_str(got)});
    };
    for (std::size_t s = 1; s <= smax; ++s) {
        for (std::size_t sp = 1; sp < s; ++sp)
            push("homext(A_" + std::to_string(s) + ", A_" + std::to_string(sp) + ")",
                 {sp, sp}, homext(block_tuple(BlockKind::A, s), block_tuple(BlockKind::A, sp)));
        for (std::size_t sp = 1; sp <= s; ++sp)
            push("homext(A_" + std::to_string(s) + ", P_" + std::to_string(sp) + ")",
                 {sp, sp}, homext(block_tuple(BlockKind::A, s), block_tuple(BlockKind::P, sp)));
        push("homext(Sky, A_" + std::to_string(s) + ")", {1, 1},
             homext(block_tuple(BlockKind::Sky, 1), block_tuple(BlockKind::A, s)));
    }
    return rows;
}

namespace detail {

// endo_dim_core with the tower twist step shifted by perturb half-twists;
// perturb = 0 recovers endo_dim_core exactly.
inline std::size_t endo_dim_core_shifted(std::size_t n, std::size_t i, std::size_t j,
                                         int k, int s, int perturb) {
    if (k > 0 || s > 0) return 0;
    const std::size_t u = static_cast<std::size_t>(-k);
    const int e = static_cast<int>(u) * (wtilde_halves(n, i) + perturb) +
                  d_halves(n, i, j, u);
    if ((e + s) % 2 != 0) return 0;
    const int val = -(e + s) / 2;
    const int bound = static_cast<int>(restriction_size(n, i, j)) - 1;
    return (0 <= val && val <= bound) ? 1 : 0;
}

}  // namespace detail

/// Row-sum saturation check: for each total degree a <= cutoff, the sum over
/// b of the endomorphism table entries must equal the degree-a dimension of
/// the reference algebra, computed independently: cohomology of the Ginzburg
/// dga (core) or path counts in L_Gamma (relcore). wtilde_perturb shifts the
/// core tower twist step by that many half-twists (negative control).
inline bool saturation_sum_check(std::size_t n, PlumbingVariant variant, int cutoff,
                                 int wtilde_perturb = 0) {
    if (cutoff < 0) throw std::invalid_argument("saturation_sum_check: bad cutoff");
    if (variant == PlumbingVariant::Relcore) {
        // n = 1 degenerates to k
        PresentedAlgebra L = n >= 2 ? construct_LGamma(n) : PresentedAlgebra{};
        for (int a = 0; a <= cutoff; ++a) {
            std::size_t lhs = 0;
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j)
                    lhs += endo_dim_relcore(n, i, j, 0, -a);
            std::size_t rhs = n >= 2 ? graded_dim(L, a) : (a == 0 ? 1 : 0);
            if (lhs != rhs) return false;
        }
        return true;
    }
    // core entries with a <= cutoff satisfy b <= 2a, so Adams cutoff 2*cutoff
    // captures every row; widen the scan when the twist step is perturbed
    const int b_max = 2 * cutoff + std::abs(wtilde_perturb) * (cutoff + 1);
    BidegreeTable g = dg_cohomology_table(construct_Ginzburg(n), 2 * cutoff);
    for (int a = 0; a <= cutoff; ++a) {
        std::size_t lhs = 0;
        for (int b = 0; b <= b_max; ++b)
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= n; ++j)
                    lhs += detail::endo_dim_core_shifted(n, i, j, a - b, -b, wtilde_perturb);
        std::size_t rhs = 0;
        for (const auto& [key, dim] : g.entries)
            if (key.first == a) rhs += dim;
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace hodgemicro

#endif
