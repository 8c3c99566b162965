// Acceptance gate: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <hodgemicro/barhodge.hpp>
#include <hodgemicro/crosscheck.hpp>
#include <hodgemicro/jsonio.hpp>
#include <hodgemicro/monodromic.hpp>
#include <hodgemicro/pathalg.hpp>
#include <hodgemicro/plumbing.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace hodgemicro;

namespace {

NormalForm random_normal_form(std::mt19937_64& rng, std::size_t budget) {
    NormalForm nf;
    std::uniform_int_distribution<int> kind_pick(0, 4);
    while (budget >= 1) {
        BlockKind kind = static_cast<BlockKind>(kind_pick(rng));
        std::size_t min_size = kind == BlockKind::Q ? 2 : 1;
        std::size_t max_size;
        switch (kind) {
            case BlockKind::A:
            case BlockKind::B:
                max_size = budget / 2;
                break;
            case BlockKind::P:
            case BlockKind::Q:
                max_size = (budget + 1) / 2;
                break;
            default:
                max_size = 1;
                break;
        }
        if (max_size < min_size) break;
        std::uniform_int_distribution<std::size_t> size_pick(min_size, max_size);
        std::size_t size = size_pick(rng);
        MonodromicTuple t = block_tuple(kind, size);
        std::size_t dim = t.psi + t.phi;
        if (dim > budget) break;
        budget -= dim;
        nf.add(Block(kind, size));
        if (kind_pick(rng) == 0) break;
    }
    return nf;
}

MonodromicTuple build_sum(const NormalForm& nf) {
    MonodromicTuple t(0, 0, Matrix(0, 0), Matrix(0, 0));
    for (const Block& b : nf.blocks) t = t.direct_sum(block_tuple(b.kind, b.size));
    return t;
}

MonodromicTuple scramble(std::mt19937_64& rng, const MonodromicTuple& t) {
    Matrix s = Matrix::identity(t.psi);
    Matrix s_inv = Matrix::identity(t.psi);
    Matrix u = Matrix::identity(t.phi);
    Matrix u_inv = Matrix::identity(t.phi);
    auto elementary = [&rng](Matrix& m, Matrix& m_inv) {
        std::size_t n = m.rows();
        if (n < 2) return;
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::uniform_int_distribution<int> coef(-2, 2);
        std::size_t i = pick(rng), j = pick(rng);
        int c = coef(rng);
        if (i == j || c == 0) return;
        Matrix e = Matrix::identity(n);
        e(i, j) = Rational(c);
        Matrix e_inv = Matrix::identity(n);
        e_inv(i, j) = Rational(-c);
        m = e * m;
        m_inv = m_inv * e_inv;
    };
    for (int step = 0; step < 6; ++step) {
        elementary(s, s_inv);
        elementary(u, u_inv);
    }
    return MonodromicTuple(t.psi, t.phi, u * t.can * s_inv, s * t.var * u_inv);
}

bool criterion_homtables() {
    for (const CheckRow& row : homtable_checks(6))
        if (!row.pass) return false;
    return true;
}

bool criterion_fourier() {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        NormalForm nf = random_normal_form(rng, 12);
        if (!(fourier(fourier(nf)) == nf)) return false;
        MonodromicTuple t = scramble(rng, build_sum(nf));
        auto [ft, tw] = fourier_tuple(t);
        auto [fft, tw2] = fourier_tuple(ft, tw);
        (void)tw2;
        if (!(decompose(fft) == decompose(t))) return false;
    }
    for (std::size_t s = 1; s <= 6; ++s) {
        NormalForm fa = fourier(NormalForm{Block(BlockKind::A, s)});
        if (!(fa == NormalForm{Block(BlockKind::B, s, 0, {1})})) return false;
    }
    NormalForm fsky = fourier(NormalForm{Block(BlockKind::Sky, 1)});
    return fsky == NormalForm{Block(BlockKind::P, 1, 0, {1})};
}

bool criterion_decompose() {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 500; ++trial) {
        NormalForm nf = random_normal_form(rng, 40);
        if (!(decompose(build_sum(nf)) == nf)) return false;
    }
    std::mt19937_64 rng2(104);
    for (int trial = 0; trial < 60; ++trial) {
        NormalForm nf = random_normal_form(rng2, 24);
        if (!(decompose(scramble(rng2, build_sum(nf))) == nf)) return false;
    }
    return true;
}

bool criterion_compat() {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t j = 1; j <= n; ++j) {
            if (!check_compat(build_block_H(n, j))) return false;
            if (!check_compat(build_block_H(n, j, true))) return false;
            for (std::size_t k = 1; k <= 4; ++k) {
                if (!check_compat(build_tower(n, j, k))) return false;
                if (!check_compat(build_tower(n, j, k, true))) return false;
            }
        }
    return true;
}

bool criterion_ginzburg() {
    for (std::size_t n = 1; n <= 6; ++n) {
        BidegreeTable gt = dg_cohomology_table(construct_Ginzburg(n), 12);
        BidegreeTable et = endo_table(n, PlumbingVariant::Core, 12, 12);
        BidegreeTable et_cut;
        for (const auto& [key, dim] : et.entries)
            if (key.second <= 12) et_cut.add(key.first, key.second, dim);
        if (!(gt == et_cut)) return false;
    }
    // sign dictionary fixed on the base case: both tables are k[h]
    BidegreeTable t1 = dg_cohomology_table(construct_Ginzburg(1), 12);
    for (int m = 0; m <= 6; ++m)
        if (t1.at(m, 2 * m) != 1) return false;
    return true;
}

bool criterion_relcore() {
    for (std::size_t n = 1; n <= 6; ++n) {
        BidegreeTable et = endo_table(n, PlumbingVariant::Relcore, 20, 20);
        for (const auto& [key, dim] : et.entries)
            if (key.first != key.second) return false;  // k = a - b must vanish
        PresentedAlgebra L = n >= 2 ? construct_LGamma(n) : PresentedAlgebra{};
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                std::size_t total = 0;
                for (int s = -40; s <= 0; ++s) total += endo_dim_relcore(n, i, j, 0, s);
                if (total != std::min(i, j)) return false;
                if (n >= 2) {
                    std::size_t paths = 0;
                    for (int d = 0; d <= 2 * static_cast<int>(n); ++d)
                        paths += path_count_table(L, i, j, d);
                    if (paths != total) return false;
                }
            }
    }
    return true;
}

bool criterion_koszul() {
    for (std::size_t n = 2; n <= 6; ++n) {
        PresentedAlgebra L = construct_LGamma(n);
        PresentedAlgebra M = construct_MGamma(n);
        if (!koszul_check(L, KoszulMode::Classical, 8)) return false;
        BidegreeTable extL = ext_kk_table(L, 10, 10);
        BidegreeTable extM = ext_kk_table(M, 10, 10);
        for (int h = 0; h <= 10; ++h) {
            if (extL.at(h, h) != graded_dim(M, h)) return false;
            if (extM.at(h, h) != graded_dim(L, h)) return false;
        }
        if (!verify_LGamma_resolution(n)) return false;
        if (verify_LGamma_resolution(n, true)) return false;
        for (int i = 0; i <= 2 * static_cast<int>(n); ++i)
            if (graded_dim(L, i) != lgamma_dim_formula(n, i)) return false;
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        BidegreeTable ext = ext_kk_table(construct_AGamma(n), 12, 12);
        BidegreeTable gt = dg_cohomology_table(construct_Ginzburg(n), 12);
        BidegreeTable gt_cut, ext_cut;
        for (const auto& [key, dim] : gt.entries)
            if (key.first <= 12 && key.second <= 12) gt_cut.add(key.first, key.second, dim);
        for (const auto& [key, dim] : ext.entries)
            if (key.first <= 12 && key.second <= 12) ext_cut.add(key.first, key.second, dim);
        if (!(ext_cut == gt_cut)) return false;
    }
    return true;
}

bool criterion_vanishing() {
    for (std::size_t n = 1; n <= 6; ++n) {
        BidegreeTable et = endo_table(n, PlumbingVariant::Core, 12, 12);
        if (et.at(0, 0) != n) return false;
        for (const auto& [key, dim] : et.entries) {
            auto [a, b] = key;
            if (a < 0 || b < 0) return false;
            if (a > 0 && b == 0) return false;
            if (b > 0 && a == 0) return false;
        }
    }
    return true;
}

bool criterion_bar() {
    for (std::size_t n = 1; n <= 3; ++n)
        if (!compare_loop_hodge(n, 4 * static_cast<int>(n) + 1)) return false;
    return true;
}

bool criterion_fixture_tables() {
    // diagonal carries C in degrees 0 and 2, neighbors one class in degree 1
    for (std::size_t n = 1; n <= 6; ++n) {
        PresentedAlgebra a = construct_AGamma(n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                std::size_t d0 = i == j ? 1 : 0;
                std::size_t d1 = (i + 1 == j || j + 1 == i) ? 1 : 0;
                if (path_count_table(a, i, j, 0) != d0) return false;
                if (path_count_table(a, i, j, 1) != d1) return false;
                if (path_count_table(a, i, j, 2) != d0) return false;
                if (path_count_table(a, i, j, 3) != 0) return false;
            }
    }
    // M_Gamma: degree-2 class present at vertex i iff i < n
    for (std::size_t n = 2; n <= 6; ++n) {
        PresentedAlgebra m = construct_MGamma(n);
        if (graded_dim(m, 0) != n) return false;
        if (graded_dim(m, 1) != 2 * (n - 1)) return false;
        if (graded_dim(m, 2) != n - 1) return false;
        if (graded_dim(m, 3) != 0) return false;
        for (std::size_t i = 1; i <= n; ++i)
            if (path_count_table(m, i, i, 2) != (i < n ? 1u : 0u)) return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> run;
        long budget_ms;
    };
    const Criterion criteria[] = {
        {"1 hom-table fixtures", criterion_homtables, 1000},
        {"2 Fourier involution and swap laws", criterion_fourier, 2000},
        {"3 decomposition round-trip", criterion_decompose, 10000},
        {"4 gluing compatibility", criterion_compat, 2000},
        {"5 endo table equals Ginzburg cohomology", criterion_ginzburg, 20000},
        {"6 relcore table equals L path counts", criterion_relcore, 2000},
        {"7 Koszulity suite", criterion_koszul, 20000},
        {"8 vanishing pattern", criterion_vanishing, 1000},
        {"9 loop-space Hodge table", criterion_bar, 5000},
        {"10 fixture tables", criterion_fixture_tables, 1000},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            note = std::string(" [exception: ") + e.what() + "]";
        }
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (ms > c.budget_ms) {
            ok = false;
            note += " [over time budget]";
        }
        std::printf("%s criterion %s (%ld ms)%s\n", ok ? "PASS" : "FAIL", c.name, ms,
                    note.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
