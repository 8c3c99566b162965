#ifndef HODGEMICRO_MONODROMIC_HPP
#define HODGEMICRO_MONODROMIC_HPP

#include <hodgemicro/matrix.hpp>
#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hodgemicro {

/// Half-integer Tate twist; the twist s/2 is stored as s halves.
struct HalfTwist {
    int halves = 0;

    friend HalfTwist operator+(HalfTwist a, HalfTwist b) { return {a.halves + b.halves}; }
    friend HalfTwist operator-(HalfTwist a, HalfTwist b) { return {a.halves - b.halves}; }
    auto operator<=>(const HalfTwist&) const = default;
};

enum class BlockKind {
    A,
    B,
    P,
    Q,
    Sky,
    OveA,
    UndA,
    OveUndA,
    OveB,
    OveP,
    UndP,
    OveUndP,
    TildeUndP,
};

inline bool is_plain(BlockKind k) {
    switch (k) {
        case BlockKind::A:
        case BlockKind::B:
        case BlockKind::P:
        case BlockKind::Q:
        case BlockKind::Sky:
            return true;
        default:
            return false;
    }
}

inline const char* kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::A: return "A";
        case BlockKind::B: return "B";
        case BlockKind::P: return "P";
        case BlockKind::Q: return "Q";
        case BlockKind::Sky: return "Sky";
        case BlockKind::OveA: return "OveA";
        case BlockKind::UndA: return "UndA";
        case BlockKind::OveUndA: return "OveUndA";
        case BlockKind::OveB: return "OveB";
        case BlockKind::OveP: return "OveP";
        case BlockKind::UndP: return "UndP";
        case BlockKind::OveUndP: return "OveUndP";
        case BlockKind::TildeUndP: return "TildeUndP";
    }
    throw std::logic_error("kind_name: bad enum");
}

inline BlockKind parse_kind(const std::string& s) {
    static const std::map<std::string, BlockKind> table = {
        {"A", BlockKind::A},           {"B", BlockKind::B},
        {"P", BlockKind::P},           {"Q", BlockKind::Q},
        {"Sky", BlockKind::Sky},       {"OveA", BlockKind::OveA},
        {"UndA", BlockKind::UndA},     {"OveUndA", BlockKind::OveUndA},
        {"OveB", BlockKind::OveB},     {"OveP", BlockKind::OveP},
        {"UndP", BlockKind::UndP},     {"OveUndP", BlockKind::OveUndP},
        {"TildeUndP", BlockKind::TildeUndP},
    };
    auto it = table.find(s);
    if (it == table.end()) throw std::invalid_argument("parse_kind: unknown kind " + s);
    return it->second;
}

/// A catalog block with homological shift and half-Tate twist.
/// shift 0 is the perverse normalization (the paper's A_s[1] etc.).
struct Block {
    BlockKind kind;
    std::size_t size;
    int shift;
    HalfTwist twist;

    Block(BlockKind k, std::size_t s, int sh = 0, HalfTwist tw = {})
        : kind(k), size(s), shift(sh), twist(tw) {
        validate();
    }

    auto operator<=>(const Block&) const = default;

private:
    void validate() const {
        if (size < 1) throw std::invalid_argument("Block: size must be >= 1");
        if ((kind == BlockKind::Q || kind == BlockKind::OveUndP) && size < 2)
            throw std::invalid_argument("Block: Q and OveUndP require size >= 2");
        if ((kind == BlockKind::Sky || kind == BlockKind::TildeUndP) && size != 1)
            throw std::invalid_argument("Block: Sky and TildeUndP have size 1");
    }
};

/// Multiset of blocks, kept in canonical (kind, size, shift, twist) order.
struct NormalForm {
    std::vector<Block> blocks;

    NormalForm() = default;
    NormalForm(std::initializer_list<Block> bs) : blocks(bs) { normalize(); }
    explicit NormalForm(std::vector<Block> bs) : blocks(std::move(bs)) { normalize(); }

    void add(const Block& b) {
        blocks.insert(std::upper_bound(blocks.begin(), blocks.end(), b), b);
    }
    void normalize() { std::sort(blocks.begin(), blocks.end()); }
    bool all_plain() const {
        return std::all_of(blocks.begin(), blocks.end(),
                           [](const Block& b) { return is_plain(b.kind); });
    }

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.blocks == b.blocks;
    }
};

/// (psi, phi, can, var) with can: psi -> phi and var: phi -> psi,
/// both composites nilpotent.
struct MonodromicTuple {
    std::size_t psi;
    std::size_t phi;
    Matrix can;  // phi x psi
    Matrix var;  // psi x phi

    MonodromicTuple(std::size_t psi_dim, std::size_t phi_dim, Matrix c, Matrix v)
        : psi(psi_dim), phi(phi_dim), can(std::move(c)), var(std::move(v)) {
        if (can.rows() != phi || can.cols() != psi)
            throw std::invalid_argument("MonodromicTuple: can must be phi x psi");
        if (var.rows() != psi || var.cols() != phi)
            throw std::invalid_argument("MonodromicTuple: var must be psi x phi");
    }

    bool is_nilpotent() const {
        std::size_t d = std::max(psi, phi);
        return power_is_zero(var * can, d) && power_is_zero(can * var, d);
    }

    MonodromicTuple direct_sum(const MonodromicTuple& o) const {
        return MonodromicTuple(psi + o.psi, phi + o.phi, can.direct_sum(o.can),
                               var.direct_sum(o.var));
    }

    static bool power_is_zero(const Matrix& m, std::size_t e) {
        if (m.rows() == 0) return true;
        if (e == 0) return false;  // m^0 is the identity on a nonzero space
        Matrix p = m;
        for (std::size_t i = 1; i < e && !p.is_zero(); ++i) p = p * m;
        return p.is_zero();
    }
};

namespace detail {

/// Size-s nilpotent Jordan matrix: e_i -> e_{i+1}, last basis vector to 0.
inline Matrix jordan(std::size_t s) {
    Matrix j(s, s);
    for (std::size_t i = 0; i + 1 < s; ++i) j(i + 1, i) = Rational(1);
    return j;
}

/// Surjection C^s -> C^{s-1} dropping the last coordinate.
inline Matrix drop_last(std::size_t s) {
    Matrix m(s - 1, s);
    for (std::size_t i = 0; i + 1 < s; ++i) m(i, i) = Rational(1);
    return m;
}

/// Injection C^{s-1} -> C^s prepending a zero coordinate.
inline Matrix prepend_zero(std::size_t s) {
    Matrix m(s, s - 1);
    for (std::size_t i = 0; i + 1 < s; ++i) m(i + 1, i) = Rational(1);
    return m;
}

}  // namespace detail

/// Catalog can/var presentation of a plain block (perverse normalization).
inline MonodromicTuple block_tuple(BlockKind kind, std::size_t size) {
    using namespace detail;
    Block check(kind, size);  // validates the size constraint
    (void)check;
    switch (kind) {
        case BlockKind::A:
            return MonodromicTuple(size, size, Matrix::identity(size), jordan(size));
        case BlockKind::B:
            return MonodromicTuple(size, size, jordan(size), Matrix::identity(size));
        case BlockKind::P:
            return MonodromicTuple(size, size - 1, drop_last(size), prepend_zero(size));
        case BlockKind::Q:
            return MonodromicTuple(size - 1, size, prepend_zero(size), drop_last(size));
        case BlockKind::Sky:
            return MonodromicTuple(0, 1, Matrix(1, 0), Matrix(0, 1));
        default:
            throw std::invalid_argument("block_tuple: decorated blocks have no presentation");
    }
}

/// Blockwise Fourier transform on a plain normal form. Involution with
/// zero net twist: A <-> B, P_s <-> Q_s (s >= 2), Sky <-> P_1, with +1/2
/// on the forward direction and -1/2 back.
inline NormalForm fourier(const NormalForm& nf) {
    NormalForm out;
    for (const Block& b : nf.blocks) {
        switch (b.kind) {
            case BlockKind::A:
                out.add(Block(BlockKind::B, b.size, b.shift, b.twist + HalfTwist{1}));
                break;
            case BlockKind::B:
                out.add(Block(BlockKind::A, b.size, b.shift, b.twist + HalfTwist{-1}));
                break;
            case BlockKind::P:
                if (b.size == 1)
                    out.add(Block(BlockKind::Sky, 1, b.shift, b.twist + HalfTwist{-1}));
                else
                    out.add(Block(BlockKind::Q, b.size, b.shift, b.twist + HalfTwist{1}));
                break;
            case BlockKind::Q:
                out.add(Block(BlockKind::P, b.size, b.shift, b.twist + HalfTwist{-1}));
                break;
            case BlockKind::Sky:
                out.add(Block(BlockKind::P, 1, b.shift, b.twist + HalfTwist{1}));
                break;
            default:
                throw std::invalid_argument("fourier: decorated block present");
        }
    }
    return out;
}

/// Fourier transform at the tuple level: (psi, phi, can, var) becomes
/// (phi, psi, -var, can), picking up a half twist.
inline std::pair<MonodromicTuple, HalfTwist> fourier_tuple(const MonodromicTuple& t,
                                                           HalfTwist tw = {}) {
    return {MonodromicTuple(t.phi, t.psi, -t.var, t.can), tw + HalfTwist{1}};
}

/// Monodromic object with arbitrary eigenvalues alpha in (-1, 0].
/// The alpha = 0 part carries the tuple maps c (to C_{-1}) and v (back).
struct GeneralPart {
    Rational alpha;  // in (-1, 0]
    Matrix n;        // nilpotent endomorphism of this eigenspace
    int tate_twist = 0;
};

struct GeneralMonodromicTuple {
    std::vector<GeneralPart> parts;
    std::size_t cm1_dim = 0;
    int cm1_twist = 0;
    Matrix c;  // cm1_dim x dim(alpha = 0 part)
    Matrix v;  // dim(alpha = 0 part) x cm1_dim

    std::size_t alpha0_dim() const {
        for (const GeneralPart& p : parts)
            if (p.alpha.is_zero()) return p.n.rows();
        return 0;
    }

    void validate() const {
        std::size_t d0 = 0;
        for (const GeneralPart& p : parts) {
            if (p.alpha > Rational(0) || p.alpha <= Rational(-1))
                throw std::invalid_argument("GeneralMonodromicTuple: alpha outside (-1, 0]");
            if (p.n.rows() != p.n.cols())
                throw std::invalid_argument("GeneralMonodromicTuple: N must be square");
            if (!MonodromicTuple::power_is_zero(p.n, p.n.rows()))
                throw std::invalid_argument("GeneralMonodromicTuple: N not nilpotent");
            if (p.alpha.is_zero()) d0 = p.n.rows();
        }
        if (c.rows() != cm1_dim || c.cols() != d0)
            throw std::invalid_argument("GeneralMonodromicTuple: c has wrong shape");
        if (v.rows() != d0 || v.cols() != cm1_dim)
            throw std::invalid_argument("GeneralMonodromicTuple: v has wrong shape");
        for (const GeneralPart& p : parts)
            if (p.alpha.is_zero() && !(v * c == p.n))
                throw std::invalid_argument("GeneralMonodromicTuple: v*c != N on alpha = 0");
    }
};

/// Fourier transform on general monodromic objects. The new (-1, 0] part
/// is C_{-1} (as the new alpha = 0 eigenspace, N = c*v) together with the
/// old alpha in (-1, 0) eigenspaces at alpha' = -1 - alpha; the old
/// alpha = 0 part becomes the new C_{-1} with a (-1) Tate-twist marker.
inline GeneralMonodromicTuple fourier_general(const GeneralMonodromicTuple& t) {
    GeneralMonodromicTuple out;
    out.parts.push_back(GeneralPart{Rational(0), t.c * t.v, t.cm1_twist});
    for (const GeneralPart& p : t.parts) {
        if (p.alpha.is_zero()) {
            out.cm1_dim = p.n.rows();
            out.cm1_twist = p.tate_twist - 1;
        } else {
            out.parts.push_back(GeneralPart{Rational(-1) - p.alpha, p.n, p.tate_twist});
        }
    }
    out.c = -t.v;
    out.v = t.c;
    return out;
}

/// Decomposition of a nilpotent can/var tuple into catalog blocks.
/// Multiplicities are read off from second differences of the ranks of
/// alternating words in can and var; Krull-Schmidt makes them unique.
inline NormalForm decompose(const MonodromicTuple& t) {
    const std::size_t d = std::max(t.psi, t.phi);
    NormalForm out;
    if (d == 0) return out;
    if (!t.is_nilpotent()) throw std::domain_error("decompose: non-nilpotent composite");

    const std::size_t top = d + 3;  // rank sequences at m = 0 .. d+2
    std::vector<long long> E(top, 0), Ep(top, 0), Oc(top, 0), Ov(top, 0);
    E[0] = static_cast<long long>(t.psi);
    Ep[0] = static_cast<long long>(t.phi);
    const Matrix vc = t.var * t.can;
    const Matrix cv = t.can * t.var;
    Matrix pow_vc = Matrix::identity(t.psi);  // (vc)^m
    Matrix pow_cv = Matrix::identity(t.phi);  // (cv)^m
    Oc[0] = static_cast<long long>(t.can.rank());
    Ov[0] = static_cast<long long>(t.var.rank());
    for (std::size_t m = 1; m < top; ++m) {
        if (pow_vc.is_zero() && pow_cv.is_zero()) break;
        pow_vc = vc * pow_vc;
        pow_cv = cv * pow_cv;
        E[m] = static_cast<long long>(pow_vc.rank());
        Ep[m] = static_cast<long long>(pow_cv.rank());
        if (E[m] > 0) Oc[m] = static_cast<long long>((t.can * pow_vc).rank());
        if (Ep[m] > 0) Ov[m] = static_cast<long long>((t.var * pow_cv).rank());
    }

    auto dd = [](const std::vector<long long>& g, std::size_t m) {
        return g[m + 1] + g[m - 1] - 2 * g[m];
    };

    // a_m + b_m etc. solved top-down; q_1 degenerates to the skyscraper.
    std::vector<long long> a(d + 3, 0), b(d + 3, 0), p(d + 3, 0), q(d + 3, 0);
    for (std::size_t m = d + 1; m >= 1; --m) {
        a[m] = dd(Oc, m) - (b[m + 1] + p[m + 1] + q[m + 1]);
        b[m] = dd(Ov, m) - (a[m + 1] + p[m + 1] + q[m + 1]);
        p[m] = dd(E, m) - a[m] - b[m] - q[m + 1];
        q[m] = dd(Ep, m) - a[m] - b[m] - p[m + 1];
        if (a[m] < 0 || b[m] < 0 || p[m] < 0 || q[m] < 0)
            throw std::domain_error("decompose: rank profile matches no block multiset");
    }
    const long long sky = q[1];

    long long psi_acc = 0, phi_acc = 0;
    for (std::size_t s = 1; s <= d + 1; ++s) {
        long long ss = static_cast<long long>(s);
        psi_acc += ss * (a[s] + b[s] + p[s]);
        phi_acc += ss * (a[s] + b[s]) + (ss - 1) * p[s];
        if (s >= 2) {
            psi_acc += (ss - 1) * q[s];
            phi_acc += ss * q[s];
        }
    }
    phi_acc += sky;
    if (psi_acc != static_cast<long long>(t.psi) || phi_acc != static_cast<long long>(t.phi))
        throw std::domain_error("decompose: rank profile matches no block multiset");

    for (std::size_t s = 1; s <= d + 1; ++s) {
        for (long long i = 0; i < a[s]; ++i) out.add(Block(BlockKind::A, s));
        for (long long i = 0; i < b[s]; ++i) out.add(Block(BlockKind::B, s));
        for (long long i = 0; i < p[s]; ++i) out.add(Block(BlockKind::P, s));
        if (s >= 2)
            for (long long i = 0; i < q[s]; ++i) out.add(Block(BlockKind::Q, s));
    }
    for (long long i = 0; i < sky; ++i) out.add(Block(BlockKind::Sky, 1));
    return out;
}

/// hom0 = dim of pairs (f, g) intertwining can and var; ext1 via the Euler
/// form of the two-vertex double-arrow quiver.
inline std::pair<std::size_t, std::size_t> homext(const MonodromicTuple& m,
                                                  const MonodromicTuple& n) {
    const std::size_t nf = n.psi * m.psi;  // unknowns of f
    const std::size_t ng = n.phi * m.phi;  // unknowns of g
    const std::size_t rows_can = n.phi * m.psi;
    const std::size_t rows_var = n.psi * m.phi;
    Matrix C(rows_can + rows_var, nf + ng);
    auto fidx = [&](std::size_t r, std::size_t c) { return r * m.psi + c; };
    auto gidx = [&](std::size_t r, std::size_t c) { return nf + r * m.phi + c; };
    // can_n * f - g * can_m = 0
    for (std::size_t i = 0; i < n.phi; ++i)
        for (std::size_t j = 0; j < m.psi; ++j) {
            std::size_t row = i * m.psi + j;
            for (std::size_t k = 0; k < n.psi; ++k)
                if (!n.can(i, k).is_zero()) C(row, fidx(k, j)) += n.can(i, k);
            for (std::size_t k = 0; k < m.phi; ++k)
                if (!m.can(k, j).is_zero()) C(row, gidx(i, k)) -= m.can(k, j);
        }
    // f * var_m - var_n * g = 0
    for (std::size_t i = 0; i < n.psi; ++i)
        for (std::size_t j = 0; j < m.phi; ++j) {
            std::size_t row = rows_can + i * m.phi + j;
            for (std::size_t k = 0; k < m.psi; ++k)
                if (!m.var(k, j).is_zero()) C(row, fidx(i, k)) += m.var(k, j);
            for (std::size_t k = 0; k < n.phi; ++k)
                if (!n.var(i, k).is_zero()) C(row, gidx(k, j)) -= n.var(i, k);
        }
    const std::size_t hom0 = nf + ng - C.rank();
    const long long chi =
        static_cast<long long>(m.psi * n.psi) + static_cast<long long>(m.phi * n.phi) -
        static_cast<long long>(m.psi * n.phi) - static_cast<long long>(m.phi * n.psi);
    const long long ext1 = static_cast<long long>(hom0) - chi;
    if (ext1 < 0) throw std::logic_error("homext: negative ext1");
    return {hom0, static_cast<std::size_t>(ext1)};
}

/// Total dimension of Hom(x, y[k](s)) in the derived category: pairs of
/// blocks contribute hom0 at shift difference 0 and ext1 at difference 1.
inline std::size_t derived_hom_dim(const NormalForm& x, const NormalForm& y, int k,
                                   HalfTwist s) {
    if (!x.all_plain() || !y.all_plain())
        throw std::invalid_argument("derived_hom_dim: decorated block present");
    std::map<std::pair<std::pair<BlockKind, std::size_t>, std::pair<BlockKind, std::size_t>>,
             std::pair<std::size_t, std::size_t>>
        cache;
    std::size_t total = 0;
    for (const Block& bx : x.blocks)
        for (const Block& by : y.blocks) {
            if (by.twist - bx.twist != s) continue;
            int d = (by.shift + k) - bx.shift;
            if (d != 0 && d != 1) continue;
            auto key = std::make_pair(std::make_pair(bx.kind, bx.size),
                                      std::make_pair(by.kind, by.size));
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache
                         .emplace(key, homext(block_tuple(bx.kind, bx.size),
                                              block_tuple(by.kind, by.size)))
                         .first;
            total += d == 0 ? it->second.first : it->second.second;
        }
    return total;
}

enum class Decoration { Plain, Ove, Und, OveUnd };

inline const char* decoration_name(Decoration d) {
    switch (d) {
        case Decoration::Plain: return "plain";
        case Decoration::Ove: return "ove";
        case Decoration::Und: return "und";
        case Decoration::OveUnd: return "oveund";
    }
    throw std::logic_error("decoration_name: bad enum");
}

/// Restriction of a block to the open stratum W: a unipotent local system
/// L_s, possibly decorated, or zero for the skyscraper.
struct LocalSystemTerm {
    std::size_t size = 1;
    Decoration decorated = Decoration::Plain;
    int shift = 0;
    HalfTwist twist;
    bool is_zero = false;

    auto operator<=>(const LocalSystemTerm&) const = default;
};

inline LocalSystemTerm restrict_W(const Block& b) {
    LocalSystemTerm t;
    t.shift = b.shift;
    t.twist = b.twist;
    switch (b.kind) {
        case BlockKind::A:
        case BlockKind::B:
        case BlockKind::P:
            t.size = b.size;
            break;
        case BlockKind::Q:
            t.size = b.size - 1;
            break;
        case BlockKind::Sky:
            t.is_zero = true;
            t.size = 0;
            break;
        case BlockKind::OveA:
        case BlockKind::OveB:
        case BlockKind::OveP:
            t.size = b.size;
            t.decorated = Decoration::Ove;
            break;
        case BlockKind::UndA:
        case BlockKind::UndP:
            t.size = b.size;
            t.decorated = Decoration::Und;
            break;
        case BlockKind::OveUndA:
        case BlockKind::OveUndP:
            t.size = b.size;
            t.decorated = Decoration::OveUnd;
            break;
        case BlockKind::TildeUndP:
            t.size = 1;
            t.decorated = Decoration::Und;
            break;
    }
    return t;
}

/// Nearby-fiber specialization: decorated blocks drop their decorations.
inline Block specialize_nu0(const Block& b) {
    switch (b.kind) {
        case BlockKind::OveA:
        case BlockKind::UndA:
        case BlockKind::OveUndA:
            return Block(BlockKind::A, b.size, b.shift, b.twist);
        case BlockKind::OveB:
            return Block(BlockKind::B, b.size, b.shift, b.twist);
        case BlockKind::OveP:
        case BlockKind::UndP:
        case BlockKind::OveUndP:
            return Block(BlockKind::P, b.size, b.shift, b.twist);
        case BlockKind::TildeUndP:
            throw std::invalid_argument("specialize_nu0: unsupported specialization");
        default:
            return b;
    }
}

/// Stalk cohomology dimensions at the origin, indexed by degree.
inline std::map<int, std::size_t> stalk0_dims(const Block& b) {
    if (!is_plain(b.kind)) throw std::invalid_argument("stalk0_dims: decorated block");
    std::map<int, std::size_t> out;
    switch (b.kind) {
        case BlockKind::A:
            break;
        case BlockKind::B:
            out[0 - b.shift] = 1;
            out[1 - b.shift] = 1;
            break;
        case BlockKind::P:
        case BlockKind::Sky:
            out[0 - b.shift] = 1;
            break;
        case BlockKind::Q:
            out[1 - b.shift] = 1;
            break;
        default:
            break;
    }
    return out;
}

/// Least e with (var*can)^e = 0.
inline std::size_t nilpotent_order(const MonodromicTuple& t) {
    Matrix m = t.var * t.can;
    if (m.rows() == 0) return 0;
    std::size_t e = 0;
    Matrix p = Matrix::identity(t.psi);
    while (!p.is_zero()) {
        p = m * p;
        ++e;
        if (e > t.psi + 1) throw std::domain_error("nilpotent_order: not nilpotent");
    }
    return e;
}

/// Condition (N_s): (var*can)^s = 0 and (can*var)^{s-1} = 0.
inline bool check_Ns(const MonodromicTuple& t, std::size_t s) {
    if (s == 0) return t.psi == 0 && t.phi == 0;
    return MonodromicTuple::power_is_zero(t.var * t.can, s) &&
           MonodromicTuple::power_is_zero(t.can * t.var, s - 1);
}

}  // namespace hodgemicro

#endif
