#include "deltatopo/functor_cat.hpp"

#include <algorithm>

namespace delta {

DeltaSetPtr share(DeltaSet x) { return std::make_shared<const DeltaSet>(std::move(x)); }

long XObject::rank(SimplexRef r) const {
    if (r.dim < 0 || r.dim >= static_cast<int>(ranks.size())) return 0;
    if (r.index < 0 || r.index >= static_cast<int>(ranks[r.dim].size())) return 0;
    return ranks[r.dim][r.index];
}

long XObject::total_rank() const {
    long t = 0;
    for (const auto& row : ranks)
        for (long v : row) t += v;
    return t;
}

XObject XObject::zeros(DeltaSetPtr base, Variance var, RingSpec ring) {
    XObject m;
    m.var = var;
    m.ring = std::move(ring);
    m.ranks.resize(base->top_dim() + 1);
    for (int d = 0; d <= base->top_dim(); ++d) m.ranks[d].assign(base->count(d), 0);
    m.base = std::move(base);
    return m;
}

bool same_base(const XObject& a, const XObject& b) {
    return a.base == b.base || (a.base && b.base && *a.base == *b.base);
}

Matrix XMorphism::comp(const CatMorphism& f) const {
    auto it = comps.find(MorKey::of(f));
    if (it != comps.end()) return it->second;
    SimplexRef src = morphism_source(f, *source.base);
    if (source.var == Variance::Contravariant)
        return Matrix::zero(source.ring, target.rank(f.target), source.rank(src));
    return Matrix::zero(source.ring, target.rank(src), source.rank(f.target));
}

void XMorphism::set_comp(const CatMorphism& f, Matrix m) {
    if (m.is_zero())
        comps.erase(MorKey::of(f));
    else
        comps[MorKey::of(f)] = std::move(m);
}

void XMorphism::validate() const {
    if (!same_base(source, target) || source.var != target.var || source.ring != target.ring)
        throw DomainError("x-morphism: base, variance or ring mismatch");
    for (const auto& [k, m] : comps) {
        CatMorphism f = k.morphism();
        f.inj.validate();
        SimplexRef src = morphism_source(f, *source.base);
        long rows = source.var == Variance::Contravariant ? target.rank(f.target) : target.rank(src);
        long cols = source.var == Variance::Contravariant ? source.rank(src) : source.rank(f.target);
        if (m.rows() != rows || m.cols() != cols)
            throw DomainError("x-morphism component has wrong shape");
        if (m.ring() != source.ring) throw DomainError("x-morphism component ring mismatch");
    }
}

bool XMorphism::is_zero() const {
    for (const auto& [k, m] : comps)
        if (!m.is_zero()) return false;
    return true;
}

XMorphism XMorphism::zero(XObject src, XObject tgt) {
    return XMorphism{std::move(src), std::move(tgt), {}};
}

XMorphism XMorphism::identity(const XObject& m) {
    XMorphism f{m, m, {}};
    for (int d = 0; d <= m.base->top_dim(); ++d)
        for (int i = 0; i < m.base->count(d); ++i) {
            long r = m.ranks[d][i];
            if (r == 0) continue;
            MorKey k{SimplexRef{d, i}, FaceInjection::identity(d).image};
            f.comps[k] = Matrix::identity(m.ring, r);
        }
    return f;
}

XComps prune_comps(const XComps& a) {
    XComps out;
    for (const auto& [k, m] : a)
        if (!m.is_zero()) out.emplace(k, m);
    return out;
}

XComps add_comps(const RingSpec& ring, const XComps& a, const XComps& b) {
    XComps out = a;
    for (const auto& [k, m] : b) {
        auto it = out.find(k);
        if (it == out.end())
            out.emplace(k, m);
        else
            it->second = it->second + m;
    }
    (void)ring;
    return prune_comps(out);
}

XComps compose_comps(const DeltaSet& base, Variance var, const RingSpec& ring, const XComps& g,
                     const XComps& f, const XObject& f_source, const XObject& f_target,
                     const XObject& g_target) {
    (void)f_target;
    XComps out;
    for (const auto& [kf, mf] : f) {
        if (mf.is_zero()) continue;
        CatMorphism a = kf.morphism();
        for (const auto& [kg, mg] : g) {
            if (mg.is_zero()) continue;
            CatMorphism b = kg.morphism();
            CatMorphism composite;
            if (var == Variance::Contravariant) {
                // need source(b) == target(a); composite b o a
                if (morphism_source(b, base) != a.target) continue;
                composite = compose_morphisms(b, a, base);
            } else {
                // need source(a) == target(b); composite a o b
                if (morphism_source(a, base) != b.target) continue;
                composite = compose_morphisms(a, b, base);
            }
            Matrix prod = mg * mf;
            MorKey key = MorKey::of(composite);
            auto it = out.find(key);
            if (it == out.end()) {
                SimplexRef src = morphism_source(composite, base);
                long rows = var == Variance::Contravariant ? g_target.rank(composite.target)
                                                           : g_target.rank(src);
                long cols = var == Variance::Contravariant ? f_source.rank(src)
                                                           : f_source.rank(composite.target);
                Matrix z = Matrix::zero(ring, rows, cols);
                it = out.emplace(key, std::move(z)).first;
            }
            it->second = it->second + prod;
        }
    }
    return prune_comps(out);
}

XMorphism compose(const XMorphism& g, const XMorphism& f) {
    if (!same_base(f.target, g.source) || f.target.var != g.source.var ||
        f.target.ring != g.source.ring || f.target.ranks != g.source.ranks)
        throw DomainError("compose: middle objects do not match");
    XMorphism r{f.source, g.target,
                compose_comps(*f.source.base, f.source.var, f.source.ring, g.comps, f.comps,
                              f.source, f.target, g.target)};
    return r;
}

XMorphism add(const XMorphism& a, const XMorphism& b) {
    if (a.source.ranks != b.source.ranks || a.target.ranks != b.target.ranks)
        throw DomainError("add: shape mismatch");
    XMorphism r = a;
    for (const auto& [k, m] : b.comps) {
        auto it = r.comps.find(k);
        if (it == r.comps.end())
            r.comps.emplace(k, m);
        else
            it->second = it->second + m;
    }
    r.comps = prune_comps(r.comps);
    return r;
}

bool equal(const XMorphism& a, const XMorphism& b) {
    return prune_comps(a.comps) == prune_comps(b.comps);
}

long XComplex::rank(int n, SimplexRef r) const {
    if (empty() || n < lo || n > hi()) return 0;
    const auto& byd = ranks[n - lo];
    if (r.dim < 0 || r.dim >= static_cast<int>(byd.size())) return 0;
    if (r.index < 0 || r.index >= static_cast<int>(byd[r.dim].size())) return 0;
    return byd[r.dim][r.index];
}

XObject XComplex::object(int n) const {
    XObject m = XObject::zeros(base, var, ring);
    if (!empty() && n >= lo && n <= hi()) m.ranks = ranks[n - lo];
    return m;
}

XComps XComplex::diff(int n) const {
    auto it = diffs.find(n);
    return it == diffs.end() ? XComps{} : it->second;
}

XMorphism XComplex::diff_morphism(int n) const {
    return XMorphism{object(n), object(n - 1), diff(n)};
}

void XComplex::validate() const {
    for (int n = lo; n <= hi() + 1; ++n) diff_morphism(n).validate();
    for (int n = lo + 1; n <= hi(); ++n) {
        XComps sq = compose_comps(*base, var, ring, diff(n), diff(n + 1), object(n + 1), object(n),
                                  object(n - 1));
        if (!sq.empty()) throw DomainError("x-complex: d^2 != 0 at degree " + std::to_string(n + 1));
    }
}

XComplex XComplex::shifted(int k) const {
    XComplex r = *this;
    r.lo += k;
    std::map<int, XComps> nd;
    for (const auto& [n, comps] : diffs) {
        XComps c = comps;
        if (k % 2 != 0)
            for (auto& [key, m] : c) m = m.negated();
        nd[n + k] = std::move(c);
    }
    r.diffs = std::move(nd);
    return r;
}

XComplex XComplex::direct_sum(const XComplex& o) const {
    if (!(base == o.base || *base == *o.base) || var != o.var || ring != o.ring)
        throw DomainError("direct_sum: base, variance or ring mismatch");
    if (empty()) return o;
    if (o.empty()) return *this;
    XComplex r;
    r.base = base;
    r.var = var;
    r.ring = ring;
    r.lo = std::min(lo, o.lo);
    int top = std::max(hi(), o.hi());
    for (int n = r.lo; n <= top; ++n) {
        std::vector<std::vector<long>> byd(base->top_dim() + 1);
        for (int d = 0; d <= base->top_dim(); ++d)
            for (int i = 0; i < base->count(d); ++i)
                byd[d].push_back(rank(n, {d, i}) + o.rank(n, {d, i}));
        r.ranks.push_back(std::move(byd));
    }
    for (int n = r.lo + 1; n <= top; ++n) {
        XComps da = diff(n), db = o.diff(n);
        XComps out;
        std::vector<MorKey> keys;
        for (const auto& [k, m] : da) keys.push_back(k);
        for (const auto& [k, m] : db)
            if (!da.count(k)) keys.push_back(k);
        for (const auto& k : keys) {
            CatMorphism f = k.morphism();
            SimplexRef src = morphism_source(f, *base);
            SimplexRef row_ref = var == Variance::Contravariant ? f.target : src;
            SimplexRef col_ref = var == Variance::Contravariant ? src : f.target;
            Matrix m(ring, r.rank(n - 1, row_ref), r.rank(n, col_ref));
            long row_a = rank(n - 1, row_ref), col_a = rank(n, col_ref);
            if (auto it = da.find(k); it != da.end()) m.insert_block(0, 0, it->second);
            if (auto it = db.find(k); it != db.end()) m.insert_block(row_a, col_a, it->second);
            if (!m.is_zero()) out[k] = std::move(m);
        }
        if (!out.empty()) r.diffs[n] = std::move(out);
    }
    return r;
}

XComps XChainMap::comp(int n) const {
    auto it = comps.find(n);
    return it == comps.end() ? XComps{} : it->second;
}

XMorphism XChainMap::comp_morphism(int n) const {
    return XMorphism{source.object(n), target.object(n), comp(n)};
}

void XChainMap::validate() const {
    if (!same_base(source.object(source.lo), target.object(target.lo)) || source.var != target.var ||
        source.ring != target.ring)
        throw DomainError("x chain map: base, variance or ring mismatch");
    int lo = std::min(source.lo, target.lo), hi = std::max(source.hi(), target.hi());
    for (const auto& [n, c] : comps) XMorphism{source.object(n), target.object(n), c}.validate();
    const DeltaSet& b = *source.base;
    for (int n = lo; n <= hi + 1; ++n) {
        XComps lhs = compose_comps(b, source.var, source.ring, target.diff(n), comp(n),
                                   source.object(n), target.object(n), target.object(n - 1));
        XComps rhs = compose_comps(b, source.var, source.ring, comp(n - 1), source.diff(n),
                                   source.object(n), source.object(n - 1), target.object(n - 1));
        if (lhs != rhs)
            throw DomainError("x chain map does not commute with d at degree " + std::to_string(n));
    }
}

XChainMap XChainMap::identity(const XComplex& c) {
    XChainMap f{c, c, {}};
    for (int n = c.lo; n <= c.hi(); ++n) {
        XComps comps = XMorphism::identity(c.object(n)).comps;
        if (!comps.empty()) f.comps[n] = std::move(comps);
    }
    return f;
}

XChainMap XChainMap::zero(XComplex src, XComplex tgt) {
    return XChainMap{std::move(src), std::move(tgt), {}};
}

XChainMap compose(const XChainMap& g, const XChainMap& f) {
    XChainMap r{f.source, g.target, {}};
    const DeltaSet& b = *f.source.base;
    int lo = std::min(f.source.lo, g.target.lo), hi = std::max(f.source.hi(), g.target.hi());
    for (int n = lo; n <= hi; ++n) {
        XComps c = compose_comps(b, f.source.var, f.source.ring, g.comp(n), f.comp(n),
                                 f.source.object(n), f.target.object(n), g.target.object(n));
        if (!c.empty()) r.comps[n] = std::move(c);
    }
    return r;
}

namespace {

// Bracket summands: st(x) on the contravariant side, cl(x) on the
// covariant side, in canonical order.
std::vector<CatMorphism> bracket_summands(const DeltaSet& base, Variance var, SimplexRef x) {
    if (var == Variance::Contravariant) return star(x, base);
    std::vector<CatMorphism> out;
    for (int m = 0; m <= x.dim; ++m)
        for (const auto& inj : all_injections(m, x.dim)) out.push_back({x, inj});
    return out;
}

// For a summand morphism phi and a component key theta, the relocated
// summand, if the pair composes: contravariant theta o phi, covariant
// phi o theta.
std::optional<CatMorphism> relocate(const DeltaSet& base, Variance var, const CatMorphism& phi,
                                    const CatMorphism& theta) {
    if (var == Variance::Contravariant) {
        if (morphism_source(theta, base) != phi.target) return std::nullopt;
        return compose_morphisms(theta, phi, base);
    }
    if (morphism_source(phi, base) != theta.target) return std::nullopt;
    return compose_morphisms(phi, theta, base);
}

// The simplex whose component ranks feed a summand: target on the
// contravariant side, source on the covariant side.
SimplexRef summand_value(const DeltaSet& base, Variance var, const CatMorphism& phi) {
    return var == Variance::Contravariant ? phi.target : morphism_source(phi, base);
}

struct BracketLayout {
    std::vector<CatMorphism> summands;
    std::map<MorKey, int> pos;
};

BracketLayout bracket_layout(const DeltaSet& base, Variance var, SimplexRef x) {
    BracketLayout l;
    l.summands = bracket_summands(base, var, x);
    for (size_t j = 0; j < l.summands.size(); ++j) l.pos[MorKey::of(l.summands[j])] = static_cast<int>(j);
    return l;
}

// Assemble one degree of a bracket-shaped map: blocks relocate along the
// component keys.
Matrix bracket_matrix(const DeltaSet& base, Variance var, const RingSpec& ring,
                      const BracketLayout& layout, const XObject& src, const XObject& tgt,
                      const XComps& comps) {
    auto offsets_of = [&](const XObject& obj) {
        std::vector<long> off(layout.summands.size() + 1, 0);
        for (size_t j = 0; j < layout.summands.size(); ++j)
            off[j + 1] = off[j] + obj.rank(summand_value(base, var, layout.summands[j]));
        return off;
    };
    std::vector<long> src_off = offsets_of(src), tgt_off = offsets_of(tgt);
    Matrix m(ring, tgt_off.back(), src_off.back());
    for (size_t j = 0; j < layout.summands.size(); ++j) {
        const CatMorphism& phi = layout.summands[j];
        for (const auto& [k, mat] : comps) {
            if (mat.is_zero()) continue;
            CatMorphism theta = k.morphism();
            auto moved = relocate(base, var, phi, theta);
            if (!moved) continue;
            auto it = layout.pos.find(MorKey::of(*moved));
            if (it == layout.pos.end()) continue;
            for (long r = 0; r < mat.rows(); ++r)
                for (long c = 0; c < mat.cols(); ++c)
                    m.add_at(tgt_off[it->second] + r, src_off[j] + c, mat.at(r, c));
        }
    }
    return m;
}

}  // namespace

Bracket bracket(const XComplex& c, SimplexRef x) {
    Bracket b;
    const DeltaSet& base = *c.base;
    BracketLayout layout = bracket_layout(base, c.var, x);
    b.summands = layout.summands;
    if (c.empty()) {
        b.complex = ChainComplex(c.ring);
        return b;
    }
    std::vector<long> ranks;
    for (int n = c.lo; n <= c.hi(); ++n) {
        long total = 0;
        std::vector<long> off;
        for (const auto& phi : layout.summands) {
            off.push_back(total);
            total += c.rank(n, summand_value(base, c.var, phi));
        }
        b.offsets[n] = std::move(off);
        ranks.push_back(total);
    }
    b.complex = ChainComplex(c.ring, c.lo, std::move(ranks));
    for (int n = c.lo + 1; n <= c.hi(); ++n)
        b.complex.set_diff(n, bracket_matrix(base, c.var, c.ring, layout, c.object(n),
                                             c.object(n - 1), c.diff(n)));
    b.complex.validate();
    return b;
}

ChainMap bracket_map(const XChainMap& f, SimplexRef x) {
    const DeltaSet& base = *f.source.base;
    BracketLayout layout = bracket_layout(base, f.source.var, x);
    Bracket bs = bracket(f.source, x);
    Bracket bt = bracket(f.target, x);
    ChainMap m{bs.complex, bt.complex, {}};
    int lo = std::min(f.source.lo, f.target.lo), hi = std::max(f.source.hi(), f.target.hi());
    for (int n = lo; n <= hi; ++n) {
        Matrix mm = bracket_matrix(base, f.source.var, f.source.ring, layout, f.source.object(n),
                                   f.target.object(n), f.comp(n));
        if (mm.rows() > 0 || mm.cols() > 0) m.comps[n] = std::move(mm);
    }
    return m;
}

ChainComplex diagonal_complex(const XComplex& c, SimplexRef x) {
    if (c.empty()) return ChainComplex(c.ring);
    std::vector<long> ranks;
    for (int n = c.lo; n <= c.hi(); ++n) ranks.push_back(c.rank(n, x));
    ChainComplex out(c.ring, c.lo, std::move(ranks));
    MorKey idk{x, FaceInjection::identity(x.dim).image};
    for (int n = c.lo + 1; n <= c.hi(); ++n) {
        XComps d = c.diff(n);
        auto it = d.find(idk);
        if (it != d.end()) out.set_diff(n, it->second);
    }
    return out;
}

ChainMap diagonal_map(const XChainMap& f, SimplexRef x) {
    ChainMap m{diagonal_complex(f.source, x), diagonal_complex(f.target, x), {}};
    MorKey idk{x, FaceInjection::identity(x.dim).image};
    for (const auto& [n, comps] : f.comps) {
        auto it = comps.find(idk);
        if (it != comps.end() && !it->second.is_zero()) m.comps[n] = it->second;
    }
    return m;
}

namespace {

std::vector<long> simplex_offsets(const XObject& obj) {
    std::vector<long> off;
    long total = 0;
    for (const auto& row : obj.ranks)
        for (long v : row) {
            off.push_back(total);
            total += v;
        }
    off.push_back(total);
    return off;
}

long flat_of(const DeltaSet& x, SimplexRef r) {
    long o = 0;
    for (int d = 0; d < r.dim; ++d) o += x.count(d);
    return o + r.index;
}

}  // namespace

Matrix assemble_morphism(const XObject& src, const XObject& tgt, const XComps& comps) {
    const DeltaSet& base = *src.base;
    std::vector<long> src_off = simplex_offsets(src), tgt_off = simplex_offsets(tgt);
    Matrix m(src.ring, tgt_off.back(), src_off.back());
    for (const auto& [k, mat] : comps) {
        if (mat.is_zero()) continue;
        CatMorphism f = k.morphism();
        SimplexRef s = morphism_source(f, base);
        SimplexRef row_ref = src.var == Variance::Contravariant ? f.target : s;
        SimplexRef col_ref = src.var == Variance::Contravariant ? s : f.target;
        long r0 = tgt_off[flat_of(base, row_ref)], c0 = src_off[flat_of(base, col_ref)];
        for (long r = 0; r < mat.rows(); ++r)
            for (long c = 0; c < mat.cols(); ++c) m.add_at(r0 + r, c0 + c, mat.at(r, c));
    }
    return m;
}

ChainComplex assemble(const XComplex& c) {
    if (c.empty()) return ChainComplex(c.ring);
    std::vector<long> ranks;
    for (int n = c.lo; n <= c.hi(); ++n) ranks.push_back(c.object(n).total_rank());
    ChainComplex out(c.ring, c.lo, std::move(ranks));
    for (int n = c.lo + 1; n <= c.hi(); ++n)
        out.set_diff(n, assemble_morphism(c.object(n), c.object(n - 1), c.diff(n)));
    return out.trimmed();
}

ChainMap assemble_map(const XChainMap& f) {
    ChainMap m{assemble(f.source), assemble(f.target), {}};
    int lo = std::min(f.source.lo, f.target.lo), hi = std::max(f.source.hi(), f.target.hi());
    for (int n = lo; n <= hi; ++n) {
        Matrix mm = assemble_morphism(f.source.object(n), f.target.object(n), f.comp(n));
        if (!mm.is_zero()) m.comps[n] = std::move(mm);
    }
    return m;
}

XComplex delta_prime_as_xcomplex(const Subdivision& sub, const RingSpec& ring) {
    XComplex c;
    c.base = share(sub.original);
    c.var = Variance::Contravariant;
    c.ring = ring;
    c.lo = 0;
    const DeltaSet& x = sub.original;
    if (x.empty_set()) return c;

    int top = static_cast<int>(sub.chains.size()) - 1;
    // block_first[n][flat(x)]: start of x's chain block in dimension n
    std::vector<std::vector<int>> block_first(top + 1);
    for (int n = 0; n <= top; ++n) {
        std::vector<std::vector<long>> byd(x.top_dim() + 1);
        for (int d = 0; d <= x.top_dim(); ++d) byd[d].assign(x.count(d), 0);
        block_first[n].assign(x.total_count() + 1, 0);
        for (const auto& ch : sub.chains[n]) ++byd[ch.base.dim][ch.base.index];
        long run = 0;
        long fi = 0;
        for (int d = 0; d <= x.top_dim(); ++d)
            for (int i = 0; i < x.count(d); ++i) {
                block_first[n][fi++] = static_cast<int>(run);
                run += byd[d][i];
            }
        block_first[n][fi] = static_cast<int>(run);
        c.ranks.push_back(std::move(byd));
    }

    RingElem one = re_one(ring);
    for (int n = 1; n <= top; ++n) {
        XComps comps;
        auto ensure = [&](const MorKey& k, SimplexRef row_ref, SimplexRef col_ref) -> Matrix& {
            auto it = comps.find(k);
            if (it == comps.end())
                it = comps.emplace(k, Matrix::zero(ring, c.rank(n - 1, row_ref), c.rank(n, col_ref)))
                         .first;
            return it->second;
        };
        for (size_t j = 0; j < sub.chains[n].size(); ++j) {
            const MorphismChain& ch = sub.chains[n][j];
            long col = static_cast<long>(j) - block_first[n][flat_of(x, ch.base)];
            for (int i = 0; i <= n; ++i) {
                SimplexRef fref = sub.prime.face({n, static_cast<int>(j)}, i);
                const MorphismChain& fch = sub.chains[n - 1][fref.index];
                long row = fref.index - block_first[n - 1][flat_of(x, fch.base)];
                RingElem sgn = (i % 2 == 0) ? one : re_neg(ring, one);
                if (i == 0) {
                    MorKey k = MorKey::of(ch.links[0]);
                    ensure(k, fch.base, ch.base).add_at(row, col, sgn);
                } else {
                    MorKey k{ch.base, FaceInjection::identity(ch.base.dim).image};
                    ensure(k, ch.base, ch.base).add_at(row, col, sgn);
                }
            }
        }
        comps = prune_comps(comps);
        if (!comps.empty()) c.diffs[n] = std::move(comps);
    }
    return c;
}

std::vector<std::string> PerSimplexReport::failures() const {
    std::vector<std::string> out;
    for (const auto& [label, ok] : entries)
        if (!ok) out.push_back(label);
    return out;
}

PerSimplexReport is_weak_equivalence(const XChainMap& f) {
    if (f.source.ring.kind == RingKind::CyclicGroupRing)
        throw DomainError("weak equivalence test over " + f.source.ring.describe() + " is not supported");
    f.validate();
    PerSimplexReport rep;
    for (auto r : f.source.base->all_refs()) {
        ChainMap m = bracket_map(f, r);
        bool ok = is_quasi_iso(m);
        if (!ok) rep.overall = false;
        rep.entries.push_back({f.source.base->label(r), ok});
    }
    return rep;
}

PerSimplexReport local_criterion(const XChainMap& f) {
    if (f.source.ring.kind == RingKind::CyclicGroupRing)
        throw DomainError("local criterion over " + f.source.ring.describe() + " is not supported");
    f.validate();
    PerSimplexReport rep;
    for (auto r : f.source.base->all_refs()) {
        ChainMap m = diagonal_map(f, r);
        bool ok = is_quasi_iso(m);
        if (!ok) rep.overall = false;
        rep.entries.push_back({f.source.base->label(r), ok});
    }
    return rep;
}

}  // namespace delta
