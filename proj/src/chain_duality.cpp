#include "deltatopo/chain_duality.hpp"

#include <algorithm>

namespace delta {

ChainComplex dual_of_complex(const ChainComplex& c) { return dualize_complex(c); }

XComplex chain_dual_x(const XComplex& c) {
    if (c.var != Variance::Contravariant)
        throw DomainError("chain_dual_x accepts contravariant-side complexes only");
    XComplex t = tot(c).total;
    XComplex out;
    out.base = c.base;
    out.var = Variance::Contravariant;
    out.ring = c.ring;
    if (t.empty()) return out;
    out.lo = -t.hi();
    const DeltaSet& x = *c.base;
    for (int n = out.lo; n <= -t.lo; ++n) {
        std::vector<std::vector<long>> byd(x.top_dim() + 1);
        for (int d = 0; d <= x.top_dim(); ++d)
            for (int i = 0; i < x.count(d); ++i) byd[d].push_back(t.rank(-n, {d, i}));
        out.ranks.push_back(std::move(byd));
    }
    for (int n = out.lo + 1; n <= out.hi(); ++n) {
        XComps comps;
        for (const auto& [k, m] : t.diff(-n + 1)) comps[k] = m.transpose_involute();
        comps = prune_comps(comps);
        if (!comps.empty()) out.diffs[n] = std::move(comps);
    }
    return out;
}

XChainMap chain_dual_x_map(const XChainMap& f) {
    XChainMap tf = tot_map(f);
    XComplex td_src = chain_dual_x(f.target);  // T is contravariant
    XComplex td_tgt = chain_dual_x(f.source);
    XChainMap out{std::move(td_src), std::move(td_tgt), {}};
    for (const auto& [m, comps] : tf.comps) {
        XComps t;
        for (const auto& [k, mat] : comps) t[k] = mat.transpose_involute();
        t = prune_comps(t);
        if (!t.empty()) out.comps[-m] = std::move(t);
    }
    return out;
}

std::map<int, long> dual_component_ranks(const XComplex& dual_complex, SimplexRef x) {
    std::map<int, long> out;
    for (int n = dual_complex.lo; n <= dual_complex.hi(); ++n) {
        long r = dual_complex.rank(n, x);
        if (r > 0) out[n + 2 * x.dim] = r;
    }
    return out;
}

PerSimplexReport double_dual_check(const XComplex& c) {
    if (c.ring.kind == RingKind::CyclicGroupRing)
        throw DomainError("double_dual_check over " + c.ring.describe() + " is not supported");
    XComplex t2 = chain_dual_x(chain_dual_x(c));
    PerSimplexReport rep;
    for (auto r : c.base->all_refs()) {
        GradedGroup lhs = homology(bracket(t2, r).complex);
        GradedGroup rhs = homology(bracket(c, r).complex);
        bool ok = (lhs == rhs);
        if (!ok) rep.overall = false;
        rep.entries.push_back({c.base->label(r), ok});
    }
    return rep;
}

namespace {

// Canonical morphism order: by source simplex, then star order.
std::vector<CatMorphism> ordered_morphisms(const DeltaSet& x) {
    std::vector<CatMorphism> out;
    for (auto r : x.all_refs())
        for (auto& f : star(r, x)) out.push_back(std::move(f));
    return out;
}

}  // namespace

HomXComplex hom_x_complex(const XComplex& a, const XComplex& b) {
    if (!(a.base == b.base || *a.base == *b.base) || a.ring != b.ring)
        throw DomainError("hom_x_complex: base or ring mismatch");
    if (a.var != Variance::Contravariant || b.var != Variance::Contravariant)
        throw DomainError("hom_x_complex expects contravariant complexes");
    const DeltaSet& x = *a.base;
    const RingSpec& ring = a.ring;
    HomXComplex out;
    if (a.empty() || b.empty()) {
        out.complex = ChainComplex(ring);
        return out;
    }
    std::vector<CatMorphism> mors = ordered_morphisms(x);

    int lo = b.lo - a.hi(), hi = b.hi() - a.lo;
    auto layout = [&](int n) {
        std::vector<HomBlock> blocks;
        long total = 0;
        for (int p = a.lo; p <= a.hi(); ++p) {
            int q = n + p;
            if (q < b.lo || q > b.hi()) continue;
            for (const auto& f : mors) {
                SimplexRef sx = morphism_source(f, x);
                long cols = a.rank(p, sx), rows = b.rank(q, f.target);
                if (cols == 0 || rows == 0) continue;
                HomBlock hb;
                hb.p = p;
                hb.q = q;
                hb.phi = MorKey::of(f);
                hb.offset = total;
                hb.rows = rows;
                hb.cols = cols;
                total += rows * cols;
                blocks.push_back(std::move(hb));
            }
        }
        return std::pair(blocks, total);
    };

    std::vector<long> ranks;
    for (int n = lo; n <= hi; ++n) {
        auto [blocks, total] = layout(n);
        out.blocks[n] = std::move(blocks);
        ranks.push_back(total);
    }
    out.complex = ChainComplex(ring, lo, std::move(ranks));

    for (int n = lo + 1; n <= hi; ++n) {
        const auto& src = out.blocks.at(n);
        const auto& dst = out.blocks.at(n - 1);
        std::map<std::pair<int, MorKey>, const HomBlock*> dst_by;
        for (const auto& hb : dst) dst_by[{hb.p, hb.phi}] = &hb;
        Matrix m(ring, out.complex.rank(n - 1), out.complex.rank(n));
        for (const auto& hb : src) {
            CatMorphism phi = hb.phi.morphism();
            // d_B o f : relocate along every theta out of the target
            for (const auto& [tk, tmat] : b.diff(hb.q)) {
                CatMorphism theta = tk.morphism();
                if (morphism_source(theta, x) != phi.target) continue;
                CatMorphism psi = compose_morphisms(theta, phi, x);
                auto it = dst_by.find({hb.p, MorKey::of(psi)});
                if (it == dst_by.end()) continue;
                const HomBlock& db = *it->second;
                // e_{uv} -> sum_w theta[w,u] e_{wv}
                for (long u = 0; u < hb.rows; ++u)
                    for (long v = 0; v < hb.cols; ++v)
                        for (long w = 0; w < db.rows; ++w) {
                            const RingElem& val = tmat.at(w, u);
                            if (re_is_zero(ring, val)) continue;
                            m.add_at(db.offset + w * db.cols + v, hb.offset + u * hb.cols + v, val);
                        }
            }
            // (-1)^q f o d_A : precompose along every eta into the source
            bool neg = (hb.q % 2 != 0);
            for (const auto& [ek, emat] : a.diff(hb.p + 1)) {
                CatMorphism eta = ek.morphism();
                if (eta.target != morphism_source(phi, x)) continue;
                CatMorphism psi = compose_morphisms(phi, eta, x);
                auto it = dst_by.find({hb.p + 1, MorKey::of(psi)});
                if (it == dst_by.end()) continue;
                const HomBlock& db = *it->second;
                // e_{uv} -> (-1)^q sum_{v2} eta[v,v2] e_{u v2}
                for (long u = 0; u < hb.rows; ++u)
                    for (long v = 0; v < hb.cols; ++v)
                        for (long v2 = 0; v2 < db.cols; ++v2) {
                            RingElem val = emat.at(v, v2);
                            if (re_is_zero(ring, val)) continue;
                            if (neg) val = re_neg(ring, val);
                            m.add_at(db.offset + u * db.cols + v2, hb.offset + u * hb.cols + v, val);
                        }
            }
        }
        out.complex.set_diff(n, std::move(m));
    }
    return out;
}

ChainProduct chain_product(const XComplex& c, const XComplex& d) {
    if (!(c.base == d.base || *c.base == *d.base) || c.ring != d.ring)
        throw DomainError("chain_product: base or ring mismatch");
    ChainProduct p;
    p.dual = chain_dual_x(c);
    p.hom = hom_x_complex(p.dual, d);
    return p;
}

std::map<int, Matrix> symmetry_b(const XComplex& c, const XComplex& d) {
    ChainProduct cd = chain_product(c, d);
    ChainProduct dc = chain_product(d, c);
    const DeltaSet& x = *c.base;
    const RingSpec& ring = c.ring;

    // bracket layouts: T(C)_p(x) = (C[x]_{-p-|x|})^*, columns follow the
    // bracket summand offsets of C at x.
    std::map<long, Bracket> cb, db;
    auto flat = [&](SimplexRef r) {
        long o = 0;
        for (int dd = 0; dd < r.dim; ++dd) o += x.count(dd);
        return o + r.index;
    };
    for (auto r : x.all_refs()) {
        cb.emplace(flat(r), bracket(c, r));
        db.emplace(flat(r), bracket(d, r));
    }

    std::map<int, Matrix> out;
    for (int n = cd.complex().lo(); n <= cd.complex().hi(); ++n) {
        Matrix m(ring, dc.complex().rank(n), cd.complex().rank(n));
        if (!dc.hom.blocks.count(n)) {
            out[n] = std::move(m);
            continue;
        }
        std::map<std::pair<int, MorKey>, const HomBlock*> dst_by;
        for (const auto& hb : dc.hom.blocks.at(n)) dst_by[{hb.p, hb.phi}] = &hb;
        for (const auto& hb : cd.hom.blocks.at(n)) {
            CatMorphism phi = hb.phi.morphism();  // x -> y
            SimplexRef sx = morphism_source(phi, x);
            int a = -hb.p - sx.dim;  // internal degree of the C side
            int bdeg = hb.q;         // internal degree of the D side
            const Bracket& cbr = cb.at(flat(sx));
            const Bracket& dbr = db.at(flat(sx));
            if (!cbr.offsets.count(a)) continue;
            const auto& coff = cbr.offsets.at(a);
            // column w of the source block = (zeta summand offset) + v
            for (size_t zj = 0; zj < cbr.summands.size(); ++zj) {
                const CatMorphism& zeta = cbr.summands[zj];
                long alpha = c.rank(a, zeta.target);
                if (alpha == 0) continue;
                // target block: p' = -bdeg-|x|, phi' = zeta
                auto it = dst_by.find({-bdeg - sx.dim, MorKey::of(zeta)});
                if (it == dst_by.end()) continue;
                const HomBlock& tb = *it->second;
                // target columns: (phi summand offset in D[x] at degree bdeg) + u
                if (!dbr.offsets.count(bdeg)) continue;
                long phi_pos = -1;
                for (size_t j = 0; j < dbr.summands.size(); ++j)
                    if (MorKey::of(dbr.summands[j]) == hb.phi) {
                        phi_pos = static_cast<long>(j);
                        break;
                    }
                if (phi_pos < 0) continue;
                long doff = dbr.offsets.at(bdeg)[phi_pos];
                long sgn = ((static_cast<long>(a) * bdeg + sx.dim * (static_cast<long>(a) + bdeg)) % 2 + 2) % 2;
                RingElem val = sgn ? re_neg(ring, re_one(ring)) : re_one(ring);
                for (long u = 0; u < hb.rows; ++u)
                    for (long v = 0; v < alpha; ++v) {
                        long src_idx = hb.offset + u * hb.cols + (coff[zj] + v);
                        long dst_idx = tb.offset + v * tb.cols + (doff + u);
                        m.add_at(dst_idx, src_idx, val);
                    }
            }
        }
        out[n] = std::move(m);
    }
    return out;
}

GradedGroup cohomology_via_dual(const DeltaSet& x, const RingSpec& ring) {
    Subdivision sub = barycentric_subdivide(x);
    XComplex c = delta_prime_as_xcomplex(sub, ring);
    GradedGroup h = homology(assemble(chain_dual_x(c)));
    GradedGroup out;
    for (const auto& [n, g] : h.groups) out.set(-n, g);
    return out;
}

GradedGroup cohomology_via_cochain(const DeltaSet& x, const RingSpec& ring) {
    Subdivision sub = barycentric_subdivide(x);
    GradedGroup h = homology(dualize_complex(simplicial_chain_complex(sub.prime, ring)));
    GradedGroup out;
    for (const auto& [n, g] : h.groups) out.set(-n, g);
    return out;
}

}  // namespace delta
