#include "deltatopo/total_complex.hpp"

#include "deltatopo/simplicial.hpp"

namespace delta {

namespace {

long flat_of(const DeltaSet& x, SimplexRef r) {
    long o = 0;
    for (int d = 0; d < r.dim; ++d) o += x.count(d);
    return o + r.index;
}

std::vector<CatMorphism> all_morphisms(const DeltaSet& x) {
    std::vector<CatMorphism> out;
    for (auto r : x.all_refs())
        for (auto& f : star(r, x))
            if (!f.is_identity()) out.push_back(std::move(f));
    // drop duplicates: star enumerates per source, so each morphism shows up once
    return out;
}

}  // namespace

const ChainComplex& GeneralXComplex::bracket_at(SimplexRef r) const {
    return brackets[flat_of(*base, r)];
}

Matrix GeneralXComplex::restriction(const CatMorphism& f, int degree) const {
    SimplexRef src = morphism_source(f, *base);
    if (f.is_identity()) return Matrix::identity(ring, bracket_at(f.target).rank(degree));
    auto it = restrictions.find(MorKey::of(f));
    if (it != restrictions.end()) {
        auto jt = it->second.find(degree);
        if (jt != it->second.end()) return jt->second;
    }
    return Matrix::zero(ring, bracket_at(src).rank(degree), bracket_at(f.target).rank(degree));
}

void GeneralXComplex::validate() const {
    const DeltaSet& x = *base;
    for (const auto& c : brackets) c.validate();
    // restrictions are chain maps
    for (const auto& [k, mats] : restrictions) {
        CatMorphism f = k.morphism();
        SimplexRef src = morphism_source(f, x);
        const ChainComplex& cy = bracket_at(f.target);
        const ChainComplex& cw = bracket_at(src);
        for (int n = cy.lo(); n <= cy.hi() + 1; ++n) {
            Matrix lhs = cw.diff(n) * restriction(f, n);
            Matrix rhs = restriction(f, n - 1) * cy.diff(n);
            if (!(lhs == rhs))
                throw DomainError("restriction along a morphism is not a chain map");
        }
    }
    // contravariant functoriality on composable pairs
    for (const auto& f : all_morphisms(x)) {
        for (const auto& g : all_morphisms(x)) {
            if (morphism_source(g, x) != f.target) continue;
            CatMorphism gf = compose_morphisms(g, f, x);
            const ChainComplex& top = bracket_at(g.target);
            for (int n = top.lo(); n <= top.hi(); ++n) {
                Matrix lhs = restriction(f, n) * restriction(g, n);
                Matrix rhs = restriction(gf, n);
                if (!(lhs == rhs)) throw DomainError("restrictions are not functorial");
            }
        }
    }
}

GeneralXComplex GeneralXComplex::constant(DeltaSetPtr base, const RingSpec& ring) {
    GeneralXComplex g;
    g.ring = ring;
    const DeltaSet& x = *base;
    for (long i = 0; i < x.total_count(); ++i) g.brackets.push_back(ChainComplex(ring, 0, {1}));
    for (const auto& f : all_morphisms(x))
        g.restrictions[MorKey::of(f)][0] = Matrix::identity(ring, 1);
    g.base = std::move(base);
    return g;
}

GeneralXComplex GeneralXComplex::from_induced(const XComplex& c) {
    GeneralXComplex g;
    g.base = c.base;
    g.ring = c.ring;
    const DeltaSet& x = *c.base;
    std::vector<Bracket> bs;
    for (auto r : x.all_refs()) bs.push_back(bracket(c, r));
    for (auto& b : bs) g.brackets.push_back(b.complex);
    // restriction along f : w -> y moves the summand at zeta : y -> z
    // identically to the summand at zeta o f : w -> z.
    for (const auto& f : all_morphisms(x)) {
        SimplexRef w = morphism_source(f, x);
        const Bracket& by = bs[flat_of(x, f.target)];
        const Bracket& bw = bs[flat_of(x, w)];
        std::map<MorKey, int> wpos;
        for (size_t j = 0; j < bw.summands.size(); ++j)
            wpos[MorKey::of(bw.summands[j])] = static_cast<int>(j);
        std::map<int, Matrix> mats;
        for (int n = c.lo; n <= c.hi(); ++n) {
            long rows = bw.complex.rank(n), cols = by.complex.rank(n);
            if (rows == 0 || cols == 0) continue;
            Matrix m(c.ring, rows, cols);
            for (size_t j = 0; j < by.summands.size(); ++j) {
                const CatMorphism& zeta = by.summands[j];
                long r = c.rank(n, zeta.target);
                if (r == 0) continue;
                CatMorphism moved = compose_morphisms(zeta, f, x);
                long srcO = by.offsets.at(n)[j];
                long dstO = bw.offsets.at(n)[wpos.at(MorKey::of(moved))];
                for (long t = 0; t < r; ++t) m.add_at(dstO + t, srcO + t, re_one(c.ring));
            }
            if (!m.is_zero()) mats[n] = std::move(m);
        }
        if (!mats.empty()) g.restrictions[MorKey::of(f)] = std::move(mats);
    }
    return g;
}

TotComplex tot(const GeneralXComplex& g) {
    const DeltaSet& x = *g.base;
    TotComplex t;
    t.total.base = g.base;
    t.total.var = Variance::Covariant;
    t.total.ring = g.ring;
    if (x.empty_set()) return t;

    int lo = 0, hi = 0;
    bool any = false;
    for (auto r : x.all_refs()) {
        const ChainComplex& b = g.bracket_at(r);
        if (b.empty()) continue;
        int l = b.lo() + r.dim, h = b.hi() + r.dim;
        if (!any) {
            lo = l;
            hi = h;
            any = true;
        } else {
            lo = std::min(lo, l);
            hi = std::max(hi, h);
        }
    }
    if (!any) return t;

    t.total.lo = lo;
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::vector<long>> byd(x.top_dim() + 1);
        for (int d = 0; d <= x.top_dim(); ++d)
            for (int i = 0; i < x.count(d); ++i)
                byd[d].push_back(g.bracket_at({d, i}).rank(n - d));
        t.total.ranks.push_back(std::move(byd));
    }

    for (int n = lo + 1; n <= hi; ++n) {
        XComps comps;
        for (auto r : x.all_refs()) {
            const ChainComplex& b = g.bracket_at(r);
            // internal part: the shifted differential, sign (-1)^{|x|}
            Matrix dm = b.diff(n - r.dim);
            if (!dm.is_zero()) {
                if (r.dim % 2 != 0) dm = dm.negated();
                comps[MorKey{r, FaceInjection::identity(r.dim).image}] = std::move(dm);
            }
            // relocation along each face, sign (-1)^{i+|x|}
            for (int i = 0; i <= r.dim && r.dim >= 1; ++i) {
                CatMorphism fm{r, FaceInjection::face(r.dim, i)};
                Matrix rel = g.restriction(fm, n - r.dim);
                if (rel.is_zero()) continue;
                if ((i + r.dim) % 2 != 0) rel = rel.negated();
                MorKey k = MorKey::of(fm);
                auto it = comps.find(k);
                if (it == comps.end())
                    comps.emplace(k, std::move(rel));
                else
                    it->second = it->second + rel;
            }
        }
        comps = prune_comps(comps);
        if (!comps.empty()) t.total.diffs[n] = std::move(comps);
    }
    return t;
}

TotComplex tot(const XComplex& c) {
    if (c.var != Variance::Contravariant)
        throw DomainError("tot accepts contravariant-side complexes only");
    TotComplex t = tot(GeneralXComplex::from_induced(c));
    t.induced_source = c;
    return t;
}

ChainComplex tot_assembled(const GeneralXComplex& c) { return assemble(tot(c).total); }

ChainComplex tot_assembled(const XComplex& c) { return assemble(tot(c).total); }

XChainMap tot_map(const XChainMap& f) {
    if (f.source.var != Variance::Contravariant)
        throw DomainError("tot_map accepts contravariant-side maps only");
    TotComplex ts = tot(f.source), tt = tot(f.target);
    XChainMap out{ts.total, tt.total, {}};
    const DeltaSet& x = *f.source.base;
    for (auto r : x.all_refs()) {
        ChainMap bm = bracket_map(f, r);
        for (int m = bm.source.lo(); m <= std::max(bm.source.hi(), bm.target.hi()); ++m) {
            Matrix mm = bm.comp(m);
            if (mm.is_zero()) continue;
            out.comps[m + r.dim][MorKey{r, FaceInjection::identity(r.dim).image}] = std::move(mm);
        }
    }
    return out;
}

bool constant_tot_matches_simplicial(const DeltaSet& x, const RingSpec& ring) {
    ChainComplex t = tot_assembled(GeneralXComplex::constant(share(x), ring)).trimmed();
    ChainComplex s = simplicial_chain_complex(x, ring).trimmed();
    if (t.lo() != s.lo() || t.rank_vector() != s.rank_vector()) return false;
    // phi_n = (-1)^{n(n+1)/2} id is an isomorphism iff d_s(n) = (-1)^n d_t(n)
    for (int n = t.lo() + 1; n <= t.hi(); ++n) {
        Matrix expect = (n % 2 == 0) ? t.diff(n) : t.diff(n).negated();
        if (!(s.diff(n) == expect)) return false;
    }
    return true;
}

}  // namespace delta
