#include "deltatopo/subdivision.hpp"

#include <algorithm>
#include <map>

namespace delta {

namespace {

std::string encode_inj(const FaceInjection& f) {
    std::string s;
    for (size_t i = 0; i < f.image.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.image[i]);
    }
    return s;
}

std::string chain_label(const DeltaSet& x, SimplexRef base, const std::vector<CatMorphism>& links) {
    std::string s = x.label(base);
    for (const auto& l : links) s += ">" + encode_inj(l.inj) + ">" + x.label(l.target);
    return s;
}

// Non-identity morphisms out of every simplex, canonical order.
std::vector<std::vector<CatMorphism>> outgoing_non_identity(const DeltaSet& x) {
    std::vector<std::vector<CatMorphism>> out;
    for (int d = 0; d <= x.top_dim(); ++d)
        for (int i = 0; i < x.count(d); ++i) {
            std::vector<CatMorphism> ms;
            for (auto& f : star({d, i}, x))
                if (!f.is_identity()) ms.push_back(std::move(f));
            out.push_back(std::move(ms));
        }
    return out;
}

long flat_index(const DeltaSet& x, SimplexRef r) {
    long off = 0;
    for (int d = 0; d < r.dim; ++d) off += x.count(d);
    return off + r.index;
}

}  // namespace

SimplexRef Subdivision::index_of(const MorphismChain& c) const {
    int d = c.dim();
    if (d >= 0 && d < static_cast<int>(chains.size())) {
        const auto& row = chains[d];
        auto it = std::lower_bound(row.begin(), row.end(), c);
        if (it != row.end() && *it == c) return {d, static_cast<int>(it - row.begin())};
    }
    throw DomainError("chain is not a simplex of this subdivision");
}

std::pair<int, int> Subdivision::base_block(int d, SimplexRef x) const {
    if (d < 0 || d >= static_cast<int>(chains.size())) return {0, 0};
    const auto& row = chains[d];
    int first = 0;
    while (first < static_cast<int>(row.size()) && row[first].base < x) ++first;
    int last = first;
    while (last < static_cast<int>(row.size()) && row[last].base == x) ++last;
    return {first, last};
}

Subdivision barycentric_subdivide(const DeltaSet& x) {
    Subdivision sub;
    sub.original = x;
    if (x.empty_set()) return sub;

    auto out = outgoing_non_identity(x);

    // Chains of length n extend chains of length n-1; the recursion keeps
    // them lexicographically ordered and grouped by base.
    std::vector<std::vector<MorphismChain>> chains;
    chains.emplace_back();
    for (auto r : x.all_refs()) chains[0].push_back({r, {}});
    while (true) {
        std::vector<MorphismChain> next;
        for (const auto& c : chains.back())
            for (const auto& f : out[flat_index(x, c.end())]) {
                MorphismChain e = c;
                e.links.push_back(f);
                next.push_back(std::move(e));
            }
        if (next.empty()) break;
        chains.push_back(std::move(next));
    }

    std::vector<std::map<MorphismChain, int>> index(chains.size());
    for (size_t d = 0; d < chains.size(); ++d)
        for (size_t i = 0; i < chains[d].size(); ++i) index[d][chains[d][i]] = static_cast<int>(i);

    sub.prime.labels.resize(chains.size());
    sub.prime.faces.resize(chains.size());
    for (size_t d = 0; d < chains.size(); ++d)
        for (const auto& c : chains[d]) {
            sub.prime.labels[d].push_back(chain_label(x, c.base, c.links));
            std::vector<int> fl;
            if (d >= 1) {
                int n = static_cast<int>(d);
                for (int i = 0; i <= n; ++i) {
                    MorphismChain f;
                    if (i == 0) {
                        f.base = c.links[0].target;
                        f.links.assign(c.links.begin() + 1, c.links.end());
                    } else if (i == n) {
                        f.base = c.base;
                        f.links.assign(c.links.begin(), c.links.end() - 1);
                    } else {
                        f.base = c.base;
                        f.links = c.links;
                        f.links[i - 1] = compose_morphisms(c.links[i], c.links[i - 1], x);
                        f.links.erase(f.links.begin() + i);
                    }
                    fl.push_back(index[d - 1].at(f));
                }
            }
            sub.prime.faces[d].push_back(std::move(fl));
        }
    sub.chains = std::move(chains);
    return sub;
}

DualComplex dual(const DeltaSet& x, SimplexRef anchor) {
    if (!x.in_range(anchor)) throw DomainError("dual: simplex out of range");
    DualComplex dc;
    dc.anchor = anchor;

    auto out = outgoing_non_identity(x);

    std::vector<std::vector<DualSimplex>> simp;
    simp.emplace_back();
    for (auto& f : star(anchor, x)) simp[0].push_back({f, {}});
    while (true) {
        std::vector<DualSimplex> next;
        for (const auto& c : simp.back())
            for (const auto& f : out[flat_index(x, c.end())]) {
                DualSimplex e = c;
                e.links.push_back(f);
                next.push_back(std::move(e));
            }
        if (next.empty()) break;
        simp.push_back(std::move(next));
    }

    std::vector<std::map<DualSimplex, int>> index(simp.size());
    for (size_t d = 0; d < simp.size(); ++d)
        for (size_t i = 0; i < simp[d].size(); ++i) index[d][simp[d][i]] = static_cast<int>(i);

    dc.dual.labels.resize(simp.size());
    dc.dual.faces.resize(simp.size());
    dc.boundary.members.resize(simp.size());
    for (size_t d = 0; d < simp.size(); ++d)
        for (size_t i = 0; i < simp[d].size(); ++i) {
            const auto& c = simp[d][i];
            std::vector<CatMorphism> all_links;
            all_links.push_back(c.lead);
            all_links.insert(all_links.end(), c.links.begin(), c.links.end());
            dc.dual.labels[d].push_back(chain_label(x, morphism_source(c.lead, x), all_links));
            if (!c.lead.is_identity()) dc.boundary.members[d].push_back(static_cast<int>(i));
            std::vector<int> fl;
            if (d >= 1) {
                int n = static_cast<int>(d);
                for (int k = 0; k <= n; ++k) {
                    DualSimplex f;
                    if (k == 0) {
                        f.lead = compose_morphisms(c.links[0], c.lead, x);
                        f.links.assign(c.links.begin() + 1, c.links.end());
                    } else if (k == n) {
                        f.lead = c.lead;
                        f.links.assign(c.links.begin(), c.links.end() - 1);
                    } else {
                        f.lead = c.lead;
                        f.links = c.links;
                        f.links[k - 1] = compose_morphisms(c.links[k], c.links[k - 1], x);
                        f.links.erase(f.links.begin() + k);
                    }
                    fl.push_back(index[d - 1].at(f));
                }
            }
            dc.dual.faces[d].push_back(std::move(fl));
        }
    dc.simplices = std::move(simp);
    return dc;
}

DeltaMap characteristic_map(const DualComplex& dc, const Subdivision& sub) {
    DeltaMap f;
    f.source = dc.dual;
    f.target = sub.prime;
    f.assignment.resize(dc.dual.top_dim() + 1);
    for (int d = 0; d <= dc.dual.top_dim(); ++d)
        for (const auto& s : dc.simplices[d]) {
            MorphismChain c{s.lead.target, s.links};
            f.assignment[d].push_back(sub.index_of(c).index);
        }
    f.validate();
    return f;
}

DeltaMap induced_dual_map(const DeltaSet& x, const CatMorphism& phi,
                          const DualComplex& dual_of_target, const DualComplex& dual_of_source) {
    if (dual_of_target.anchor != phi.target)
        throw DomainError("induced_dual_map: dual complex does not match the morphism target");
    DeltaMap f;
    f.source = dual_of_target.dual;
    f.target = dual_of_source.dual;
    f.assignment.resize(dual_of_target.dual.top_dim() + 1);
    for (int d = 0; d <= dual_of_target.dual.top_dim(); ++d)
        for (const auto& s : dual_of_target.simplices[d]) {
            DualSimplex pre{compose_morphisms(s.lead, phi, x), s.links};
            const auto& row = dual_of_source.simplices[d];
            auto it = std::lower_bound(row.begin(), row.end(), pre);
            if (it == row.end() || !(*it == pre))
                throw DomainError("induced_dual_map: image simplex missing");
            f.assignment[d].push_back(static_cast<int>(it - row.begin()));
        }
    f.validate();
    return f;
}

SubDeltaSet image_subdelta(const DeltaMap& f) {
    SubDeltaSet s;
    s.members.resize(f.target.top_dim() + 1);
    for (int d = 0; d < static_cast<int>(f.assignment.size()); ++d) {
        std::vector<int> hits = f.assignment[d];
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        s.members[d] = std::move(hits);
    }
    return s;
}

StrictPullback strict_pullback(const DeltaMap& f, const Subdivision& sub, SimplexRef anchor) {
    if (!(f.target == sub.prime))
        throw DomainError("strict_pullback: map target lacks subdivision provenance");
    DualComplex dc = dual(sub.original, anchor);
    DeltaMap i = characteristic_map(dc, sub);

    StrictPullback pb;
    int top = std::min(f.source.top_dim(), dc.dual.top_dim());
    pb.pairs.resize(std::max(top + 1, 0));
    pb.total.labels.resize(std::max(top + 1, 0));
    pb.total.faces.resize(std::max(top + 1, 0));
    pb.boundary.members.resize(std::max(top + 1, 0));
    std::vector<std::map<std::pair<int, int>, int>> index(std::max(top + 1, 0));
    for (int d = 0; d <= top; ++d) {
        for (int ai = 0; ai < f.source.count(d); ++ai)
            for (int bi = 0; bi < dc.dual.count(d); ++bi) {
                if (f.assignment[d][ai] != i.assignment[d][bi]) continue;
                int idx = static_cast<int>(pb.pairs[d].size());
                index[d][{ai, bi}] = idx;
                pb.pairs[d].push_back({SimplexRef{d, ai}, SimplexRef{d, bi}});
                pb.total.labels[d].push_back("(" + f.source.labels[d][ai] + "," + dc.dual.labels[d][bi] + ")");
                std::vector<int> fl;
                if (d >= 1)
                    for (int k = 0; k <= d; ++k) {
                        int fa = f.source.faces[d][ai][k];
                        int fb = dc.dual.faces[d][bi][k];
                        fl.push_back(index[d - 1].at({fa, fb}));
                    }
                pb.total.faces[d].push_back(std::move(fl));
                if (dc.in_boundary({d, bi})) pb.boundary.members[d].push_back(idx);
            }
    }
    pb.total.drop_empty_top_dims();
    while (static_cast<int>(pb.boundary.members.size()) > pb.total.top_dim() + 1)
        pb.boundary.members.pop_back();
    return pb;
}

GradedGroup star_homology(const DeltaSet& x, SimplexRef anchor, const RingSpec& ring) {
    if (ring.kind == RingKind::CyclicGroupRing)
        throw DomainError("star_homology over " + ring.describe() + " is not supported");
    DualComplex dc = dual(x, anchor);
    GradedGroup h = homology(relative_complex(dc.dual, dc.boundary, ring));
    GradedGroup shifted;
    for (auto& [n, g] : h.groups) shifted.set(n + anchor.dim, g);
    return shifted;
}

std::vector<std::string> ManifoldCheckReport::failures() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
        if (!e.ok) out.push_back(e.label);
    return out;
}

ManifoldCheckReport homology_manifold_check(const DeltaSet& x, int n) {
    ManifoldCheckReport rep;
    GradedGroup expected;
    expected.set(n, GradedPiece{1, {}});
    for (auto r : x.all_refs()) {
        ManifoldCheckEntry e;
        e.ref = r;
        e.label = x.label(r);
        e.star = star_homology(x, r, RingSpec::integers());
        e.ok = (e.star == expected);
        if (!e.ok) rep.pass = false;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace delta
