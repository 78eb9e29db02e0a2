#include "deltatopo/assembly.hpp"

#include <algorithm>

#include "deltatopo/fixtures.hpp"

namespace delta {

ValidationReport validate_cover(const CoverSpec& c) {
    ValidationReport rep = validate(c.total);
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    ValidationReport base_rep = validate(c.base);
    if (!base_rep.ok) {
        for (auto& v : base_rep.violations) fail("base: " + v);
        return rep;
    }
    if (!rep.ok) return rep;
    ValidationReport act = validate_action(c.total, c.action);
    if (!act.ok) {
        for (auto& v : act.violations) fail(v);
        return rep;
    }
    try {
        c.projection.validate();
    } catch (const DomainError& e) {
        fail(std::string("projection: ") + e.what());
        return rep;
    }
    if (!(c.projection.source == c.total) || !(c.projection.target == c.base)) {
        fail("projection endpoints do not match the cover data");
        return rep;
    }
    // free action
    int e = c.action.identity_index();
    for (int g = 0; g < c.action.order(); ++g) {
        if (g == e) continue;
        for (int d = 0; d <= c.total.top_dim(); ++d)
            for (int i = 0; i < c.total.count(d); ++i)
                if (c.action.maps[g][d][i] == i)
                    fail("action is not free: '" + c.action.elements[g] + "' fixes '" +
                         c.total.labels[d][i] + "'");
    }
    // projection is deck-invariant
    for (int g = 0; g < c.action.order(); ++g)
        for (int d = 0; d <= c.total.top_dim(); ++d)
            for (int i = 0; i < c.total.count(d); ++i)
                if (c.projection.assignment[d][c.action.maps[g][d][i]] != c.projection.assignment[d][i])
                    fail("projection is not constant on the orbit of '" + c.total.labels[d][i] + "'");
    // orbits biject with base simplices
    for (int d = 0; d <= c.base.top_dim(); ++d) {
        std::vector<long> fiber(c.base.count(d), 0);
        for (int i = 0; i < c.total.count(d); ++i) ++fiber[c.projection.assignment[d][i]];
        for (int j = 0; j < c.base.count(d); ++j) {
            if (fiber[j] == 0)
                fail("base simplex '" + c.base.labels[d][j] + "' has empty fiber");
            else if (fiber[j] != c.action.order())
                fail("fiber over '" + c.base.labels[d][j] + "' is not a single orbit");
        }
        if (c.total.count(d) != c.base.count(d) * c.action.order())
            fail("total simplex count in dim " + std::to_string(d) + " does not match order * base");
    }
    return rep;
}

CoverSpec cyclic_cover_of_circle(long n) {
    if (n < 1) throw DomainError("cyclic_cover_of_circle: n must be >= 1");
    CoverSpec c;
    c.base = fixtures::circle();
    DeltaSet t;
    t.labels.resize(2);
    t.faces.resize(2);
    for (long i = 0; i < n; ++i) {
        t.labels[0].push_back("v" + std::to_string(i));
        t.faces[0].push_back({});
    }
    for (long i = 0; i < n; ++i) {
        t.labels[1].push_back("e" + std::to_string(i));
        t.faces[1].push_back({static_cast<int>(i), static_cast<int>((i + 1) % n)});
    }
    c.total = t;
    std::vector<std::vector<int>> gen(2);
    for (long i = 0; i < n; ++i) gen[0].push_back(static_cast<int>((i + 1) % n));
    for (long i = 0; i < n; ++i) gen[1].push_back(static_cast<int>((i + 1) % n));
    c.action = GroupAction::cyclic(t, gen);
    c.projection.source = t;
    c.projection.target = c.base;
    c.projection.assignment = {std::vector<int>(n, 0), std::vector<int>(n, 0)};
    c.projection.validate();
    return c;
}

bool cover_group_is_cyclic(const GroupAction& a, std::vector<long>& power_of) {
    long m = a.order();
    int e = a.identity_index();
    if (e < 0) return false;
    for (int g = 0; g < m; ++g) {
        std::vector<long> pow(m, -1);
        int cur = e;
        bool ok = true;
        for (long k = 0; k < m; ++k) {
            if (pow[cur] != -1) {
                ok = false;
                break;
            }
            pow[cur] = k;
            cur = a.mult[g][cur];
        }
        if (ok && cur == e) {
            power_of = std::move(pow);
            return true;
        }
    }
    return false;
}

std::vector<std::vector<int>> default_cover_reps(const CoverSpec& cover) {
    std::vector<std::vector<int>> reps(cover.base.top_dim() + 1);
    for (int d = 0; d <= cover.base.top_dim(); ++d) {
        reps[d].assign(cover.base.count(d), -1);
        for (int i = 0; i < cover.total.count(d); ++i) {
            int b = cover.projection.assignment[d][i];
            if (reps[d][b] < 0 || cover.total.labels[d][i] < cover.total.labels[d][reps[d][b]])
                reps[d][b] = i;
        }
    }
    return reps;
}

ChainComplex assemble_over_cover(const XComplex& c, const CoverSpec& cover) {
    return assemble_over_cover_with_reps(c, cover, default_cover_reps(cover));
}

ChainComplex assemble_over_cover_with_reps(const XComplex& c, const CoverSpec& cover,
                                           const std::vector<std::vector<int>>& reps) {
    if (c.ring != RingSpec::integers())
        throw DomainError("assemble_over_cover expects an integer-coefficient complex");
    if (c.var != Variance::Contravariant)
        throw DomainError("assemble_over_cover expects a contravariant complex");
    if (!(*c.base == cover.base)) throw DomainError("complex base does not match the cover base");
    ValidationReport rep = validate_cover(cover);
    if (!rep.ok) throw DomainError("invalid cover: " + rep.violations.front());
    std::vector<long> power_of;
    if (!cover_group_is_cyclic(cover.action, power_of))
        throw DomainError("assemble_over_cover supports cyclic deck groups only");
    long m = cover.action.order();
    RingSpec rpi = RingSpec::cyclic_group_ring(m);
    const DeltaSet& base = cover.base;

    // element index of each power of the generator
    std::vector<int> element_of_power(m, -1);
    for (int g = 0; g < m; ++g) element_of_power[power_of[g]] = g;

    // block offsets per degree follow the plain assembly layout
    auto offsets = [&](int n) {
        std::vector<long> off;
        long total = 0;
        for (auto r : base.all_refs()) {
            off.push_back(total);
            total += c.rank(n, r);
        }
        off.push_back(total);
        return off;
    };
    auto flat = [&](SimplexRef r) {
        long o = 0;
        for (int d = 0; d < r.dim; ++d) o += base.count(d);
        return o + r.index;
    };

    if (c.empty()) return ChainComplex(rpi);
    std::vector<long> ranks;
    for (int n = c.lo; n <= c.hi(); ++n) ranks.push_back(offsets(n).back());
    ChainComplex out(rpi, c.lo, std::move(ranks));

    for (int n = c.lo + 1; n <= c.hi(); ++n) {
        std::vector<long> src_off = offsets(n), dst_off = offsets(n - 1);
        Matrix mtx(rpi, out.rank(n - 1), out.rank(n));
        for (const auto& [k, mat] : c.diff(n)) {
            if (mat.is_zero()) continue;
            CatMorphism phi = k.morphism();
            SimplexRef bx = morphism_source(phi, base);
            SimplexRef by = phi.target;
            int rep_x = reps[bx.dim][bx.index];
            // unique lift of phi at the representative over bx: the total
            // simplex over by pulling back to it
            int lift_y = -1;
            for (int i = 0; i < cover.total.count(by.dim); ++i) {
                if (cover.projection.assignment[by.dim][i] != by.index) continue;
                if (apply_injection(phi.inj, {by.dim, i}, cover.total).index == rep_x) {
                    lift_y = i;
                    break;
                }
            }
            if (lift_y < 0) throw DomainError("cover has no lift for a base morphism");
            // write the lift as t^k applied to the representative over by
            int rep_y = reps[by.dim][by.index];
            long kpow = -1;
            for (int g = 0; g < m; ++g)
                if (cover.action.maps[g][by.dim][rep_y] == lift_y) {
                    kpow = power_of[g];
                    break;
                }
            if (kpow < 0) throw DomainError("cover lift is not in the representative's orbit");
            RingElem coef = re_group_gen_pow(rpi, kpow);
            long r0 = dst_off[flat(by)], c0 = src_off[flat(bx)];
            for (long r = 0; r < mat.rows(); ++r)
                for (long cc = 0; cc < mat.cols(); ++cc) {
                    const Int& v = mat.at(r, cc).c[0];
                    if (v == 0) continue;
                    RingElem term = coef;
                    for (auto& cv : term.c) cv *= v;
                    mtx.add_at(r0 + r, c0 + cc, term);
                }
        }
        out.set_diff(n, std::move(mtx));
    }
    return out;
}

ChainComplex restrict_scalars(const ChainComplex& c) {
    if (c.ring().kind != RingKind::CyclicGroupRing)
        throw DomainError("restrict_scalars expects a group-ring complex");
    long m = c.ring().order;
    RingSpec z = RingSpec::integers();
    if (c.empty()) return ChainComplex(z);
    std::vector<long> ranks;
    for (int n = c.lo(); n <= c.hi(); ++n) ranks.push_back(c.rank(n) * m);
    ChainComplex out(z, c.lo(), std::move(ranks));
    for (int n = c.lo() + 1; n <= c.hi(); ++n) {
        Matrix src = c.diff(n);
        Matrix dst(z, out.rank(n - 1), out.rank(n));
        for (long i = 0; i < src.rows(); ++i)
            for (long j = 0; j < src.cols(); ++j) {
                const RingElem& e = src.at(i, j);
                for (long k = 0; k < m; ++k) {
                    if (e.c[k] == 0) continue;
                    RingElem v;
                    v.c = {e.c[k]};
                    // t^k sends generator (j, pw) to (i, pw + k)
                    for (long pw = 0; pw < m; ++pw)
                        dst.add_at(i * m + (pw + k) % m, j * m + pw, v);
                }
            }
        out.set_diff(n, std::move(dst));
    }
    return out;
}

}  // namespace delta
