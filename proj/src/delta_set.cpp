#include "deltatopo/delta_set.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace delta {

namespace {

std::string join_labels(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ".";
        out += parts[i];
    }
    return out;
}

}  // namespace

FaceInjection FaceInjection::identity(int n) {
    FaceInjection f;
    f.target_dim = n;
    f.image.resize(n + 1);
    for (int i = 0; i <= n; ++i) f.image[i] = i;
    return f;
}

FaceInjection FaceInjection::face(int k, int i) {
    FaceInjection f;
    f.target_dim = k;
    for (int j = 0; j <= k; ++j)
        if (j != i) f.image.push_back(j);
    return f;
}

std::vector<int> FaceInjection::omitted() const {
    std::vector<int> out;
    size_t pos = 0;
    for (int v = 0; v <= target_dim; ++v) {
        if (pos < image.size() && image[pos] == v)
            ++pos;
        else
            out.push_back(v);
    }
    return out;
}

FaceInjection FaceInjection::compose(const FaceInjection& inner) const {
    if (inner.target_dim != source_dim())
        throw DomainError("injection composition: dimension mismatch");
    FaceInjection r;
    r.target_dim = target_dim;
    for (int v : inner.image) r.image.push_back(image[v]);
    return r;
}

void FaceInjection::validate() const {
    if (image.empty()) throw DomainError("injection with empty image");
    int prev = -1;
    for (int v : image) {
        if (v <= prev || v < 0 || v > target_dim)
            throw DomainError("injection image is not strictly increasing in range");
        prev = v;
    }
}

long DeltaSet::total_count() const {
    long t = 0;
    for (const auto& l : labels) t += static_cast<long>(l.size());
    return t;
}

std::vector<long> DeltaSet::counts() const {
    std::vector<long> out;
    for (const auto& l : labels) out.push_back(static_cast<long>(l.size()));
    return out;
}

std::optional<SimplexRef> DeltaSet::find_label(const std::string& s) const {
    for (int d = 0; d <= top_dim(); ++d)
        for (int i = 0; i < count(d); ++i)
            if (labels[d][i] == s) return SimplexRef{d, i};
    return std::nullopt;
}

SimplexRef DeltaSet::face(SimplexRef r, int i) const {
    return {r.dim - 1, faces[r.dim][r.index][i]};
}

std::vector<SimplexRef> DeltaSet::all_refs() const {
    std::vector<SimplexRef> out;
    for (int d = 0; d <= top_dim(); ++d)
        for (int i = 0; i < count(d); ++i) out.push_back({d, i});
    return out;
}

void DeltaSet::drop_empty_top_dims() {
    while (!labels.empty() && labels.back().empty()) {
        labels.pop_back();
        faces.pop_back();
    }
}

bool SubDeltaSet::contains(SimplexRef r) const {
    if (r.dim < 0 || r.dim >= static_cast<int>(members.size())) return false;
    const auto& m = members[r.dim];
    return std::binary_search(m.begin(), m.end(), r.index);
}

std::vector<long> SubDeltaSet::counts() const {
    std::vector<long> out;
    for (const auto& m : members) out.push_back(static_cast<long>(m.size()));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

SubDeltaSet SubDeltaSet::full(const DeltaSet& x) {
    SubDeltaSet s;
    s.members.resize(x.top_dim() + 1);
    for (int d = 0; d <= x.top_dim(); ++d)
        for (int i = 0; i < x.count(d); ++i) s.members[d].push_back(i);
    return s;
}

SubDeltaSet SubDeltaSet::empty(const DeltaSet& x) {
    SubDeltaSet s;
    s.members.resize(x.top_dim() + 1);
    return s;
}

bool is_face_closed(const DeltaSet& x, const SubDeltaSet& a) {
    for (int d = 1; d < static_cast<int>(a.members.size()); ++d)
        for (int i : a.members[d])
            for (int k = 0; k <= d; ++k)
                if (!a.contains(x.face({d, i}, k))) return false;
    return true;
}

DeltaSet extract(const DeltaSet& x, const SubDeltaSet& a) {
    if (!is_face_closed(x, a)) throw DomainError("extract: subset is not face-closed");
    DeltaSet out;
    int top = static_cast<int>(a.members.size()) - 1;
    std::vector<std::map<int, int>> reindex(top + 1);
    for (int d = 0; d <= top; ++d) {
        out.labels.emplace_back();
        out.faces.emplace_back();
        for (int i : a.members[d]) {
            reindex[d][i] = static_cast<int>(out.labels[d].size());
            out.labels[d].push_back(x.labels[d][i]);
            std::vector<int> fl;
            if (d >= 1)
                for (int k = 0; k <= d; ++k) fl.push_back(reindex[d - 1].at(x.faces[d][i][k]));
            out.faces[d].push_back(std::move(fl));
        }
    }
    out.drop_empty_top_dims();
    return out;
}

void DeltaMap::validate() const {
    if (static_cast<int>(assignment.size()) != source.top_dim() + 1)
        throw DomainError("delta map: assignment dimension count mismatch");
    for (int d = 0; d <= source.top_dim(); ++d) {
        if (static_cast<long>(assignment[d].size()) != source.count(d))
            throw DomainError("delta map: assignment size mismatch in dim " + std::to_string(d));
        for (int i = 0; i < source.count(d); ++i)
            if (!target.in_range({d, assignment[d][i]}))
                throw DomainError("delta map: image out of range for '" + source.labels[d][i] + "'");
    }
    for (int d = 1; d <= source.top_dim(); ++d)
        for (int i = 0; i < source.count(d); ++i)
            for (int k = 0; k <= d; ++k) {
                SimplexRef lhs = apply(source.face({d, i}, k));
                SimplexRef rhs = target.face(apply({d, i}), k);
                if (lhs != rhs)
                    throw DomainError("delta map does not commute with face " + std::to_string(k) +
                                      " at '" + source.labels[d][i] + "'");
            }
}

DeltaMap DeltaMap::identity(const DeltaSet& x) {
    DeltaMap f;
    f.source = x;
    f.target = x;
    f.assignment.resize(x.top_dim() + 1);
    for (int d = 0; d <= x.top_dim(); ++d)
        for (int i = 0; i < x.count(d); ++i) f.assignment[d].push_back(i);
    return f;
}

bool DeltaMap::is_injective() const {
    for (int d = 0; d < static_cast<int>(assignment.size()); ++d) {
        std::set<int> seen(assignment[d].begin(), assignment[d].end());
        if (seen.size() != assignment[d].size()) return false;
    }
    return true;
}

bool DeltaMap::is_surjective() const {
    for (int d = 0; d <= target.top_dim(); ++d) {
        std::set<int> seen;
        if (d < static_cast<int>(assignment.size()))
            seen.insert(assignment[d].begin(), assignment[d].end());
        if (static_cast<long>(seen.size()) != target.count(d)) return false;
    }
    return true;
}

int GroupAction::identity_index() const {
    for (int e = 0; e < order(); ++e) {
        bool ok = true;
        for (int h = 0; h < order() && ok; ++h) ok = (mult[e][h] == h && mult[h][e] == h);
        if (ok) return e;
    }
    return -1;
}

GroupAction GroupAction::trivial(const DeltaSet& x) {
    GroupAction a;
    a.elements = {"e"};
    a.mult = {{0}};
    a.maps.push_back(DeltaMap::identity(x).assignment);
    return a;
}

GroupAction GroupAction::cyclic(const DeltaSet& x, const std::vector<std::vector<int>>& generator_map) {
    GroupAction a;
    auto id = DeltaMap::identity(x).assignment;
    auto compose = [&](const std::vector<std::vector<int>>& f, const std::vector<std::vector<int>>& g) {
        // (f o g)[d][i] = f[d][g[d][i]]
        std::vector<std::vector<int>> r(f.size());
        for (size_t d = 0; d < f.size(); ++d)
            for (int v : g[d]) r[d].push_back(f[d][v]);
        return r;
    };
    std::vector<std::vector<std::vector<int>>> powers = {id};
    auto cur = generator_map;
    long guard = 0;
    while (cur != id) {
        powers.push_back(cur);
        cur = compose(generator_map, cur);
        if (++guard > x.total_count() + 2)
            throw DomainError("cyclic action generator does not have finite order on the complex");
    }
    long m = static_cast<long>(powers.size());
    for (long k = 0; k < m; ++k) a.elements.push_back(k == 0 ? "e" : "t^" + std::to_string(k));
    a.mult.assign(m, std::vector<int>(m));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) a.mult[i][j] = static_cast<int>((i + j) % m);
    a.maps = std::move(powers);
    return a;
}

ValidationReport validate(const DeltaSet& x) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    if (x.faces.size() != x.labels.size()) {
        fail("faces table does not match label table");
        return rep;
    }
    std::set<std::string> seen;
    for (int d = 0; d <= x.top_dim(); ++d) {
        if (x.faces[d].size() != x.labels[d].size()) {
            fail("dim " + std::to_string(d) + ": faces list does not match labels");
            return rep;
        }
        for (int i = 0; i < x.count(d); ++i) {
            if (!seen.insert(x.labels[d][i]).second)
                fail("duplicate label '" + x.labels[d][i] + "'");
        }
    }
    // face arity and range
    bool structural_ok = true;
    for (int d = 0; d <= x.top_dim(); ++d)
        for (int i = 0; i < x.count(d); ++i) {
            const auto& fl = x.faces[d][i];
            if (d == 0) {
                if (!fl.empty()) {
                    fail("vertex '" + x.labels[d][i] + "' has face entries");
                    structural_ok = false;
                }
                continue;
            }
            if (static_cast<int>(fl.size()) != d + 1) {
                fail("simplex '" + x.labels[d][i] + "' has " + std::to_string(fl.size()) +
                     " faces, expected " + std::to_string(d + 1));
                structural_ok = false;
                continue;
            }
            for (int k = 0; k <= d; ++k)
                if (fl[k] < 0 || fl[k] >= x.count(d - 1)) {
                    fail("simplex '" + x.labels[d][i] + "' face " + std::to_string(k) +
                         " does not resolve");
                    structural_ok = false;
                }
        }
    if (!structural_ok) return rep;
    // simplicial identities d_i d_j = d_{j-1} d_i for i < j
    for (int d = 2; d <= x.top_dim(); ++d)
        for (int i = 0; i < x.count(d); ++i) {
            SimplexRef r{d, i};
            for (int a = 0; a < d; ++a)
                for (int b = a + 1; b <= d; ++b) {
                    SimplexRef lhs = x.face(x.face(r, b), a);
                    SimplexRef rhs = x.face(x.face(r, a), b - 1);
                    if (lhs != rhs)
                        fail("simplex '" + x.labels[d][i] + "': identity d" + std::to_string(a) +
                             " d" + std::to_string(b) + " = d" + std::to_string(b - 1) + " d" +
                             std::to_string(a) + " fails");
                }
        }
    return rep;
}

ValidationReport validate_action(const DeltaSet& x, const GroupAction& a) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    long m = a.order();
    if (m == 0) {
        fail("empty group");
        return rep;
    }
    if (static_cast<long>(a.mult.size()) != m || static_cast<long>(a.maps.size()) != m) {
        fail("multiplication table or action table has wrong size");
        return rep;
    }
    for (const auto& row : a.mult) {
        if (static_cast<long>(row.size()) != m) {
            fail("ragged multiplication table");
            return rep;
        }
        for (int v : row)
            if (v < 0 || v >= m) {
                fail("multiplication table entry out of range");
                return rep;
            }
    }
    int e = a.identity_index();
    if (e < 0) {
        fail("no identity element in the multiplication table");
        return rep;
    }
    auto map_ok = [&](int g) {
        if (static_cast<int>(a.maps[g].size()) != x.top_dim() + 1) return false;
        for (int d = 0; d <= x.top_dim(); ++d)
            if (static_cast<long>(a.maps[g][d].size()) != x.count(d)) return false;
        return true;
    };
    for (int g = 0; g < m; ++g)
        if (!map_ok(g)) {
            fail("action map for '" + a.elements[g] + "' has wrong shape");
            return rep;
        }
    // identity acts as identity
    for (int d = 0; d <= x.top_dim(); ++d)
        for (int i = 0; i < x.count(d); ++i)
            if (a.maps[e][d][i] != i) fail("identity element does not act as the identity");
    // bijectivity per dimension
    for (int g = 0; g < m; ++g)
        for (int d = 0; d <= x.top_dim(); ++d) {
            std::set<int> img(a.maps[g][d].begin(), a.maps[g][d].end());
            if (static_cast<long>(img.size()) != x.count(d))
                fail("element '" + a.elements[g] + "' is not a bijection in dim " + std::to_string(d));
        }
    // each map is a delta map (commutes with faces)
    for (int g = 0; g < m; ++g)
        for (int d = 1; d <= x.top_dim(); ++d)
            for (int i = 0; i < x.count(d); ++i)
                for (int k = 0; k <= d; ++k) {
                    int fx = a.maps[g][d][i];
                    if (a.maps[g][d - 1][x.faces[d][i][k]] != x.faces[d][fx][k])
                        fail("element '" + a.elements[g] + "' does not commute with face " +
                             std::to_string(k) + " at '" + x.labels[d][i] + "'");
                }
    // action respects the multiplication table
    for (int g = 0; g < m && rep.ok; ++g)
        for (int h = 0; h < m && rep.ok; ++h) {
            int gh = a.mult[g][h];
            for (int d = 0; d <= x.top_dim(); ++d)
                for (int i = 0; i < x.count(d); ++i)
                    if (a.maps[g][d][a.maps[h][d][i]] != a.maps[gh][d][i]) {
                        fail("action does not respect the product " + a.elements[g] + "*" + a.elements[h]);
                        d = x.top_dim() + 1;
                        break;
                    }
        }
    return rep;
}

std::vector<FaceInjection> all_injections(int source_dim, int target_dim) {
    std::vector<FaceInjection> out;
    if (source_dim > target_dim || source_dim < 0) return out;
    int k = source_dim + 1;
    std::vector<int> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    for (;;) {
        FaceInjection f;
        f.target_dim = target_dim;
        f.image = combo;
        out.push_back(std::move(f));
        int i = k - 1;
        while (i >= 0 && combo[i] == target_dim - (k - 1 - i)) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
    return out;
}

DeltaSet standard_simplex(int n) {
    if (n < 0) throw DomainError("standard_simplex: n must be >= 0");
    DeltaSet x;
    std::vector<std::map<std::vector<int>, int>> index(n + 1);
    for (int m = 0; m <= n; ++m) {
        x.labels.emplace_back();
        x.faces.emplace_back();
        auto injs = all_injections(m, n);
        for (const auto& f : injs) {
            std::vector<std::string> parts;
            for (int v : f.image) parts.push_back(std::to_string(v));
            index[m][f.image] = static_cast<int>(x.labels[m].size());
            x.labels[m].push_back(join_labels(parts));
            std::vector<int> fl;
            if (m >= 1)
                for (int i = 0; i <= m; ++i) {
                    std::vector<int> sub = f.image;
                    sub.erase(sub.begin() + i);
                    fl.push_back(index[m - 1].at(sub));
                }
            x.faces[m].push_back(std::move(fl));
        }
    }
    return x;
}

DeltaSet from_simplicial_complex(const std::vector<std::string>& vertices,
                                 const std::vector<std::vector<std::string>>& simplices) {
    std::map<std::string, int> vorder;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (!vorder.emplace(vertices[i], static_cast<int>(i)).second)
            throw DomainError("duplicate vertex '" + vertices[i] + "'");
    }
    // normalize each simplex to its sorted vertex-index set
    std::set<std::vector<int>> sets;
    for (const auto& s : simplices) {
        std::vector<int> idx;
        for (const auto& v : s) {
            auto it = vorder.find(v);
            if (it == vorder.end()) throw DomainError("unknown vertex '" + v + "' in a simplex");
            idx.push_back(it->second);
        }
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw DomainError("simplex with repeated vertex");
        if (idx.empty()) throw DomainError("empty simplex");
        if (!sets.insert(idx).second) throw DomainError("duplicate simplex");
    }
    int top = -1;
    for (const auto& s : sets) top = std::max(top, static_cast<int>(s.size()) - 1);
    std::vector<std::vector<std::vector<int>>> by_dim(top + 1);
    for (const auto& s : sets) by_dim[s.size() - 1].push_back(s);  // std::set order is lex: deterministic
    // face closure
    auto describe = [&](const std::vector<int>& s) {
        std::vector<std::string> parts;
        for (int v : s) parts.push_back(vertices[v]);
        return join_labels(parts);
    };
    for (int d = 1; d <= top; ++d)
        for (const auto& s : by_dim[d])
            for (int i = 0; i <= d; ++i) {
                std::vector<int> sub = s;
                sub.erase(sub.begin() + i);
                if (!sets.count(sub))
                    throw DomainError("not face-closed: missing face {" + describe(sub) + "}");
            }
    DeltaSet x;
    std::vector<std::map<std::vector<int>, int>> index(top + 1);
    for (int d = 0; d <= top; ++d) {
        x.labels.emplace_back();
        x.faces.emplace_back();
        for (const auto& s : by_dim[d]) {
            index[d][s] = static_cast<int>(x.labels[d].size());
            x.labels[d].push_back(describe(s));
            std::vector<int> fl;
            if (d >= 1)
                for (int i = 0; i <= d; ++i) {
                    std::vector<int> sub = s;
                    sub.erase(sub.begin() + i);
                    fl.push_back(index[d - 1].at(sub));
                }
            x.faces[d].push_back(std::move(fl));
        }
    }
    return x;
}

SimplexRef apply_injection(const FaceInjection& lambda, SimplexRef y, const DeltaSet& x) {
    if (lambda.target_dim != y.dim)
        throw DomainError("apply_injection: injection targets dim " + std::to_string(lambda.target_dim) +
                          " but simplex has dim " + std::to_string(y.dim));
    SimplexRef cur = y;
    auto omitted = lambda.omitted();
    for (auto it = omitted.rbegin(); it != omitted.rend(); ++it) cur = x.face(cur, *it);
    return cur;
}

SimplexRef morphism_source(const CatMorphism& f, const DeltaSet& x) {
    return apply_injection(f.inj, f.target, x);
}

CatMorphism compose_morphisms(const CatMorphism& psi, const CatMorphism& phi, const DeltaSet& x) {
    if (morphism_source(psi, x) != phi.target)
        throw DomainError("compose_morphisms: morphisms are not composable");
    return {psi.target, psi.inj.compose(phi.inj)};
}

std::vector<CatMorphism> morphisms_between(SimplexRef x, SimplexRef y, const DeltaSet& xs) {
    std::vector<CatMorphism> out;
    for (const auto& f : all_injections(x.dim, y.dim))
        if (apply_injection(f, y, xs) == x) out.push_back({y, f});
    return out;
}

std::vector<CatMorphism> star(SimplexRef x, const DeltaSet& xs) {
    std::vector<CatMorphism> out;
    for (int d = x.dim; d <= xs.top_dim(); ++d)
        for (int i = 0; i < xs.count(d); ++i) {
            auto ms = morphisms_between(x, {d, i}, xs);
            out.insert(out.end(), ms.begin(), ms.end());
        }
    return out;
}

SubDeltaSet complement_of_star(const DeltaSet& xs, SimplexRef x) {
    std::set<SimplexRef> hit;
    for (const auto& f : star(x, xs)) hit.insert(f.target);
    SubDeltaSet s;
    s.members.resize(xs.top_dim() + 1);
    for (int d = 0; d <= xs.top_dim(); ++d)
        for (int i = 0; i < xs.count(d); ++i)
            if (!hit.count({d, i})) s.members[d].push_back(i);
    return s;
}

OverCategory over_category(SimplexRef x, const DeltaSet& xs) {
    if (!xs.in_range(x)) throw DomainError("over_category: simplex out of range");
    OverCategory oc;
    oc.over = standard_simplex(x.dim);
    oc.forgetful.source = oc.over;
    oc.forgetful.target = xs;
    oc.forgetful.assignment.resize(x.dim + 1);
    for (int m = 0; m <= x.dim; ++m)
        for (const auto& f : all_injections(m, x.dim))
            oc.forgetful.assignment[m].push_back(apply_injection(f, x, xs).index);
    return oc;
}

Quotient quotient_by_action(const DeltaSet& x, const GroupAction& a) {
    ValidationReport rep = validate_action(x, a);
    if (!rep.ok) throw DomainError("invalid action: " + rep.violations.front());
    // orbit representative: lexicographically least label
    std::vector<std::vector<int>> orbit_class(x.top_dim() + 1);
    std::vector<std::vector<int>> reps(x.top_dim() + 1);  // per dim, class -> rep index
    for (int d = 0; d <= x.top_dim(); ++d) {
        orbit_class[d].assign(x.count(d), -1);
        std::vector<char> done(x.count(d), 0);
        for (int i = 0; i < x.count(d); ++i) {
            if (done[i]) continue;
            std::set<int> orbit;
            for (int g = 0; g < a.order(); ++g) orbit.insert(a.maps[g][d][i]);
            int rep_idx = *orbit.begin();
            for (int j : orbit)
                if (x.labels[d][j] < x.labels[d][rep_idx]) rep_idx = j;
            int cls = static_cast<int>(reps[d].size());
            reps[d].push_back(rep_idx);
            for (int j : orbit) {
                orbit_class[d][j] = cls;
                done[j] = 1;
            }
        }
    }
    Quotient q;
    q.quotient.labels.resize(x.top_dim() + 1);
    q.quotient.faces.resize(x.top_dim() + 1);
    for (int d = 0; d <= x.top_dim(); ++d)
        for (size_t cls = 0; cls < reps[d].size(); ++cls) {
            int r = reps[d][cls];
            q.quotient.labels[d].push_back(x.labels[d][r]);
            std::vector<int> fl;
            if (d >= 1)
                for (int k = 0; k <= d; ++k) fl.push_back(orbit_class[d - 1][x.faces[d][r][k]]);
            q.quotient.faces[d].push_back(std::move(fl));
        }
    q.quotient.drop_empty_top_dims();
    q.projection.source = x;
    q.projection.target = q.quotient;
    q.projection.assignment = orbit_class;
    q.projection.validate();
    return q;
}

long euler_characteristic(const DeltaSet& x) {
    long chi = 0;
    for (int d = 0; d <= x.top_dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * x.count(d);
    return chi;
}

}  // namespace delta
