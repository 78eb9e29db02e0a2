#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "deltatopo/errors.hpp"

namespace delta {

struct SimplexRef {
    int dim = 0;
    int index = 0;
    auto operator<=>(const SimplexRef&) const = default;
};

// Order-preserving injection [source_dim] -> [target_dim], stored by its
// image list. source_dim is image.size() - 1.
struct FaceInjection {
    int target_dim = 0;
    std::vector<int> image;  // strictly increasing values in [0, target_dim]

    int source_dim() const { return static_cast<int>(image.size()) - 1; }
    bool is_identity() const { return source_dim() == target_dim; }
    static FaceInjection identity(int n);
    // Single face map del_i : [k-1] -> [k].
    static FaceInjection face(int k, int i);
    // Indices of [target_dim] missing from the image, increasing.
    std::vector<int> omitted() const;
    // this o inner : requires inner.target_dim == source_dim().
    FaceInjection compose(const FaceInjection& inner) const;
    void validate() const;
    auto operator<=>(const FaceInjection&) const = default;
};

// A morphism x -> y of the simplex category: the target simplex y plus the
// injection; the source is derived by evaluation.
struct CatMorphism {
    SimplexRef target;
    FaceInjection inj;

    bool is_identity() const { return inj.is_identity(); }
    auto operator<=>(const CatMorphism& o) const {
        if (auto c = target <=> o.target; c != 0) return c;
        return inj <=> o.inj;
    }
    bool operator==(const CatMorphism&) const = default;
};

// Finite semi-simplicial set: labelled simplices per dimension plus face
// tables. Immutable in spirit; operations build new values.
struct DeltaSet {
    std::vector<std::vector<std::string>> labels;          // labels[d][i]
    std::vector<std::vector<std::vector<int>>> faces;      // faces[d][i][k] = index into dim d-1

    int top_dim() const { return static_cast<int>(labels.size()) - 1; }
    long count(int d) const {
        return (d < 0 || d > top_dim()) ? 0 : static_cast<long>(labels[d].size());
    }
    long total_count() const;
    std::vector<long> counts() const;
    bool empty_set() const { return labels.empty(); }

    const std::string& label(SimplexRef r) const { return labels[r.dim][r.index]; }
    std::optional<SimplexRef> find_label(const std::string& s) const;
    SimplexRef face(SimplexRef r, int i) const;
    bool in_range(SimplexRef r) const {
        return r.dim >= 0 && r.dim <= top_dim() && r.index >= 0 && r.index < count(r.dim);
    }
    std::vector<SimplexRef> all_refs() const;
    void drop_empty_top_dims();

    bool operator==(const DeltaSet&) const = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// A sub-Delta-set given by sorted member indices per dimension of an
// ambient complex.
struct SubDeltaSet {
    std::vector<std::vector<int>> members;

    bool contains(SimplexRef r) const;
    long count(int d) const {
        return (d < 0 || d >= static_cast<int>(members.size())) ? 0 : static_cast<long>(members[d].size());
    }
    std::vector<long> counts() const;
    static SubDeltaSet full(const DeltaSet& x);
    static SubDeltaSet empty(const DeltaSet& x);
};

bool is_face_closed(const DeltaSet& x, const SubDeltaSet& a);
DeltaSet extract(const DeltaSet& x, const SubDeltaSet& a);

// Dimension-preserving map commuting with faces.
struct DeltaMap {
    DeltaSet source, target;
    std::vector<std::vector<int>> assignment;  // assignment[d][i] = target index in dim d

    SimplexRef apply(SimplexRef r) const { return {r.dim, assignment[r.dim][r.index]}; }
    void validate() const;
    static DeltaMap identity(const DeltaSet& x);
    bool is_injective() const;
    bool is_surjective() const;
};

// Finite group presented by a multiplication table, acting on a Delta-set
// by automorphisms. maps[g] gives the index permutation per dimension.
struct GroupAction {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> mult;             // mult[g][h] = index of g*h
    std::vector<std::vector<std::vector<int>>> maps;  // maps[g][d][i]

    long order() const { return static_cast<long>(elements.size()); }
    int identity_index() const;
    static GroupAction trivial(const DeltaSet& x);
    static GroupAction cyclic(const DeltaSet& x, const std::vector<std::vector<int>>& generator_map);
};

ValidationReport validate(const DeltaSet& x);
ValidationReport validate_action(const DeltaSet& x, const GroupAction& a);

DeltaSet standard_simplex(int n);
// Vertex order is the list order; simplices are vertex subsets (any order);
// the input must be face-closed. Labels join vertex labels with '.'.
DeltaSet from_simplicial_complex(const std::vector<std::string>& vertices,
                                 const std::vector<std::vector<std::string>>& simplices);

// lambda^* y, evaluated by applying omitted indices in decreasing order.
SimplexRef apply_injection(const FaceInjection& lambda, SimplexRef y, const DeltaSet& x);
SimplexRef morphism_source(const CatMorphism& f, const DeltaSet& x);
// psi o phi (phi first). Requires morphism_source(psi) == phi.target.
CatMorphism compose_morphisms(const CatMorphism& psi, const CatMorphism& phi, const DeltaSet& x);

std::vector<CatMorphism> morphisms_between(SimplexRef x, SimplexRef y, const DeltaSet& xs);
// st(x): all morphisms out of x, identity included, in canonical order.
std::vector<CatMorphism> star(SimplexRef x, const DeltaSet& xs);
// Complement sub-Delta-set of the simplices hit by st(x).
SubDeltaSet complement_of_star(const DeltaSet& xs, SimplexRef x);

struct OverCategory {
    DeltaSet over;      // isomorphic to the standard |x|-simplex
    DeltaMap forgetful;  // into the ambient complex
};
OverCategory over_category(SimplexRef x, const DeltaSet& xs);

struct Quotient {
    DeltaSet quotient;
    DeltaMap projection;
};
Quotient quotient_by_action(const DeltaSet& x, const GroupAction& a);

long euler_characteristic(const DeltaSet& x);

std::vector<FaceInjection> all_injections(int source_dim, int target_dim);

}  // namespace delta
