#include "deltatopo/delta_io.hpp"

#include <fstream>
#include <map>

#include "deltatopo/fixtures.hpp"

namespace delta {

Json delta_to_json(const DeltaSet& x) {
    Json j;
    Json simp = Json::object();
    for (int d = 0; d <= x.top_dim(); ++d) simp[std::to_string(d)] = x.labels[d];
    j["simplices"] = std::move(simp);
    Json faces = Json::object();
    for (int d = 1; d <= x.top_dim(); ++d)
        for (int i = 0; i < x.count(d); ++i) {
            Json fl = Json::array();
            for (int k = 0; k <= d; ++k) fl.push_back(x.labels[d - 1][x.faces[d][i][k]]);
            faces[x.labels[d][i]] = std::move(fl);
        }
    j["faces"] = std::move(faces);
    return j;
}

DeltaSet delta_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_object())
        throw ParseError("delta-set json needs a 'simplices' object");
    const Json& simp = j["simplices"];
    int top = -1;
    for (auto it = simp.begin(); it != simp.end(); ++it) {
        try {
            size_t pos = 0;
            int d = std::stoi(it.key(), &pos);
            if (pos != it.key().size() || d < 0) throw ParseError("");
            top = std::max(top, d);
        } catch (...) {
            throw ParseError("bad dimension key '" + it.key() + "' in 'simplices'");
        }
    }
    DeltaSet x;
    x.labels.resize(top + 1);
    x.faces.resize(top + 1);
    std::map<std::string, SimplexRef> by_label;
    for (int d = 0; d <= top; ++d) {
        std::string key = std::to_string(d);
        if (!simp.contains(key)) continue;
        if (!simp[key].is_array()) throw ParseError("'simplices'['" + key + "'] must be an array");
        for (const auto& v : simp[key]) {
            if (!v.is_string()) throw ParseError("simplex labels must be strings (dim " + key + ")");
            std::string label = v.get<std::string>();
            if (by_label.count(label)) throw ParseError("duplicate label '" + label + "'");
            by_label[label] = {d, static_cast<int>(x.labels[d].size())};
            x.labels[d].push_back(label);
            x.faces[d].push_back({});
        }
    }
    const Json faces = j.contains("faces") ? j["faces"] : Json::object();
    if (!faces.is_object()) throw ParseError("'faces' must be an object");
    for (auto it = faces.begin(); it != faces.end(); ++it) {
        auto found = by_label.find(it.key());
        if (found == by_label.end())
            throw ParseError("faces entry for unknown simplex '" + it.key() + "'");
        SimplexRef r = found->second;
        if (r.dim == 0) {
            if (!it.value().is_array() || !it.value().empty())
                throw ParseError("vertex '" + it.key() + "' cannot have faces");
            continue;
        }
        if (!it.value().is_array() || static_cast<int>(it.value().size()) != r.dim + 1)
            throw ParseError("simplex '" + it.key() + "' needs exactly " + std::to_string(r.dim + 1) +
                             " faces");
        std::vector<int> fl;
        for (const auto& fv : it.value()) {
            if (!fv.is_string()) throw ParseError("face labels must be strings ('" + it.key() + "')");
            auto f = by_label.find(fv.get<std::string>());
            if (f == by_label.end() || f->second.dim != r.dim - 1)
                throw ParseError("simplex '" + it.key() + "': face '" + fv.get<std::string>() +
                                 "' does not resolve to a " + std::to_string(r.dim - 1) + "-simplex");
            fl.push_back(f->second.index);
        }
        x.faces[r.dim][r.index] = std::move(fl);
    }
    for (int d = 1; d <= top; ++d)
        for (int i = 0; i < x.count(d); ++i)
            if (x.faces[d][i].empty())
                throw ParseError("simplex '" + x.labels[d][i] + "' has no faces entry");
    x.drop_empty_top_dims();
    return x;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError("json parse error in '" + path + "': " + e.what());
    }
}

DeltaSet resolve_input(const std::string& spec) {
    if (spec.rfind("fixture:", 0) == 0) {
        auto f = fixtures::by_name(spec.substr(8));
        if (!f) throw ParseError("unknown fixture '" + spec.substr(8) + "'");
        return *f;
    }
    return delta_from_json(load_json_file(spec));
}

Json cover_to_json(const CoverSpec& c) {
    Json j = delta_to_json(c.total);
    j["group"] = c.action.order();
    Json act = Json::object();
    int gen = c.action.order() > 1 ? 1 : 0;
    for (int d = 0; d <= c.total.top_dim(); ++d)
        for (int i = 0; i < c.total.count(d); ++i)
            act[c.total.labels[d][i]] = c.total.labels[d][c.action.maps[gen][d][i]];
    j["action"] = std::move(act);
    Json proj = Json::object();
    for (int d = 0; d <= c.total.top_dim(); ++d)
        for (int i = 0; i < c.total.count(d); ++i)
            proj[c.total.labels[d][i]] = c.base.labels[d][c.projection.assignment[d][i]];
    j["projection"] = std::move(proj);
    return j;
}

CoverSpec cover_from_json(const Json& j) {
    CoverSpec c;
    c.total = delta_from_json(j);
    if (!j.contains("group") || !j["group"].is_number_integer())
        throw ParseError("cover json needs an integer 'group' order");
    long n = j["group"].get<long>();
    if (n < 1) throw ParseError("'group' must be >= 1");
    auto lookup_map = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_object())
            throw ParseError(std::string("cover json needs an object '") + key + "'");
        std::vector<std::vector<int>> out(c.total.top_dim() + 1);
        std::vector<std::vector<std::string>> raw(c.total.top_dim() + 1);
        for (int d = 0; d <= c.total.top_dim(); ++d) raw[d].assign(c.total.count(d), "");
        for (auto it = j[key].begin(); it != j[key].end(); ++it) {
            auto r = c.total.find_label(it.key());
            if (!r) throw ParseError(std::string(key) + ": unknown simplex '" + it.key() + "'");
            if (!it.value().is_string()) throw ParseError(std::string(key) + ": values must be labels");
            raw[r->dim][r->index] = it.value().get<std::string>();
        }
        for (int d = 0; d <= c.total.top_dim(); ++d)
            for (int i = 0; i < c.total.count(d); ++i)
                if (raw[d][i].empty())
                    throw ParseError(std::string(key) + ": missing entry for '" + c.total.labels[d][i] + "'");
        return raw;
    };
    // generator action: labels within the total space
    auto act_raw = lookup_map("action");
    std::vector<std::vector<int>> gen(c.total.top_dim() + 1);
    for (int d = 0; d <= c.total.top_dim(); ++d)
        for (int i = 0; i < c.total.count(d); ++i) {
            auto r = c.total.find_label(act_raw[d][i]);
            if (!r || r->dim != d)
                throw ParseError("action: '" + act_raw[d][i] + "' is not a dim-" + std::to_string(d) +
                                 " simplex");
            gen[d].push_back(r->index);
        }
    c.action = GroupAction::cyclic(c.total, gen);
    if (c.action.order() != n)
        throw ParseError("action generator has order " + std::to_string(c.action.order()) +
                         ", 'group' says " + std::to_string(n));
    // projection: derive the base from the listed target labels
    auto proj_raw = lookup_map("projection");
    c.base.labels.resize(c.total.top_dim() + 1);
    c.base.faces.resize(c.total.top_dim() + 1);
    std::vector<std::map<std::string, int>> base_idx(c.total.top_dim() + 1);
    for (int d = 0; d <= c.total.top_dim(); ++d)
        for (int i = 0; i < c.total.count(d); ++i) {
            const std::string& t = proj_raw[d][i];
            if (!base_idx[d].count(t)) {
                base_idx[d][t] = static_cast<int>(c.base.labels[d].size());
                c.base.labels[d].push_back(t);
                c.base.faces[d].push_back(std::vector<int>(d >= 1 ? d + 1 : 0, -1));
            }
        }
    c.projection.source = c.total;
    c.projection.assignment.resize(c.total.top_dim() + 1);
    for (int d = 0; d <= c.total.top_dim(); ++d)
        for (int i = 0; i < c.total.count(d); ++i)
            c.projection.assignment[d].push_back(base_idx[d].at(proj_raw[d][i]));
    // base faces induced from any preimage; consistency is checked by
    // validate_cover afterwards
    for (int d = 1; d <= c.total.top_dim(); ++d)
        for (int i = 0; i < c.total.count(d); ++i) {
            int b = c.projection.assignment[d][i];
            for (int k = 0; k <= d; ++k) {
                int bf = c.projection.assignment[d - 1][c.total.faces[d][i][k]];
                if (c.base.faces[d][b][k] == -1)
                    c.base.faces[d][b][k] = bf;
                else if (c.base.faces[d][b][k] != bf)
                    throw ParseError("projection does not induce well-defined faces on the base ('" +
                                     c.total.labels[d][i] + "')");
            }
        }
    c.projection.target = c.base;
    try {
        c.projection.validate();
    } catch (const DomainError& e) {
        throw ParseError(std::string("projection is not a delta map: ") + e.what());
    }
    return c;
}

CoverSpec resolve_cover_input(const std::string& spec) {
    if (spec.rfind("fixture:", 0) == 0) {
        std::string name = spec.substr(8);
        if (name.rfind("cyclic-cover-", 0) == 0) {
            try {
                size_t pos = 0;
                long n = std::stol(name.substr(13), &pos);
                if (pos == name.size() - 13 && n >= 1) return cyclic_cover_of_circle(n);
            } catch (...) {
            }
        }
        throw ParseError("unknown cover fixture '" + name + "'");
    }
    return cover_from_json(load_json_file(spec));
}

namespace {

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

}  // namespace

Json graded_group_to_json(const GradedGroup& g) {
    Json out = Json::array();
    for (const auto& [n, piece] : g.groups) {
        Json e = Json::object();
        e["degree"] = n;
        e["free_rank"] = piece.free_rank;
        Json tor = Json::array();
        for (const auto& t : piece.torsion) tor.push_back(int_to_json(t));
        e["torsion"] = std::move(tor);
        out.push_back(std::move(e));
    }
    return out;
}

Json counts_to_json(const std::vector<long>& counts) {
    Json out = Json::array();
    for (long c : counts) out.push_back(c);
    return out;
}

RingSpec ring_from_string(const std::string& s) {
    if (s == "Z") return RingSpec::integers();
    if (s.size() > 1 && s[0] == 'Z') {
        try {
            size_t pos = 0;
            long p = std::stol(s.substr(1), &pos);
            if (pos == s.size() - 1) return RingSpec::prime_field(p);
        } catch (const DomainError&) {
            throw;
        } catch (...) {
        }
    }
    throw ParseError("unknown ring '" + s + "' (expected Z or Z<p>)");
}

}  // namespace delta
