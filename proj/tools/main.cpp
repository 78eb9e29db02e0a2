// deltatopo: exact homological computations on finite Delta-sets.

#include <CLI11.hpp>
#include <iostream>

#include "deltatopo/chain_duality.hpp"
#include "deltatopo/delta_io.hpp"
#include "deltatopo/fixtures.hpp"

namespace {

using delta::Json;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void describe_to_stderr(bool on, const std::string& text) {
    if (on) std::cerr << text << "\n";
}

delta::SimplexRef need_simplex(const delta::DeltaSet& x, const std::string& label) {
    auto r = x.find_label(label);
    if (!r) throw delta::DomainError("no simplex labelled '" + label + "'");
    return *r;
}

int run(CLI::App& app, int argc, char** argv) {
    std::string input, simplex, ring_name = "Z", pair_path, cover_spec;
    bool counts_only = false, with_homology = false, constant_coeffs = false, describe = false;
    int man_dim = 0;

    app.require_subcommand(1);
    app.fallthrough();

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "fixture:<name> or path to a delta-set JSON file")->required();
        sub->add_flag("--describe", describe, "human-readable commentary on stderr");
    };

    auto* validate_cmd = app.add_subcommand("validate", "check the delta-set invariants");
    add_input(validate_cmd);

    auto* info_cmd = app.add_subcommand("info", "simplex counts and Euler characteristic");
    add_input(info_cmd);

    auto* subdivide_cmd = app.add_subcommand("subdivide", "barycentric subdivision");
    add_input(subdivide_cmd);
    subdivide_cmd->add_flag("--counts", counts_only, "emit only the simplex counts of X'");

    auto* dual_cmd = app.add_subcommand("dual", "dual complex of a simplex");
    add_input(dual_cmd);
    dual_cmd->add_option("--simplex", simplex, "simplex label")->required();
    dual_cmd->add_flag("--homology", with_homology, "include H_*(dual, boundary)");
    dual_cmd->add_option("--ring", ring_name, "Z or Z<p>");

    auto* star_cmd = app.add_subcommand("star", "open star homology of a simplex");
    add_input(star_cmd);
    star_cmd->add_option("--simplex", simplex, "simplex label")->required();
    star_cmd->add_option("--ring", ring_name, "Z or Z<p>");

    auto* homology_cmd = app.add_subcommand("homology", "simplicial homology");
    add_input(homology_cmd);
    homology_cmd->add_option("--ring", ring_name, "Z or Z<p>");
    homology_cmd->add_option("--pair", pair_path, "sub-delta-set JSON file for relative homology");

    auto* cohomology_cmd = app.add_subcommand("cohomology", "cohomology via the chain dual of X'");
    add_input(cohomology_cmd);
    cohomology_cmd->add_option("--ring", ring_name, "Z or Z<p>");

    auto* manifold_cmd = app.add_subcommand("manifold-check", "homology-manifold detector");
    add_input(manifold_cmd);
    manifold_cmd->add_option("--dim", man_dim, "expected manifold dimension")->required();

    auto* tot_cmd = app.add_subcommand("tot", "total complex, assembled");
    add_input(tot_cmd);
    tot_cmd->add_flag("--constant", constant_coeffs, "constant coefficients instead of Delta(X')");
    tot_cmd->add_option("--ring", ring_name, "Z or Z<p>");

    auto* chain_dual_cmd = app.add_subcommand("chain-dual", "chain dual of Delta(X')");
    add_input(chain_dual_cmd);
    chain_dual_cmd->add_option("--ring", ring_name, "Z or Z<p>");

    auto* assemble_cmd = app.add_subcommand("assemble", "assembly of Delta(X') over a regular cover");
    assemble_cmd->add_option("--cover", cover_spec, "fixture:cyclic-cover-<n> or cover JSON file")
        ->required();
    assemble_cmd->add_flag("--describe", describe, "human-readable commentary on stderr");

    app.parse(argc, argv);

    if (validate_cmd->parsed()) {
        delta::DeltaSet x = delta::resolve_input(input);
        auto rep = delta::validate(x);
        Json j;
        j["ok"] = rep.ok;
        j["violations"] = rep.violations;
        emit(j);
        describe_to_stderr(describe, rep.ok ? "all delta-set invariants hold"
                                            : "invariant violations were found");
        return 0;
    }
    if (info_cmd->parsed()) {
        delta::DeltaSet x = delta::resolve_input(input);
        Json j;
        j["counts"] = delta::counts_to_json(x.counts());
        j["euler_characteristic"] = delta::euler_characteristic(x);
        j["valid"] = delta::validate(x).ok;
        emit(j);
        return 0;
    }
    if (subdivide_cmd->parsed()) {
        delta::DeltaSet x = delta::resolve_input(input);
        delta::Subdivision sub = delta::barycentric_subdivide(x);
        if (counts_only) {
            emit(delta::counts_to_json(sub.prime.counts()));
        } else {
            Json j;
            j["counts"] = delta::counts_to_json(sub.prime.counts());
            j["complex"] = delta::delta_to_json(sub.prime);
            emit(j);
        }
        describe_to_stderr(describe, "subdivision has one n-simplex per chain of n composable"
                                     " non-identity morphisms");
        return 0;
    }
    if (dual_cmd->parsed()) {
        delta::DeltaSet x = delta::resolve_input(input);
        delta::SimplexRef r = need_simplex(x, simplex);
        delta::DualComplex dc = delta::dual(x, r);
        Json j;
        j["simplex"] = simplex;
        j["dual_counts"] = delta::counts_to_json(dc.dual.counts());
        j["boundary_counts"] = delta::counts_to_json(dc.boundary.counts());
        if (with_homology) {
            delta::RingSpec ring = delta::ring_from_string(ring_name);
            j["homology"] =
                delta::graded_group_to_json(homology(relative_complex(dc.dual, dc.boundary, ring)));
        }
        emit(j);
        return 0;
    }
    if (star_cmd->parsed()) {
        delta::DeltaSet x = delta::resolve_input(input);
        delta::SimplexRef r = need_simplex(x, simplex);
        delta::RingSpec ring = delta::ring_from_string(ring_name);
        Json j;
        j["simplex"] = simplex;
        j["star_size"] = static_cast<long>(delta::star(r, x).size());
        j["homology"] = delta::graded_group_to_json(delta::star_homology(x, r, ring));
        emit(j);
        return 0;
    }
    if (homology_cmd->parsed()) {
        delta::DeltaSet x = delta::resolve_input(input);
        delta::RingSpec ring = delta::ring_from_string(ring_name);
        delta::GradedGroup h;
        if (pair_path.empty()) {
            h = homology(simplicial_chain_complex(x, ring));
        } else {
            delta::DeltaSet a = delta::resolve_input(pair_path);
            delta::SubDeltaSet sub;
            sub.members.resize(x.top_dim() + 1);
            for (int d = 0; d <= a.top_dim(); ++d)
                for (int i = 0; i < a.count(d); ++i) {
                    auto r = x.find_label(a.labels[d][i]);
                    if (!r || r->dim != d)
                        throw delta::DomainError("pair: '" + a.labels[d][i] +
                                                 "' is not a simplex of the ambient complex");
                    sub.members[d].push_back(r->index);
                }
            for (auto& row : sub.members) std::sort(row.begin(), row.end());
            h = homology(relative_complex(x, sub, ring));
        }
        emit(delta::graded_group_to_json(h));
        return 0;
    }
    if (cohomology_cmd->parsed()) {
        delta::DeltaSet x = delta::resolve_input(input);
        delta::RingSpec ring = delta::ring_from_string(ring_name);
        emit(delta::graded_group_to_json(delta::cohomology_via_dual(x, ring)));
        describe_to_stderr(describe, "computed from the chain dual of Delta(X'), reported in"
                                     " cochain degrees");
        return 0;
    }
    if (manifold_cmd->parsed()) {
        delta::DeltaSet x = delta::resolve_input(input);
        delta::ManifoldCheckReport rep = delta::homology_manifold_check(x, man_dim);
        Json j;
        j["dim"] = man_dim;
        j["pass"] = rep.pass;
        j["failures"] = rep.failures();
        Json stars = Json::array();
        for (const auto& e : rep.entries) {
            Json s;
            s["simplex"] = e.label;
            s["ok"] = e.ok;
            s["homology"] = delta::graded_group_to_json(e.star);
            stars.push_back(std::move(s));
        }
        j["stars"] = std::move(stars);
        emit(j);
        return 0;
    }
    if (tot_cmd->parsed()) {
        delta::DeltaSet x = delta::resolve_input(input);
        delta::RingSpec ring = delta::ring_from_string(ring_name);
        Json j;
        delta::ChainComplex assembled;
        if (constant_coeffs) {
            assembled = delta::tot_assembled(delta::GeneralXComplex::constant(delta::share(x), ring));
            j["coefficients"] = "constant";
            j["iso_matches_simplicial"] = delta::constant_tot_matches_simplicial(x, ring);
        } else {
            delta::Subdivision sub = delta::barycentric_subdivide(x);
            assembled = delta::tot_assembled(delta::delta_prime_as_xcomplex(sub, ring));
            j["coefficients"] = "delta-prime";
        }
        assembled = assembled.trimmed();
        j["lo"] = assembled.empty() ? 0 : assembled.lo();
        j["ranks"] = delta::counts_to_json(assembled.rank_vector());
        j["homology"] = delta::graded_group_to_json(homology(assembled));
        emit(j);
        return 0;
    }
    if (chain_dual_cmd->parsed()) {
        delta::DeltaSet x = delta::resolve_input(input);
        delta::RingSpec ring = delta::ring_from_string(ring_name);
        delta::Subdivision sub = delta::barycentric_subdivide(x);
        delta::XComplex c = delta::delta_prime_as_xcomplex(sub, ring);
        delta::XComplex tc = delta::chain_dual_x(c);
        Json comps = Json::array();
        for (auto r : x.all_refs()) {
            Json e;
            e["simplex"] = x.label(r);
            Json ranks = Json::object();
            for (const auto& [deg, rank] : delta::dual_component_ranks(tc, r))
                ranks[std::to_string(deg)] = rank;
            e["ranks"] = std::move(ranks);
            comps.push_back(std::move(e));
        }
        Json j;
        j["components"] = std::move(comps);
        j["cochain_homology"] = delta::graded_group_to_json(delta::cohomology_via_dual(x, ring));
        emit(j);
        describe_to_stderr(describe, "component ranks are reported in the dual-cell normalization"
                                     " (degree = internal degree + 2|x|)");
        return 0;
    }
    if (assemble_cmd->parsed()) {
        delta::CoverSpec cover = delta::resolve_cover_input(cover_spec);
        auto rep = delta::validate_cover(cover);
        if (!rep.ok) throw delta::DomainError("invalid cover: " + rep.violations.front());
        delta::Subdivision sub = delta::barycentric_subdivide(cover.base);
        delta::XComplex c = delta::delta_prime_as_xcomplex(sub, delta::RingSpec::integers());
        delta::ChainComplex over = delta::assemble_over_cover(c, cover);
        delta::ChainComplex restricted = delta::restrict_scalars(over).trimmed();
        Json j;
        j["group_order"] = cover.action.order();
        j["valid"] = true;
        j["lo"] = over.empty() ? 0 : over.lo();
        j["rpi_ranks"] = delta::counts_to_json(over.rank_vector());
        j["restricted_homology"] = delta::graded_group_to_json(homology(restricted));
        emit(j);
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chain-level computations on finite delta-sets"};
    try {
        return run(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        Json j;
        j["error"] = std::string("argument error: ") + e.what();
        std::cout << j.dump() << "\n";
        return 2;
    } catch (const delta::ParseError& e) {
        Json j;
        j["error"] = e.what();
        std::cout << j.dump() << "\n";
        return 2;
    } catch (const delta::DomainError& e) {
        Json j;
        j["error"] = e.what();
        std::cout << j.dump() << "\n";
        return 1;
    }
}
