// slackkit command-line front end: catalog access, slack matrices and
// ideals, toric ideals of non-incidence graphs, the derived checks and
// certificates, and the Perles case study.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slackkit/catalog.hpp"
#include "slackkit/json_io.hpp"
#include "slackkit/perles.hpp"
#include "slackkit/slack_ideal.hpp"

namespace sk = slackkit;
using sk::Json;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitClaimFalse = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInputError = 3;

struct Options {
    std::string order = "grevlex";
    double budget_seconds = 0;  // 0: unlimited
    std::string format = "text";
    std::string column_order = "canonical";
    bool no_saturate = false;
    bool timings = false;
};

sk::TermOrder term_order(const Options& o) {
    if (o.order == "lex") return sk::TermOrder::lex();
    return sk::TermOrder::grevlex();
}

std::optional<sk::Budget> make_budget(const Options& o) {
    if (o.budget_seconds > 0) return sk::Budget::seconds(o.budget_seconds);
    return std::nullopt;
}

// --- output -----------------------------------------------------------

void render_text(const Json& j, std::ostream& os, int indent = 0) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                           (it.value().front().is_object() ||
                                            it.value().front().is_array()))) {
                os << pad << it.key() << ":\n";
                render_text(it.value(), os, indent + 2);
            } else {
                os << pad << it.key() << ": ";
                render_text(it.value(), os, 0);
                os << "\n";
            }
        }
    } else if (j.is_array()) {
        if (indent == 0) {
            os << "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ", ";
                render_text(j[i], os, 0);
            }
            os << "]";
        } else {
            for (const auto& e : j) {
                os << pad << "- ";
                if (e.is_object() || e.is_array()) {
                    std::ostringstream tmp;
                    render_text(e, tmp, 0);
                    os << tmp.str() << "\n";
                } else {
                    render_text(e, os, 0);
                    os << "\n";
                }
            }
        }
    } else if (j.is_string()) {
        os << j.get<std::string>();
    } else {
        os << j.dump();
    }
}

void emit(const Json& report, const Options& o) {
    if (o.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        render_text(report, std::cout);
    }
}

// --- input ------------------------------------------------------------

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sk::ParseError("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw sk::ParseError("malformed JSON in '" + path + "': " + e.what());
    }
}

bool looks_like_file(const std::string& target) {
    return target.find('.') != std::string::npos || target.find('/') != std::string::npos;
}

sk::CatalogEntry resolve_target(const std::string& target) {
    if (!looks_like_file(target)) return sk::construct_catalog(target);
    Json j = read_json_file(target);
    if (j.contains("vertices")) return sk::vrep_from_json(j);
    if (j.contains("support")) return sk::pattern_from_json(j);
    throw sk::ParseError("file '" + target + "' is neither a polytope nor a pattern");
}

// Pattern of a target; --column-order paper selects the published
// column order for the named examples.
sk::SlackPattern pattern_of_target(const std::string& target, const Options& o) {
    if (o.column_order == "paper") {
        if (target == "example-7vertex-4polytope") return sk::published_pattern_7vertex();
        if (target == "example-8vertex-5polytope") return sk::published_pattern_8vertex();
        if (target == "perles") return sk::perles_data::pattern();
        throw sk::ValidationError("--column-order paper is only available for "
                                  "example-7vertex-4polytope, example-8vertex-5polytope, perles");
    }
    sk::CatalogEntry e = resolve_target(target);
    if (auto* pat = std::get_if<sk::SlackPattern>(&e)) {
        if (!pat->rank_plausible())
            throw sk::ValidationError("pattern support rank is below d+1; not realizable");
        return *pat;
    }
    return sk::polytope_pattern(std::get<sk::VRep>(e));
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// --- command bodies -----------------------------------------------------

int cmd_catalog_list(const Options& o) {
    Json names = Json::array();
    for (const auto& n : sk::catalog_names()) names.push_back(n);
    emit(Json{{"catalog", names}}, o);
    return kExitVerified;
}

int cmd_catalog_show(const std::string& name, const Options& o) {
    sk::CatalogEntry e = sk::construct_catalog(name);
    Json j;
    if (auto* p = std::get_if<sk::VRep>(&e)) {
        j = sk::to_json(*p);
        j["kind"] = "polytope";
        j["vertex_count"] = p->vertex_count();
    } else {
        const auto& pat = std::get<sk::SlackPattern>(e);
        j = sk::to_json(pat);
        j["kind"] = "pattern";
        j["variables"] = pat.num_vars();
    }
    j["name"] = name;
    emit(j, o);
    return kExitVerified;
}

int cmd_slack_matrix(const std::string& target, const Options& o) {
    sk::CatalogEntry e = resolve_target(target);
    auto* p = std::get_if<sk::VRep>(&e);
    if (!p) throw sk::ValidationError("'" + target + "' has no vertex description");
    auto fe = sk::facet_enumeration(*p);
    auto s = sk::slack_matrix(*p, fe.h);
    Json j = sk::matrix_to_json(s);
    j["d"] = p->d;
    Json inc = Json::array();
    for (const auto& f : fe.incidence) {
        Json row = Json::array();
        for (auto v : f) row.push_back(v + 1);
        inc.push_back(std::move(row));
    }
    j["facet_incidence"] = std::move(inc);
    j["rank"] = sk::rank(s);
    emit(j, o);
    return kExitVerified;
}

int cmd_slack_ideal(const std::string& target, const Options& o) {
    auto pat = pattern_of_target(target, o);
    auto budget = make_budget(o);
    auto res = sk::slack_ideal(pat, {.saturate = !o.no_saturate,
                                     .budget = budget ? &*budget : nullptr});
    Json j = sk::to_json(res.ideal);
    j["saturated"] = !o.no_saturate;
    j["selections"] = res.selections;
    j["pruned"] = res.matching_pruned;
    j["distinct_minors"] = res.distinct_minors;
    if (!res.ideal.is_zero_ideal())
        j["reduced_basis"] =
            sk::basis_to_json(sk::reduced_groebner(res.ideal, term_order(o),
                                                   budget ? &*budget : nullptr));
    emit(j, o);
    return kExitVerified;
}

int cmd_toric_ideal(const std::string& target, const std::string& method, const Options& o) {
    auto pat = pattern_of_target(target, o);
    auto budget = make_budget(o);
    auto res = sk::toric_ideal_TP(
        pat, method == "kernel" ? sk::ToricMethod::Kernel : sk::ToricMethod::Cycles,
        budget ? &*budget : nullptr);
    Json j = sk::to_json(res.ideal);
    j["method"] = method;
    if (!res.cycles.empty()) {
        Json cycles = Json::array();
        for (const auto& c : res.cycles) {
            Json nodes = Json::array();
            for (auto n : c.nodes) nodes.push_back(n);
            cycles.push_back(Json{{"nodes", std::move(nodes)}, {"binomial", c.binomial.str()}});
        }
        j["chordless_cycles"] = std::move(cycles);
    }
    if (!res.ideal.is_zero_ideal())
        j["reduced_basis"] = sk::basis_to_json(
            sk::reduced_groebner(res.ideal, term_order(o), budget ? &*budget : nullptr));
    emit(j, o);
    return kExitVerified;
}

Json pu_certificate_json(const sk::ProjectiveUniquenessCertificate& cert) {
    Json j;
    j["type"] = "projective-uniqueness";
    using Status = sk::ProjectiveUniquenessCertificate::Status;
    switch (cert.status) {
        case Status::Graphic: j["status"] = "graphic"; break;
        case Status::ToricNotGraphic: j["status"] = "toric-not-graphic"; break;
        case Status::NotToric: j["status"] = "not-toric"; break;
        case Status::BudgetExceeded: j["status"] = "budget-exceeded"; break;
    }
    j["claim"] = "projectively unique";
    j["verdict"] = cert.is_graphic;
    j["message"] = cert.message;
    j["budget_status"] =
        cert.status == Status::BudgetExceeded ? "exceeded" : "completed";
    if (cert.status == Status::BudgetExceeded) return j;
    j["basis_ip"] = sk::basis_to_json(cert.basis_ip);
    j["basis_tp"] = sk::basis_to_json(cert.basis_tp);
    auto traces = [](const std::vector<sk::ContainmentTrace>& list) {
        Json out = Json::array();
        for (const auto& tr : list) {
            Json e = sk::certificate_to_json(tr.certificate);
            e["generator"] = tr.generator.str();
            out.push_back(std::move(e));
        }
        return out;
    };
    j["tp_reductions"] = traces(cert.tp_reductions);
    j["ip_reductions"] = traces(cert.ip_reductions);
    if (cert.witness_not_in_ip) j["witness_not_in_ip"] = cert.witness_not_in_ip->str();
    j["ip_toric"] = cert.ip_toric;
    j["ip_contained_in_tp"] = cert.ip_contained_in_tp;
    return j;
}

int cmd_certify_pu(const std::string& target, const Options& o) {
    auto pat = pattern_of_target(target, o);
    auto budget = make_budget(o);
    auto cert = sk::certify_projective_uniqueness(pat, budget ? &*budget : nullptr);
    emit(pu_certificate_json(cert), o);
    using Status = sk::ProjectiveUniquenessCertificate::Status;
    if (cert.status == Status::BudgetExceeded) return kExitBudget;
    return cert.is_graphic ? kExitVerified : kExitClaimFalse;
}

int cmd_check(const std::string& property, const std::string& target, const Options& o) {
    auto budget = make_budget(o);
    sk::Budget* bp = budget ? &*budget : nullptr;
    auto pat = pattern_of_target(target, o);
    Json j;
    j["property"] = property;
    j["target"] = target;
    bool verdict = false;
    if (property == "morally-2-level") {
        std::size_t r = pat.support_rank();
        verdict = sk::is_morally_2_level(pat);
        j["support_rank"] = r;
        j["dimension_plus_one"] = pat.dimension() + 1;
    } else if (property == "graphic") {
        auto cert = sk::certify_projective_uniqueness(pat, bp);
        if (cert.status == sk::ProjectiveUniquenessCertificate::Status::BudgetExceeded) {
            j["budget_status"] = "exceeded";
            emit(j, o);
            return kExitBudget;
        }
        verdict = cert.is_graphic;
        j["ip_toric"] = cert.ip_toric;
        j["ip_contained_in_tp"] = cert.ip_contained_in_tp;
        if (cert.witness_not_in_ip) j["witness_not_in_ip"] = cert.witness_not_in_ip->str();
    } else {
        auto res = sk::slack_ideal(pat, {.budget = bp});
        auto cls = sk::classify_ideal(res.ideal, bp);
        j["is_binomial"] = cls.is_binomial;
        j["is_pure_difference"] = cls.is_pure_difference;
        j["is_toric"] = cls.is_toric;
        if (property == "toric")
            verdict = cls.is_toric;
        else if (property == "pure-difference")
            verdict = cls.is_pure_difference;
        else if (property == "binomial")
            verdict = cls.is_binomial;
        else
            throw sk::ValidationError("unknown check '" + property + "'");
    }
    j["verdict"] = verdict;
    emit(j, o);
    return verdict ? kExitVerified : kExitClaimFalse;
}

int cmd_gale_facets(const std::string& target, const Options& o) {
    sk::GaleDiagram g = target == "perles" ? sk::perles_gale_diagram()
                                           : sk::gale_from_json(read_json_file(target));
    auto gf = sk::gale_facets(g);
    Json j = sk::to_json(gf.pattern);
    Json circuits = Json::array();
    for (const auto& c : gf.circuits) {
        Json members = Json::array();
        for (auto i : c) members.push_back(i + 1);
        circuits.push_back(std::move(members));
    }
    j["circuits"] = std::move(circuits);
    j["circuit_count"] = gf.circuits.size();
    if (o.column_order == "paper" && target == "perles") {
        auto perm = gf.pattern.match_columns(sk::perles_data::pattern());
        j["matches_published_support"] = perm.has_value();
    }
    emit(j, o);
    return kExitVerified;
}

Json perles_root_json(const sk::PerlesRootReport& r) {
    return Json{{"alpha", r.alpha_name},
                {"subideal_vanishes", r.subideal_vanishes},
                {"completion_unique", r.completion_unique},
                {"matches_published_matrix", r.matches_figure},
                {"support_ok", r.support_ok},
                {"rank_is_nine", r.rank_is_nine},
                {"ones_in_span_tree_scaling", r.ones_in_span_tree_scaling},
                {"ones_in_column_span_renormalized", r.ones_in_column_span},
                {"renormalization_positive", r.renormalization_positive},
                {"witness_value", sk::to_string(r.witness_value)},
                {"factor_alpha1", sk::to_string(r.factor_alpha1_value)},
                {"factor_alpha2", sk::to_string(r.factor_alpha2_value)},
                {"positive_on_support", r.positive_on_support}};
}

int cmd_perles_verify(const Options& o) {
    Timer t;
    auto budget = make_budget(o);
    sk::Budget* bp = budget ? &*budget : nullptr;
    auto c = sk::perles_case();
    Json j;
    j["type"] = "perles";
    j["claim"] = "the slack ideal of the Perles polytope is reducible (not prime)";
    j["gale_matches_published_support"] = sk::perles_gale_matches_published();
    auto sub = sk::perles_subideal(c, bp);
    Json membership = Json::array();
    for (const auto& [gen, member] : sub.membership)
        membership.push_back(Json{{"generator", gen}, {"member", member}});
    j["subideal"] = Json{{"selections", sub.selections},
                         {"distinct_minors", sub.distinct_minors},
                         {"generators", sk::basis_to_json(sub.ideal.generators())},
                         {"published_membership", std::move(membership)},
                         {"equals_published", sub.equals_published}};
    auto par = sk::perles_parametric_verify(c);
    j["parametric"] = Json{{"alpha1", perles_root_json(par.alpha1)},
                           {"alpha2", perles_root_json(par.alpha2)},
                           {"witness_row_column_homogeneous", par.witness_row_column_homogeneous},
                           {"factors_separate_roots", par.factors_separate_roots}};
    j["witness"] = c.witness.str();
    bool ok = j["gale_matches_published_support"].get<bool>() && sub.equals_published && par.ok();
    j["verdict"] = ok;
    j["budget_status"] = "completed";
    emit(j, o);
    if (o.timings) std::cerr << "perles verify: " << t.elapsed() << "s\n";
    return ok ? kExitVerified : kExitClaimFalse;
}

// Replays reduction traces / evaluations recorded in a certificate
// without recomputing any Gröbner bases.
int cmd_verify_certificate(const std::string& path, const Options& o) {
    Json j = read_json_file(path);
    std::string type = j.value("type", "");
    Json report;
    report["file"] = path;
    report["type"] = type;
    bool ok = false;
    if (type == "projective-uniqueness") {
        if (j.value("budget_status", "") != "completed")
            throw sk::ValidationError("certificate was not completed; nothing to replay");
        auto parse_basis = [&](const Json& arr, std::size_t nvars) {
            std::vector<sk::Polynomial> out;
            for (const auto& s : arr)
                out.push_back(sk::Polynomial::parse(nvars, s.get<std::string>()));
            return out;
        };
        // infer the ambient ring from any polynomial mention
        std::size_t nvars = 0;
        for (const auto& arr : {j["basis_ip"], j["basis_tp"]})
            for (const auto& s : arr) {
                std::string str = s.get<std::string>();
                // crude upper bound: highest variable index used
                for (std::size_t pos = str.find('x'); pos != std::string::npos;
                     pos = str.find('x', pos + 1)) {
                    std::size_t v = std::strtoul(str.c_str() + pos + 1, nullptr, 10);
                    nvars = std::max(nvars, v);
                }
            }
        auto basis_ip = parse_basis(j["basis_ip"], nvars);
        auto basis_tp = parse_basis(j["basis_tp"], nvars);
        auto replay = [&](const Json& traces, const std::vector<sk::Polynomial>& basis) {
            for (const auto& tr : traces) {
                sk::Polynomial g = sk::Polynomial::parse(nvars, tr["generator"].get<std::string>());
                sk::Polynomial acc =
                    sk::Polynomial::parse(nvars, tr["remainder"].get<std::string>());
                for (const auto& q : tr["quotients"]) {
                    std::size_t idx = q["index"].get<std::size_t>();
                    if (idx >= basis.size()) return false;
                    acc = acc + sk::Polynomial::parse(nvars, q["poly"].get<std::string>()) *
                                    basis[idx];
                }
                if (!(acc == g)) return false;
                if (j["verdict"].get<bool>() &&
                    !sk::Polynomial::parse(nvars, tr["remainder"].get<std::string>()).is_zero())
                    return false;
            }
            return true;
        };
        ok = replay(j["tp_reductions"], basis_ip) && replay(j["ip_reductions"], basis_tp);
    } else if (type == "perles") {
        // replay by exact evaluation: the published generators vanish on
        // both completed matrices, the factors separate the roots, and
        // the rank/column-span conditions hold
        auto c = sk::perles_case();
        auto par = sk::perles_parametric_verify(c);
        ok = par.ok() && j.value("verdict", false);
        std::vector<sk::Polynomial> gens;
        for (const auto& e : j["subideal"]["generators"])
            gens.push_back(sk::Polynomial::parse(36, e.get<std::string>()));
        for (const auto& alpha : {sk::QuadExt::alpha1(), sk::QuadExt::alpha2()}) {
            auto fig = sk::perles_data::completed_matrix(alpha);
            std::vector<sk::QuadExt> point(36, sk::QuadExt(0));
            for (std::size_t v = 0; v < 36; ++v) {
                auto [ri, cj] = c.submatrix.cell_of(v);
                point[v] = fig(ri, cj);
            }
            for (const auto& g : gens) ok = ok && sk::is_zero(g.evaluate(point));
        }
    } else {
        throw sk::ValidationError("unknown certificate type '" + type + "'");
    }
    report["replay_ok"] = ok;
    emit(report, o);
    return ok ? kExitVerified : kExitClaimFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact slack matrices, slack ideals and toric certificates for polytopes"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--order", opt.order, "term order for printed bases")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    app.add_option("--budget", opt.budget_seconds, "time budget in seconds (0 = unlimited)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--column-order", opt.column_order,
                   "facet column order: canonical or the published order")
        ->check(CLI::IsMember({"canonical", "paper"}));
    app.add_flag("--no-saturate", opt.no_saturate, "expose the raw minor ideal (no saturation)");
    app.add_flag("--timings", opt.timings, "print timing summary to stderr");

    std::string name, target, method = "cycles", property, file;

    auto* catalog = app.add_subcommand("catalog", "list or show catalog entries");
    auto* cat_list = catalog->add_subcommand("list", "list catalog names");
    auto* cat_show = catalog->add_subcommand("show", "show one catalog entry");
    cat_show->add_option("name", name, "catalog entry")->required();
    catalog->require_subcommand(1);

    auto* slack = app.add_subcommand("slack", "slack matrices and slack ideals");
    auto* slack_matrix_cmd = slack->add_subcommand("matrix", "numeric slack matrix");
    slack_matrix_cmd->add_option("target", target, "catalog name or polytope file")->required();
    auto* slack_ideal_cmd = slack->add_subcommand("ideal", "saturated slack ideal");
    slack_ideal_cmd->add_option("target", target, "catalog name or input file")->required();
    slack->require_subcommand(1);

    auto* toric = app.add_subcommand("toric", "toric ideal of the non-incidence graph");
    auto* toric_ideal_cmd = toric->add_subcommand("ideal", "compute T_P");
    toric_ideal_cmd->add_option("target", target, "catalog name or input file")->required();
    toric_ideal_cmd->add_option("--method", method, "cycles or kernel")
        ->check(CLI::IsMember({"cycles", "kernel"}));
    toric->require_subcommand(1);

    auto* check = app.add_subcommand("check", "boolean checks with evidence");
    check->add_option("property", property, "morally-2-level|graphic|toric|pure-difference|binomial")
        ->required()
        ->check(CLI::IsMember({"morally-2-level", "graphic", "toric", "pure-difference",
                               "binomial"}));
    check->add_option("target", target, "catalog name or input file")->required();

    auto* certify = app.add_subcommand("certify", "emit machine-checkable certificates");
    std::string what;
    certify->add_option("what", what, "projective-uniqueness")
        ->required()
        ->check(CLI::IsMember({"projective-uniqueness"}));
    certify->add_option("target", target, "catalog name or input file")->required();

    auto* gale = app.add_subcommand("gale", "Gale diagram computations");
    auto* gale_facets_cmd = gale->add_subcommand("facets", "positive circuits and facet pattern");
    gale_facets_cmd->add_option("target", target, "'perles' or a Gale JSON file")->required();
    gale->require_subcommand(1);

    auto* perles = app.add_subcommand("perles", "the Perles polytope case study");
    auto* perles_verify = perles->add_subcommand("verify", "full verification certificate");
    perles->require_subcommand(1);

    auto* verify_cert = app.add_subcommand("verify-certificate", "replay a stored certificate");
    verify_cert->add_option("file", file, "certificate JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat_list->parsed()) return cmd_catalog_list(opt);
        if (cat_show->parsed()) return cmd_catalog_show(name, opt);
        if (slack_matrix_cmd->parsed()) return cmd_slack_matrix(target, opt);
        if (slack_ideal_cmd->parsed()) return cmd_slack_ideal(target, opt);
        if (toric_ideal_cmd->parsed()) return cmd_toric_ideal(target, method, opt);
        if (check->parsed()) return cmd_check(property, target, opt);
        if (certify->parsed()) return cmd_certify_pu(target, opt);
        if (gale_facets_cmd->parsed()) return cmd_gale_facets(target, opt);
        if (perles_verify->parsed()) return cmd_perles_verify(opt);
        if (verify_cert->parsed()) return cmd_verify_certificate(file, opt);
    } catch (const sk::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const sk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
