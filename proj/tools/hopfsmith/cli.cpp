// Copyright 2026 The hopfsmith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hopfsmith/constructions.hpp"
#include "hopfsmith/doubles.hpp"
#include "hopfsmith/filtration.hpp"
#include "hopfsmith/integrals.hpp"
#include "hopfsmith/lifting.hpp"
#include "hopfsmith/presets.hpp"
#include "hopfsmith/serialize.hpp"
#include "hopfsmith/smoothness.hpp"

namespace hopfsmith::cli {

namespace {

struct Options {
    std::string preset;
    std::string file;
    std::optional<std::uint32_t> characteristic;
    std::string output;
    // lift-section
    std::string bimodule = "regular";
    std::optional<std::size_t> twist;
    bool colinear = false;
    // weak-projection, wedge-filtration
    std::string onto = "coradical";
    bool bilinear = false;
    // truth-table
    std::size_t max_n = 8;
    std::vector<std::uint32_t> chars{0, 2, 3, 5, 7};
    mutable std::optional<FieldSpec> loaded;
};

// Input problems: bad JSON, bad tables, failed axioms, unmet preconditions.
class InputError : public std::runtime_error {
   public:
    InputError(const std::string& kind, const std::string& what, Json witness = Json::array())
        : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}
    const std::string& kind() const { return kind_; }
    const Json& witness() const { return witness_; }

   private:
    std::string kind_;
    Json witness_;
};

// The independent pass disagreed with the solver.
class RecheckError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

void recheck(bool ok, const std::string& what) {
    if (!ok) throw RecheckError("re-check failed: " + what);
}

struct Report {
    bool holds = true;
    Json body = Json::object();
};

void override_field(Json& j, std::uint32_t c) {
    if (j.is_object()) {
        for (auto& [key, value] : j.items()) {
            if (key == "field" && value.is_object()) value["char"] = c;
            else override_field(value, c);
        }
    } else if (j.is_array()) {
        for (auto& v : j) override_field(v, c);
    }
}

Json read_json_file(const Options& o) {
    std::ifstream in(o.file);
    if (!in) throw InputError("io", "cannot open '" + o.file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    Json j;
    try {
        j = Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw InputError("format", std::string("malformed JSON: ") + e.what());
    }
    if (o.characteristic) override_field(j, *o.characteristic);
    return j;
}

FieldSpec field_for(std::uint32_t c) {
    try {
        return FieldSpec::with_characteristic(c);
    } catch (const FieldError& e) {
        throw InputError("field", e.what());
    }
}

FieldSpec field_of(const Options& o) { return field_for(o.characteristic.value_or(0)); }

// {"cayley": [[...]], "algebra": "group" | "functions", "field": {"char": p}} builds KG or K^G.
HopfData from_cayley(const Json& j, std::optional<std::uint32_t> c) {
    std::vector<std::vector<std::size_t>> table;
    try {
        table = j.at("cayley").get<std::vector<std::vector<std::size_t>>>();
    } catch (const Json::exception&) {
        throw InputError("format", "cayley must be a square array of element indices");
    }
    if (!c && j.contains("field")) c = j["field"].value("char", 0u);
    FieldSpec f = field_for(c.value_or(0));
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < table.size(); ++k) labels.push_back("g" + std::to_string(k));
    GroupTable g = make_group("table", table, labels);
    std::string kind = j.value("algebra", "group");
    if (kind == "group") return preset_group_algebra(g, f);
    if (kind == "functions") return preset_function_algebra(g, f);
    throw InputError("format", "algebra must be group or functions");
}

HopfData load_hopf(const Options& o, bool validate = true) {
    HopfData h;
    if (!o.preset.empty()) {
        h = preset_by_name(o.preset, field_of(o));
    } else {
        Json j = read_json_file(o);
        h = j.contains("cayley") ? from_cayley(j, o.characteristic) : hopf_from_json(j);
    }
    o.loaded = h.field();
    if (validate) require_hopf(h);
    return h;
}

Json side_json(Side s) { return s == Side::left ? "left" : "right"; }

Json integral_json(const IntegralCertificate& c) {
    return {{"side", side_json(c.side)},
            {"carrier", c.carrier == Carrier::in_h ? "H" : "H*"},
            {"vector", vec_to_json(c.vector)},
            {"total", c.total},
            {"ad_invariant", c.ad_invariant},
            {"ad_coinvariant", c.ad_coinvariant},
            {"verified", c.verified}};
}

Json subspace_json(const SubspaceBasis& s) {
    Json cols = Json::array();
    for (std::size_t k = 0; k < s.dim(); ++k) cols.push_back(vec_to_json(s.basis.col(k)));
    return {{"dim", s.dim()}, {"basis", cols}};
}

Json axioms_json(const AxiomReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back({{"axiom", c.axiom}, {"passed", c.passed}, {"witness", c.witness}});
    return checks;
}

Scalar dot_unit(const Vec& lambda, const Vec& unit, FieldSpec f) {
    Scalar s = f.zero();
    for (std::size_t k = 0; k < unit.size(); ++k) s = s + lambda[k] * unit[k];
    return s;
}

// Commands ---------------------------------------------------------------

Report cmd_check_axioms(const Options& o) {
    HopfData h = load_hopf(o, false);
    AxiomReport rep = check_hopf(h);
    return {rep.all_passed(), {{"dim", h.dim()}, {"checks", axioms_json(rep)}}};
}

Report cmd_integrals(const Options& o) {
    HopfData h = load_hopf(o);
    Report r;
    for (Carrier c : {Carrier::in_h, Carrier::in_dual}) {
        Json part;
        for (Side s : {Side::left, Side::right}) {
            SubspaceBasis sp = integral_space(h, s, c);
            for (std::size_t k = 0; k < sp.dim(); ++k) recheck(is_integral(h, sp.basis.col(k), s, c), "integral basis");
            part[s == Side::left ? "left" : "right"] = subspace_json(sp);
        }
        auto total = total_integral(h, c);
        if (total) recheck(is_integral(h, total->vector, total->side, c), "total integral");
        part["total"] = total ? integral_json(*total) : Json(nullptr);
        part["unimodular"] = is_unimodular(h, c);
        r.body[c == Carrier::in_h ? "H" : "H*"] = part;
    }
    r.body["semisimple"] = !r.body["H"]["total"].is_null();
    r.body["cosemisimple"] = !r.body["H*"]["total"].is_null();
    return r;
}

Report cmd_ad_integral(const Options& o, bool coinvariant) {
    HopfData h = load_hopf(o);
    AdIntegralSearch s = coinvariant ? ad_coinvariant_search(h) : ad_invariant_search(h);
    Report r;
    r.holds = s.integral.has_value();
    r.body["homogeneous_dim"] = s.homogeneous_dim;
    r.body["affine_nullity"] = s.affine_nullity;
    if (!s.integral) {
        r.body["obstruction"] = "normalized system is infeasible";
        return r;
    }
    const IntegralCertificate& c = *s.integral;
    recheck(is_integral(h, c.vector, c.side, c.carrier), "integral condition");
    if (coinvariant) {
        recheck(dot_unit(c.vector, h.coa.counit, h.field()).is_one(), "ε(t) = 1");
    } else {
        recheck(dot_unit(c.vector, h.alg.unit, h.field()).is_one(), "λ(1) = 1");
        recheck(adjoint_linearity(h, c.vector)[0], "ad-invariance");
    }
    r.body["integral"] = integral_json(c);
    return r;
}

Report cmd_separable(const Options& o, bool coalgebra) {
    HopfData h = load_hopf(o);
    auto cert = coalgebra ? coseparability_retraction(h) : separability_idempotent(h);
    Report r;
    r.holds = cert.has_value();
    if (!cert) {
        r.body["obstruction"] = coalgebra ? "no total integral in H* and no retraction" : "no total integral in H and no idempotent";
        return r;
    }
    Json c{{"route", cert->route}, {"verified", cert->verified}};
    if (coalgebra) {
        recheck(verify_coseparability_retraction(h, cert->retraction), "coseparability retraction");
        c["retraction"] = mat_to_json(cert->retraction);
    } else {
        recheck(verify_separability_idempotent(h, cert->idempotent), "separability idempotent");
        c["idempotent"] = vec_to_json(cert->idempotent);
    }
    r.body["certificate"] = c;
    return r;
}

Report cmd_fs(const Options& o, bool coalgebra, bool complete) {
    HopfData h = load_hopf(o);
    std::optional<SectionCertificate> cert;
    if (coalgebra) cert = complete ? find_complete_fs_retraction(h) : find_fs_retraction(h);
    else cert = complete ? find_complete_fs_section(h) : find_fs_section(h);
    Report r;
    r.holds = cert.has_value();
    if (!cert) {
        r.body["obstruction"] = "linear system for the section is infeasible";
        return r;
    }
    auto ok = coalgebra ? fs_retraction_conditions(h, cert->matrix) : fs_section_conditions(h, cert->matrix);
    recheck(ok[0] && ok[1] && (!complete || ok[2]), "section conditions");
    Json c{{"kind", to_string(cert->kind)}, {"matrix", mat_to_json(cert->matrix)}, {"verified", cert->verified_conditions}};
    if (!coalgebra) c["image_in_ideal"] = check_im_tau(h, *cert);
    r.body["certificate"] = c;
    return r;
}

Report cmd_double(const Options& o) {
    HopfData h = load_hopf(o);
    DrinfeldDouble d = drinfeld_double(h);
    recheck(check_hopf(d.hopf).all_passed(), "Hopf axioms of D(H)");
    validate_extension(d.over_h);
    return {true, {{"dim", d.hopf.dim()}, {"double", hopf_to_json(d.hopf)}, {"embedding", mat_to_json(d.over_h.embedding)}}};
}

Report cmd_double_separable(const Options& o) {
    HopfData h = load_hopf(o);
    auto sep = separable_extension(drinfeld_double(h).over_h);
    Report r;
    r.holds = sep.has_value();
    if (sep) {
        recheck(std::ranges::count(sep->verified, "multiplication") == 1 && std::ranges::count(sep->verified, "central") == 1,
                "relative separability element");
        r.body["element"] = vec_to_json(sep->lifted);
        r.body["verified"] = sep->verified;
    } else {
        r.body["obstruction"] = "no separability element in D(H) ⊗_H D(H)";
    }
    r.body["ad_invariant_integral"] = ad_invariant_integral(h).has_value();
    recheck(r.body["ad_invariant_integral"] == r.holds, "agreement with the ad-invariant integral");
    r.body["dual_double_separable"] = dual_double_separable(h);
    return r;
}

Report cmd_coradical(const Options& o) {
    HopfData h = load_hopf(o);
    SubspaceBasis c = coradical(h.coa);
    recheck(is_subcoalgebra(c, h.coa), "coradical is a subcoalgebra");
    return {true, {{"coradical", subspace_json(c)}, {"cosemisimple", c.dim() == h.dim()}}};
}

SubspaceBasis chosen_subcoalgebra(const HopfData& h, const Options& o) {
    if (o.onto == "coradical") return coradical(h.coa);
    if (o.onto == "unit") return make_subspace(Mat(h.field(), h.dim(), 1, h.alg.unit), h.field(), h.dim());
    if (o.onto == "all") return full_space(h.field(), h.dim());
    throw InputError("argument", "--onto must be coradical, unit or all");
}

Report cmd_wedge(const Options& o) {
    HopfData h = load_hopf(o);
    FiltrationRecord rec = wedge_filtration(chosen_subcoalgebra(h, o), h.coa);
    for (const auto& s : rec.stages) recheck(is_subcoalgebra(s, h.coa), "filtration stage is a subcoalgebra");
    return {rec.exhausted, {{"filtration", filtration_to_json(rec)}}};
}

Bimodule chosen_bimodule(const HopfData& h, const Options& o) {
    if (o.bimodule == "regular") return regular_bimodule(h.alg);
    if (o.bimodule == "trivial") return character_bimodule(h.alg, h.coa.counit);
    if (o.bimodule == "free") return free_bimodule(h.alg);
    throw InputError("argument", "--bimodule must be regular, trivial or free");
}

Report cmd_lift(const Options& o) {
    SurjectionProblem p;
    if (!o.file.empty()) {
        if (o.colinear) throw InputError("argument", "--colinear needs a preset");
        Json j = read_json_file(o);
        if (!j.contains("e") || !j.contains("a") || !j.contains("pi"))
            throw InputError("format", "problem file needs keys e, a and pi");
        AlgebraData e = algebra_from_json(j["e"]), a = algebra_from_json(j["a"]);
        o.loaded = e.field;
        p = make_surjection(e, a, mat_from_json(j["pi"], e.field, a.dim, e.dim));
    } else {
        HopfData h = load_hopf(o);
        Bimodule m = chosen_bimodule(h, o);
        std::optional<Mat> c;
        if (o.twist) {
            Mat z = cocycle_space(h.alg, m);
            if (*o.twist >= z.cols())
                throw InputError("argument", "--twist index exceeds the cocycle basis (" + std::to_string(z.cols()) + ")");
            c = Mat(h.field(), m.dim, h.dim() * h.dim(), z.col(*o.twist));
        }
        p = square_zero_extension(h.alg, m, c);
        if (o.colinear) {
            if (o.bimodule != "regular" || o.twist) throw InputError("argument", "--colinear uses the untwisted regular bimodule");
            const std::size_t n = h.dim();
            ComoduleCoaction on_a = adjoint_coaction(h, AdjointCoaction::right_regular);
            ComoduleCoaction on_e{Side::right, 2 * n, Tensor3(h.field(), 2 * n, n, 2 * n)};
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t k = 0; k < n; ++k) {
                        on_e.rho(j, x, k) = on_a.rho(j, x, k);
                        on_e.rho(n + j, x, n + k) = on_a.rho(j, x, k);
                    }
            p.coactions = Coactions{h, on_e, on_a};
        }
    }
    LiftOutcome out = lift_algebra_section(p, o.colinear);
    if (out) {
        const Mat& s = out.certificate->section;
        recheck(p.pi * s == Mat::identity(p.a.field, p.a.dim), "π σ = id");
        AlgebraOps ea(p.e), aa(p.a);
        for (std::size_t i = 0; i < p.a.dim; ++i)
            for (std::size_t j = 0; j < p.a.dim; ++j)
                recheck(s * aa.mul(unit_vec(p.a.field, p.a.dim, i), unit_vec(p.a.field, p.a.dim, j)) ==
                            ea.mul(s.col(i), s.col(j)),
                        "σ multiplicative");
    } else if (out.obstruction) {
        recheck(is_cocycle(p.a, out.obstruction->layer, out.obstruction->cocycle) || out.obstruction->stage == 0,
                "obstruction witness is a cocycle");
    }
    Json j = lift_to_json(out);
    j.erase("holds");
    j["kernel_dim"] = p.kernel.dim();
    return {static_cast<bool>(out), j};
}

Report cmd_weak(const Options& o) {
    HopfData e = load_hopf(o);
    SubHopf sub = sub_hopf_algebra(e, chosen_subcoalgebra(e, o));
    WeakProjectionOutcome out = weak_projection(e, sub.hopf, sub.inclusion, o.bilinear);
    if (out) {
        const Mat& pi = out.projection->retraction;
        recheck(pi * sub.inclusion == Mat::identity(e.field(), sub.hopf.dim()), "π ∘ incl = id");
        CoalgebraOps ec(e.coa), hc(sub.hopf.coa);
        recheck(hc.comult_matrix() * pi == Mat::kron(pi, pi) * ec.comult_matrix(), "π is a coalgebra map");
    }
    Json j = weak_projection_to_json(out);
    j.erase("holds");
    j["subalgebra"] = subspace_json(make_subspace(sub.inclusion, e.field(), e.dim()));
    return {static_cast<bool>(out), j};
}

Report cmd_truth_table(const Options& o) {
    if (o.max_n == 0 || o.max_n > 12) throw InputError("argument", "--max-n must be in 1..12");
    struct Cell {
        std::size_t n;
        std::uint32_t c;
        std::future<std::pair<bool, bool>> result;
    };
    std::vector<Cell> cells;
    for (std::uint32_t c : o.chars) {
        FieldSpec f = field_for(c);
        for (std::size_t n = 1; n <= o.max_n; ++n)
            cells.push_back({n, c, std::async(std::launch::async, [n, f] {
                                 HopfData h = preset_group_algebra(cyclic_group(n), f);
                                 auto fs = find_fs_section(h);
                                 if (fs) {
                                     auto ok = fs_section_conditions(h, fs->matrix);
                                     recheck(ok[0] && ok[1], "fs-section for C" + std::to_string(n));
                                 }
                                 return std::make_pair(fs.has_value(), separability_idempotent(h).has_value());
                             })});
    }
    Report r;
    Json rows = Json::array();
    std::map<std::string, std::string> matrix;
    for (auto& cell : cells) {
        auto [fs, sep] = cell.result.get();
        bool predicted = cell.c == 0 || cell.n % cell.c != 0;
        r.holds = r.holds && fs == predicted && sep == predicted;
        rows.push_back({{"n", cell.n}, {"char", cell.c}, {"fs_section", fs}, {"separable", sep}, {"predicted", predicted}});
        matrix["char " + std::to_string(cell.c)] += fs ? '1' : '0';
    }
    r.body["rows"] = rows;
    r.body["matrix"] = matrix;
    r.body["columns"] = "C1..C" + std::to_string(o.max_n);
    return r;
}

Json error_json(const std::string& kind, const std::string& message, Json witness = Json::array()) {
    return {{"error", {{"kind", kind}, {"message", message}, {"witness", std::move(witness)}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact deciders for finite-dimensional Hopf algebras", "hopfsmith"};
    app.require_subcommand(1);
    Options o;

    using Handler = std::function<Report()>;
    std::map<std::string, Handler> handlers;
    auto add = [&](const std::string& name, const std::string& help, Handler h, bool needs_input = true) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (needs_input) {
            auto* p = sub->add_option("--preset", o.preset, "group:<G>, functions:<G>, sweedler or taft:<n>:<q>");
            auto* f = sub->add_option("--file", o.file, "HopfData JSON file")->check(CLI::ExistingFile);
            p->excludes(f);
            f->excludes(p);
            sub->add_option("--char", o.characteristic, "field characteristic, 0 for Q");
        }
        sub->add_option("--output", o.output, "write the JSON report to this path");
        handlers[name] = std::move(h);
        return sub;
    };

    add("check-axioms", "check the Hopf algebra axioms", [&] { return cmd_check_axioms(o); });
    add("integrals", "integral spaces and total integrals in H and H*", [&] { return cmd_integrals(o); });
    add("ad-invariant", "ad-invariant integral λ ∈ H*", [&] { return cmd_ad_integral(o, false); });
    add("ad-coinvariant", "ad-coinvariant integral t ∈ H", [&] { return cmd_ad_integral(o, true); });
    add("separable", "separability idempotent of H", [&] { return cmd_separable(o, false); });
    add("coseparable", "coseparability retraction of H", [&] { return cmd_separable(o, true); });
    add("fs-algebra", "fs-section τ", [&] { return cmd_fs(o, false, false); });
    add("fs-algebra-complete", "complete fs-section τ", [&] { return cmd_fs(o, false, true); });
    add("fs-coalgebra", "fs-retraction χ", [&] { return cmd_fs(o, true, false); });
    add("fs-coalgebra-complete", "complete fs-retraction χ", [&] { return cmd_fs(o, true, true); });
    add("double", "Drinfeld double D(H)", [&] { return cmd_double(o); });
    add("double-separable", "separability of D(H) over H", [&] { return cmd_double_separable(o); });
    add("coradical", "coradical of H", [&] { return cmd_coradical(o); });
    auto* wf = add("wedge-filtration", "wedge filtration of a subcoalgebra", [&] { return cmd_wedge(o); });
    wf->add_option("--of", o.onto, "coradical, unit or all")->capture_default_str();
    auto* ls = add("lift-section", "lift an algebra section through a nilpotent kernel", [&] { return cmd_lift(o); });
    ls->add_option("--bimodule", o.bimodule, "square-zero ideal: regular, trivial or free")->capture_default_str();
    ls->add_option("--twist", o.twist, "index of the cocycle basis vector twisting the extension");
    ls->add_flag("--colinear", o.colinear, "require a right H-colinear section");
    auto* wp = add("weak-projection", "H-linear coalgebra retraction onto a Hopf subalgebra", [&] { return cmd_weak(o); });
    wp->add_option("--onto", o.onto, "coradical, unit or all")->capture_default_str();
    wp->add_flag("--bilinear", o.bilinear, "also require right H-linearity");
    auto* tt = add("truth-table", "fs-sections of KC_n across characteristics", [&] { return cmd_truth_table(o); }, false);
    tt->add_option("--max-n", o.max_n, "largest cyclic group order")->capture_default_str();
    tt->add_option("--chars", o.chars, "characteristics to sweep")->delimiter(',');

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::holds : ExitCode::input_error;
    }

    std::string name = app.get_subcommands().front()->get_name();
    Json report;
    int code = ExitCode::holds;
    try {
        if (name != "truth-table" && o.preset.empty() && o.file.empty())
            throw InputError("argument", "exactly one of --preset or --file is required");
        Report r = handlers.at(name)();
        report = std::move(r.body);
        report["holds"] = r.holds;
        code = r.holds ? ExitCode::holds : ExitCode::refuted;
    } catch (const InputError& e) {
        report = error_json(e.kind(), e.what(), e.witness());
        code = ExitCode::input_error;
    } catch (const AxiomError& e) {
        report = error_json("axiom", e.what(), {{"axiom", e.failure().axiom}, {"index", e.failure().witness}});
        code = ExitCode::input_error;
    } catch (const GroupError& e) {
        report = error_json("group", e.what(), e.witness());
        code = ExitCode::input_error;
    } catch (const RecheckError& e) {
        report = error_json("internal", e.what());
        code = ExitCode::internal_error;
    } catch (const std::invalid_argument& e) {
        report = error_json("input", e.what());
        code = ExitCode::input_error;
    } catch (const std::domain_error& e) {
        report = error_json("input", e.what());
        code = ExitCode::input_error;
    } catch (const Json::exception& e) {
        report = error_json("format", e.what());
        code = ExitCode::input_error;
    } catch (const std::exception& e) {
        report = error_json("internal", e.what());
        code = ExitCode::internal_error;
    }
    report["command"] = name;
    if (!o.preset.empty()) report["input"] = o.preset;
    else if (!o.file.empty()) report["input"] = o.file;
    if (o.loaded) report["field"] = o.loaded->name();
    if (report.contains("error")) err << "hopfsmith: " << report["error"]["message"].get<std::string>() << '\n';

    std::string text = dump_sorted(report) + "\n";
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream f(o.output);
        if (!f) {
            err << "hopfsmith: cannot write '" << o.output << "'\n";
            return ExitCode::input_error;
        }
        f << text;
    }
    return code;
}

}  // namespace hopfsmith::cli
