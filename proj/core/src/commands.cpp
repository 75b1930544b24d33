#include "torsionlab/commands.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "torsionlab/checker.hpp"
#include "torsionlab/identities.hpp"
#include "torsionlab/scene.hpp"

namespace torsionlab {

namespace {

using nlohmann::json;

struct Output {
    bool machine = false;
    std::uint64_t seed = 1;
    std::ostream& out;

    json doc;

    explicit Output(std::ostream& os) : out(os) {}

    void begin(const std::string& command, const SceneFile& scene) {
        if (!machine) {
            return;
        }
        doc["command"] = command;
        json vars = json::array();
        for (int i = 0; i < scene.chart->dim(); ++i) {
            vars.push_back(scene.chart->coordinate_name(i));
        }
        doc["chart"] = {{"dim", scene.chart->dim()}, {"vars", vars}};
        doc["results"] = nullptr;
        doc["report"] = nullptr;
        doc["seed"] = seed;
    }

    void form(const TwoFormField& w, const std::string& label) {
        if (machine) {
            json results = json::object();
            w.for_each([&](int i, int j, int k, const MultiPoly& p) {
                if (!p.is_zero()) {
                    const std::string key = std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            "," + std::to_string(k + 1);
                    results[key] = p.str();
                }
            });
            doc["results"] = results;
            return;
        }
        bool any = false;
        w.for_each([&](int i, int j, int k, const MultiPoly& p) {
            if (!p.is_zero()) {
                out << label << '[' << i + 1 << "][" << j + 1 << "][" << k + 1
                    << "] = " << p.str() << '\n';
                any = true;
            }
        });
        if (!any) {
            out << "ALL-ZERO\n";
        }
    }

    void line(const std::string& text) {
        if (!machine) {
            out << text << '\n';
        }
    }

    void finish() {
        if (machine) {
            out << doc.dump() << '\n';
        }
    }
};

json sz_to_json(const SZReport& sz) {
    json w = nullptr;
    if (sz.witness) {
        json point = json::array();
        for (const auto& v : sz.witness->point) {
            point.push_back(v.str());
        }
        w = {{"component", sz.witness->component}, {"point", point},
             {"value", sz.witness->value.str()}};
        if (sz.witness->ijk) {
            w["i"] = (*sz.witness->ijk)[0];
            w["j"] = (*sz.witness->ijk)[1];
            w["k"] = (*sz.witness->ijk)[2];
        }
    }
    return {{"trials", sz.trials},
            {"box", sz.box},
            {"degree_bound", sz.degree_bound},
            {"failure_probability_bound", sz.failure_probability_bound.str()},
            {"outcome", sz.outcome == SZOutcome::all_zero_at_samples ? "all-zero-at-samples"
                                                                     : "nonzero-witness"},
            {"witness", w},
            {"seed", sz.seed}};
}

json report_to_json(const ModuleReport& report, const std::vector<SZReport>& sz_reports) {
    json witness = nullptr;
    if (report.witness) {
        witness = {{"check", report.witness->check},
                   {"i", report.witness->i},
                   {"j", report.witness->j},
                   {"k", report.witness->k},
                   {"value", report.witness->value.str()}};
    }
    json mixed = json::array();
    for (bool flag : report.mixed_conditions) {
        mixed.push_back(flag);
    }
    json doc = {{"level", report.level},
                {"torsion_vanishes", {{"A", report.torsion_a_vanishes},
                                      {"B", report.torsion_b_vanishes}}},
                {"commutes", report.commutes},
                {"mixed_conditions", mixed},
                {"verdict", verdict_name(report.verdict)},
                {"witness", witness},
                {"spot_validated", report.spot_validated},
                {"seed", report.seed}};
    if (!sz_reports.empty()) {
        json sz = json::array();
        for (const auto& r : sz_reports) {
            sz.push_back(sz_to_json(r));
        }
        doc["sz"] = sz;
    }
    return doc;
}

const OperatorField& named_operator(const SceneFile& scene, const std::string& name) {
    auto it = scene.operators.find(name);
    if (it == scene.operators.end()) {
        throw UsageError("scene has no operator named '" + name + "'");
    }
    return it->second;
}

std::vector<OperatorField> named_operators(const SceneFile& scene, const std::string& csv) {
    std::vector<OperatorField> ops;
    std::string name;
    std::istringstream in(csv);
    while (std::getline(in, name, ',')) {
        if (!name.empty()) {
            ops.push_back(named_operator(scene, name));
        }
    }
    if (ops.empty()) {
        throw UsageError("no operators named");
    }
    return ops;
}

struct Options {
    std::string scene_path;
    std::string op;
    std::string ops;
    std::string method;
    int level = 1;
    int index = 0;
    int randomized_trials = 0;
    long box = 1000;
};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"torsionlab: exact torsions, brackets, defects, polarizations, and "
                 "Haantjes-structure verdicts for polynomial operator fields"};
    app.require_subcommand(1);

    Output output(out);
    if (const char* env = std::getenv("TORSIONLAB_SEED")) {
        output.seed = std::strtoull(env, nullptr, 10);
    }
    app.add_flag("--machine", output.machine, "emit one JSON document instead of text");
    app.add_option("--seed", output.seed, "seed for randomized pieces");

    Options opt;
    auto add_scene = [&](CLI::App* cmd) {
        cmd->fallthrough(); // global --machine/--seed may follow the subcommand
        cmd->add_option("scene", opt.scene_path, "scene file")->required();
    };

    CLI::App* nij = app.add_subcommand("nijenhuis", "Nijenhuis torsion of an operator");
    add_scene(nij);
    nij->add_option("--operator", opt.op, "operator name")->required();

    CLI::App* gen = app.add_subcommand("gen-torsion", "generalized torsion of level m");
    add_scene(gen);
    gen->add_option("--operator", opt.op)->required();
    gen->add_option("--level", opt.level)->required();
    gen->add_option("--method", opt.method)
        ->check(CLI::IsMember({"recursive", "closed"}))
        ->default_val("recursive");

    CLI::App* haan = app.add_subcommand("haantjes", "Haantjes torsion (level 2)");
    add_scene(haan);
    haan->add_option("--operator", opt.op)->required();

    CLI::App* fn = app.add_subcommand("fn-bracket", "Frolicher-Nijenhuis bracket");
    add_scene(fn);
    fn->add_option("--operators", opt.ops, "two comma-separated operator names")->required();
    fn->add_option("--method", opt.method)
        ->check(CLI::IsMember({"definition", "components"}))
        ->default_val("definition");

    CLI::App* def = app.add_subcommand("defect", "defect of index k of the level-m torsion");
    add_scene(def);
    def->add_option("--operators", opt.ops)->required();
    def->add_option("--level", opt.level)->required();
    def->add_option("--index", opt.index)->required();

    CLI::App* pol = app.add_subcommand("polarize", "polarization of the level-m torsion");
    add_scene(pol);
    pol->add_option("--operators", opt.ops)->required();
    pol->add_option("--level", opt.level)->required();
    pol->add_option("--method", opt.method)
        ->check(CLI::IsMember({"subset", "lambda", "recurrence"}))
        ->default_val("subset");

    CLI::App* hm = app.add_subcommand("hm-bracket", "Haantjes bracket of level m");
    add_scene(hm);
    hm->add_option("--operators", opt.ops)->required();
    hm->add_option("--level", opt.level)->required();

    CLI::App* h1 = app.add_subcommand("h1", "auxiliary bracket H1");
    add_scene(h1);
    h1->add_option("--operators", opt.ops)->required();

    CLI::App* h2 = app.add_subcommand("h2", "auxiliary bracket H2");
    add_scene(h2);
    h2->add_option("--operators", opt.ops)->required();

    CLI::App* check = app.add_subcommand("check-module", "Haantjes module/vector-space verdict");
    add_scene(check);
    check->add_option("--operators", opt.ops, "exactly two operator names")->required();
    check->add_option("--level", opt.level)->required();
    check->add_option("--randomized", opt.randomized_trials,
                      "additionally sample-check each condition with this many trials");
    check->add_option("--box", opt.box, "sample box for --randomized");

    CLI::App* verify = app.add_subcommand("verify-identities", "run the identity suite I1-I14");
    add_scene(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        SceneFile scene = load_scene(opt.scene_path);

        if (nij->parsed()) {
            output.begin("nijenhuis", scene);
            output.form(nijenhuis(named_operator(scene, opt.op)), "tau");
        } else if (gen->parsed()) {
            output.begin("gen-torsion", scene);
            const OperatorField& a = named_operator(scene, opt.op);
            TwoFormField w = opt.method == "closed" ? gen_torsion_closed(a, LevelM(opt.level))
                                                    : gen_torsion(a, LevelM(opt.level));
            output.form(w, "tau");
        } else if (haan->parsed()) {
            output.begin("haantjes", scene);
            output.form(haantjes(named_operator(scene, opt.op)), "H");
        } else if (fn->parsed()) {
            output.begin("fn-bracket", scene);
            auto ops = named_operators(scene, opt.ops);
            if (ops.size() != 2) {
                throw UsageError("fn-bracket needs exactly two operators");
            }
            TwoFormField w = opt.method == "components" ? fn_bracket_components(ops[0], ops[1])
                                                        : fn_bracket(ops[0], ops[1]);
            output.form(w, "FN");
        } else if (def->parsed()) {
            output.begin("defect", scene);
            auto ops = named_operators(scene, opt.ops);
            if (opt.index != static_cast<int>(ops.size())) {
                throw UsageError("--index must equal the number of operators");
            }
            output.form(defect(LevelM(opt.level), ops), "Delta");
        } else if (pol->parsed()) {
            output.begin("polarize", scene);
            auto ops = named_operators(scene, opt.ops);
            PolarizationMethod method = PolarizationMethod::subset_sum;
            if (opt.method == "lambda") {
                method = PolarizationMethod::lambda_extraction;
            } else if (opt.method == "recurrence") {
                method = PolarizationMethod::recurrence;
            }
            output.form(polarization(LevelM(opt.level), ops, method), "P");
        } else if (hm->parsed()) {
            output.begin("hm-bracket", scene);
            auto ops = named_operators(scene, opt.ops);
            if (ops.size() != 2) {
                throw UsageError("hm-bracket needs exactly two operators");
            }
            output.form(higher_haantjes(ops[0], ops[1], LevelM(opt.level)), "HB");
        } else if (h1->parsed()) {
            output.begin("h1", scene);
            auto ops = named_operators(scene, opt.ops);
            if (ops.size() != 2) {
                throw UsageError("h1 needs exactly two operators");
            }
            output.form(h1_bracket(ops[0], ops[1]), "H1");
        } else if (h2->parsed()) {
            output.begin("h2", scene);
            auto ops = named_operators(scene, opt.ops);
            if (ops.size() != 2) {
                throw UsageError("h2 needs exactly two operators");
            }
            output.form(h2_bracket(ops[0], ops[1]), "H2");
        } else if (check->parsed()) {
            output.begin("check-module", scene);
            auto ops = named_operators(scene, opt.ops);
            if (ops.size() != 2) {
                throw UsageError("check-module needs exactly two operators");
            }
            ModuleReport report = check_module(ops[0], ops[1], LevelM(opt.level), output.seed);

            std::vector<SZReport> sz_reports;
            if (opt.randomized_trials > 0) {
                sz_reports.push_back(sz_verify(gen_torsion(ops[0], LevelM(opt.level)),
                                               opt.randomized_trials, opt.box, output.seed));
                sz_reports.push_back(sz_verify(gen_torsion(ops[1], LevelM(opt.level)),
                                               opt.randomized_trials, opt.box, output.seed));
                for (int k = 1; k <= 2 * opt.level - 1; ++k) {
                    std::vector<OperatorField> mixed;
                    for (int t = 0; t < 2 * opt.level - k; ++t) {
                        mixed.push_back(ops[0]);
                    }
                    for (int t = 0; t < k; ++t) {
                        mixed.push_back(ops[1]);
                    }
                    sz_reports.push_back(sz_verify(polarization(LevelM(opt.level), mixed),
                                                   opt.randomized_trials, opt.box, output.seed));
                }
            }

            if (output.machine) {
                output.doc["report"] = report_to_json(report, sz_reports);
            } else {
                output.line("level: " + std::to_string(report.level));
                output.line(std::string("torsion A: ") +
                            (report.torsion_a_vanishes ? "ZERO" : "NONZERO"));
                output.line(std::string("torsion B: ") +
                            (report.torsion_b_vanishes ? "ZERO" : "NONZERO"));
                output.line(std::string("commutes: ") + (report.commutes ? "yes" : "no"));
                for (std::size_t k = 0; k < report.mixed_conditions.size(); ++k) {
                    output.line("condition k=" + std::to_string(k + 1) + ": " +
                                (report.mixed_conditions[k] ? "ZERO" : "NONZERO"));
                }
                if (report.witness) {
                    output.line("witness: " + report.witness->check + " component (" +
                                std::to_string(report.witness->i) + "," +
                                std::to_string(report.witness->j) + "," +
                                std::to_string(report.witness->k) + ") = " +
                                report.witness->value.str());
                }
                if (report.spot_validated) {
                    output.line("spot-check: ZERO");
                }
                for (const auto& sz : sz_reports) {
                    output.line(std::string("sz: ") +
                                (sz.outcome == SZOutcome::all_zero_at_samples
                                     ? "all-zero-at-samples"
                                     : "nonzero-witness") +
                                " (bound " + sz.failure_probability_bound.str() + ")");
                }
                output.line("verdict: " + std::string(verdict_name(report.verdict)));
            }
        } else if (verify->parsed()) {
            output.begin("verify-identities", scene);
            auto results = run_identity_suite(scene, output.seed);
            bool all_pass = true;
            json report = json::array();
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                if (output.machine) {
                    report.push_back({{"id", r.id},
                                      {"title", r.title},
                                      {"pass", r.pass},
                                      {"detail", r.detail}});
                } else {
                    output.line(r.id + " " + r.title + ": " + (r.pass ? "PASS" : "FAIL") +
                                (r.pass ? "" : " (" + r.detail + ")"));
                }
            }
            if (output.machine) {
                output.doc["report"] = report;
            }
            output.finish();
            return all_pass ? 0 : 2;
        }

        output.finish();
        return 0;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "error[" << error_code_name(e.code()) << "] at " << e.line() << ":" << e.column()
            << ": " << e.what() << '\n';
        return 1;
    } catch (const SceneError& e) {
        err << "error[" << error_code_name(e.code()) << "] at line " << e.line() << ": "
            << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error[" << error_code_name(e.code()) << "]: " << e.what() << '\n';
        return 1;
    }
}

} // namespace torsionlab
