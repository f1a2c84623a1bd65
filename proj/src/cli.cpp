#include "genera/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "genera/selftest.hpp"

namespace genera {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GeneraError("ParseError", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonOpts {
    std::vector<std::string> inputs; // workspace + datum files, merged in order
    std::string table_file;
    std::string lifts_file;
    std::string format = "text";
    std::string out_file;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
    if (with_input)
        cmd->add_option("--input", opts.inputs, "input JSON file(s): workspace tables and datum");
    cmd->add_option("--table", opts.table_file, "reducibility table JSON");
    cmd->add_option("--base-lifts", opts.lifts_file, "declared base liftings JSON");
    cmd->add_option("--format", opts.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", opts.out_file, "write the report to this file as well");
}

struct LoadResult {
    Workspace ws;
    std::vector<std::string> datum_texts; // raw texts of --input files, in order
};

LoadResult load(const CommonOpts& opts) {
    LoadResult r;
    for (const std::string& path : opts.inputs) {
        std::string text = slurp(path);
        r.ws.merge_json(text);
        r.datum_texts.push_back(text);
    }
    if (!opts.table_file.empty()) r.ws.merge_json(slurp(opts.table_file));
    if (!opts.lifts_file.empty()) r.ws.merge_json(slurp(opts.lifts_file));
    r.ws.validate();
    return r;
}

ParsedInput first_datum(const LoadResult& loaded) {
    for (const std::string& text : loaded.datum_texts) {
        nlohmann::json j = nlohmann::json::parse(text);
        if (j.contains("type")) return parse_input(text, loaded.ws);
    }
    throw GeneraError("ParseError", "no input file carries a datum (missing \"type\")");
}

void emit(const CommonOpts& opts, std::ostream& out, const std::string& text) {
    out << text;
    if (!opts.out_file.empty()) {
        std::ofstream f(opts.out_file, std::ios::binary);
        f << text;
    }
}

GDatum to_gdatum(const AnyDatum& d) {
    if (std::holds_alternative<DiscreteSeriesDatum>(d))
        return std::get<DiscreteSeriesDatum>(d);
    if (std::holds_alternative<TemperedDatum>(d)) return std::get<TemperedDatum>(d);
    if (std::holds_alternative<LanglandsDatum>(d)) return std::get<LanglandsDatum>(d);
    throw GeneraError("ParseError", "expected a ds/tempered/langlands datum");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact segment combinatorics and Jacquet-module calculus for the generic dual"};
    app.name("genera");
    app.require_subcommand(1);

    // classify
    CommonOpts classify_opts;
    auto* cmd_classify = app.add_subcommand("classify", "validate and classify a datum");
    add_common(cmd_classify, classify_opts);

    // mu-star
    CommonOpts mu_opts;
    std::string mu_group = "Sp";
    int mu_rank = 0;
    std::string mu_induced;
    std::string mu_slice = "all";
    auto* cmd_mu = app.add_subcommand("mu-star", "Jacquet-module ledger of an induced datum");
    add_common(cmd_mu, mu_opts);
    cmd_mu->add_option("--group", mu_group, "group family");
    cmd_mu->add_option("--rank", mu_rank, "group rank (informational)");
    cmd_mu->add_option("--induced", mu_induced, "e.g. \"d([0,1]@t) x base(s0)\"")->required();
    cmd_mu->add_option("--slice", mu_slice, "sGL | s(m) with integer m | all");

    // irreducible
    CommonOpts irr_opts;
    auto* cmd_irr = app.add_subcommand("irreducible", "standard-module irreducibility cascade");
    add_common(cmd_irr, irr_opts);

    // lift / descend
    CommonOpts lift_opts, desc_opts;
    std::string lift_level = "ds", desc_level = "ds";
    auto* cmd_lift = app.add_subcommand("lift", "functorial lift of a G-side datum");
    add_common(cmd_lift, lift_opts);
    cmd_lift->add_option("--level", lift_level, "ds|tempered|generic");
    auto* cmd_desc = app.add_subcommand("descend", "descent of an H_N datum");
    add_common(cmd_desc, desc_opts);
    cmd_desc->add_option("--level", desc_level, "ds|tempered|generic");

    // gamma-check
    CommonOpts gamma_opts;
    std::string gamma_left, gamma_right;
    auto* cmd_gamma = app.add_subcommand("gamma-check", "formal gamma-factor bag identity");
    add_common(cmd_gamma, gamma_opts);
    cmd_gamma->add_option("--left", gamma_left, "G-side datum JSON")->required();
    cmd_gamma->add_option("--right", gamma_right, "H_N datum JSON")->required();

    // param
    CommonOpts param_opts;
    std::string param_action;
    auto* cmd_param = app.add_subcommand("param", "Weil parameter operations");
    add_common(cmd_param, param_opts);
    cmd_param->add_option("action", param_action, "classify|decompose|canon|to-rep")->required();

    // selftest
    bool quick = false;
    auto* cmd_selftest = app.add_subcommand("selftest", "run the invariant suites");
    cmd_selftest->add_flag("--quick", quick, "smaller sample sizes");

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs;
        cargs.push_back("genera");
        for (const auto& a : argv) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (cmd_selftest->parsed()) {
            std::uint64_t seed = 1;
            if (const char* env = std::getenv("GENERA_SEED")) seed = std::strtoull(env, nullptr, 10);
            int failures = run_selftest(seed, quick, out);
            return failures == 0 ? 0 : 2;
        }

        if (cmd_classify->parsed()) {
            LoadResult loaded = load(classify_opts);
            ParsedInput in = first_datum(loaded);
            if (in.kind != ParsedInput::Kind::Rep)
                throw GeneraError("ParseError", "classify expects a G-side datum");
            Classification c = classify_rep(*in.rep, loaded.ws.table, loaded.ws.reg);
            std::string text;
            if (classify_opts.format == "json") {
                nlohmann::json j = nlohmann::json::parse(report_to_json(c.report));
                j["class"] = rep_class_name(c.cls);
                if (c.decision) j["witness"] = c.decision->witness;
                text = j.dump() + "\n";
            } else {
                text = std::string(rep_class_name(c.cls)) + "\n";
                if (!c.report.ok()) text += c.report.str() + "\n";
            }
            emit(classify_opts, out, text);
            return c.cls == RepClass::Invalid ? 2 : 0;
        }

        if (cmd_mu->parsed()) {
            LoadResult loaded = load(mu_opts);
            auto [lambda, base] = parse_induced(mu_induced, loaded.ws);
            Family f = family_from_name(mu_group);
            GRepElement g = mu_star(lambda, base, f, loaded.ws.reg);
            if (mu_slice == "sGL") {
                g = extract(g, Slice::SGL, 0, loaded.ws.reg);
            } else if (mu_slice.rfind("s(", 0) == 0 && mu_slice.back() == ')') {
                int m = std::stoi(mu_slice.substr(2, mu_slice.size() - 3));
                g = extract(g, Slice::SM, m, loaded.ws.reg);
            } else if (mu_slice != "all") {
                throw GeneraError("ParseError", "unknown slice '" + mu_slice + "'");
            }
            std::string text = mu_opts.format == "json" ? grep_to_json(g, loaded.ws.reg) + "\n"
                                                        : g.str(loaded.ws.reg) + "\n";
            emit(mu_opts, out, text);
            return 0;
        }

        if (cmd_irr->parsed()) {
            LoadResult loaded = load(irr_opts);
            ParsedInput in = first_datum(loaded);
            if (in.kind != ParsedInput::Kind::Rep ||
                !std::holds_alternative<LanglandsDatum>(*in.rep))
                throw GeneraError("ParseError", "irreducible expects a langlands datum");
            Decision d = irreducible_standard(std::get<LanglandsDatum>(*in.rep), loaded.ws.table,
                                              loaded.ws.reg);
            std::string text;
            if (irr_opts.format == "json") {
                nlohmann::json j;
                j["irreducible"] = d.irreducible;
                if (!d.irreducible) j["witness"] = d.witness;
                text = j.dump() + "\n";
            } else {
                text = d.irreducible ? "Irreducible\n" : "Reducible: " + d.witness + "\n";
            }
            emit(irr_opts, out, text);
            return d.irreducible ? 0 : 2;
        }

        if (cmd_lift->parsed()) {
            LoadResult loaded = load(lift_opts);
            ParsedInput in = first_datum(loaded);
            if (in.kind != ParsedInput::Kind::Rep)
                throw GeneraError("ParseError", "lift expects a G-side datum");
            HNRepDatum rho;
            if (lift_level == "ds")
                rho = lift_ds(std::get<DiscreteSeriesDatum>(*in.rep), loaded.ws.lifts,
                              loaded.ws.reg);
            else if (lift_level == "tempered")
                rho = lift_tempered(std::get<TemperedDatum>(*in.rep), loaded.ws.lifts,
                                    loaded.ws.reg);
            else
                rho = lift_generic(std::get<LanglandsDatum>(*in.rep), loaded.ws.lifts,
                                   loaded.ws.reg);
            std::string text = lift_opts.format == "json" ? hn_to_json(rho) + "\n"
                                                          : rho.str(loaded.ws.reg) + "\n";
            emit(lift_opts, out, text);
            return 0;
        }

        if (cmd_desc->parsed()) {
            LoadResult loaded = load(desc_opts);
            ParsedInput in = first_datum(loaded);
            if (in.kind != ParsedInput::Kind::HN)
                throw GeneraError("ParseError", "descend expects an hn datum");
            HNRepDatum rho = *in.hn;
            rho.level = hn_level_from_name(desc_level);
            std::string text;
            if (desc_level == "ds") {
                DiscreteSeriesDatum d = descend_ds(rho, loaded.ws.lifts, loaded.ws.reg);
                text = desc_opts.format == "json"
                           ? rep_to_json(AnyDatum(d), loaded.ws.reg) + "\n"
                           : d.str(loaded.ws.reg) + "\n";
            } else if (desc_level == "tempered") {
                TemperedDatum d = descend_tempered(rho, loaded.ws.lifts, loaded.ws.reg);
                text = desc_opts.format == "json"
                           ? rep_to_json(AnyDatum(d), loaded.ws.reg) + "\n"
                           : d.str(loaded.ws.reg) + "\n";
            } else {
                GenericDescent d = descend_generic(rho, loaded.ws.lifts, loaded.ws.reg);
                if (desc_opts.format == "json") {
                    nlohmann::json j =
                        nlohmann::json::parse(rep_to_json(AnyDatum(d.datum), loaded.ws.reg));
                    j["clauses"] = d.clauses;
                    text = j.dump() + "\n";
                } else {
                    text = d.datum.str(loaded.ws.reg) + "\n";
                    for (size_t i = 0; i < d.clauses.size(); ++i)
                        text += "Sigma_" + std::to_string(i + 1) + ": clause (" + d.clauses[i] +
                                ")\n";
                }
            }
            emit(desc_opts, out, text);
            return 0;
        }

        if (cmd_gamma->parsed()) {
            LoadResult loaded = load(gamma_opts);
            std::string left_text = slurp(gamma_left);
            std::string right_text = slurp(gamma_right);
            loaded.ws.merge_json(left_text);
            loaded.ws.merge_json(right_text);
            loaded.ws.validate();
            ParsedInput left = parse_input(left_text, loaded.ws);
            ParsedInput right = parse_input(right_text, loaded.ws);
            if (left.kind != ParsedInput::Kind::Rep || right.kind != ParsedInput::Kind::HN)
                throw GeneraError("ParseError",
                                  "gamma-check expects --left G-datum and --right hn datum");
            GammaBag lbag = gamma_bag(to_gdatum(*left.rep), loaded.ws.lifts, loaded.ws.reg);
            GammaBag rbag = gamma_bag(*right.hn, loaded.ws.reg);
            bool equal = check_gamma_identity(lbag, rbag);
            std::string text;
            if (gamma_opts.format == "json") {
                nlohmann::json j;
                j["equal"] = equal;
                j["left"] = lbag.str();
                j["right"] = rbag.str();
                text = j.dump() + "\n";
            } else {
                text = std::string(equal ? "equal" : "different") + "\nleft:  " + lbag.str() +
                       "\nright: " + rbag.str() + "\n";
            }
            emit(gamma_opts, out, text);
            return equal ? 0 : 2;
        }

        if (cmd_param->parsed()) {
            LoadResult loaded = load(param_opts);
            ParsedInput in = first_datum(loaded);
            if (in.kind != ParsedInput::Kind::Param)
                throw GeneraError("ParseError", "param expects a parameter datum");
            const WeilParameter& p = *in.param;
            std::string text;
            if (param_action == "classify") {
                ParamClass cls = classify_parameter(p, loaded.ws.lifts, loaded.ws.reg);
                text = param_opts.format == "json"
                           ? std::string("{\"class\":\"") + param_class_name(cls) + "\"}\n"
                           : std::string(param_class_name(cls)) + "\n";
            } else if (param_action == "decompose") {
                DecomposedParameter d = decompose(p, loaded.ws.reg);
                nlohmann::json j;
                j["tempered"] = nlohmann::json::parse(param_to_json(d.tempered_part));
                nlohmann::json pairs = nlohmann::json::array();
                for (const auto& pr : d.pairs)
                    pairs.push_back({{"atom", pr.atom},
                                     {"q", pr.q.str()},
                                     {"w", pr.w},
                                     {"mult", pr.mult}});
                j["pairs"] = pairs;
                text = j.dump() + "\n";
            } else if (param_action == "canon") {
                WeilParameter canon = c_canonicalize(p, loaded.ws.reg);
                text = param_to_json(canon) + "\n";
            } else if (param_action == "to-rep") {
                ParameterRep rep = parameter_to_representation(p, loaded.ws.lifts, loaded.ws.reg);
                nlohmann::json j;
                j["generic"] = rep.generic;
                if (std::holds_alternative<TemperedDatum>(rep.rep))
                    j["rep"] = nlohmann::json::parse(
                        rep_to_json(AnyDatum(std::get<TemperedDatum>(rep.rep)), loaded.ws.reg));
                else
                    j["rep"] = nlohmann::json::parse(
                        rep_to_json(AnyDatum(std::get<LanglandsDatum>(rep.rep)), loaded.ws.reg));
                text = j.dump() + "\n";
            } else {
                throw GeneraError("ParseError", "unknown param action '" + param_action + "'");
            }
            emit(param_opts, out, text);
            return 0;
        }
    } catch (const GeneraError& e) {
        if (e.code() == "ParseError" || e.code().rfind("Unknown", 0) == 0) {
            err << e.what() << "\n";
            return 1;
        }
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

} // namespace genera
