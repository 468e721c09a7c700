#include "qhowe/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhowe/classical.hpp"
#include "qhowe/eta.hpp"
#include "qhowe/howe.hpp"

namespace qhowe {

Scalar parse_scalar_lenient(const std::string& text) {
    try {
        return parse_scalar(text);
    } catch (const ParseError&) {
    }
    // monomial shorthand: [+-] [rat [*]] [q|v [^int]]
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty scalar");
    bool neg = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    Rational coeff(1);
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (pos > start) {
        coeff = Rational(s.substr(start, pos - start));
        coeff.canonicalize();
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    int vexp = 0;
    if (pos < s.size()) {
        char base = s[pos];
        if (base != 'q' && base != 'v') throw ParseError("bad scalar: " + text);
        ++pos;
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            e = std::stoi(s.substr(pos));
            pos = s.size();
        }
        vexp = base == 'q' ? 2 * e : e;
    } else if (pos != s.size()) {
        throw ParseError("bad scalar: " + text);
    }
    GaussianRational c(neg ? -coeff : coeff);
    return Scalar(LaurentPoly::monomial(vexp, c));
}

} // namespace qhowe

namespace qhowe::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string type = "D";
    std::string epsilon;
    std::string module = "W";
    int ell = 1;
    int maxDegree = 4;
    std::string varsigma;
    std::string kappa;
    std::string family; // "so"/"sp", derived from module unless overridden
    bool psiTwist = true;
    bool noPsiTwist = false;
    bool yamane = false;
    bool mutateSerre = false;
    std::string lambda;
    std::string output;
    std::string format = "json";
    std::string configFile;
    int jobs = 1;
};

ModuleConfig make_config(const Options& o) {
    if (o.type != "C" && o.type != "D") throw ConfigError("type must be C or D");
    if (o.epsilon.empty()) throw ConfigError("epsilon is required (string of 0/1, length >= 4)");
    Epsilon eps = Epsilon::parse(o.epsilon);
    ModuleKind kind;
    if (o.module == "W")
        kind = ModuleKind::W;
    else if (o.module == "W2")
        kind = ModuleKind::W2;
    else
        throw ConfigError("module must be W or W2");
    bool twist = o.noPsiTwist ? false : o.psiTwist;
    ModuleConfig cfg(o.type[0], eps, kind, o.ell, twist);
    if (!o.family.empty()) {
        std::string derived = kind == ModuleKind::W ? "so" : "sp";
        if (o.family != derived)
            throw ConfigError("family " + o.family + " incompatible with module " + o.module +
                              " (module W pairs with so/O, W2 with sp/Sp)");
    }
    return cfg;
}

IqgParams make_params(const ModuleConfig& cfg, const Options& o) {
    IqgFamily fam = iqg_family_for(cfg);
    IqgParams p = IqgParams::defaults(fam, cfg.ell);
    if (!o.varsigma.empty())
        p = IqgParams::uniform(fam, cfg.ell, parse_scalar_lenient(o.varsigma),
                               o.kappa.empty() ? Scalar(0) : parse_scalar_lenient(o.kappa));
    else if (!o.kappa.empty())
        p = IqgParams::uniform(fam, cfg.ell,
                               fam == IqgFamily::AI ? -Scalar::q_power(-1) : -Scalar::q_power(1),
                               parse_scalar_lenient(o.kappa));
    return p;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) parts.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return Partition(std::move(parts));
}

ordered_json report_body(const Report& rep) {
    ordered_json body;
    body["suite"] = rep.suite;
    ordered_json cfg = ordered_json::object();
    for (const auto& [k, v] : rep.config) cfg[k] = v;
    body["config"] = cfg;
    ordered_json items = ordered_json::array();
    for (const auto& it : rep.items) {
        ordered_json j;
        j["name"] = it.name;
        j["status"] = status_str(it.status);
        if (it.witness) {
            ordered_json w;
            w["state"] = it.witness->state;
            w["generator"] = it.witness->generator;
            w["residual"] = it.witness->residual;
            w["target"] = it.witness->target;
            j["witness"] = w;
        }
        if (!it.values.empty()) {
            ordered_json v = ordered_json::object();
            for (const auto& [k, val] : it.values) v[k] = val;
            j["values"] = v;
        }
        items.push_back(j);
    }
    body["items"] = items;
    body["summary"] = {{"pass", rep.count(Status::Pass)},
                       {"fail", rep.count(Status::Fail)},
                       {"skip", rep.count(Status::Skip)},
                       {"info", rep.count(Status::Info)}};
    return body;
}

void emit(const Report& rep, const Options& o, std::ostream& out, long elapsed_ms) {
    ordered_json doc;
    doc["schema"] = "qhowe-report/1";
    doc["body"] = report_body(rep);
    doc["meta"] = {{"version", "0.1.0"}, {"elapsed_ms", elapsed_ms}};
    std::string text = doc.dump(2) + "\n";
    if (!o.output.empty()) {
        std::ofstream f(o.output);
        f << text;
    } else {
        out << text;
    }
}

std::string weight_str(const Weight& w) { return w.str(); }

Report decompose_report(const ModuleConfig& cfg, const Options& o,
                        std::vector<DecompRow>& rows_out) {
    rows_out = decompose(cfg, o.maxDegree, o.jobs);
    Report rep;
    rep.suite = "decompose";
    rep.config = {{"type", std::string(1, cfg.X)},      {"epsilon", cfg.eps.str()},
                  {"module", cfg.kind_str()},           {"ell", std::to_string(cfg.ell)},
                  {"maxDegree", std::to_string(o.maxDegree)}, {"group", cfg.group().str()}};
    for (const auto& row : rows_out) {
        ReportItem item;
        item.name = "lambda" + row.lambda.str();
        item.status = row.match ? Status::Pass : Status::Fail;
        item.values = {{"weight", weight_str(row.weight)},
                       {"multiplicity", std::to_string(row.multiplicity)},
                       {"classicalDim", std::to_string(row.classicalDim)},
                       {"match", row.match ? "true" : "false"}};
        if (!row.match)
            item.witness = Witness{"", "lambda" + row.lambda.str(),
                                   "multiplicity " + std::to_string(row.multiplicity) + " != dim " +
                                       std::to_string(row.classicalDim),
                                   ""};
        rep.add(std::move(item));
    }
    return rep;
}

std::string decomp_csv(const std::vector<DecompRow>& rows) {
    std::string out = "lambda;weight;multiplicity;classicalDim;match;endoDim\n";
    for (const auto& r : rows) {
        out += r.lambda.str() + ";" + r.weight.str() + ";" + std::to_string(r.multiplicity) + ";" +
               std::to_string(r.classicalDim) + ";" + (r.match ? "true" : "false") + ";" +
               (r.endoDim ? std::to_string(*r.endoDim) : "") + "\n";
    }
    return out;
}

void load_config_file(Options& o, CLI::App& app) {
    if (o.configFile.empty()) return;
    std::ifstream f(o.configFile);
    if (!f) throw ConfigError("cannot open config file " + o.configFile);
    ordered_json j = ordered_json::parse(f);
    // flags win over file values; keys are the RunConfig field names
    auto given = [&](const char* flag) {
        const CLI::Option* opt = app.get_option_no_throw(flag);
        return opt != nullptr && opt->count() > 0;
    };
    auto set_if_default = [&](const char* key, const char* flag, auto& field, auto getter) {
        if (j.contains(key) && !given(flag)) field = getter(j[key]);
    };
    auto str = [](const ordered_json& v) { return v.get<std::string>(); };
    auto num = [](const ordered_json& v) { return v.get<int>(); };
    set_if_default("type", "--type", o.type, str);
    set_if_default("epsilon", "--epsilon", o.epsilon, str);
    set_if_default("module", "--module", o.module, str);
    set_if_default("ell", "--ell", o.ell, num);
    set_if_default("maxDegree", "--max-degree", o.maxDegree, num);
    set_if_default("varsigma", "--varsigma", o.varsigma, str);
    set_if_default("kappa", "--kappa", o.kappa, str);
    set_if_default("family", "--family", o.family, str);
    set_if_default("lambda", "--lambda", o.lambda, str);
    set_if_default("jobs", "--jobs", o.jobs, num);
    if (j.contains("psiTwist") && !given("--no-psi-twist"))
        o.noPsiTwist = !j["psiTwist"].get<bool>();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verification engine for generalized quantum groups, q-oscillator "
                 "Fock modules and their commuting coideal actions"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", o.type, "algebra type: C or D");
        sub->add_option("--epsilon", o.epsilon, "parity sequence, e.g. 1100");
        sub->add_option("--module", o.module, "module kind: W or W2");
        sub->add_option("--ell", o.ell, "tensor level (number of blocks)");
        sub->add_option("--max-degree", o.maxDegree, "degree cutoff D");
        sub->add_flag("--no-psi-twist", o.noPsiTwist, "disable the psi twist (type D)");
        sub->add_option("--jobs", o.jobs, "worker parallelism bound");
        sub->add_option("--config", o.configFile, "JSON config file (flags win)");
        sub->add_option("--output", o.output, "write the report to a file");
        sub->add_option("--family", o.family, "so or sp (validated against module)");
        return sub;
    };

    CLI::App* relations = add_common(app.add_subcommand("relations", "verify the defining relations"));
    relations->add_flag("--yamane", o.yamane, "also run the sigma-twisted presentation catalog");
    relations->add_flag("--mutate-serre", o.mutateSerre,
                        "negative control: break one quantum Serre sign");
    add_common(app.add_subcommand("polarization", "bilinear-form adjointness and Gram checks"));
    CLI::App* commutant =
        add_common(app.add_subcommand("commutant", "commuting-action checks (type A and coideal)"));
    commutant->add_option("--varsigma", o.varsigma, "override varsigma (e.g. \"-q^-1\", \"q\")");
    commutant->add_option("--kappa", o.kappa, "override kappa");
    CLI::App* decomp = add_common(app.add_subcommand("decompose", "multiplicity table vs classical dimensions"));
    decomp->add_option("--format", o.format, "json or csv");
    add_common(app.add_subcommand("scan", "whole-slice kernel scan per degree"));
    add_common(app.add_subcommand("classical-limit", "specialization at v=1"));
    CLI::App* endo = add_common(app.add_subcommand("endo", "multiplicity-space endomorphism dimension"));
    endo->add_option("--lambda", o.lambda, "partition, comma separated: 1,1");
    endo->add_option("--varsigma", o.varsigma, "override varsigma");
    endo->add_option("--kappa", o.kappa, "override kappa");

    try {
        // CLI11 takes the arguments reversed, without the program name
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "configuration error: " << e.what() << "\n";
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        CLI::App* sub = app.get_subcommands().front();
        load_config_file(o, *sub);
        ModuleConfig cfg = make_config(o);
        Report rep;

        if (sub == relations) {
            std::vector<Relation> catalog = o.mutateSerre ? mutated_catalog(cfg.X, cfg.eps)
                                                          : relation_catalog(cfg.X, cfg.eps);
            if (o.yamane) {
                auto extra = yamane_catalog(cfg);
                catalog.insert(catalog.end(), extra.begin(), extra.end());
            }
            rep = verify_relations(cfg, o.maxDegree, catalog, o.jobs);
        } else if (sub->get_name() == "polarization") {
            rep = eta_adjoint_check(cfg, o.maxDegree, o.jobs);
        } else if (sub->get_name() == "commutant") {
            IqgParams params = make_params(cfg, o);
            rep = validate_params(cfg, params);
            Report comm = commutant_check(cfg, params, o.maxDegree, o.jobs);
            rep.suite = comm.suite;
            rep.config = comm.config;
            Report merged;
            merged.suite = comm.suite;
            merged.config = comm.config;
            merged.merge(rep);
            merged.merge(comm);
            rep = std::move(merged);
        } else if (sub->get_name() == "decompose") {
            std::vector<DecompRow> rows;
            rep = decompose_report(cfg, o, rows);
            if (o.format == "csv") {
                std::string csv = decomp_csv(rows);
                if (!o.output.empty()) {
                    std::ofstream f(o.output);
                    f << csv;
                } else {
                    out << csv;
                }
                return rep.ok() ? 0 : 1;
            }
        } else if (sub->get_name() == "scan") {
            rep.suite = "scan";
            rep.config = {{"type", std::string(1, cfg.X)},
                          {"epsilon", cfg.eps.str()},
                          {"module", cfg.kind_str()},
                          {"ell", std::to_string(cfg.ell)},
                          {"maxDegree", std::to_string(o.maxDegree)}};
            for (int d = 0; d <= o.maxDegree; ++d) {
                ScanResult res = full_kernel_scan(cfg, d);
                ReportItem item;
                item.name = "scan[d=" + std::to_string(d) + "]";
                item.status =
                    (res.totals_match && res.weights_predicted) ? Status::Pass : Status::Fail;
                item.values = {{"total", std::to_string(res.total)},
                               {"expected", std::to_string(res.expected_total)}};
                for (const auto& [w, cnt] : res.by_weight)
                    item.values.push_back({w.str(), std::to_string(cnt)});
                if (item.status == Status::Fail)
                    item.witness = Witness{"", "scan", "kernel total/weights mismatch", ""};
                rep.add(std::move(item));
            }
        } else if (sub->get_name() == "classical-limit") {
            rep = classical_limit_check(cfg, o.maxDegree, o.jobs);
            if (cfg.X == 'D' && !cfg.psiTwist && cfg.ell >= 2) {
                // comparative: the specializable parameter no longer commutes
                IqgParams params = IqgParams::defaults(iqg_family_for(cfg), cfg.ell);
                Report comm = commutant_check(cfg, params, std::min(o.maxDegree, 4), o.jobs);
                ReportItem info;
                info.name = "untwisted_commutant_at_specializable_varsigma";
                info.status = Status::Info;
                info.values = {{"commutes", comm.ok() ? "true" : "false"}};
                rep.add(std::move(info));
            }
        } else if (sub->get_name() == "endo") {
            if (o.lambda.empty()) throw ConfigError("endo requires --lambda");
            Partition lam = parse_partition(o.lambda);
            GroupSpec G = cfg.group();
            if (!in_PG_eps(lam, G, cfg.eps))
                throw ConfigError("lambda " + lam.str() + " is not in P(" + G.str() + ")_eps");
            IqgParams params = make_params(cfg, o);
            rep.suite = "endo";
            rep.config = {{"type", std::string(1, cfg.X)}, {"epsilon", cfg.eps.str()},
                          {"module", cfg.kind_str()},      {"ell", std::to_string(cfg.ell)},
                          {"lambda", lam.str()},           {"group", G.str()}};
            RestrictedModule mod;
            ReportItem stab;
            stab.name = "b_stability" + lam.str();
            try {
                mod = b_stability(cfg, params, lam);
                stab.status = Status::Pass;
                stab.values.push_back({"dim", std::to_string(mod.basis.size())});
            } catch (const StabilityViolation& e) {
                stab.status = Status::Fail;
                stab.witness = Witness{"", "b_stability", e.what(), ""};
            }
            bool stable = stab.status == Status::Pass;
            rep.add(std::move(stab));
            if (stable) {
                int ed = endo_dim(mod);
                Partition use = lam;
                if (G.family == GroupFamily::O && use.conjugate().part(1) > G.ell / 2)
                    use = associated_partition(use, G.ell);
                int expected =
                    (G.family == GroupFamily::O && o_split_case(use, G.ell)) ? 2 : 1;
                ReportItem item;
                item.name = "endo_dim" + lam.str();
                // so_2 is abelian: report without asserting at AI, ell = 2
                bool assertable = !(params.family == IqgFamily::AI && cfg.ell == 2);
                if (!assertable)
                    item.status = Status::Info;
                else
                    item.status = (ed == expected) ? Status::Pass : Status::Fail;
                item.values = {{"endoDim", std::to_string(ed)},
                               {"expected", std::to_string(expected)}};
                rep.add(std::move(item));
            }
        }

        auto t1 = std::chrono::steady_clock::now();
        long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        emit(rep, o, out, ms);
        return rep.ok() ? 0 : 1;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const TruncationUnsafe& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qhowe::cli
