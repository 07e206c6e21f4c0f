#include "gspin/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gspin/elliptic.hpp"
#include "gspin/sweep.hpp"

namespace gspin {

namespace {

std::string family_name(const LeviSpec& levi) {
    return levi.family() == Family::B ? "GSpin_{2n+1}" : "GSpin_{2n}";
}

std::string render_levi(const LeviSpec& levi) {
    std::string out;
    for (int i = 0; i < levi.rank(); ++i) {
        if (i) out += " x ";
        out += "GL_" + std::to_string(levi.block(i));
    }
    out += " x G_" + std::to_string(levi.m());
    return out;
}

std::string render_root_list(const std::vector<ReducedRoot>& roots) {
    if (roots.empty()) return "(empty)";
    std::string out;
    for (size_t k = 0; k < roots.size(); ++k) {
        if (k) out += " ";
        out += render_root(roots[k]);
    }
    return out;
}

std::string render_element_list(const std::vector<WeylElement>& els) {
    if (els.empty()) return "(none)";
    std::string out;
    for (size_t k = 0; k < els.size(); ++k) {
        if (k) out += ", ";
        out += render_element(els[k]);
    }
    return out;
}

std::string render_index_set(const std::vector<int>& idx) {
    std::string out = "{";
    for (size_t k = 0; k < idx.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(idx[k] + 1);
    }
    return out + "}";
}

std::string render_basis(const FixedSpace& space) {
    const auto prim = primitive_basis(space);
    if (prim.empty()) return "(zero space)";
    std::string out;
    for (size_t k = 0; k < prim.size(); ++k) {
        if (k) out += " ";
        out += "(";
        for (size_t c = 0; c < prim[k].size(); ++c) {
            if (c) out += ",";
            out += std::to_string(prim[k][c]);
        }
        out += ")";
    }
    return out;
}

nlohmann::ordered_json basis_json(const FixedSpace& space) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : primitive_basis(space)) rows.push_back(row);
    return rows;
}

void print_instance_header(std::ostream& out, const Instance& inst) {
    out << "group: " << family_name(inst.levi) << " (family "
        << (inst.levi.family() == Family::B ? "B" : "D") << ", n=" << inst.levi.n() << ")\n";
    out << "levi: " << render_levi(inst.levi) << "\n";
    const InertiaDatum& s = inst.sigma;
    out << "sigma: [";
    for (size_t i = 0; i < s.assign.size(); ++i) {
        if (i) out << ", ";
        out << s.labels[static_cast<size_t>(s.assign[i])];
    }
    out << "]";
    std::string duals, reds;
    for (int l = 0; l < s.label_count(); ++l) {
        if (s.dual[static_cast<size_t>(l)] > l)
            duals += " " + s.labels[static_cast<size_t>(l)] + "~" +
                     s.labels[static_cast<size_t>(s.dual[static_cast<size_t>(l)])];
        if (s.reducible[static_cast<size_t>(l)]) reds += " " + s.labels[static_cast<size_t>(l)];
    }
    if (!duals.empty()) out << "  dual pairs:" << duals;
    if (!reds.empty()) out << "  reducible:" << reds;
    if (inst.levi.family() == Family::D && inst.levi.m() > 0)
        out << "  c_n tau ~ tau: " << (s.cn_fixes_tau ? "yes" : "no");
    out << "\n";
}

struct CommandError {
    int code;
    std::string message;
};

Instance load_instance(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(path);
        if (!file) throw CommandError{exit_invalid_input, "cannot open " + path};
        std::stringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    try {
        return parse_instance_text(text);
    } catch (const std::invalid_argument& e) {
        throw CommandError{exit_invalid_input, e.what()};
    }
}

Instance load_valid_instance(const std::string& path, std::istream& in) {
    Instance inst = load_instance(path, in);
    const auto violations = validate(inst);
    if (!violations.empty()) {
        std::string msg = "instance is inconsistent:";
        for (const auto& v : violations) msg += "\n  - " + v;
        throw CommandError{exit_invalid_input, msg};
    }
    return inst;
}

bool is_d_case_one(const Instance& inst) {
    return inst.levi.family() == Family::D &&
           (inst.levi.m() == 0 || !inst.sigma.cn_fixes_tau);
}

int cmd_rgroup(const std::string& path, bool oracle, const std::string& format, std::istream& in,
               std::ostream& out) {
    const Instance inst = load_valid_instance(path, in);
    const auto w_sigma = stabilizer(inst.levi, inst.sigma);
    const auto dp = delta_prime(inst.levi, inst.sigma);
    const RGroup cf = r_group_closed_form(inst.levi, inst.sigma);
    bool agree = true;
    if (oracle) agree = r_group_bruteforce(inst.levi, inst.sigma).elements == cf.elements;

    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = "gspin-rgroup/1";
        j["instance"] = instance_to_json(inst);
        j["w_sigma_order"] = w_sigma.size();
        nlohmann::ordered_json roots = nlohmann::ordered_json::array();
        for (const ReducedRoot& root : dp) roots.push_back(render_root(root));
        j["delta_prime"] = roots;
        if (is_d_case_one(inst)) {
            j["omega1"] = cf.omega1;
            j["omega2"] = cf.omega2;
        } else {
            j["omega"] = cf.omega;
        }
        j["rank"] = cf.rank;
        nlohmann::ordered_json gens = nlohmann::ordered_json::array();
        for (const WeylElement& g : cf.generators) gens.push_back(render_element(g));
        j["generators"] = gens;
        nlohmann::ordered_json els = nlohmann::ordered_json::array();
        for (const WeylElement& e : cf.elements) els.push_back(render_element(e));
        j["elements"] = els;
        if (oracle) j["oracle_agrees"] = agree;
        out << j.dump(2) << "\n";
    } else {
        print_instance_header(out, inst);
        out << "W(sigma) order: " << w_sigma.size() << "\n";
        out << "Delta': " << render_root_list(dp) << "\n";
        if (is_d_case_one(inst)) {
            out << "Omega_1: " << render_index_set(cf.omega1)
                << "  Omega_2: " << render_index_set(cf.omega2) << "\n";
        } else {
            out << "Omega: " << render_index_set(cf.omega) << "\n";
        }
        out << "R(sigma) = Z_2^" << cf.rank << "\n";
        out << "generators: " << render_element_list(cf.generators) << "\n";
        out << "elements: " << render_element_list(cf.elements) << "\n";
        if (oracle) out << "oracle: " << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? exit_ok : exit_property_failure;
}

int cmd_elliptic(const std::string& path, const std::string& format, std::istream& in,
                 std::ostream& out) {
    const Instance inst = load_valid_instance(path, in);
    const EllipticClass ec = classify_elliptic(inst.levi, inst.sigma);
    std::vector<SignChar> table;
    std::string c0;
    if (ec.has_elliptic) {
        table = sign_characters(inst.levi, ec.r_group);
        c0 = render_element(c0_element(inst.levi, ec.r_group));
    }

    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = "gspin-elliptic/1";
        j["instance"] = instance_to_json(inst);
        j["rank"] = ec.r_group.rank;
        j["has_elliptic"] = ec.has_elliptic;
        j["all_components_elliptic"] = ec.all_components_elliptic;
        j["irreducibly_induced"] = ec.irreducibly_induced;
        if (ec.elliptic_witness) j["elliptic_witness"] = render_element(*ec.elliptic_witness);
        if (ec.inducing_witness) j["inducing_witness"] = render_element(*ec.inducing_witness);
        j["a_r_basis"] = basis_json(ec.a_r);
        if (ec.has_elliptic) {
            j["c0"] = c0;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const SignChar& chi : table)
                rows.push_back({{"values", chi.values}, {"epsilon", chi.epsilon}});
            j["sign_table"] = rows;
        }
        out << j.dump(2) << "\n";
    } else {
        print_instance_header(out, inst);
        out << "R(sigma) = Z_2^" << ec.r_group.rank
            << "  generators: " << render_element_list(ec.r_group.generators) << "\n";
        out << "elliptic constituents: " << (ec.has_elliptic ? "yes" : "no") << "\n";
        if (ec.has_elliptic)
            out << "all components elliptic: yes  witness: "
                << render_element(*ec.elliptic_witness) << "\n";
        out << "a_R basis: " << render_basis(ec.a_r) << "\n";
        out << "irreducibly induced from elliptic: " << (ec.irreducibly_induced ? "yes" : "no");
        if (ec.inducing_witness) out << " (witness " << render_element(*ec.inducing_witness) << ")";
        out << "\n";
        if (ec.has_elliptic) {
            out << "C_0 = " << c0 << "\n";
            out << "sign table (Theta^e_{pi_kappa} = epsilon(kappa) Theta^e_{pi_1}):\n";
            std::vector<std::string> heads;
            for (const WeylElement& g : ec.r_group.generators)
                heads.push_back("kappa(" + render_element(g) + ")");
            out << " ";
            for (const std::string& h : heads) out << " " << h;
            out << "  epsilon\n";
            for (const SignChar& chi : table) {
                out << " ";
                for (size_t k = 0; k < chi.values.size(); ++k) {
                    const std::string cell = chi.values[k] > 0 ? "+1" : "-1";
                    out << " " << std::string(heads[k].size() - cell.size(), ' ') << cell;
                }
                out << "  " << (chi.epsilon > 0 ? "     +1" : "     -1") << "\n";
            }
        }
    }
    return exit_ok;
}

// Family D parameter support is limited to the Siegel shape: one GL block,
// m = 0, supercuspidal (a = 1).
bool siegel_shape(const Instance& inst) {
    return inst.levi.rank() == 1 && inst.levi.m() == 0 && inst.params &&
           inst.params->blocks[0].a == 1;
}

int cmd_arthur(const std::string& path, const std::string& format, std::istream& in,
               std::ostream& out) {
    const Instance inst = load_valid_instance(path, in);
    if (!inst.params)
        throw CommandError{exit_invalid_input, "arthur needs an instance with params"};
    const ParamSide& ps = *inst.params;
    if (inst.levi.family() == Family::D && !siegel_shape(inst))
        throw CommandError{exit_unsupported,
                           "unsupported: the parameter side of family D is available for the "
                           "Siegel Levi only (one supercuspidal GL block, m = 0)"};

    nlohmann::ordered_json j;
    std::ostringstream text;
    print_instance_header(text, inst);
    j["schema"] = "gspin-arthur/1";
    j["instance"] = instance_to_json(inst);
    // The reducibility-point dictionary behind the b-tags presumes generic
    // inducing data; the result is conditional on that.
    j["assumptions"] = {"generic inducing data (b-point reducibility dictionary)"};
    text << "assumes: generic inducing data (b-point reducibility dictionary)\n";

    std::optional<CentralizerType> siegel;
    if (siegel_shape(inst))
        siegel = siegel_centralizer(ps.blocks[0].rho, inst.levi.family(), inst.levi.n());

    bool match = true;
    if (inst.levi.family() == Family::B) {
        const ArthurRGroup ar = arthur_r_group_general(inst.levi, ps.blocks, ps.tau);
        const RGroup ks =
            r_group_closed_form(inst.levi, derive_inertia(inst.levi, ps.blocks, ps.tau));
        match = match_check(inst.levi, ps.blocks, ps.tau);

        nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
        for (size_t i = 0; i < ps.blocks.size(); ++i) {
            const SegmentParam& seg = ps.blocks[i];
            nlohmann::ordered_json bj;
            bj["segment"] = seg.rho.id + "@" + std::to_string(seg.a);
            text << "block " << i + 1 << ": delta(" << seg.rho.id << "," << seg.a << ")";
            if (seg.rho.selfdual == SelfDualType::none) {
                bj["centralizer"] = render_centralizer({CentralizerType::Kind::Torus, 2, false});
                bj["contribution"] = "1";
                text << "  not self-dual  centralizer " << bj["centralizer"].get<std::string>()
                     << "  contribution 1\n";
            } else {
                const int mult = ps.tau.contains(seg.rho.id, seg.a) ? 3 : 2;
                const FormType sub = segment_factor_type(seg) == FactorTarget::GSp
                                         ? FormType::symplectic
                                         : FormType::symmetric;
                const CentralizerType c =
                    multiplicity_centralizer(FormType::symplectic, sub, mult);
                const ArthurOrder order = arthur_r_group_maximal(seg, ps.tau);
                bj["factor_type"] =
                    segment_factor_type(seg) == FactorTarget::GSp ? "GSp" : "GO";
                bj["multiplicity"] = mult;
                bj["centralizer"] = render_centralizer(c);
                bj["contribution"] = order == ArthurOrder::z2 ? "Z_2" : "1";
                text << "  factor type " << bj["factor_type"].get<std::string>()
                     << "  multiplicity " << mult << "  centralizer "
                     << bj["centralizer"].get<std::string>() << "  contribution "
                     << bj["contribution"].get<std::string>() << "\n";
            }
            blocks.push_back(bj);
        }
        j["blocks"] = blocks;
        if (siegel) {
            j["siegel_centralizer"] = render_centralizer(*siegel);
            text << "S_phi = " << render_centralizer(*siegel) << "\n";
        }
        j["w_phi_sigma_order"] = ar.stabilizer.size();
        j["w0_generators"] = nlohmann::ordered_json::array();
        for (const WeylElement& g : ar.reflection_gens)
            j["w0_generators"].push_back(render_element(g));
        j["rank"] = ar.rank;
        j["representatives"] = nlohmann::ordered_json::array();
        for (const WeylElement& w : ar.reps) j["representatives"].push_back(render_element(w));
        j["ks_rank"] = ks.rank;
        j["match"] = match;
        text << "W(phi,sigma) order: " << ar.stabilizer.size() << "\n";
        text << "W0 generators: " << render_element_list(ar.reflection_gens) << "\n";
        text << "R(phi,sigma) = Z_2^" << ar.rank << "\n";
        text << "representatives: " << render_element_list(ar.reps) << "\n";
        text << "R(sigma) = Z_2^" << ks.rank
             << "  generators: " << render_element_list(ks.generators) << "\n";
        text << "match: " << (match ? "yes" : "NO") << "\n";
    } else {
        // Family D Siegel: compare the component group with the Knapp-Stein
        // rank directly.
        const RGroup ks = r_group_closed_form(inst.levi, inst.sigma);
        match = (siegel->z2 ? 1 : 0) == ks.rank;
        j["siegel_centralizer"] = render_centralizer(*siegel);
        j["component_group"] = siegel->z2 ? "Z_2" : "1";
        j["ks_rank"] = ks.rank;
        j["match"] = match;
        text << "S_phi = " << render_centralizer(*siegel) << "\n";
        text << "component group: " << (siegel->z2 ? "Z_2" : "1") << "\n";
        text << "R(sigma) = Z_2^" << ks.rank << "\n";
        text << "match: " << (match ? "yes" : "NO") << "\n";
    }
    if (format == "json")
        out << j.dump(2) << "\n";
    else
        out << text.str();
    return match ? exit_ok : exit_property_failure;
}

int cmd_validate(const std::string& path, const std::string& format, std::istream& in,
                 std::ostream& out) {
    const Instance inst = load_instance(path, in);
    const auto violations = validate(inst);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = "gspin-validate/1";
        j["instance"] = instance_to_json(inst);
        j["violations"] = violations;
        out << j.dump(2) << "\n";
    } else {
        if (violations.empty()) {
            out << "valid\n";
        } else {
            out << "invalid:\n";
            for (const auto& v : violations) out << "  - " << v << "\n";
        }
    }
    return violations.empty() ? exit_ok : exit_invalid_input;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& format, std::ostream& out) {
    const SweepReport report = run_sweep(cfg);
    if (format == "json") {
        out << report_to_json(cfg, report).dump(2) << "\n";
    } else {
        out << "instances: " << report.total << "\n";
        out << "failures: " << report.failures.size() << "\n";
        for (const Failure& f : report.failures) {
            out << "FAIL [" << f.check << "] expected " << f.expected << ", got " << f.got
                << "\n  on " << instance_to_json(f.instance).dump() << "\n";
        }
        out << "elapsed_ms: " << report.elapsed.count() << "\n";
        out << (report.passed() ? "PASS" : "FAIL") << "\n";
    }
    return report.passed() ? exit_ok : exit_property_failure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Knapp-Stein R-groups, elliptic tempered classification and parameter-side "
                 "R-groups for GSpin groups",
                 "gspin"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string format = "table";
    bool oracle = false;

    auto add_common = [&](CLI::App* cmd, bool with_oracle) {
        cmd->add_option("file", file, "instance file (JSON), or - for standard input");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
        if (with_oracle)
            cmd->add_flag("--oracle", oracle, "cross-check the closed form against brute force");
    };

    CLI::App* rgroup = app.add_subcommand("rgroup", "compute W(sigma), Delta' and R(sigma)");
    add_common(rgroup, true);
    CLI::App* elliptic = app.add_subcommand("elliptic", "elliptic classification and sign table");
    add_common(elliptic, false);
    CLI::App* arthur = app.add_subcommand("arthur", "parameter-side R-group and match verdict");
    add_common(arthur, false);
    CLI::App* validate_cmd = app.add_subcommand("validate", "check instance consistency");
    add_common(validate_cmd, false);

    SweepConfig cfg;
    std::string family = "B";
    std::vector<std::string> check_names;
    std::optional<std::uint64_t> seed;
    std::optional<int> count;
    CLI::App* sweep = app.add_subcommand("sweep", "run property sweeps over instance streams");
    sweep->add_option("--family", family, "ambient family")->check(CLI::IsMember({"B", "D"}));
    sweep->add_option("--max-r", cfg.max_r, "largest number of GL blocks")
        ->check(CLI::Range(1, 5));
    sweep->add_option("--max-block", cfg.max_block, "largest GL block size")
        ->check(CLI::Range(1, 4));
    sweep->add_option("--alphabet", cfg.alphabet, "label alphabet size")->check(CLI::Range(1, 8));
    sweep->add_option("--max-dim", cfg.max_dim, "largest cuspidal dimension")
        ->check(CLI::Range(1, 3));
    sweep->add_option("--max-a", cfg.max_a, "largest Steinberg size")->check(CLI::Range(1, 4));
    sweep->add_option("--max-jordan", cfg.max_jordan, "largest Jordan set")
        ->check(CLI::Range(0, 3));
    sweep->add_option("--seed", seed, "seed for random instance sampling");
    sweep->add_option("--count", count, "number of random instances (0 = empty report)")
        ->check(CLI::Range(0, 1000000));
    sweep->add_option("--checks", check_names, "subset of checks to run")->delimiter(',');
    sweep->add_option("--threads", cfg.threads, "parallelism degree")->check(CLI::Range(1, 256));
    sweep->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_invalid_input;
    }

    try {
        if (rgroup->parsed()) return cmd_rgroup(file, oracle, format, in, out);
        if (elliptic->parsed()) return cmd_elliptic(file, format, in, out);
        if (arthur->parsed()) return cmd_arthur(file, format, in, out);
        if (validate_cmd->parsed()) return cmd_validate(file, format, in, out);
        if (sweep->parsed()) {
            cfg.family = family == "B" ? Family::B : Family::D;
            cfg.seed = seed;
            cfg.count = count;
            for (const std::string& name : check_names) {
                auto c = parse_check(name);
                if (!c) {
                    err << "unknown check: " << name << "\n";
                    return exit_invalid_input;
                }
                cfg.checks.push_back(*c);
            }
            return cmd_sweep(cfg, format, out);
        }
    } catch (const CommandError& e) {
        err << e.message << "\n";
        return e.code;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return exit_invalid_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_property_failure;
    }
    return exit_invalid_input;
}

}  // namespace gspin
