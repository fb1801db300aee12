#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chow/bounds.hpp"
#include "chow/io.hpp"

namespace {

using namespace chow;

int exit_code_for(Errc c) {
    switch (c) {
    case Errc::parse_error:
    case Errc::io_error:
        return 2;
    case Errc::invalid_argument:
    case Errc::missing_input:
    case Errc::dimension_mismatch:
    case Errc::not_multihomogeneous:
    case Errc::space_mismatch:
    case Errc::zero_input:
    case Errc::instance_too_large:
        return 3;
    case Errc::deadline_exceeded:
        return 4;
    case Errc::not_principal:
        return 5;
    case Errc::unstable_count:
        return 6;
    }
    return 1;
}

struct CommonOpts {
    std::string input;
    std::string input2;
    std::string output;
    uint64_t seed = kDefaultSeed;
    double deadline_secs = 60.0;
    int max_degree = 60;
    int max_basis = 5000;
    long digit_cap = 1000000;
    bool validate_only = false;

    Deadline deadline() const {
        Deadline dl;
        dl.wall_budget = std::chrono::milliseconds(static_cast<long>(deadline_secs * 1000));
        dl.max_total_degree = max_degree;
        dl.max_basis_size = max_basis;
        return dl;
    }
};

struct BoundsOpts {
    long n = 1;
    long rn = 1;
    std::string volK, volRK, volHrK, eps, KXn, KYn, volKY;
    long N = -1;
    std::string dprime;
    std::string M, gamma;
    std::string which_case = "pluricanonical";
    std::string inters;
};

void emit(const CommonOpts& common, const std::string& text) {
    if (common.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(common.output);
        if (!out) fail(Errc::io_error, "cannot open output file: " + common.output);
        out << text;
    }
}

GeometryInputs collect_geometry(const BoundsOpts& b) {
    GeometryInputs g;
    g.n = b.n;
    g.r_n = b.rn;
    if (!b.volK.empty()) g.vol_K = parse_rational(b.volK);
    if (!b.volRK.empty()) g.vol_rK = parse_rational(b.volRK);
    if (!b.volHrK.empty()) g.vol_H_rnK = parse_rational(b.volHrK);
    if (!b.eps.empty()) g.eps = parse_rational(b.eps);
    if (b.N >= 0) g.N = b.N;
    if (!b.dprime.empty()) g.d_prime = Integer(b.dprime);
    if (!b.inters.empty()) {
        std::vector<Rational> table;
        std::stringstream ss(b.inters);
        std::string tok;
        while (std::getline(ss, tok, ',')) table.push_back(parse_rational(tok));
        g.intersection_numbers = std::move(table);
    }
    return g;
}

GraphBoundCase parse_case(const std::string& name) {
    if (name == "general") return GraphBoundCase::general;
    if (name == "nef") return GraphBoundCase::nef;
    if (name == "pluricanonical") return GraphBoundCase::pluricanonical;
    fail(Errc::invalid_argument, "unknown case '" + name + "' (general|nef|pluricanonical)");
}

// Dry-run structural checks; diagnostics are data, not errors.
std::vector<std::string> validate_job(const std::string& subcommand, const CommonOpts& common,
                                      const BoundsOpts& bopts, int power_d) {
    std::vector<std::string> diags;
    auto check_file = [&](const std::string& path, const std::string& role) -> std::optional<InputFile> {
        if (path.empty()) {
            diags.push_back("missing " + role + " file");
            return std::nullopt;
        }
        try {
            return parse_input_path(path);
        } catch (const Error& e) {
            diags.push_back(role + ": " + e.what());
            return std::nullopt;
        }
    };

    if (subcommand == "chow") {
        if (auto f = check_file(common.input, "input")) {
            try {
                to_cycle(*f);
            } catch (const Error& e) {
                diags.push_back(e.what());
            }
        }
    } else if (subcommand == "pushforward" || subcommand == "degree2") {
        if (auto f = check_file(common.input, "input")) {
            try {
                GraphCycle g = to_graph(*f);
                (void)g;
            } catch (const Error& e) {
                diags.push_back(e.what());
            }
            if (f->components.size() == 1) {
                int idx = 0;
                for (const auto& gen : f->components[0].gens) {
                    ++idx;
                    if (!gen.is_multihomogeneous())
                        diags.push_back("generator " + std::to_string(idx) + " not bihomogeneous");
                }
            }
        }
    } else if (subcommand == "power-test") {
        if (auto f = check_file(common.input, "input")) {
            try {
                IdealGens gens = to_ideal(*f);
                if (gens.gens.size() != 1) {
                    diags.push_back("power-test input needs exactly one polynomial");
                } else if (power_d >= 1 && gens.gens[0].is_multihomogeneous()) {
                    for (int d : gens.gens[0].multidegree())
                        if (d % power_d != 0) {
                            diags.push_back("degree " + std::to_string(d) +
                                            " not divisible by d = " + std::to_string(power_d));
                            break;
                        }
                }
            } catch (const Error& e) {
                diags.push_back(e.what());
            }
        }
    } else if (subcommand == "eliminate") {
        check_file(common.input, "input");
    } else if (subcommand == "compose") {
        check_file(common.input, "input");
        check_file(common.input2, "second input");
    } else if (subcommand == "bounds") {
        if (bopts.volK.empty() && bopts.volRK.empty())
            diags.push_back("bounds needs --volK or --volRK");
        if (bopts.which_case == "nef" && bopts.inters.empty())
            diags.push_back("nef case needs --inters with n+1 intersection numbers");
        if (bopts.which_case == "general" && bopts.volHrK.empty())
            diags.push_back("general case needs --volHrK");
        if (!bopts.eps.empty() && bopts.volK.empty())
            diags.push_back("eps bound needs --volK");
    }
    return diags;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chow forms, graph pushforwards and effective finiteness bounds"};
    app.require_subcommand(1);

    CommonOpts common;
    BoundsOpts bopts;
    int power_d = 2;
    std::vector<std::string> drop_blocks;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", common.input, "input file");
        sub->add_option("--output", common.output, "output file (stdout when omitted)");
        sub->add_option("--seed", common.seed, "randomness seed (default 271828)");
        sub->add_option("--deadline-secs", common.deadline_secs, "wall budget in seconds");
        sub->add_option("--max-degree", common.max_degree, "max total degree during elimination");
        sub->add_option("--max-basis", common.max_basis, "max basis size during elimination");
        sub->add_option("--digit-cap", common.digit_cap, "digits kept exact in bound reports");
        sub->add_flag("--validate", common.validate_only, "dry-run structural checks only");
    };

    CLI::App* chow_cmd = app.add_subcommand("chow", "Chow form of a cycle file");
    add_common(chow_cmd);
    CLI::App* push_cmd = app.add_subcommand("pushforward", "pushforward Chow form of a graph");
    add_common(push_cmd);
    CLI::App* power_cmd = app.add_subcommand("power-test", "d-th power test for a polynomial");
    add_common(power_cmd);
    power_cmd->add_option("--d", power_d, "power to test");
    CLI::App* elim_cmd = app.add_subcommand("eliminate", "eliminate blocks from an ideal");
    add_common(elim_cmd);
    elim_cmd->add_option("--drop", drop_blocks, "blocks to eliminate")->delimiter(',');
    CLI::App* compose_cmd = app.add_subcommand("compose", "compose two correspondences");
    add_common(compose_cmd);
    compose_cmd->add_option("--input2", common.input2, "second graph file");
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "effective bound report");
    add_common(bounds_cmd);
    bounds_cmd->add_option("--n", bopts.n, "dimension n");
    bounds_cmd->add_option("--rn", bopts.rn, "pluricanonical exponent r_n");
    bounds_cmd->add_option("--volK", bopts.volK, "vol(K_X) as a rational");
    bounds_cmd->add_option("--volRK", bopts.volRK, "vol(r_n K_X) as a rational");
    bounds_cmd->add_option("--volHrK", bopts.volHrK, "vol(H + r_n K_X) for the general case");
    bounds_cmd->add_option("--eps", bopts.eps, "eps_X lower volume bound");
    bounds_cmd->add_option("--KXn", bopts.KXn, "K_X^n for the nef map bound");
    bounds_cmd->add_option("--KYn", bopts.KYn, "K_Y^n for the nef map bound");
    bounds_cmd->add_option("--volKY", bopts.volKY, "vol(K_Y) for the big map bound");
    bounds_cmd->add_option("--N", bopts.N, "ambient dimension of X'");
    bounds_cmd->add_option("--dprime", bopts.dprime, "degree bound d' for equations of X'");
    bounds_cmd->add_option("--M", bopts.M, "target ambient dimension M (default M_V)");
    bounds_cmd->add_option("--gamma", bopts.gamma, "graph degree bound (default pluricanonical)");
    bounds_cmd->add_option("--case", bopts.which_case, "graph bound case");
    bounds_cmd->add_option("--inters", bopts.inters, "H^i.K^(n-i) table, comma separated");
    CLI::App* deg2_cmd = app.add_subcommand("degree2", "second-projection degree of a graph");
    add_common(deg2_cmd);

    CLI11_PARSE(app, argc, argv);
    std::string sub = app.get_subcommands().front()->get_name();

    try {
        if (common.validate_only) {
            OutputDoc doc;
            doc.add("status", std::string("validated"));
            doc.add("subcommand", sub);
            auto diags = validate_job(sub, common, bopts, power_d);
            doc.add("diagnostics", Integer(static_cast<long>(diags.size())));
            for (size_t i = 0; i < diags.size(); ++i)
                doc.add("diagnostic." + std::to_string(i), diags[i]);
            emit(common, doc.str());
            return 0;
        }

        Deadline dl = common.deadline();
        OutputDoc doc;
        doc.add("status", std::string("ok"));
        doc.add("subcommand", sub);

        if (sub == "chow") {
            Cycle cycle = to_cycle(parse_input_path(common.input));
            ChowForm f = chow_form_cycle(cycle, dl);
            doc.add("n", Integer(f.n));
            doc.add("r", Integer(f.r));
            doc.add("k", Integer(f.k));
            doc.add_blocks("blocks", *f.form.space());
            doc.add_poly("chow_form", f.form);
        } else if (sub == "pushforward") {
            GraphCycle g = to_graph(parse_input_path(common.input));
            PushforwardResult res = pushforward_chow(g, dl, common.seed);
            doc.add("k", Integer(res.k));
            doc.add("d", Integer(res.d));
            doc.add_blocks("blocks", *res.chow.form.space());
            doc.add_poly("root", res.root.form);
            doc.add_poly("chow_form", res.chow.form);
            if (!res.note.empty()) doc.add("note", res.note);
        } else if (sub == "power-test") {
            IdealGens gens = to_ideal(parse_input_path(common.input));
            if (gens.gens.size() != 1)
                fail(Errc::invalid_argument, "power-test input needs exactly one polynomial");
            auto root = dth_root(gens.gens[0], power_d, MonomialOrder::lex(gens.space));
            doc.add("d", Integer(power_d));
            doc.add("power", std::string(root ? "yes" : "no"));
            if (root) doc.add_poly("root", *root);
        } else if (sub == "eliminate") {
            IdealGens gens = to_ideal(parse_input_path(common.input));
            if (drop_blocks.empty()) fail(Errc::missing_input, "eliminate needs --drop");
            IdealGens out = eliminate(gens, drop_blocks, dl);
            doc.add_blocks("blocks", *out.space);
            doc.add("generators", Integer(static_cast<long>(out.gens.size())));
            for (size_t i = 0; i < out.gens.size(); ++i)
                doc.add_poly("generator." + std::to_string(i), out.gens[i]);
        } else if (sub == "compose") {
            GraphCycle h = to_graph(parse_input_path(common.input));
            GraphCycle g = to_graph(parse_input_path(common.input2));
            IdealGens out = compose(h, g, dl);
            doc.add_blocks("blocks", *out.space);
            doc.add("generators", Integer(static_cast<long>(out.gens.size())));
            for (size_t i = 0; i < out.gens.size(); ++i)
                doc.add_poly("generator." + std::to_string(i), out.gens[i]);
        } else if (sub == "degree2") {
            GraphCycle g = to_graph(parse_input_path(common.input));
            int k = second_degree(g, dl, common.seed);
            doc.add("k", Integer(k));
        } else if (sub == "bounds") {
            GeometryInputs g = collect_geometry(bopts);
            BigCfg cfg;
            cfg.digit_cap = static_cast<size_t>(common.digit_cap);
            std::optional<Integer> M, gamma;
            if (!bopts.M.empty()) M = Integer(bopts.M);
            if (!bopts.gamma.empty()) gamma = Integer(bopts.gamma);
            if (!gamma && bopts.which_case != "pluricanonical")
                gamma = graph_degree_bound(g, parse_case(bopts.which_case));
            BoundReport rep = total_bound(g, M, gamma, cfg);
            doc.add("n", Integer(g.n));
            doc.add("r_n", Integer(g.r_n));
            std::istringstream is(rep.to_document());
            std::string line;
            while (std::getline(is, line)) {
                auto eq = line.find(" = ");
                if (eq != std::string::npos) doc.add(line.substr(0, eq), line.substr(eq + 3));
            }
            MapDegreeTargets targets;
            if (!bopts.KXn.empty()) targets.KX_n = parse_rational(bopts.KXn);
            if (!bopts.KYn.empty()) targets.KY_n = parse_rational(bopts.KYn);
            if (!bopts.volKY.empty()) targets.vol_KY = parse_rational(bopts.volKY);
            if (targets.KX_n || targets.vol_KY || g.eps) {
                MapDegreeBounds md = map_degree_bounds(g, targets);
                if (md.nef_case) doc.add("map_degree.nef", *md.nef_case);
                if (md.big_case) doc.add("map_degree.big", *md.big_case);
                if (md.eps_case) doc.add("map_degree.eps", *md.eps_case);
            }
        }

        emit(common, doc.str());
        return 0;
    } catch (const Error& e) {
        OutputDoc doc;
        doc.add("status", std::string("error"));
        doc.add("subcommand", sub);
        doc.add("error.code", std::string(errc_name(e.code())));
        doc.add("error.exit", Integer(exit_code_for(e.code())));
        doc.add("error.message", std::string(e.what()));
        try {
            emit(common, doc.str());
        } catch (...) {
        }
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
