#include "lantern/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "lantern/json_io.hpp"
#include "lantern/parse.hpp"

namespace lantern {

namespace {

std::vector<long> parse_csv(const std::string& text) {
    std::vector<long> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stol(item));
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

ModelDiagram model_from_flags(int n, const std::string& p_csv, const std::string& q_csv) {
    return make_model(n, parse_csv(p_csv), parse_csv(q_csv));
}

int cmd_factorize(int n, const std::string& word_text, std::ostream& out) {
    TwistWord w = parse_twist_word(word_text, n);
    RewriteTrace trace;
    Factorization f = factorize(w, &trace);
    bool verified = oracle_equal(reassemble(f), w);
    json j = to_json(f);
    j["oracle_verified"] = verified;
    j["lantern_steps"] = trace.lantern_steps;
    out << j.dump(2) << "\n";
    return verified ? 0 : 1;
}

int cmd_verify(int n, const std::string& lhs, const std::string& rhs, std::ostream& out) {
    bool eq = oracle_equal(parse_twist_word(lhs, n), parse_twist_word(rhs, n));
    out << json{{"equal", eq}}.dump(2) << "\n";
    return eq ? 0 : 1;
}

int cmd_model(const ModelDiagram& m, const std::string& emit, std::ostream& out) {
    if (emit == "matrix") {
        out << to_json(linking_matrix(m)).dump(2) << "\n";
    } else if (emit == "graph") {
        out << to_dot(graph_from_model(m));
    } else {
        Int d = exact_det(linking_matrix(m).matrix);
        json j = to_json(m);
        j["abs_det"] = int_to_json(d >= 0 ? d : Int(-d));
        j["consistency"] = to_json(consistency_check(m));
        out << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_lspace_cert(const ModelDiagram& m, std::ostream& out) {
    LSpaceCertificate cert = lspace_certificate(m);
    out << to_json(cert).dump(2) << "\n";
    return cert.success ? 0 : 1;
}

int cmd_lspace_grid(int nmax, long pmax, long qmax, int jobs, std::ostream& out) {
    std::vector<ModelDiagram> instances;
    std::vector<std::vector<long>> stack;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<long> params(2 * n - 1, 1);
        for (;;) {
            std::vector<long> p(params.begin(), params.begin() + (n - 1));
            std::vector<long> q(params.begin() + (n - 1), params.end());
            instances.push_back(make_model(n, p, q));
            std::size_t i = 0;
            for (; i < params.size(); ++i) {
                long cap = i < static_cast<std::size_t>(n - 1) ? pmax : qmax;
                if (params[i] < cap) {
                    ++params[i];
                    break;
                }
                params[i] = 1;
            }
            if (i == params.size())
                break;
        }
    }

    std::vector<bool> ok(instances.size(), false);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i)
            ok[i] = lspace_certificate(instances[i]).success;
    } else {
        std::vector<std::future<void>> workers;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= instances.size())
                        return;
                    ok[i] = lspace_certificate(instances[i]).success;
                }
            }));
        for (auto& w : workers)
            w.get();
    }

    json rows = json::array();
    bool all = true;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        rows.push_back(json{{"model", to_json(instances[i])}, {"success", ok[i]}});
        all = all && ok[i];
    }
    out << json{{"instances", rows.size()}, {"all_success", all}, {"results", rows}}.dump(2)
        << "\n";
    return all ? 0 : 1;
}

int cmd_invariants(const std::string& matrix_file, std::ostream& out) {
    FramedDiagram d = diagram_from_json(load_json(matrix_file));
    FormInvariants inv = form_invariants(d);
    json j = to_json(inv);
    if (inv.b2_zero == 0 && (inv.b2_plus == 0 || inv.b2_minus == 0) && !d.matrix.empty())
        j["diagonalizable"] = is_diagonalizable_over_integers(d);
    else
        j["diagonalizable"] = nullptr;
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_d3(const std::string& matrix_file, const std::string& rot_csv, long chi,
           long sigma, std::ostream& out) {
    FillingData f;
    f.matrix = matrix_from_json(load_json(matrix_file));
    for (long v : parse_csv(rot_csv))
        f.rot.push_back(Int(v));
    f.chi_x0 = chi;
    f.sigma = sigma;
    json j{{"c1_squared", rat_to_json(c1_squared(f.matrix, f.rot))},
           {"d3", rat_to_json(d3_from_filling(f))}};
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_obstruct(const std::string& hyp_file, std::ostream& out) {
    ObstructionReport rep = obstruction_report(hypotheses_from_json(load_json(hyp_file)));
    out << to_json(rep).dump(2) << "\n";
    return rep.any_obstruction() ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact planar mapping class factorization and L-space certificates"};
    app.require_subcommand(1);

    int n = 1;
    std::string word_text, lhs, rhs, p_csv, q_csv, emit = "json";
    std::string matrix_file, rot_csv, hyp_file;
    long chi = 1, sigma = 0;
    int nmax = 3, jobs = 1;
    long pmax = 3, qmax = 3;
    bool grid = false;

    auto* fac = app.add_subcommand("factorize", "factor a twist word into the normal form");
    fac->add_option("--n", n, "number of inner boundary components")->required();
    fac->add_option("--word", word_text, "twist word")->required();

    auto* ver = app.add_subcommand("verify", "decide oracle equality of two twist words");
    ver->add_option("--n", n)->required();
    ver->add_option("--lhs", lhs)->required();
    ver->add_option("--rhs", rhs)->required();

    auto* mod = app.add_subcommand("model", "emit a model diagram");
    mod->add_option("--n", n)->required();
    mod->add_option("--p", p_csv, "comma-separated chain parameters");
    mod->add_option("--q", q_csv, "comma-separated meridian parameters")->required();
    mod->add_option("--emit", emit)->check(CLI::IsMember({"matrix", "graph", "json"}));

    auto* cert = app.add_subcommand("lspace-cert", "replay the L-space induction");
    cert->add_option("--n", n);
    cert->add_option("--p", p_csv);
    cert->add_option("--q", q_csv);
    cert->add_flag("--grid", grid, "sweep the full grid instead of one instance");
    cert->add_option("--nmax", nmax);
    cert->add_option("--pmax", pmax);
    cert->add_option("--qmax", qmax);
    cert->add_option("--jobs", jobs, "parallel workers for grid sweeps");

    auto* inv = app.add_subcommand("invariants", "exact form invariants of a matrix");
    inv->add_option("--matrix", matrix_file, "JSON file with the matrix")->required();

    auto* d3c = app.add_subcommand("d3", "d3 invariant from filling data");
    d3c->add_option("--matrix", matrix_file)->required();
    d3c->add_option("--rot", rot_csv)->required();
    d3c->add_option("--chi", chi, "euler characteristic of X minus a ball")->required();
    d3c->add_option("--sigma", sigma)->required();

    auto* obs = app.add_subcommand("obstruct", "run the obstruction rules");
    obs->add_option("--hypotheses", hyp_file, "JSON hypothesis file")->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (fac->parsed())
            return cmd_factorize(n, word_text, out);
        if (ver->parsed())
            return cmd_verify(n, lhs, rhs, out);
        if (mod->parsed())
            return cmd_model(model_from_flags(n, p_csv, q_csv), emit, out);
        if (cert->parsed()) {
            if (grid)
                return cmd_lspace_grid(nmax, pmax, qmax, jobs, out);
            return cmd_lspace_cert(model_from_flags(n, p_csv, q_csv), out);
        }
        if (inv->parsed())
            return cmd_invariants(matrix_file, out);
        if (d3c->parsed())
            return cmd_d3(matrix_file, rot_csv, chi, sigma, out);
        if (obs->parsed())
            return cmd_obstruct(hyp_file, out);
    } catch (const ParseError& e) {
        err << "syntax error at " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace lantern
