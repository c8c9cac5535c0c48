#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "disc/bundle.hpp"

namespace {

int emit(const disc::Report& rep, const std::string& out_path) {
    std::cout << rep.human();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        out << rep.json();
    }
    return rep.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact discriminants, traces and Frobenius data for graded "
                 "algebras finite over a central subring"};
    app.require_subcommand(1);

    std::string bundle_path, out_path, expr, suite;
    int degree = -1;
    bool no_fast_path = false;

    auto add_common = [&](CLI::App* cmd, bool with_degree) {
        cmd->add_option("bundle", bundle_path, "instance bundle file")->required();
        cmd->add_option("--out", out_path, "write a JSON report to this path");
        cmd->add_flag("--no-fast-path", no_fast_path,
                      "disable the closed-form quantum-affine product path");
        if (with_degree) cmd->add_option("--degree", degree, "verification degree bound");
    };

    CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
    add_common(nf, false);
    nf->add_option("expr", expr, "expression in the bundle's generators")->required();

    CLI::App* conf = app.add_subcommand("confluence", "critical-pair analysis");
    add_common(conf, true);

    CLI::App* hil = app.add_subcommand("hilbert", "dimension count vs declared series");
    add_common(hil, true);

    CLI::App* dis = app.add_subcommand("disc", "discriminant of the trace form");
    add_common(dis, false);

    CLI::App* nd = app.add_subcommand("norm-different",
                                      "different, Nakayama data and norm cross-check");
    add_common(nd, false);

    CLI::App* jac = app.add_subcommand("jacobian",
                                       "Jacobian, arrangement and their product");
    add_common(jac, false);

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    add_common(ver, true);
    ver->add_option("suite", suite, "main | smash | galois | reflection")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        auto bundle = disc::load_bundle(bundle_path);
        if (no_fast_path) {
            // pres() is shared with the action cache; flip the flag in place.
            const_cast<disc::AlgebraPresentation&>(bundle->pres()).set_fast_path(false);
        }
        disc::Report rep;
        if (nf->parsed())
            rep = disc::run_nf(*bundle, expr);
        else if (conf->parsed())
            rep = disc::run_confluence(*bundle,
                                       degree > 0 ? degree : bundle->bounds.confluence);
        else if (hil->parsed())
            rep = disc::run_hilbert(*bundle, degree > 0 ? degree : bundle->bounds.hilbert);
        else if (dis->parsed())
            rep = disc::run_disc(*bundle);
        else if (nd->parsed())
            rep = disc::run_norm_different(*bundle);
        else if (jac->parsed())
            rep = disc::run_jacobian(*bundle);
        else
            rep = disc::run_verify(*bundle, suite, degree);
        return emit(rep, out_path);
    } catch (const disc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const disc::BundleError& e) {
        std::cerr << "bundle error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
