#include "affine/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    affine::RunConfig cfg;
    CLI::App app{"affine_cli: affine Weyl group, character and semiregular-module checks"};
    std::string positional;
    app.add_option("suite_pos", positional, "suite (marks|weyl|char|bgg|twisted-bgg|si-window|clifford|semiregular|all)");
    app.add_option("--suite", cfg.suite, "suite to run");
    app.add_option("--type", cfg.type, "affine type: A1, A2, C2, G2, ...");
    app.add_option("--matrix-file", cfg.matrixFile, "affine Cartan matrix, one row per line");
    app.add_option("--lambda", cfg.lambda, "weight: L0, 2L0+L1, rho, or m0,...,mr[;n]");
    app.add_option("--N", cfg.N, "height truncation");
    app.add_option("--maxlen", cfg.maxlen, "length bound");
    app.add_option("--horizon", cfg.horizon, "schedule length for limit stabilization");
    app.add_option("--search-bound", cfg.searchBound, "box bound for translation searches");
    app.add_option("--n", cfg.n, "Clifford rank");
    app.add_option("--algebra-file", cfg.algebraFile, "graded Lie algebra (deg/bracket lines)");
    app.add_option("--out", cfg.out, "write the report here instead of stdout");
    CLI11_PARSE(app, argc, argv);
    if (!positional.empty()) cfg.suite = positional;
    try {
        if (cfg.out.empty()) return affine::run(cfg, std::cout);
        std::ofstream out(cfg.out);
        if (!out) {
            std::cerr << "cannot write " << cfg.out << "\n";
            return 2;
        }
        return affine::run(cfg, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
