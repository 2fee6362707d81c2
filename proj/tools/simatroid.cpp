#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "simatroid/commands.hpp"
#include "simatroid/error.hpp"

namespace {

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_input(const std::string& file) {
    if (file.empty() || file == "-") return slurp(std::cin);
    std::ifstream in(file);
    if (!in) throw simatroid::Error("cannot open " + file);
    return slurp(in);
}

std::string stem(const std::string& path) {
    auto slash = path.find_last_of('/');
    auto base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplicial matroids of hyperclique complexes"};
    std::string cmd, generator, file, out_path, field, strategy = "backtrack", density = "1/2";
    simatroid::CommandOptions opts;

    app.add_option("cmd", cmd, "analyze|perfect|superdense|supersolvable|triangulate|decompose|dual-check|gen|verify")
        ->required()
        ->check(CLI::IsMember({"analyze", "perfect", "superdense", "supersolvable", "triangulate", "decompose",
                               "dual-check", "gen", "verify"}));
    app.add_option("generator", generator, "gen: projective-plane|prop54|random|example3");
    app.add_option("--field", field, "prime p or q for the rationals (default: file directive, else 2)");
    app.add_option("--file", file, "instance or certificate file (default: stdin)");
    app.add_option("--seed", opts.seed, "random generator seed");
    app.add_option("--density", density, "random generator density in (0,1], e.g. 1/2 or 0.3");
    app.add_option("--strategy", strategy, "D-perfect search strategy")
        ->check(CLI::IsMember({"greedy", "backtrack"}));
    app.add_option("--max-brute", opts.guards.max_brute, "largest ground set for circuit enumeration");
    app.add_option("--max-n", opts.guards.max_duality_n, "largest n for dual-check");
    app.add_option("--n", opts.n, "number of vertices (gen, dual-check)");
    app.add_option("--k", opts.k, "face size (gen, dual-check)");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    CLI11_PARSE(app, argc, argv);

    simatroid::CommandResult result;
    try {
        if (!field.empty()) opts.field = simatroid::FieldSpec::parse(field);
        opts.strategy = strategy == "greedy" ? simatroid::Strategy::greedy_lex : simatroid::Strategy::backtracking;
        opts.generator = generator;
        if (cmd == "gen") {
            if (generator.empty()) throw simatroid::Error("gen needs a generator name");
            if (generator == "random") opts.density = simatroid::Density::parse(density);
            result = simatroid::run_command(cmd, std::nullopt, opts);
        } else if (cmd == "dual-check") {
            result = simatroid::run_command(cmd, std::nullopt, opts);
        } else if (cmd == "verify") {
            result = simatroid::run_command(cmd, std::nullopt, opts, read_input(file));
        } else {
            auto text = read_input(file);
            auto inst = simatroid::parse_instance(text, file.empty() || file == "-" ? "stdin" : stem(file));
            result = simatroid::run_command(cmd, inst, opts);
        }
    } catch (const std::exception& e) {
        result = {std::string("error: ") + e.what() + "\n", 1};
    }

    if (result.text.rfind("error:", 0) == 0) {
        std::cerr << result.text;
        return 1;
    }
    if (out_path.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << '\n';
            return 1;
        }
        out << result.text;
    }
    return result.exit_code;
}
