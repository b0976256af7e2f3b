// gelmod: fake-degree reports, Gelfand verdicts and polynomial-model checks
// for finite Coxeter groups.

#include "gelmod/cli.hpp"
#include "gelmod/errors.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"fake degrees and polynomial models of finite Coxeter groups"};
    app.require_subcommand(1);

    std::string group;
    std::string format = "text";
    int maxDegree = -1;
    long long cap = 10000;

    const std::pair<const char*, const char*> subs[] = {
        {"fake-degrees", "per-label fake degrees and first occurrences"},
        {"verdict", "is the polynomial model a Gelfand model?"},
        {"model", "graded dimensions of the polynomial model"},
        {"oracle", "closed forms vs the class-data series, plus the regular-representation identity"},
        {"dihedral-model", "explicit dihedral basis with its annihilation certificate"},
        {"check", "full invariant suite on one group"},
    };
    for (const auto& [name, desc] : subs) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("group", group, "group expression, e.g. A3, B2xI2(5), A2xE7")
            ->required();
        sub->add_option("--format", format, "output format: text, json or csv")
            ->capture_default_str();
        sub->add_option("--max-degree", maxDegree, "limit reported degrees where applicable");
        sub->add_option("--cap", cap, "element-enumeration ceiling")->capture_default_str();
    }

    CLI11_PARSE(app, argc, argv);

    gelmod::cli::Options opt;
    try {
        opt.format = gelmod::cli::parse_format(format);
    } catch (const gelmod::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (maxDegree >= 0) opt.maxDegree = maxDegree;
    opt.cap = gelmod::Int(cap);

    const gelmod::cli::RunResult res =
        gelmod::cli::run_command(app.get_subcommands().front()->get_name(), group, opt);
    std::cout << res.output;
    return res.exitCode;
}
