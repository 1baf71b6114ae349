// Command-line front end; talks to the engine through the C API only.

#include <redop/redop.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kInputError = 2;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

int emit(redop_report* report, const std::string& format) {
    if (format == "json")
        std::cout << redop_report_json(report) << "\n";
    else
        std::cout << redop_report_text(report);
    const int code = redop_report_exit_code(report);
    redop_report_free(report);
    return code;
}

int run_family_command(const std::string& path, const std::string& format,
                       redop_status (*command)(const redop_family*,
                                               redop_report**)) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kInputError;
    }
    char err[512] = {0};
    redop_family* family = nullptr;
    if (redop_family_parse(text.c_str(), &family, err, sizeof err) !=
        REDOP_OK) {
        std::cerr << "error: " << err << "\n";
        return kInputError;
    }
    redop_report* report = nullptr;
    if (command(family, &report) != REDOP_OK || !report) {
        std::cerr << "error: command failed\n";
        redop_family_free(family);
        return kInputError;
    }
    redop_family_free(family);
    return emit(report, format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for reduction operators over a finite ordered "
                 "basis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", redop_version());

    std::string input;
    std::string format = "text";
    std::string order;
    int degree_bound = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "input file")->required();
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* confluence = app.add_subcommand(
        "confluence", "test a family of reduction operators for confluence");
    add_common(confluence);
    auto* syzygies = app.add_subcommand(
        "syzygies", "construct a basis of the syzygy space of a family");
    add_common(syzygies);
    auto* complete = app.add_subcommand(
        "complete",
        "complete a family, reporting useless reductions and added operators");
    add_common(complete);
    auto* groebner = app.add_subcommand(
        "groebner",
        "complete a polynomial system to a degree-bounded Groebner basis");
    add_common(groebner);
    groebner
        ->add_option("--order", order,
                     "comma-separated variables, increasing precedence")
        ->required();
    groebner->add_option("--degree-bound", degree_bound, "truncation degree")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kInputError;
    }

    if (confluence->parsed())
        return run_family_command(input, format, redop_confluence);
    if (syzygies->parsed())
        return run_family_command(input, format, redop_syzygies);
    if (complete->parsed())
        return run_family_command(input, format, redop_completion);

    std::string text;
    if (!read_file(input, text)) {
        std::cerr << "error: cannot read '" << input << "'\n";
        return kInputError;
    }
    char err[512] = {0};
    redop_report* report = nullptr;
    if (redop_groebner(text.c_str(), order.c_str(), degree_bound, &report,
                       err, sizeof err) != REDOP_OK) {
        std::cerr << "error: " << err << "\n";
        return kInputError;
    }
    return emit(report, format);
}
