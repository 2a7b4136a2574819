#include "isostrat/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace isostrat;

int main(int argc, char** argv)
{
    CLI::App app{"Exact orbit-type stratification and rational invariants of finite and so(3) representations"};
    app.set_version_flag("--version", "isostrat 0.1.0");

    std::string command;
    std::string session_path;
    CommandOptions options;
    std::string format = "text";

    app.add_option("command", command, "invariants | strata | fixed-locus | monodromy | rationalize | slice | verify")
        ->required()
        ->check(CLI::IsMember(command_names()));
    app.add_option("--session", session_path, "session JSON file")->required();
    app.add_option("--subgroup", options.subgroup, "subgroup label from the session");
    app.add_option("--target", options.target, "polynomial, e.g. \"-1/14*J2 + 4/7*s1^2\"");
    app.add_option("--max-degree", options.max_degree,
                   "invariants: highest degree listed; rationalize: weighted degree cap");
    app.add_option("--point", options.point, "comma-separated rational coordinates, e.g. 1,1/2,0");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 1;
    }

    const ReportFormat fmt = format == "json" ? ReportFormat::Json : ReportFormat::Text;
    Report report;
    try {
        Session session = load_session(session_path);
        report = run_command(session, command, options);
    } catch (const Error& e) {
        report = error_report(command, e);
        if (fmt == ReportFormat::Json)
            std::cout << emit_report(report, fmt);
        else
            std::cerr << emit_report(report, fmt);
        return report.exit_code;
    }
    std::cout << emit_report(report, fmt);
    return report.exit_code;
}
