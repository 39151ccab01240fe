#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "idealcore/jobspec.hpp"

int main(int argc, char** argv) {
    CLI::App app{"core-of-an-ideal calculator for polynomial and local quotient rings"};
    std::string expr;
    std::string file = "-";
    app.add_option("-e,--expr", expr, "job text given inline");
    app.add_option("file", file, "job file, or - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    std::string text;
    if (!expr.empty()) {
        text = expr;
    } else if (file == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot open '" << file << "'\n";
            return 1;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    idealcore::JobSpec job;
    try {
        job = idealcore::parse_jobspec(text);
    } catch (const idealcore::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    idealcore::RunOutcome out = idealcore::run_job(job);
    if (job.json)
        std::cout << out.report.dump(2) << "\n";
    else
        std::cout << out.text;
    return out.exit_code;
}
