#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polya/cli.hpp"
#include "polya/errors.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw polya::ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Overrides {
    bool has_trunc = false;
    unsigned trunc = 0;
    bool has_group_cap = false;
    std::uint64_t group_cap = 0;
    bool has_oracle_cap = false;
    std::uint64_t oracle_cap = 0;
    bool has_enum_budget = false;
    std::uint64_t enum_budget = 0;
};

int execute(const std::string& command, const std::string& input_path,
            const Overrides& ov, bool timing) {
    polya::Json job;
    try {
        job = polya::Json::parse(read_input(input_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw polya::ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!command.empty()) {
        if (!job.is_object()) throw polya::ParseError("job document: expected an object");
        if (job.contains("command")) {
            if (job.at("command") != command)
                throw polya::ParseError("job document names command '" +
                                        job.at("command").get<std::string>() +
                                        "' but the '" + command + "' subcommand was invoked");
        } else {
            job["command"] = command;
        }
    }
    // explicit flags override the document, which overrides environment values
    if (ov.has_trunc) job["trunc"] = ov.trunc;
    if (ov.has_group_cap) job["group_cap"] = ov.group_cap;
    if (ov.has_oracle_cap) job["oracle_cap"] = ov.oracle_cap;
    if (ov.has_enum_budget) job["enum_budget"] = ov.enum_budget;

    auto start = std::chrono::steady_clock::now();
    polya::Json normalized = polya::normalize_job(job, polya::settings_from_env());
    polya::Json result = polya::run_job(normalized);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cout << result.dump(2) << "\n";
    if (timing)
        std::cerr << "# " << normalized.at("command").get<std::string>() << " took "
                  << elapsed << " ms\n";
    return polya::result_exit_code(result);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycle-index calculator for Lefschetz series of quotient actions,"
                 " coloring counts, zeta series and point counts"};
    app.require_subcommand(1);

    std::string input_path = "-";
    Overrides ov;
    bool timing = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("job", input_path, "job document (JSON file, or - for stdin)");
        cmd->add_option("--trunc", ov.trunc, "series truncation order")
            ->each([&](const std::string&) { ov.has_trunc = true; });
        cmd->add_option("--group-cap", ov.group_cap, "group closure size cap")
            ->each([&](const std::string&) { ov.has_group_cap = true; });
        cmd->add_option("--oracle-cap", ov.oracle_cap, "tensor power dimension cap")
            ->each([&](const std::string&) { ov.has_oracle_cap = true; });
        cmd->add_option("--enum-budget", ov.enum_budget, "enumeration budget")
            ->each([&](const std::string&) { ov.has_enum_budget = true; });
        cmd->add_flag("--timing", timing, "report elapsed time on stderr");
    };

    std::vector<std::pair<CLI::App*, std::string>> subcommands;
    add_common(app.add_subcommand("run", "run a job whose document names the command"));
    subcommands.emplace_back(app.get_subcommand("run"), "");
    for (const auto& name : polya::known_commands()) {
        CLI::App* cmd = app.add_subcommand(name, "run a '" + name + "' job document");
        add_common(cmd);
        subcommands.emplace_back(cmd, name);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        for (const auto& [cmd, name] : subcommands)
            if (cmd->parsed()) return execute(name, input_path, ov, timing);
        return 1;
    } catch (const polya::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
