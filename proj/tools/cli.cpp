#include "cli.h"

#include <lpbn/analyzer.h>
#include <lpbn/boolean_network.h>
#include <lpbn/fixpoint.h>
#include <lpbn/oracle.h>
#include <lpbn/program.h>
#include <lpbn/signed_digraph.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace lpbn::cli {

namespace {

struct RunConfig {
    std::string input;
    std::string format = "human";
    Budgets     budgets;
    bool        solve    = false;
    std::string method   = "fixedpoint-filter";
    std::size_t solveCap = 20;
    std::string graph    = "dg";
    std::string igMode   = "semantic";
    std::size_t igCap    = defaultSupportCap;
    std::string oracleKind;
    std::size_t cycleCap    = 1'000'000;
    bool        network     = false;
    bool        completion  = false;
};

struct BudgetFlags {
    CLI::Option* cycles = nullptr;
    CLI::Option* search = nullptr;
    CLI::Option* lfp    = nullptr;
};

std::optional<std::uint64_t> parsePositive(const char* text) {
    std::string_view s(text);
    std::uint64_t    value = 0;
    auto [end, ec]         = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || value == 0) {
        return std::nullopt;
    }
    return value;
}

std::optional<Program> readProgram(const std::string& path, std::istream& in, std::ostream& err) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    else {
        std::ifstream file(path);
        if (!file) {
            err << "error: cannot open " << path << "\n";
            return std::nullopt;
        }
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    try {
        return parseProgram(text);
    }
    catch (const ParseError& e) {
        err << (path == "-" ? "<stdin>" : path) << ":" << e.what() << "\n";
        return std::nullopt;
    }
}

void printModels(std::ostream& out, const RunConfig& cfg, const std::vector<std::string>& items) {
    if (cfg.format == "json") {
        out << nlohmann::json(items).dump() << "\n";
        return;
    }
    for (const auto& s : items) {
        out << s << "\n";
    }
}

std::vector<std::string> atomSets(const Program& p, const std::vector<Interpretation>& models) {
    std::vector<std::string> out;
    for (const auto& m : models) {
        out.push_back(formatAtomSet(p.atoms(), m));
    }
    return out;
}

std::vector<std::string> bitStrings(const std::vector<State>& states) {
    std::vector<std::string> out;
    for (const auto& s : states) {
        out.push_back(s.bitString());
    }
    return out;
}

int cmdAnalyze(const Program& p, const RunConfig& cfg, std::ostream& out) {
    AnalysisOptions options;
    options.solve    = cfg.solve;
    options.method   = *parseSolveMethod(cfg.method);
    options.solveCap = cfg.solveCap;
    options.budgets  = cfg.budgets;
    auto report      = analyze(p, options);
    out << (cfg.format == "json" ? toJson(report) : toHuman(report));
    return report.budgetExhausted() ? budgetExceeded : ok;
}

int cmdSolve(const Program& p, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto solution = solve(p, *parseSolveMethod(cfg.method), cfg.budgets);
    printModels(out, cfg, atomSets(p, solution.models));
    if (!solution.complete) {
        err << "warning: budget exhausted, model list is partial\n";
        return budgetExceeded;
    }
    return ok;
}

int cmdSupported(const Program& p, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.completion) {
        out << clarkCompletion(p).format();
        return ok;
    }
    try {
        printModels(out, cfg, atomSets(p, fixedPoints(encode(p), cfg.budgets.search)));
        return ok;
    }
    catch (const BudgetExhausted& e) {
        printModels(out, cfg, atomSets(p, e.partial()));
        err << "warning: " << e.what() << ", model list is partial\n";
        return budgetExceeded;
    }
}

int cmdFixpoints(const Program& p, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto f = encode(p);
    if (cfg.network) {
        for (Atom v = 0; v < f.variableCount(); ++v) {
            out << f.variableName(v) << " = " << f.formatFunction(v) << "\n";
        }
        return ok;
    }
    try {
        printModels(out, cfg, bitStrings(fixedPoints(f, cfg.budgets.search)));
        return ok;
    }
    catch (const BudgetExhausted& e) {
        printModels(out, cfg, bitStrings(e.partial()));
        err << "warning: " << e.what() << ", list is partial\n";
        return budgetExceeded;
    }
}

int cmdLfp(const Program& p, const RunConfig& cfg, std::ostream& out) {
    out << printProgram(toProgram(p.atoms(), leastFixpoint(p, cfg.budgets.lfp)));
    return ok;
}

int cmdExport(const Program& p, const RunConfig& cfg, std::ostream& out) {
    if (cfg.graph == "dg") {
        out << toDot(dependenceGraph(p), "dg");
    }
    else if (cfg.graph == "pdg") {
        out << toDot(positiveDependenceGraph(p), "pdg");
    }
    else if (cfg.igMode == "syntactic") {
        out << toDot(influenceGraph(encode(p), InfluenceMode::syntactic), "ig", "influence graph: syntactic (approximate)");
    }
    else {
        auto ig = influenceGraphWithFallback(encode(p), cfg.igCap);
        out << toDot(ig.graph, "ig",
                     ig.approximate ? "influence graph: syntactic (approximate, support cap exceeded)"
                                    : "influence graph: semantic");
    }
    return ok;
}

int cmdOracle(const Program& p, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.oracleKind == "stable") {
        printModels(out, cfg, atomSets(p, oracle::enumerateStable(p)));
    }
    else if (cfg.oracleKind == "supported") {
        printModels(out, cfg, atomSets(p, oracle::enumerateSupported(p)));
    }
    else if (cfg.oracleKind == "fixpoints") {
        printModels(out, cfg, bitStrings(oracle::enumerateFixedPoints(encode(p))));
    }
    else {
        const auto                 dg   = dependenceGraph(p);
        auto                       list = oracle::enumerateSignedCycles(dg, cfg.cycleCap);
        std::vector<std::string>   lines;
        for (const auto& c : list.cycles) {
            std::string line = "(";
            for (std::size_t k = 0; k < c.vertices.size(); ++k) {
                line += (k ? "," : "") + dg.vertexName(c.vertices[k]);
            }
            line += ") ";
            line += signChar(c.sign());
            lines.push_back(std::move(line));
        }
        printModels(out, cfg, lines);
        if (list.truncated) {
            err << "warning: cycle cap reached, list is partial\n";
            return budgetExceeded;
        }
    }
    return ok;
}

void addInput(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("input", cfg.input, "Program file, or - for stdin")->required();
}

void addFormat(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));
}

void addMethod(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--method", cfg.method, "Solving method")
        ->check(CLI::IsMember({"fixedpoint-filter", "lfp", "bruteforce"}));
}

BudgetFlags addBudgets(CLI::App* cmd, RunConfig& cfg) {
    BudgetFlags flags;
    flags.cycles = cmd->add_option("--cycle-budget", cfg.budgets.cycles, "Cycles enumerated by the positive cycle search")
                       ->check(CLI::PositiveNumber);
    flags.search = cmd->add_option("--search-budget", cfg.budgets.search, "Fixed-point search nodes")
                       ->check(CLI::PositiveNumber);
    flags.lfp = cmd->add_option("--lfp-budget", cfg.budgets.lfp, "Quasi-rules produced by the least fixpoint")
                    ->check(CLI::PositiveNumber);
    return flags;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const char* budgetEnv) {
    RunConfig cfg;
    CLI::App  app("Static analysis of ground normal logic programs through their Boolean network encoding", "lpbn");
    app.require_subcommand(1);
    std::vector<BudgetFlags> budgetFlags;

    auto* analyzeCmd = app.add_subcommand("analyze", "Report verdicts and bounds on the number of stable models");
    addInput(analyzeCmd, cfg);
    addFormat(analyzeCmd, cfg);
    addMethod(analyzeCmd, cfg);
    analyzeCmd->add_flag("--solve", cfg.solve, "Attach the exact stable models");
    analyzeCmd->add_option("--solve-cap", cfg.solveCap, "Largest atom count solved exactly");
    budgetFlags.push_back(addBudgets(analyzeCmd, cfg));

    auto* solveCmd = app.add_subcommand("solve", "Print the stable models");
    addInput(solveCmd, cfg);
    addFormat(solveCmd, cfg);
    addMethod(solveCmd, cfg);
    budgetFlags.push_back(addBudgets(solveCmd, cfg));

    auto* supportedCmd = app.add_subcommand("supported", "Print the supported models");
    addInput(supportedCmd, cfg);
    addFormat(supportedCmd, cfg);
    supportedCmd->add_flag("--completion", cfg.completion, "Print the Clark completion instead");
    budgetFlags.push_back(addBudgets(supportedCmd, cfg));

    auto* fixpointsCmd = app.add_subcommand("fixpoints", "Print the fixed points of the encoded network");
    addInput(fixpointsCmd, cfg);
    addFormat(fixpointsCmd, cfg);
    fixpointsCmd->add_flag("--network", cfg.network, "Print the update functions instead");
    budgetFlags.push_back(addBudgets(fixpointsCmd, cfg));

    auto* lfpCmd = app.add_subcommand("lfp", "Print the least fixpoint as a program");
    addInput(lfpCmd, cfg);
    budgetFlags.push_back(addBudgets(lfpCmd, cfg));

    auto* exportCmd = app.add_subcommand("export", "Print a graph in DOT format");
    addInput(exportCmd, cfg);
    exportCmd->add_option("--graph", cfg.graph, "Graph to export")->check(CLI::IsMember({"dg", "pdg", "ig"}));
    exportCmd->add_option("--ig-mode", cfg.igMode, "Influence graph construction")
        ->check(CLI::IsMember({"semantic", "syntactic"}));
    exportCmd->add_option("--ig-cap", cfg.igCap, "Largest support handled semantically");

    auto* oracleCmd = app.add_subcommand("oracle", "Brute-force enumeration for small programs");
    oracleCmd->add_option("kind", cfg.oracleKind, "What to enumerate")
        ->required()
        ->check(CLI::IsMember({"stable", "supported", "fixpoints", "cycles"}));
    addInput(oracleCmd, cfg);
    addFormat(oracleCmd, cfg);
    oracleCmd->add_option("--cycle-cap", cfg.cycleCap, "Largest number of cycles listed")->check(CLI::PositiveNumber);

    std::vector<std::string> argvStorage{"lpbn"};
    argvStorage.insert(argvStorage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argvStorage) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : inputError;
    }

    if (budgetEnv != nullptr) {
        auto value = parsePositive(budgetEnv);
        if (!value) {
            err << "error: LPBN_BUDGET must be a positive integer\n";
            return inputError;
        }
        // Flags given explicitly keep their values.
        auto given = [&](auto member) {
            return std::ranges::any_of(budgetFlags, [&](const BudgetFlags& f) { return (f.*member)->count() > 0; });
        };
        if (!given(&BudgetFlags::cycles)) {
            cfg.budgets.cycles = *value;
        }
        if (!given(&BudgetFlags::search)) {
            cfg.budgets.search = *value;
        }
        if (!given(&BudgetFlags::lfp)) {
            cfg.budgets.lfp = *value;
        }
    }

    auto program = readProgram(cfg.input, in, err);
    if (!program) {
        return inputError;
    }

    try {
        if (analyzeCmd->parsed()) {
            return cmdAnalyze(*program, cfg, out);
        }
        if (solveCmd->parsed()) {
            return cmdSolve(*program, cfg, out, err);
        }
        if (supportedCmd->parsed()) {
            return cmdSupported(*program, cfg, out, err);
        }
        if (fixpointsCmd->parsed()) {
            return cmdFixpoints(*program, cfg, out, err);
        }
        if (lfpCmd->parsed()) {
            return cmdLfp(*program, cfg, out);
        }
        if (exportCmd->parsed()) {
            return cmdExport(*program, cfg, out);
        }
        return cmdOracle(*program, cfg, out, err);
    }
    catch (const SoundnessFailure& e) {
        err << "internal error: " << e.what() << "\n";
        return soundnessBug;
    }
    catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << "\n";
        return budgetExceeded;
    }
    catch (const oracle::SizeCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return budgetExceeded;
    }
}

} // namespace lpbn::cli
