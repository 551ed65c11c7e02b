// Command-line surface over the logicnet library: parsing, truth tables,
// compilation to networks, verification, compatibility, training and
// Hopfield experiments. Every command is deterministic given its flags.
//
// Exit codes: 0 success, 1 usage or verification failure, 2 incompatible
// verdict, 3 non-convergence.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "logicnet/compiler.hpp"
#include "logicnet/formula.hpp"
#include "logicnet/hopfield.hpp"
#include "logicnet/network.hpp"
#include "logicnet/parser.hpp"
#include "logicnet/rng.hpp"
#include "logicnet/training.hpp"

namespace {

using namespace logicnet;

struct CliError {
    int code;
};

enum class Format { Text, Csv, Doc };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "doc") return Format::Doc;
    throw std::invalid_argument("unknown format '" + name + "'; use text, csv or doc");
}

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    throw CliError{1};
}

// "-" reads the formula from stdin.
std::string read_source(const std::string& arg) {
    std::string text = arg;
    if (arg == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    }
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

Formula parse_formula(const std::string& arg) {
    const std::string src = read_source(arg);
    try {
        return parse(src);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (src.find('\n') == std::string::npos && e.offset() <= src.size()) {
            std::cerr << "  " << src << "\n"
                      << "  " << std::string(e.offset(), ' ') << "^\n";
        }
        throw CliError{1};
    }
}

void write_file(const std::filesystem::path& dir, const std::string& name,
                const std::string& content) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) usage_error("cannot write " + (dir / name).string());
    out << content;
}

nlohmann::json assignment_to_json(const Assignment& a) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, value] : a) j[name] = value ? 1 : 0;
    return j;
}

std::string text_double(double x) {
    std::ostringstream out;
    out << std::setprecision(17) << x;
    return out.str();
}

// ---------------------------------------------------------------- parse

int cmd_parse(const std::string& formula_arg, Format format) {
    const Formula f = parse_formula(formula_arg);
    if (format == Format::Text) {
        std::cout << to_string(f) << "\n";
        return 0;
    }
    if (format == Format::Doc) {
        nlohmann::json j;
        j["formula"] = to_string(f);
        j["variables"] = free_variables(f);
        j["height"] = height(f);
        j["nodes"] = node_count(f);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    usage_error("parse has no csv output");
}

// ---------------------------------------------------------------- table

int cmd_table(const std::string& formula_arg, Format format) {
    const Formula f = parse_formula(formula_arg);
    const TruthTable table = truth_table(f);
    const std::string name = to_string(f);

    switch (format) {
        case Format::Text: {
            std::ostringstream out;
            for (std::size_t i = 0; i < table.variables.size(); ++i) {
                out << (i ? " " : "") << table.variables[i];
            }
            out << " | " << name << "\n";
            for (std::size_t row = 0; row < table.rows(); ++row) {
                const auto bits = table.row_bits(row);
                for (std::size_t i = 0; i < bits.size(); ++i) {
                    out << (i ? " " : "")
                        << std::setw(static_cast<int>(table.variables[i].size()))
                        << (bits[i] ? 't' : 'f');
                }
                out << " | " << (table.outputs[row] ? 't' : 'f') << "\n";
            }
            std::cout << out.str();
            return 0;
        }
        case Format::Csv: {
            std::ostringstream out;
            for (const auto& v : table.variables) out << v << ",";
            out << "y\n";
            for (std::size_t row = 0; row < table.rows(); ++row) {
                for (std::uint8_t bit : table.row_bits(row)) {
                    out << int{bit} << ",";
                }
                out << int{table.outputs[row]} << "\n";
            }
            std::cout << out.str();
            return 0;
        }
        case Format::Doc: {
            nlohmann::json j;
            j["formula"] = name;
            j["variables"] = table.variables;
            j["rows"] = nlohmann::json::array();
            for (std::size_t row = 0; row < table.rows(); ++row) {
                nlohmann::json inputs = nlohmann::json::array();
                for (std::uint8_t bit : table.row_bits(row)) inputs.push_back(int{bit});
                j["rows"].push_back(
                    {{"inputs", std::move(inputs)}, {"output", int{table.outputs[row]}}});
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
    }
    return 0;
}

// -------------------------------------------------------------- compile

int cmd_compile(const std::string& formula_arg, Format format,
                const std::string& out_dir) {
    const Formula f = parse_formula(formula_arg);
    const Network net = compile(f);
    const std::string doc = serialize(net);
    if (format == Format::Csv) usage_error("compile has no csv output");
    if (!out_dir.empty()) write_file(out_dir, "network.json", doc + "\n");
    std::cout << doc << "\n";
    return 0;
}

// ----------------------------------------------------------------- eval

Assignment parse_assignment(const std::string& text) {
    Assignment a;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            usage_error("bad assignment entry '" + item + "'; use name=0 or name=1");
        }
        const std::string name = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (value == "1" || value == "t" || value == "true") {
            a[name] = true;
        } else if (value == "0" || value == "f" || value == "false") {
            a[name] = false;
        } else {
            usage_error("bad truth value '" + value + "' for " + name);
        }
    }
    return a;
}

int cmd_eval(const std::string& formula_arg, const std::string& assign_arg,
             Format format) {
    const Formula f = parse_formula(formula_arg);
    const Assignment a = parse_assignment(assign_arg);
    const bool value = eval(f, a);
    if (format == Format::Text) {
        std::cout << (value ? "t" : "f") << "\n";
    } else if (format == Format::Doc) {
        nlohmann::json j;
        j["formula"] = to_string(f);
        j["assignment"] = assignment_to_json(a);
        j["value"] = value ? 1 : 0;
        std::cout << j.dump(2) << "\n";
    } else {
        usage_error("eval has no csv output");
    }
    return 0;
}

// --------------------------------------------------------------- verify

struct ActivationTable {
    std::vector<std::string> columns;       // inputs, hidden units, y
    std::vector<std::vector<int>> rows;     // binarized values
    std::vector<std::size_t> group_breaks;  // column counts per group
};

ActivationTable activation_table(const Network& net) {
    ActivationTable table;
    for (const auto& name : net.inputs) table.columns.push_back(name);
    table.group_breaks.push_back(net.inputs.size());
    const bool single_hidden = net.layers.size() == 2;
    std::size_t hidden = 0;
    for (std::size_t l = 0; l + 1 < net.layers.size(); ++l) {
        for (std::size_t r = 0; r < net.layers[l].rows; ++r) {
            table.columns.push_back(single_hidden
                                        ? "a" + std::to_string(r + 1)
                                        : "a" + std::to_string(l + 1) + "_" +
                                              std::to_string(r + 1));
            ++hidden;
        }
    }
    table.group_breaks.push_back(hidden);
    table.columns.push_back("y");
    table.group_breaks.push_back(1);

    const std::size_t n = net.inputs.size();
    const std::size_t rows = std::size_t{1} << n;
    for (std::size_t row = 0; row < rows; ++row) {
        const std::size_t value = rows - 1 - row;
        std::vector<double> x(n);
        std::vector<int> line;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = (value >> (n - 1 - i)) & 1u ? 1.0 : 0.0;
            line.push_back(static_cast<int>(x[i]));
        }
        const Trace trace = forward(net, x);
        for (std::size_t l = 0; l < trace.activations.size(); ++l) {
            for (double a : trace.activations[l]) line.push_back(a >= 0.5 ? 1 : 0);
        }
        table.rows.push_back(std::move(line));
    }
    return table;
}

std::string render_activation_table(const ActivationTable& table) {
    std::ostringstream out;
    std::size_t col = 0;
    for (std::size_t g = 0; g < table.group_breaks.size(); ++g) {
        if (g && table.group_breaks[g]) out << " |";
        for (std::size_t i = 0; i < table.group_breaks[g]; ++i, ++col) {
            out << (col && i != 0 ? " " : (g ? " " : i ? " " : "")) << table.columns[col];
        }
    }
    out << "\n";
    for (const auto& row : table.rows) {
        col = 0;
        for (std::size_t g = 0; g < table.group_breaks.size(); ++g) {
            if (g && table.group_breaks[g]) out << " |";
            for (std::size_t i = 0; i < table.group_breaks[g]; ++i, ++col) {
                out << (col == 0 ? "" : " ")
                    << std::setw(static_cast<int>(table.columns[col].size()))
                    << row[col];
            }
        }
        out << "\n";
    }
    return out.str();
}

int cmd_verify(const std::string& formula_arg, bool raw, Format format) {
    const Formula f = parse_formula(formula_arg);
    const Network net = compile(f);
    const VerificationReport report = verify(f, net);

    if (format == Format::Csv) usage_error("verify has no csv output");
    if (format == Format::Text) {
        if (raw) std::cout << render_activation_table(activation_table(net)) << "\n";
        std::cout << report.to_text();
    } else {
        nlohmann::json j = nlohmann::json::parse(report.to_json());
        if (raw) {
            const ActivationTable table = activation_table(net);
            j["activation_table"] = {{"columns", table.columns},
                                     {"rows", table.rows}};
        }
        std::cout << j.dump(2) << "\n";
    }
    return report.pass ? 0 : 1;
}

// --------------------------------------------------------------- compat

int cmd_compat(const std::string& claim_arg, const std::string& possibility_arg,
               Format format) {
    const Formula claim = parse_formula(claim_arg);
    const Formula poss = parse_formula(possibility_arg);
    const Verdict verdict = compatible(claim, poss);

    if (format == Format::Text) {
        std::cout << (verdict == Verdict::Compatible ? "compatible" : "incompatible")
                  << "\n";
    } else if (format == Format::Doc) {
        nlohmann::json j;
        j["claim"] = to_string(claim);
        j["possibility"] = to_string(poss);
        j["verdict"] =
            verdict == Verdict::Compatible ? "compatible" : "incompatible";
        if (verdict == Verdict::Compatible) {
            const auto witness = satisfying_assignment(conj(claim, poss.child()));
            j["witness"] = witness ? assignment_to_json(*witness)
                                   : nlohmann::json(nullptr);
        } else {
            j["witness"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        usage_error("compat has no csv output");
    }
    return verdict == Verdict::Compatible ? 0 : 2;
}

// ---------------------------------------------------------------- train

// header = variable names then "y"; rows of 0/1 bits.
Dataset read_truth_table_csv(const std::string& path,
                             std::vector<std::string>& names) {
    std::ifstream in(path);
    if (!in) usage_error("cannot read " + path);

    const auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::istringstream stream(line);
        std::string cell;
        while (std::getline(stream, cell, ',')) {
            const auto first = cell.find_first_not_of(" \t\r");
            if (first == std::string::npos) {
                cells.push_back("");
                continue;
            }
            const auto last = cell.find_last_not_of(" \t\r");
            cells.push_back(cell.substr(first, last - first + 1));
        }
        return cells;
    };

    std::string line;
    if (!std::getline(in, line)) usage_error(path + " is empty");
    std::vector<std::string> header = split(line);
    if (header.size() < 2 || header.back() != "y") {
        usage_error(path + ": header must be variable names then y");
    }
    names.assign(header.begin(), header.end() - 1);

    Dataset data;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::vector<std::string> cells = split(line);
        if (cells.size() != header.size()) {
            usage_error(path + ":" + std::to_string(line_no) + ": expected " +
                        std::to_string(header.size()) + " cells");
        }
        std::vector<double> bits;
        for (const std::string& cell : cells) {
            if (cell == "0") {
                bits.push_back(0.0);
            } else if (cell == "1") {
                bits.push_back(1.0);
            } else {
                usage_error(path + ":" + std::to_string(line_no) + ": bad bit '" +
                            cell + "'");
            }
        }
        data.targets.push_back({bits.back()});
        bits.pop_back();
        data.inputs.push_back(std::move(bits));
    }
    if (data.inputs.empty()) usage_error(path + " has no data rows");
    return data;
}

Dataset dataset_from_flags(const std::string& formula_arg,
                           const std::string& csv_arg,
                           std::vector<std::string>& names) {
    if (formula_arg.empty() == csv_arg.empty()) {
        usage_error("give exactly one of --formula and --truth-table");
    }
    if (!formula_arg.empty()) {
        const Formula f = parse_formula(formula_arg);
        const TruthTable table = truth_table(f);
        names = table.variables;
        return Dataset::from_truth_table(table);
    }
    return read_truth_table_csv(csv_arg, names);
}

std::vector<std::size_t> parse_topology(const std::string& text) {
    std::vector<std::size_t> widths;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            const long long value = std::stoll(item);
            if (value <= 0) throw std::invalid_argument("");
            widths.push_back(static_cast<std::size_t>(value));
        } catch (const std::exception&) {
            usage_error("bad topology entry '" + item + "'");
        }
    }
    if (widths.size() < 2) usage_error("topology needs at least two widths");
    return widths;
}

int cmd_train(const std::string& formula_arg, const std::string& csv_arg,
              const std::string& topology_arg, double rate, std::size_t epochs,
              double target, std::uint64_t seed, double init_scale,
              Format format, const std::string& out_dir) {
    std::vector<std::string> names;
    const Dataset data = dataset_from_flags(formula_arg, csv_arg, names);

    TrainSpec spec;
    spec.topology = parse_topology(topology_arg);
    spec.learning_rate = rate;
    spec.max_epochs = epochs;
    spec.target_max_error = target;
    spec.seed = seed;
    spec.init_scale = init_scale;

    TrainReport report = train_backprop(spec, data);
    if (names.size() == report.network.inputs.size()) {
        report.network.inputs = names;
    }

    if (!out_dir.empty()) {
        write_file(out_dir, "report.json", report.to_json() + "\n");
        write_file(out_dir, "loss.csv", report.loss_history_csv());
        write_file(out_dir, "network.json", serialize(report.network) + "\n");
    }

    if (format == Format::Text) {
        std::cout << "epochs run:       " << report.epochs_run << "\n"
                  << "final loss:       " << text_double(report.final_loss) << "\n"
                  << "max output error: " << text_double(report.max_output_error)
                  << "\n"
                  << "converged:        " << (report.converged ? "yes" : "no") << "\n"
                  << "diverged:         " << (report.diverged ? "yes" : "no") << "\n"
                  << "rng:              " << report.rng << "\n";
    } else if (format == Format::Doc) {
        std::cout << report.to_json() << "\n";
    } else {
        std::cout << report.loss_history_csv();
    }
    return report.converged ? 0 : 3;
}

// ----------------------------------------------------------- perceptron

int cmd_perceptron(const std::string& formula_arg, const std::string& csv_arg,
                   double rate, std::size_t epochs, Format format,
                   const std::string& out_dir) {
    std::vector<std::string> names;
    const Dataset data = dataset_from_flags(formula_arg, csv_arg, names);
    const PerceptronReport report = train_perceptron(data, rate, epochs);

    if (!out_dir.empty()) {
        write_file(out_dir, "report.json", report.to_json() + "\n");
        write_file(out_dir, "network.json",
                   serialize(report.as_network(names)) + "\n");
    }

    if (format == Format::Text) {
        for (std::size_t i = 0; i < report.weights.size(); ++i) {
            std::cout << "w[" << names[i] << "]: " << text_double(report.weights[i])
                      << "\n";
        }
        std::cout << "bias:          " << text_double(report.bias) << "\n"
                  << "epochs run:    " << report.epochs_run << "\n"
                  << "misclassified: " << report.misclassified << "\n"
                  << "converged:     " << (report.converged ? "yes" : "no") << "\n";
    } else if (format == Format::Doc) {
        nlohmann::json j = nlohmann::json::parse(report.to_json());
        j["inputs"] = names;
        std::cout << j.dump(2) << "\n";
    } else {
        usage_error("perceptron has no csv output");
    }
    return report.converged ? 0 : 3;
}

// ------------------------------------------------------------- hopfield

nlohmann::json hopfield_to_json(const HopfieldNet& net,
                                const std::vector<Pattern>& patterns) {
    nlohmann::json j;
    j["size"] = net.size;
    j["patterns"] = nlohmann::json::array();
    for (const Pattern& p : patterns) j["patterns"].push_back(pattern_to_string(p));
    j["weights"] = nlohmann::json::array();
    for (std::size_t i = 0; i < net.size; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < net.size; ++k) row.push_back(net.weight_at(i, k));
        j["weights"].push_back(std::move(row));
    }
    j["state"] = pattern_to_string(net.state);
    return j;
}

std::vector<Pattern> parse_patterns(const std::vector<std::string>& texts) {
    if (texts.empty()) usage_error("give at least one --pattern");
    std::vector<Pattern> patterns;
    patterns.reserve(texts.size());
    for (const std::string& t : texts) patterns.push_back(pattern_from_string(t));
    return patterns;
}

int cmd_hopfield_store(const std::vector<std::string>& pattern_args, Format format,
                       const std::string& out_dir) {
    const std::vector<Pattern> patterns = parse_patterns(pattern_args);
    const HopfieldNet net = store(patterns, patterns.front().size());
    const nlohmann::json doc = hopfield_to_json(net, patterns);

    if (!out_dir.empty()) write_file(out_dir, "network.json", doc.dump(2) + "\n");

    if (format == Format::Text) {
        std::cout << "size:     " << net.size << "\n"
                  << "patterns: " << patterns.size() << "\n";
        for (const Pattern& p : patterns) {
            std::cout << "  " << pattern_to_string(p)
                      << "  energy " << text_double(energy_at(net, p)) << "\n";
        }
    } else if (format == Format::Doc) {
        std::cout << doc.dump(2) << "\n";
    } else {
        usage_error("hopfield store has no csv output");
    }
    return 0;
}

bool energy_monotone(const std::vector<double>& history) {
    for (std::size_t i = 1; i < history.size(); ++i) {
        if (history[i] > history[i - 1]) return false;
    }
    return true;
}

UpdateOrder order_from_flags(const std::string& order_name, std::uint64_t seed) {
    if (order_name == "ascending") return UpdateOrder::ascending();
    if (order_name == "seeded") return UpdateOrder::seeded(seed);
    usage_error("unknown update order '" + order_name + "'; use ascending or seeded");
}

int cmd_hopfield_recall(const std::vector<std::string>& pattern_args,
                        const std::string& probe_arg,
                        const std::string& order_name, std::uint64_t seed,
                        std::size_t max_sweeps, Format format,
                        const std::string& out_dir) {
    const std::vector<Pattern> patterns = parse_patterns(pattern_args);
    const HopfieldNet net = store(patterns, patterns.front().size());
    const Pattern probe = pattern_from_string(probe_arg);
    const UpdateOrder order = order_from_flags(order_name, seed);
    const RecallResult result = recall(net, probe, order, max_sweeps);

    int match = -1;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (result.state == patterns[i]) {
            match = static_cast<int>(i);
            break;
        }
    }
    const bool monotone = energy_monotone(result.energy_history);

    nlohmann::json j;
    j["probe"] = pattern_to_string(probe);
    j["state"] = pattern_to_string(result.state);
    j["converged"] = result.converged;
    j["sweeps"] = result.sweeps;
    j["matches_pattern"] = match >= 0 ? nlohmann::json(match) : nlohmann::json(nullptr);
    j["monotone"] = monotone;
    j["energy_history"] = result.energy_history;

    if (!out_dir.empty()) {
        write_file(out_dir, "result.json", j.dump(2) + "\n");
        write_file(out_dir, "energy.csv", result.energy_csv());
    }

    if (format == Format::Text) {
        std::cout << "probe:     " << pattern_to_string(probe) << "\n"
                  << "result:    " << pattern_to_string(result.state) << "\n"
                  << "matches:   "
                  << (match >= 0 ? "pattern " + std::to_string(match) : "no stored pattern")
                  << "\n"
                  << "converged: " << (result.converged ? "yes" : "no") << "\n"
                  << "sweeps:    " << result.sweeps << "\n"
                  << "energy:    " << text_double(result.energy_history.front())
                  << " -> " << text_double(result.energy_history.back()) << "\n"
                  << "monotone:  " << (monotone ? "yes" : "no") << "\n";
    } else if (format == Format::Doc) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << result.energy_csv();
    }
    return result.converged ? 0 : 3;
}

int cmd_hopfield_demo(std::size_t n, std::size_t pattern_count, std::size_t flips,
                      std::uint64_t seed, const std::string& order_name,
                      std::size_t max_sweeps, Format format,
                      const std::string& out_dir) {
    if (n == 0) usage_error("--n must be positive");
    if (pattern_count == 0) usage_error("--patterns must be positive");
    if (flips > n) usage_error("--flip cannot exceed --n");

    DetRng rng(seed);
    std::vector<Pattern> patterns(pattern_count);
    for (Pattern& p : patterns) {
        p.resize(n);
        for (std::int8_t& x : p) x = static_cast<std::int8_t>(rng.pm_one());
    }
    const HopfieldNet net = store(patterns, n);

    std::vector<Pattern> probes;
    probes.reserve(pattern_count);
    std::vector<std::size_t> indices(n);
    for (const Pattern& p : patterns) {
        Pattern probe = p;
        std::iota(indices.begin(), indices.end(), 0);
        rng.shuffle(indices);
        for (std::size_t k = 0; k < flips; ++k) {
            probe[indices[k]] = static_cast<std::int8_t>(-probe[indices[k]]);
        }
        probes.push_back(std::move(probe));
    }

    const UpdateOrder order = order_from_flags(order_name, seed);
    const std::vector<RecallResult> results =
        recall_batch(net, probes, order, max_sweeps);

    nlohmann::json j;
    j["n"] = n;
    j["patterns"] = pattern_count;
    j["flip"] = flips;
    j["seed"] = seed;
    j["order"] = order_name;
    j["results"] = nlohmann::json::array();
    std::size_t recovered = 0;
    bool all_monotone = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const RecallResult& r = results[i];
        const bool hit = r.state == patterns[i];
        const bool monotone = energy_monotone(r.energy_history);
        recovered += hit;
        all_monotone = all_monotone && monotone;
        j["results"].push_back({{"pattern", pattern_to_string(patterns[i])},
                                {"probe", pattern_to_string(probes[i])},
                                {"state", pattern_to_string(r.state)},
                                {"recovered", hit},
                                {"converged", r.converged},
                                {"sweeps", r.sweeps},
                                {"monotone", monotone},
                                {"energy_initial", r.energy_history.front()},
                                {"energy_final", r.energy_history.back()}});
    }
    j["recovered"] = recovered;
    j["all_recovered"] = recovered == results.size();
    j["all_monotone"] = all_monotone;

    if (!out_dir.empty()) {
        write_file(out_dir, "report.json", j.dump(2) + "\n");
        for (std::size_t i = 0; i < results.size(); ++i) {
            write_file(out_dir, "energy_" + std::to_string(i) + ".csv",
                       results[i].energy_csv());
        }
    }

    if (format == Format::Text) {
        std::cout << "n " << n << ", patterns " << pattern_count << ", flip " << flips
                  << ", seed " << seed << "\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const RecallResult& r = results[i];
            std::cout << "pattern " << i << ": recovered "
                      << (r.state == patterns[i] ? "yes" : "no") << ", sweeps "
                      << r.sweeps << ", energy "
                      << text_double(r.energy_history.front()) << " -> "
                      << text_double(r.energy_history.back()) << ", monotone "
                      << (energy_monotone(r.energy_history) ? "yes" : "no") << "\n";
        }
        std::cout << "recovered " << recovered << "/" << results.size() << "\n";
    } else if (format == Format::Doc) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ostringstream out;
        out.precision(17);
        out << "probe,step,energy\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& history = results[i].energy_history;
            for (std::size_t s = 0; s < history.size(); ++s) {
                out << i << "," << s << "," << history[s] << "\n";
            }
        }
        std::cout << out.str();
    }
    return recovered == results.size() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Propositional formulas as layered sigmoid networks"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format: text, csv or doc")
        ->capture_default_str();

    int rc = 0;
    const auto fmt = [&format_name] { return parse_format(format_name); };

    // parse
    std::string parse_formula_arg;
    auto* parse_cmd = app.add_subcommand("parse", "Parse a formula, print it back");
    parse_cmd->add_option("formula", parse_formula_arg, "Formula, or - for stdin")
        ->required();
    parse_cmd->callback([&] { rc = cmd_parse(parse_formula_arg, fmt()); });

    // table
    std::string table_formula_arg;
    auto* table_cmd = app.add_subcommand("table", "Print the truth table");
    table_cmd->add_option("formula", table_formula_arg, "Formula, or - for stdin")
        ->required();
    table_cmd->callback([&] { rc = cmd_table(table_formula_arg, fmt()); });

    // compile
    std::string compile_formula_arg, compile_out;
    auto* compile_cmd =
        app.add_subcommand("compile", "Compile a formula to a sigmoid network");
    compile_cmd->add_option("formula", compile_formula_arg, "Formula, or - for stdin")
        ->required();
    compile_cmd->add_option("--out", compile_out, "Directory for network.json");
    compile_cmd->callback(
        [&] { rc = cmd_compile(compile_formula_arg, fmt(), compile_out); });

    // eval
    std::string eval_formula_arg, eval_assign;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate under an assignment");
    eval_cmd->add_option("formula", eval_formula_arg, "Formula, or - for stdin")
        ->required();
    eval_cmd->add_option("--assign", eval_assign, "Comma list, e.g. p=1,q=0")
        ->required();
    eval_cmd->callback([&] { rc = cmd_eval(eval_formula_arg, eval_assign, fmt()); });

    // verify
    std::string verify_formula_arg;
    bool verify_raw = false;
    auto* verify_cmd = app.add_subcommand(
        "verify", "Check the compiled network against brute-force evaluation");
    verify_cmd->add_option("formula", verify_formula_arg, "Formula, or - for stdin")
        ->required();
    verify_cmd->add_flag("--raw", verify_raw, "Also print the activation table");
    verify_cmd->callback(
        [&] { rc = cmd_verify(verify_formula_arg, verify_raw, fmt()); });

    // compat
    std::string compat_claim, compat_poss;
    auto* compat_cmd = app.add_subcommand(
        "compat", "Check a claim against a possibility statement <>(...)");
    compat_cmd->add_option("claim", compat_claim, "Claim formula")->required();
    compat_cmd->add_option("possibility", compat_poss, "Possibility formula")
        ->required();
    compat_cmd->callback([&] { rc = cmd_compat(compat_claim, compat_poss, fmt()); });

    // train
    std::string train_formula, train_csv, train_topology = "2,2,1", train_out;
    double train_rate = 0.5, train_target = 0.4, train_init = 2.0;
    std::size_t train_epochs = 20000;
    std::uint64_t train_seed = 0;
    auto* train_cmd =
        app.add_subcommand("train", "Backpropagation on a truth table");
    train_cmd->add_option("--formula", train_formula, "Target formula");
    train_cmd->add_option("--truth-table", train_csv, "Target truth table CSV");
    train_cmd->add_option("--topology", train_topology, "Layer widths, inputs first")
        ->capture_default_str();
    train_cmd->add_option("--rate", train_rate, "Learning rate")
        ->capture_default_str();
    train_cmd->add_option("--epochs", train_epochs, "Epoch cap")
        ->capture_default_str();
    train_cmd->add_option("--target", train_target, "Worst output error target")
        ->capture_default_str();
    train_cmd->add_option("--seed", train_seed, "Seed for the initial weights")
        ->capture_default_str();
    train_cmd->add_option("--init-scale", train_init, "Initial weight range")
        ->capture_default_str();
    train_cmd->add_option("--out", train_out,
                          "Directory for report.json, loss.csv, network.json");
    train_cmd->callback([&] {
        rc = cmd_train(train_formula, train_csv, train_topology, train_rate,
                       train_epochs, train_target, train_seed, train_init, fmt(),
                       train_out);
    });

    // perceptron
    std::string pt_formula, pt_csv, pt_out;
    double pt_rate = 1.0;
    std::size_t pt_epochs = 1000;
    auto* pt_cmd = app.add_subcommand(
        "perceptron", "Single threshold unit, error-correction rule");
    pt_cmd->add_option("--formula", pt_formula, "Target formula");
    pt_cmd->add_option("--truth-table", pt_csv, "Target truth table CSV");
    pt_cmd->add_option("--rate", pt_rate, "Learning rate")->capture_default_str();
    pt_cmd->add_option("--epochs", pt_epochs, "Epoch cap")->capture_default_str();
    pt_cmd->add_option("--out", pt_out, "Directory for report.json, network.json");
    pt_cmd->callback([&] {
        rc = cmd_perceptron(pt_formula, pt_csv, pt_rate, pt_epochs, fmt(), pt_out);
    });

    // hopfield
    auto* hop_cmd = app.add_subcommand("hopfield", "Associative memory experiments");
    hop_cmd->require_subcommand(1);

    std::vector<std::string> store_patterns;
    std::string store_out;
    auto* store_cmd = hop_cmd->add_subcommand("store", "Hebbian storage");
    store_cmd->add_option("-p,--pattern", store_patterns, "Bit string, e.g. 0110")
        ->required();
    store_cmd->add_option("--out", store_out, "Directory for network.json");
    store_cmd->callback(
        [&] { rc = cmd_hopfield_store(store_patterns, fmt(), store_out); });

    std::vector<std::string> recall_patterns;
    std::string recall_probe, recall_order = "ascending", recall_out;
    std::uint64_t recall_seed = 0;
    std::size_t recall_sweeps = 100;
    auto* recall_cmd =
        hop_cmd->add_subcommand("recall", "Recall from a corrupted probe");
    recall_cmd->add_option("-p,--pattern", recall_patterns, "Stored bit string")
        ->required();
    recall_cmd->add_option("--probe", recall_probe, "Probe bit string")->required();
    recall_cmd->add_option("--order", recall_order, "ascending or seeded")
        ->capture_default_str();
    recall_cmd->add_option("--seed", recall_seed, "Seed for the seeded order")
        ->capture_default_str();
    recall_cmd->add_option("--max-sweeps", recall_sweeps, "Sweep cap")
        ->capture_default_str();
    recall_cmd->add_option("--out", recall_out,
                           "Directory for result.json, energy.csv");
    recall_cmd->callback([&] {
        rc = cmd_hopfield_recall(recall_patterns, recall_probe, recall_order,
                                 recall_seed, recall_sweeps, fmt(), recall_out);
    });

    std::size_t demo_n = 16, demo_patterns = 1, demo_flip = 3, demo_sweeps = 100;
    std::uint64_t demo_seed = 0;
    std::string demo_order = "ascending", demo_out;
    auto* demo_cmd = hop_cmd->add_subcommand(
        "demo", "Store random patterns, corrupt, recall");
    demo_cmd->add_option("--n", demo_n, "Neurons")->capture_default_str();
    demo_cmd->add_option("--patterns", demo_patterns, "Stored pattern count")
        ->capture_default_str();
    demo_cmd->add_option("--flip", demo_flip, "Bits flipped per probe")
        ->capture_default_str();
    demo_cmd->add_option("--seed", demo_seed, "Seed for patterns and flips")
        ->capture_default_str();
    demo_cmd->add_option("--order", demo_order, "ascending or seeded")
        ->capture_default_str();
    demo_cmd->add_option("--max-sweeps", demo_sweeps, "Sweep cap")
        ->capture_default_str();
    demo_cmd->add_option("--out", demo_out, "Directory for report and energy CSVs");
    demo_cmd->callback([&] {
        rc = cmd_hopfield_demo(demo_n, demo_patterns, demo_flip, demo_seed,
                               demo_order, demo_sweeps, fmt(), demo_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CliError& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
