#include "zbrace/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "zbrace/brace.hpp"
#include "zbrace/classification.hpp"
#include "zbrace/errors.hpp"
#include "zbrace/json_io.hpp"
#include "zbrace/ybe.hpp"

namespace zbrace::cli {

namespace {

using json::Json;

struct Options {
    std::string spec_input;
    std::int64_t bound = 1;
    std::string row;
    RowParams params;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    std::int64_t box = 4;
    unsigned threads = 1;
    std::string output;
};

BraceSpec read_spec(const std::string& source, std::istream& in) {
    std::string text;
    if (source.empty() || source == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else if (source.find_first_not_of(" \t\r\n") != std::string::npos &&
               source[source.find_first_not_of(" \t\r\n")] == '{') {
        text = source;
    } else {
        std::ifstream file(source);
        if (!file) throw std::invalid_argument("cannot open spec file '" + source + "'");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("spec is not valid JSON: ") + e.what());
    }
    return json::spec_from_json(j);
}

class Emitter {
public:
    Emitter(const std::string& path, std::ostream& out) : out_(out) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot write output file '" + path + "'");
        }
    }
    void emit(const Json& j) {
        std::ostream& os = file_.is_open() ? static_cast<std::ostream&>(file_) : out_;
        os << j.dump(2) << '\n';
    }

private:
    std::ostream& out_;
    std::ofstream file_;
};

void add_param_flags(CLI::App& cmd, Options& o) {
    cmd.add_option("--m", o.params.m, "row parameter m");
    cmd.add_option("--p", o.params.p, "row parameter p");
    cmd.add_option("--q", o.params.q, "row parameter q");
    cmd.add_option("--n", o.params.n, "row parameter n");
    cmd.add_option("--sign1", o.params.sign1, "first sign (+1 or -1)");
    cmd.add_option("--sign2", o.params.sign2, "second sign (+1 or -1)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact engine for λ-homomorphic braces on Z^2", "zbrace"};
    app.require_subcommand(1);
    Options o;

    auto spec_arg = [&](CLI::App* cmd) {
        cmd->add_option("spec", o.spec_input, "inline JSON, file path, or - for stdin");
        cmd->add_option("--output", o.output, "write JSON here instead of stdout");
    };

    auto* check = app.add_subcommand("check", "validate a pair (phi, psi)");
    spec_arg(check);
    auto* classify = app.add_subcommand("classify", "list the table rows a pair satisfies");
    spec_arg(classify);
    auto* generate = app.add_subcommand("generate", "build the pair of a row family");
    generate->add_option("--row", o.row, "row label such as 1.2")->required();
    add_param_flags(*generate, o);
    generate->add_option("--output", o.output, "write JSON here instead of stdout");
    auto* search = app.add_subcommand("search", "exhaustive classification check");
    search->add_option("--bound", o.bound, "entry bound")->check(CLI::PositiveNumber);
    search->add_option("--threads", o.threads, "worker threads, 0 = all cores");
    search->add_option("--output", o.output, "write JSON here instead of stdout");
    auto* orders = app.add_subcommand("orders", "cross-check matrix orders");
    orders->add_option("--bound", o.bound, "entry bound")->check(CLI::PositiveNumber);
    orders->add_option("--output", o.output, "write JSON here instead of stdout");
    auto* ybe = app.add_subcommand("ybe", "sampled Yang-Baxter checks for a brace");
    spec_arg(ybe);
    ybe->add_option("--samples", o.samples, "number of triples")->check(CLI::PositiveNumber);
    ybe->add_option("--seed", o.seed, "random seed");
    ybe->add_option("--box", o.box, "coordinate box")->check(CLI::PositiveNumber);

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "zbrace: " << e.what() << '\n';
        return kUsage;
    }

    try {
        Emitter emitter(o.output, out);
        if (*check) {
            const Verdict v = check_pair(read_spec(o.spec_input, in));
            emitter.emit(json::to_json(v));
            return v.valid ? kPass : kFail;
        }
        if (*classify) {
            const BraceSpec spec = read_spec(o.spec_input, in);
            const auto rows = row_membership(spec);
            const bool valid = check_pair(spec).valid;
            emitter.emit(json::to_json(rows));
            if (!valid) {
                err << "note: not a brace\n";
                return kPass;
            }
            if (rows.empty()) {
                err << "ERROR: valid pair matches no table row; the classification is violated\n";
                return kFail;
            }
            return kPass;
        }
        if (*generate) {
            const auto label = parse_row(o.row);
            if (!label) throw BadParams("unknown row '" + o.row + "'");
            emitter.emit(json::to_json(generate_row(*label, o.params)));
            return kPass;
        }
        if (*search) {
            const SearchReport report = exhaustive_search(o.bound, o.threads);
            emitter.emit(json::to_json(report));
            return report.classification_holds() && report.kernel_form_mismatches.empty() ? kPass : kFail;
        }
        if (*orders) {
            const OrdersReport report = orders_crosscheck(o.bound);
            emitter.emit(json::to_json(report));
            return report.disagreements.empty() ? kPass : kFail;
        }
        if (*ybe) {
            const BraceSpec spec = read_spec(o.spec_input, in);
            const ValidBrace brace{spec};
            err << "seed: " << o.seed << '\n';
            const YbeReport report = run_ybe_suite(brace, o.samples, o.seed, o.box);
            emitter.emit(json::to_json(report));
            return report.passed() ? kPass : kFail;
        }
    } catch (const InvalidSpec& e) {
        err << "zbrace: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        err << "zbrace: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace zbrace::cli
