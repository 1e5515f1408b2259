#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <condorcet/condorcet.hpp>

namespace condorcet::cli {
namespace {

enum class Format { Conditions, Orders, Histogram };

struct GenerateOptions {
    int n = 0;
    std::string rules;
    std::string out;
    std::string format = "conditions";
    bool maximal_only = false;
    bool copious_only = false;
    unsigned threads = 1;
    std::string prefix;
};

struct ExpandOptions {
    std::string in;
    std::string out;
    int n = 0;
};

struct CheckOptions {
    int n = 0;
    std::string rules;
    bool copious_only = false;
};

struct StatsOptions {
    std::string in;
    std::string out;
    int n = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RuleSet parse_rules(const std::string& text)
{
    try {
        return RuleSet::parse(text);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
}

// Where a subcommand writes: a file (with manifest) or the caller's stream.
class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : path_(path)
    {
        if (path.empty()) {
            stream_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file_) throw std::runtime_error("cannot open output file '" + path + "' for writing");
        stream_ = file_.get();
    }

    std::ostream& stream() { return *stream_; }

    void check()
    {
        if (!*stream_) throw std::runtime_error("write failed" + (path_.empty() ? std::string() : " for '" + path_ + "'"));
    }

    // Closes the file and writes the manifest beside it.
    void finish(io::Manifest manifest)
    {
        stream_->flush();
        check();
        if (!file_) return;
        file_->close();
        manifest.set("output", path_);
        manifest.set("output_crc32", io::hex32(io::file_crc32(path_)));
        std::ofstream m(io::manifest_path(path_), std::ios::trunc);
        if (!m) throw std::runtime_error("cannot write manifest for '" + path_ + "'");
        manifest.write(m);
        if (!m) throw std::runtime_error("cannot write manifest for '" + path_ + "'");
    }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

std::string seconds(std::chrono::duration<double> d)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << d.count();
    return s.str();
}

io::Manifest base_manifest(const std::string& command)
{
    io::Manifest m;
    m.set("command", command);
    m.set("engine_version", CONDORCET_VERSION);
    return m;
}

io::ConditionsFile read_conditions_file(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    auto file = io::read_conditions(in, n);
    if (file.n == 0) throw std::runtime_error("'" + path + "' holds no code strings and no header");
    return file;
}

int do_generate(const GenerateOptions& o, std::ostream& out)
{
    Format format;
    if (o.format == "conditions") format = Format::Conditions;
    else if (o.format == "orders") format = Format::Orders;
    else if (o.format == "histogram") format = Format::Histogram;
    else throw UsageError("--format must be conditions, orders or histogram");
    if (o.threads < 1) throw UsageError("--threads must be positive");
    if (o.n < 3 || o.n > kMaxAlternatives) throw UsageError("--n must be in 3..12");

    SearchConfig config;
    config.n = o.n;
    config.rules = parse_rules(o.rules);
    config.maximal_only = o.maximal_only;
    config.copious_only = o.copious_only;
    config.thread_count = o.threads;

    ConditionAssignment prefix(o.n);
    if (!o.prefix.empty()) {
        auto text = o.prefix;
        if (text.size() > choose3(o.n)) throw UsageError("--prefix is longer than C(n,3) slots");
        text.resize(choose3(o.n), '0');
        try {
            prefix = ConditionAssignment::parse(text, o.n);
        } catch (const PreconditionError& e) {
            throw UsageError(std::string("--prefix: ") + e.what());
        }
    }

    Output output(o.out, out);
    auto& stream = output.stream();
    SizeHistogram histogram;
    if (format == Format::Conditions) stream << io::conditions_header(o.n, config.rules) << '\n';

    const bool streaming = o.threads == 1;
    LeafSink sink = [&](const ConditionAssignment& leaf) {
        switch (format) {
        case Format::Conditions:
            stream << to_code_string(leaf) << '\n';
            break;
        case Format::Orders:
            io::write_domain(stream, expand(leaf), leaf);
            break;
        case Format::Histogram:
            histogram.add(expand(leaf).size());
            return;
        }
        if (streaming) stream.flush();
        output.check();
    };

    SearchStats stats;
    try {
        stats = generate_from(config, prefix, sink);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    if (format == Format::Histogram) io::write_histogram(stream, histogram);

    auto manifest = base_manifest("generate");
    manifest.set("n", std::to_string(o.n));
    manifest.set("rules", config.rules.tokens());
    manifest.set("format", o.format);
    manifest.set("threads", std::to_string(o.threads));
    manifest.set("maximal_only", o.maximal_only ? "1" : "0");
    manifest.set("copious_only", o.copious_only ? "1" : "0");
    manifest.set("prefix", to_code_string(prefix));
    manifest.set("wall_time_s", seconds(stats.wall_time));
    manifest.set("leaves_emitted", std::to_string(stats.leaves_emitted));
    manifest.set("nodes_visited", std::to_string(stats.nodes_visited));
    manifest.set("nodes_pruned", std::to_string(stats.nodes_pruned));
    output.finish(std::move(manifest));
    return kOk;
}

int do_expand(const ExpandOptions& o, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    auto file = read_conditions_file(o.in, o.n);
    Output output(o.out, out);
    for (const auto& a : file.assignments) {
        if (!a.is_complete()) throw std::runtime_error("cannot expand incomplete code string " + to_code_string(a));
        io::write_domain(output.stream(), expand(a), a);
        output.check();
    }
    auto manifest = base_manifest("expand");
    manifest.set("n", std::to_string(file.n));
    manifest.set("input", o.in);
    manifest.set("domains", std::to_string(file.assignments.size()));
    manifest.set("wall_time_s", seconds(std::chrono::steady_clock::now() - start));
    output.finish(std::move(manifest));
    return kOk;
}

int do_check(const CheckOptions& o, std::ostream& out)
{
    if (o.n < 3 || o.n > kMaxAlternatives) throw UsageError("--n must be in 3..12");
    SearchConfig config;
    config.n = o.n;
    config.rules = parse_rules(o.rules);
    config.copious_only = o.copious_only;
    auto verdict = oracle::cross_check(o.n, config.rules, o.copious_only, [&] { return generate_all(config); });
    out << "n=" << o.n << " rules=" << config.rules.tokens() << (o.copious_only ? " copious-only" : "")
        << " oracle=" << verdict.oracle_count << " generator=" << verdict.generator_count << " verdict="
        << (verdict.equal ? "equal" : "different") << '\n';
    for (const auto& a : verdict.only_in_oracle) out << "only-in-oracle " << to_code_string(a) << '\n';
    for (const auto& a : verdict.only_in_generator) out << "only-in-generator " << to_code_string(a) << '\n';
    return verdict.equal ? kOk : kFailure;
}

int do_stats(const StatsOptions& o, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    auto file = read_conditions_file(o.in, o.n);
    for (const auto& a : file.assignments) {
        if (!a.is_complete()) throw std::runtime_error("cannot expand incomplete code string " + to_code_string(a));
    }
    auto h = histogram(file.assignments);
    Output output(o.out, out);
    io::write_histogram(output.stream(), h);
    auto manifest = base_manifest("stats");
    manifest.set("n", std::to_string(file.n));
    manifest.set("input", o.in);
    manifest.set("classes", std::to_string(h.total()));
    manifest.set("wall_time_s", seconds(std::chrono::steady_clock::now() - start));
    output.finish(std::move(manifest));
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"cdgen: isomorph-free generation of Condorcet domains from never conditions"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate_cmd = app.add_subcommand("generate", "Generate one representative per isomorphism class");
    generate_cmd->add_option("--n", gen.n, "Number of alternatives (3..12)")->required();
    generate_cmd->add_option("--rules", gen.rules, "Allowed never conditions, e.g. 2N3,2N1")->required();
    generate_cmd->add_option("--out", gen.out, "Output path (default: stdout, no manifest)");
    generate_cmd->add_option("--format", gen.format, "conditions | orders | histogram");
    generate_cmd->add_flag("--maximal-only", gen.maximal_only, "Keep only maximal domains");
    generate_cmd->add_flag("--copious-only", gen.copious_only, "Search copious domains only");
    generate_cmd->add_option("--threads", gen.threads, "Worker threads");
    generate_cmd->add_option("--prefix", gen.prefix, "Code-string prefix of the subtree to search");

    ExpandOptions exp;
    auto* expand_cmd = app.add_subcommand("expand", "Expand code strings into full domains");
    expand_cmd->add_option("--in", exp.in, "Conditions file")->required();
    expand_cmd->add_option("--out", exp.out, "Domain file (default: stdout)");
    expand_cmd->add_option("--n", exp.n, "Number of alternatives when the file has no header");

    CheckOptions chk;
    auto* check_cmd = app.add_subcommand("check", "Cross-check the generator against brute force");
    check_cmd->add_option("--n", chk.n, "Number of alternatives")->required();
    check_cmd->add_option("--rules", chk.rules, "Allowed never conditions")->required();
    check_cmd->add_flag("--copious-only", chk.copious_only, "Compare copious classes only");

    StatsOptions st;
    auto* stats_cmd = app.add_subcommand("stats", "Histogram of domain sizes for a conditions file");
    stats_cmd->add_option("--in", st.in, "Conditions file")->required();
    stats_cmd->add_option("--out", st.out, "Histogram file (default: stdout)");
    stats_cmd->add_option("--n", st.n, "Number of alternatives when the file has no header");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*generate_cmd) return do_generate(gen, out);
        if (*expand_cmd) return do_expand(exp, out);
        if (*check_cmd) return do_check(chk, out);
        if (*stats_cmd) return do_stats(st, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const oracle::GuardError& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

} // namespace condorcet::cli
