#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "incmat/inclusion.hpp"
#include "incmat/linalg.hpp"
#include "incmat/specht.hpp"
#include "incmat/wilson.hpp"

namespace incmat::cli {

namespace {

struct Config {
    int m = -1;
    int n = -1;
    int i = -1;
    std::uint64_t p = 2;
    std::string method = "formula";
    std::string table_method = "both";
    std::string format = "csv";
    std::string triples = "normalized";
    int min_m = 1;
    int max_m = 6;
    std::string primes = "2,3,5";
    std::uint64_t budget = kDefaultMemoryBudget;
    std::string out_path;
    bool verbose = false;
    bool streaming = false;
    bool inject_fault = false;
    // bench has its own ladder defaults
    struct {
        int n = 3;
        int i = 2;
        int min_m = 10;
        int max_m = 14;
        int repeat = 1;
    } bench;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t budget_from_env() {
    const char* raw = std::getenv(kBudgetEnv);
    if (raw == nullptr || *raw == '\0') return kDefaultMemoryBudget;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string(kBudgetEnv) + " must be a byte count, got '" + raw + "'");
    }
}

InclusionParams triple(const Config& c) {
    if (c.m < 0 || c.n < 0 || c.i < 0) throw UsageError("--m, --n and --i are required");
    InclusionParams params{c.m, c.i, c.n, FieldSpec(c.p)};
    params.validate();
    return params;
}

std::vector<std::uint32_t> parse_primes(const std::string& list) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(FieldSpec(std::stoull(item)).characteristic());
        } catch (const std::logic_error&) {
            throw UsageError("--primes entries must be 0 or prime, got '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("--primes must list at least one characteristic");
    return out;
}

TableFormat parse_format(const std::string& f) {
    if (f == "csv") return TableFormat::csv;
    if (f == "json") return TableFormat::json;
    if (f == "md") return TableFormat::markdown;
    throw UsageError("unknown --format '" + f + "'");
}

void print_breakdown(std::ostream& os, const RankBreakdown& b) {
    const auto& r = b.raw;
    const auto& q = b.normalized.params;
    os << "params m=" << r.m << " n=" << r.n << " i=" << r.i << " p=" << r.field.characteristic()
       << '\n';
    os << "normalized m=" << q.m << " n=" << q.n << " i=" << q.i
       << " transposed=" << (b.normalized.transposed ? "true" : "false") << '\n';
    for (const RankTerm& t : b.terms) {
        os << "term j=" << t.j << " C(" << q.n - t.j << "," << q.i - t.j << ")"
           << " included=" << (t.included ? "true" : "false") << " value=" << t.value.get_str()
           << '\n';
    }
}

int cmd_rank(const Config& c, std::ostream& out) {
    const InclusionParams params = triple(c);
    const bool want_formula = c.method == "formula" || c.method == "both";
    const bool want_oracle = c.method == "eliminate" || c.method == "both";
    if (!want_formula && !want_oracle) throw UsageError("unknown --method '" + c.method + "'");
    if (c.streaming && params.field.is_rational()) {
        throw UsageError("--streaming needs a prime characteristic");
    }

    std::optional<RankBreakdown> formula;
    if (want_formula) {
        formula = wilson_rank(params);
        if (c.verbose) print_breakdown(out, *formula);
    }
    std::optional<std::size_t> oracle;
    if (want_oracle) {
        oracle = c.streaming ? streaming_rank(params) : rank(build_inclusion_matrix(params, c.budget));
    }

    std::vector<std::string> parts;
    if (formula) parts.push_back("formula=" + formula->total.get_str());
    if (oracle) parts.push_back("oracle=" + std::to_string(*oracle));
    int code = kOk;
    if (formula && oracle) {
        const bool same = formula->total == BigInt(*oracle);
        parts.push_back(same ? "MATCH" : "MISMATCH");
        if (!same) code = kMismatch;
    }
    for (std::size_t k = 0; k < parts.size(); ++k) out << (k ? " " : "") << parts[k];
    out << '\n';
    return code;
}

int cmd_verify(const Config& c, std::ostream& out) {
    if (c.max_m < 0) throw UsageError("--max-m must be non-negative");
    VerifyOptions options;
    options.max_m = c.max_m;
    options.primes = parse_primes(c.primes);
    options.budget = c.budget;
    options.inject_fault = c.inject_fault;
    const VerifySummary summary = verify_sweep(options);
    for (const Mismatch& mm : summary.mismatches) {
        out << "MISMATCH m=" << mm.params.m << " n=" << mm.params.n << " i=" << mm.params.i
            << " p=" << mm.params.field.characteristic() << " formula=" << mm.formula.get_str()
            << " oracle=" << mm.oracle << '\n';
    }
    out << summary.cases << " cases, " << summary.mismatches.size() << " mismatches\n";
    return summary.mismatches.empty() ? kOk : kMismatch;
}

int cmd_table(const Config& c, std::ostream& out) {
    TableOptions options;
    options.p = FieldSpec(c.p).characteristic();
    options.m_min = c.min_m;
    options.m_max = c.max_m;
    if (c.max_m > kMaxGroundSet) throw UsageError("--max-m too large");
    if (c.triples == "normalized") options.triples = TripleRule::normalized;
    else if (c.triples == "all") options.triples = TripleRule::all;
    else throw UsageError("unknown --triples '" + c.triples + "'");
    if (c.table_method == "formula") options.with_oracle = false;
    else if (c.table_method == "both" || c.table_method == "eliminate") options.with_oracle = true;
    else throw UsageError("unknown --method '" + c.table_method + "'");
    options.budget = c.budget;
    const TableFormat format = parse_format(c.format);
    const auto rows = rank_table_rows(options);
    write_rank_table(out, rows, format);
    const bool all_match = std::all_of(rows.begin(), rows.end(),
                                       [](const TableRow& r) { return !r.oracle || r.matches(); });
    return all_match ? kOk : kMismatch;
}

int cmd_filtration(const Config& c, std::ostream& out, std::ostream& err) {
    const InclusionParams raw = triple(c);
    const NormalizedParams normalized = normalize_params(raw);
    if (normalized.transposed) {
        const auto& q = normalized.params;
        err << "note: auditing the transpose A_" << q.i << "^" << q.n << "(" << q.m << ")\n";
    }
    const FiltrationReport report = filtration_audit(normalized.params, c.budget);
    write_filtration_json(out, report);
    return report.match() ? kOk : kMismatch;
}

int cmd_dump(const Config& c, std::ostream& out) {
    write_matrix(out, build_inclusion_matrix(triple(c), c.budget));
    return kOk;
}

int cmd_bench(const Config& config, std::ostream& out) {
    const auto& c = config.bench;
    if (c.min_m > c.max_m) throw UsageError("--min-m exceeds --max-m");
    if (c.n < 0 || c.i < 0) throw UsageError("--n and --i must be non-negative");
    const FieldSpec field(config.p);
    if (field.is_rational()) throw UsageError("bench needs a prime characteristic");
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };
    int code = kOk;
    out << std::fixed << std::setprecision(3);
    for (int m = c.min_m; m <= c.max_m; ++m) {
        const InclusionParams params{m, c.i, c.n, field};
        params.validate();
        const BigInt formula = wilson_rank(params).total;
        out << "m=" << m << " n=" << c.n << " i=" << c.i << " p=" << field.characteristic()
            << " formula=" << formula.get_str();

        bool ok = true;
        const std::uint64_t need = dense_bytes(params);
        if (need > config.budget) {
            out << " dense=skipped(dense) dense_ms=- dense_bytes=" << need;
        } else {
            std::size_t r = 0;
            double best = 0;
            for (int rep = 0; rep < c.repeat; ++rep) {
                const auto t0 = clock::now();
                r = rank(build_inclusion_matrix(params, config.budget));
                const double ms = ms_since(t0);
                best = rep == 0 ? ms : std::min(best, ms);
            }
            ok = ok && BigInt(r) == formula;
            out << " dense=" << r << " dense_ms=" << best << " dense_bytes=" << need;
        }

        std::size_t r = 0;
        std::uint64_t bytes = 0;
        double best = 0;
        for (int rep = 0; rep < c.repeat; ++rep) {
            const auto t0 = clock::now();
            r = streaming_rank(params, &bytes);
            const double ms = ms_since(t0);
            best = rep == 0 ? ms : std::min(best, ms);
        }
        ok = ok && BigInt(r) == formula;
        out << " stream=" << r << " stream_ms=" << best << " stream_bytes=" << bytes
            << (ok ? " MATCH" : " MISMATCH") << '\n';
        if (!ok) code = kMismatch;
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Exact ranks of subset inclusion matrices", "incmat"};
    app.require_subcommand(1);
    std::optional<std::uint64_t> budget_flag;
    app.add_option("--memory-budget", budget_flag,
                   std::string("Dense storage budget in bytes (env ") + kBudgetEnv + ")");
    app.add_option("--out", c.out_path, "Write the document here instead of stdout");

    auto add_triple = [&c](CLI::App* sub) {
        sub->add_option("--m", c.m, "Ground set size")->required();
        sub->add_option("--n", c.n, "Column subset size")->required();
        sub->add_option("--i", c.i, "Row subset size")->required();
        sub->add_option("--p", c.p, "Characteristic: 0 or a prime")->capture_default_str();
    };

    CLI::App* rank_cmd = app.add_subcommand("rank", "Rank of A_i^n(m) by formula and/or elimination");
    add_triple(rank_cmd);
    rank_cmd->add_option("--method", c.method, "formula | eliminate | both")->capture_default_str();
    rank_cmd->add_flag("--verbose,-v", c.verbose, "Print the per-term breakdown");
    rank_cmd->add_flag("--streaming", c.streaming, "Eliminate column by column (prime fields)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Sweep formula against elimination");
    verify_cmd->add_option("--max-m", c.max_m, "Largest ground set")->capture_default_str();
    verify_cmd->add_option("--primes", c.primes, "Comma-separated characteristics")
        ->capture_default_str();
    // Harness self-test: corrupts one formula term so the sweep must fail.
    verify_cmd->add_flag("--inject-fault", c.inject_fault)->group("");

    CLI::App* table_cmd = app.add_subcommand("table", "Emit a rank table");
    table_cmd->add_option("--p", c.p, "Characteristic: 0 or a prime")->capture_default_str();
    table_cmd->add_option("--min-m", c.min_m)->capture_default_str();
    table_cmd->add_option("--max-m", c.max_m)->capture_default_str();
    table_cmd->add_option("--format", c.format, "csv | json | md")->capture_default_str();
    table_cmd->add_option("--triples", c.triples, "normalized | all")->capture_default_str();
    table_cmd->add_option("--method", c.table_method, "formula | both")->capture_default_str();

    CLI::App* filt_cmd = app.add_subcommand("filtration", "Audit the column-space filtration");
    add_triple(filt_cmd);

    CLI::App* dump_cmd = app.add_subcommand("dump", "Print A_i^n(m) in plain text");
    add_triple(dump_cmd);

    CLI::App* bench_cmd = app.add_subcommand("bench", "Time dense and streaming rank over a ladder of m");
    bench_cmd->add_option("--p", c.p)->capture_default_str();
    bench_cmd->add_option("--i", c.bench.i)->capture_default_str();
    bench_cmd->add_option("--n", c.bench.n)->capture_default_str();
    bench_cmd->add_option("--min-m", c.bench.min_m)->capture_default_str();
    bench_cmd->add_option("--max-m", c.bench.max_m)->capture_default_str();
    bench_cmd->add_option("--repeat", c.bench.repeat)->check(CLI::PositiveNumber)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        c.budget = budget_flag ? *budget_flag : budget_from_env();

        std::ofstream file;
        std::ostream* doc = &out;
        if (!c.out_path.empty()) {
            file.open(c.out_path);
            if (!file) {
                err << "error: cannot open " << c.out_path << " for writing\n";
                return kResource;
            }
            doc = &file;
        }

        int code = kOk;
        if (rank_cmd->parsed()) code = cmd_rank(c, *doc);
        else if (verify_cmd->parsed()) code = cmd_verify(c, *doc);
        else if (table_cmd->parsed()) code = cmd_table(c, *doc);
        else if (filt_cmd->parsed()) code = cmd_filtration(c, *doc, err);
        else if (dump_cmd->parsed()) code = cmd_dump(c, *doc);
        else if (bench_cmd->parsed()) code = cmd_bench(c, *doc);

        doc->flush();
        if (!*doc) {
            err << "error: write failed\n";
            return kResource;
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kResource;
    }
}

}  // namespace incmat::cli
