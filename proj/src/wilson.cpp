#include "incmat/wilson.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

namespace incmat {

RankBreakdown wilson_rank(const InclusionParams& raw) {
    raw.validate();
    RankBreakdown out{raw, normalize_params(raw), {}, 0};
    const InclusionParams& q = out.normalized.params;
    const std::uint32_t p = q.field.characteristic();
    for (int j = 0; j <= q.i; ++j) {
        RankTerm term;
        term.j = j;
        term.included = !p_divides_binomial(p, static_cast<std::uint64_t>(q.n - j),
                                            static_cast<std::uint64_t>(q.i - j));
        term.value = binomial(q.m, j) - binomial(q.m, j - 1);
        if (term.included) out.total += term.value;
        out.terms.push_back(std::move(term));
    }
    return out;
}

bool TableRow::matches() const { return oracle.has_value() && formula.total == BigInt(*oracle); }

std::vector<TableRow> rank_table_rows(const TableOptions& options) {
    const FieldSpec field(options.p);
    std::vector<TableRow> rows;
    for (int m = std::max(options.m_min, 0); m <= options.m_max; ++m) {
        for (int n = 0; n <= m; ++n) {
            const int i_max = options.triples == TripleRule::all ? n : std::min(n, m - n);
            for (int i = 0; i <= i_max; ++i) {
                InclusionParams params{m, i, n, field};
                TableRow row{wilson_rank(params), std::nullopt};
                if (options.with_oracle) row.oracle = oracle_rank(params, options.budget);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

namespace {

nlohmann::ordered_json big_to_json(const BigInt& v) {
    if (v.fits_ulong_p()) return static_cast<std::uint64_t>(v.get_ui());
    return v.get_str();
}

}  // namespace

void write_rank_table(std::ostream& os, const std::vector<TableRow>& rows, TableFormat format) {
    switch (format) {
        case TableFormat::csv: {
            os << "m,n,i,p,formula_rank,oracle_rank,match\n";
            for (const TableRow& row : rows) {
                const InclusionParams& r = row.formula.raw;
                os << r.m << ',' << r.n << ',' << r.i << ',' << r.field.characteristic() << ','
                   << row.formula.total.get_str() << ',';
                if (row.oracle) os << *row.oracle << ',' << (row.matches() ? "true" : "false");
                else os << ',';
                os << '\n';
            }
            break;
        }
        case TableFormat::json: {
            nlohmann::ordered_json doc = nlohmann::ordered_json::array();
            for (const TableRow& row : rows) {
                const InclusionParams& r = row.formula.raw;
                const InclusionParams& q = row.formula.normalized.params;
                nlohmann::ordered_json terms = nlohmann::ordered_json::array();
                for (const RankTerm& t : row.formula.terms) {
                    terms.push_back({{"j", t.j}, {"included", t.included}, {"term", big_to_json(t.value)}});
                }
                nlohmann::ordered_json obj;
                obj["m"] = r.m;
                obj["n"] = r.n;
                obj["i"] = r.i;
                obj["p"] = r.field.characteristic();
                obj["formula_rank"] = big_to_json(row.formula.total);
                obj["oracle_rank"] = row.oracle ? nlohmann::ordered_json(*row.oracle) : nlohmann::ordered_json(nullptr);
                obj["match"] = row.oracle ? nlohmann::ordered_json(row.matches()) : nlohmann::ordered_json(nullptr);
                obj["normalized"] = {{"m", q.m}, {"n", q.n}, {"i", q.i},
                                     {"transposed", row.formula.normalized.transposed}};
                obj["terms"] = std::move(terms);
                doc.push_back(std::move(obj));
            }
            os << doc.dump(2) << '\n';
            break;
        }
        case TableFormat::markdown: {
            os << "| m | n | i | p | formula_rank | oracle_rank | match |\n";
            os << "|---|---|---|---|---|---|---|\n";
            for (const TableRow& row : rows) {
                const InclusionParams& r = row.formula.raw;
                os << "| " << r.m << " | " << r.n << " | " << r.i << " | " << r.field.characteristic()
                   << " | " << row.formula.total.get_str() << " | ";
                if (row.oracle) os << *row.oracle << " | " << (row.matches() ? "true" : "false");
                else os << "- | -";
                os << " |\n";
            }
            break;
        }
    }
}

void rank_table(std::ostream& os, const TableOptions& options, TableFormat format) {
    write_rank_table(os, rank_table_rows(options), format);
    if (!os) throw std::runtime_error("rank_table: write failed");
}

VerifySummary verify_sweep(const VerifyOptions& options) {
    std::vector<FieldSpec> fields;
    for (std::uint32_t p : options.primes) fields.emplace_back(p);
    VerifySummary summary;
    for (const FieldSpec& field : fields) {
        for (int m = 0; m <= options.max_m; ++m) {
            for (int n = 0; n <= m; ++n) {
                for (int i = 0; i <= n; ++i) {
                    InclusionParams params{m, i, n, field};
                    RankBreakdown formula = wilson_rank(params);
                    if (options.inject_fault) {
                        RankTerm& t0 = formula.terms.front();
                        formula.total += t0.included ? BigInt(-t0.value) : t0.value;
                    }
                    const std::size_t oracle = oracle_rank(params, options.budget);
                    ++summary.cases;
                    if (formula.total != BigInt(oracle)) {
                        summary.mismatches.push_back({params, formula.total, oracle});
                    }
                }
            }
        }
    }
    return summary;
}

}  // namespace incmat
