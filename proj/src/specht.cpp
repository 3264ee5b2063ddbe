#include "incmat/specht.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "incmat/linalg.hpp"
#include "incmat/wilson.hpp"

namespace incmat {

TwoRowTableau::TwoRowTableau(std::vector<int> first_row, std::vector<int> second_row)
    : first_(std::move(first_row)), second_(std::move(second_row)) {
    const int m = ground();
    if (m > kMaxGroundSet) throw InvalidArgument("tableau too large");
    std::vector<bool> seen(m + 1, false);
    for (const auto* row : {&first_, &second_}) {
        for (int x : *row) {
            if (x < 1 || x > m || seen[x]) {
                throw InvalidArgument("tableau rows must partition [1, " + std::to_string(m) + "]");
            }
            seen[x] = true;
        }
    }
}

Subset TwoRowTableau::tabloid() const {
    std::vector<int> s = second_;
    std::sort(s.begin(), s.end());
    return Subset(ground(), std::move(s));
}

TwoRowTableau TwoRowTableau::moved(int j) const {
    if (j < 0 || j > static_cast<int>(second_.size())) throw InvalidArgument("moved: j out of range");
    std::vector<int> first = first_;
    first.insert(first.end(), second_.begin() + j, second_.end());
    return TwoRowTableau(std::move(first), std::vector<int>(second_.begin(), second_.begin() + j));
}

std::ostream& operator<<(std::ostream& os, const TwoRowTableau& t) {
    os << '(';
    for (std::size_t c = 0; c < t.first_row().size(); ++c) os << (c ? "," : "") << t.first_row()[c];
    os << " / ";
    for (std::size_t c = 0; c < t.second_row().size(); ++c) os << (c ? "," : "") << t.second_row()[c];
    return os << ')';
}

std::vector<Transposition> stabilizer_transpositions(const TwoRowTableau& t, int j) {
    if (j < 0 || j > t.depth()) {
        throw InvalidArgument("stabilizer_transpositions: j=" + std::to_string(j) +
                              " exceeds the number of columns");
    }
    std::vector<Transposition> out;
    for (int c = 0; c < j; ++c) out.push_back({t.first_row()[c], t.second_row()[c]});
    return out;
}

ModuleVector::ModuleVector(FieldSpec field, int m, int k)
    : m_(m), k_(k), coeffs_(field, binomial_u64(m, k)) {}

ModuleVector::ModuleVector(int m, int k, ExactVector coeffs) : m_(m), k_(k), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != binomial_u64(m, k)) throw InvalidArgument("ModuleVector: wrong length");
}

ModuleVector ModuleVector::tabloid(FieldSpec field, const Subset& second_row) {
    ModuleVector v(field, second_row.ground(), second_row.size());
    v.add(second_row, 1);
    return v;
}

Rational ModuleVector::coefficient(const Subset& s) const {
    if (s.ground() != m_ || s.size() != k_) throw InvalidArgument("coefficient: wrong subset shape");
    return coeffs_.value(subset_rank(s).rank);
}

void ModuleVector::add(const Subset& s, long long delta) {
    if (s.ground() != m_ || s.size() != k_) throw InvalidArgument("add: wrong subset shape");
    coeffs_.add(subset_rank(s).rank, delta);
}

ModuleVector polytabloid(const TwoRowTableau& t, int j, FieldSpec field) {
    if (j < 0 || j > t.depth()) {
        throw InvalidArgument("polytabloid: j=" + std::to_string(j) + " exceeds the number of columns");
    }
    const int m = t.ground();
    const int k = static_cast<int>(t.second_row().size());
    ModuleVector out(field, m, k);
    std::vector<int> row(k);
    // Signs are taken in the integers and reduced on accumulation.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << j); ++mask) {
        std::copy(t.second_row().begin(), t.second_row().end(), row.begin());
        for (int c = 0; c < j; ++c)
            if (mask >> c & 1) row[c] = t.first_row()[c];
        std::sort(row.begin(), row.end());
        out.add(Subset(m, row), std::popcount(mask) % 2 ? -1 : 1);
    }
    return out;
}

ModuleVector psi_apply(const ModuleVector& v, int j) {
    if (j < 0 || j > v.subset_size()) {
        throw InvalidArgument("psi_apply: j=" + std::to_string(j) + " out of range");
    }
    const ExactMatrix psi = build_inclusion_matrix({v.ground(), j, v.subset_size(), v.field()});
    return ModuleVector(v.ground(), j, mat_vec(psi, v.coeffs()));
}

PsiVerdict check_psi_on_polytabloid(const TwoRowTableau& t, int j, int k, FieldSpec field) {
    if (k < 0 || k > j || j > t.depth()) {
        throw InvalidArgument("check_psi_on_polytabloid: need 0 <= k <= j <= " +
                              std::to_string(t.depth()));
    }
    const ModuleVector image = psi_apply(polytabloid(t, j, field), k);
    const ModuleVector expected =
        k < j ? ModuleVector(field, t.ground(), k) : polytabloid(t.moved(j), j, field);
    PsiVerdict verdict;
    for (std::size_t r = 0; r < image.coeffs().size(); ++r) {
        if (image.coeffs().value(r) != expected.coeffs().value(r)) {
            verdict.pass = false;
            verdict.counterexample = PsiCounterexample{
                subset_unrank({r, k, t.ground()}), expected.coeffs().entry_string(r),
                image.coeffs().entry_string(r)};
            break;
        }
    }
    return verdict;
}

namespace {

// Calls fn(tableau) for every pairing of `second` (ascending) with jj distinct
// heads drawn in order from `rest`.
template <class Fn>
void for_each_head_assignment(const std::vector<int>& second, const std::vector<int>& rest,
                              int jj, Fn&& fn) {
    std::vector<int> heads;
    std::vector<bool> used(rest.size(), false);
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(heads.size()) == jj) {
            std::vector<int> first = heads;
            for (std::size_t t = 0; t < rest.size(); ++t)
                if (!used[t]) first.push_back(rest[t]);
            fn(TwoRowTableau(std::move(first), second));
            return;
        }
        for (std::size_t t = 0; t < rest.size(); ++t) {
            if (used[t]) continue;
            used[t] = true;
            heads.push_back(rest[t]);
            self(self);
            heads.pop_back();
            used[t] = false;
        }
    };
    recurse(recurse);
}

}  // namespace

std::size_t specht_span_rank(int m, int jj, FieldSpec field, SpanFamily family) {
    if (m < 0 || m > kMaxGroundSet || jj < 0 || 2 * jj > m) {
        throw InvalidArgument("specht_span_rank: need 0 <= 2*jj <= m");
    }
    std::vector<ExactVector> generators;
    for (const Subset& s : subsets(m, jj)) {
        std::vector<int> second(s.elements().begin(), s.elements().end());
        std::vector<int> rest;
        for (int x = 1; x <= m; ++x)
            if (!s.contains(x)) rest.push_back(x);
        if (family == SpanFamily::canonical) {
            generators.push_back(polytabloid(TwoRowTableau(rest, second), jj, field).coeffs());
        } else {
            for_each_head_assignment(second, rest, jj, [&](const TwoRowTableau& t) {
                generators.push_back(polytabloid(t, jj, field).coeffs());
            });
        }
    }
    return rank(ExactMatrix::from_vectors(field, binomial_u64(m, jj), generators));
}

bool FiltrationReport::match() const {
    if (formula_total != BigInt(total)) return false;
    return std::all_of(layers.begin(), layers.end(),
                       [](const FiltrationLayer& l) { return BigInt(l.dim_L) == l.predicted_L; });
}

FiltrationReport filtration_audit(const InclusionParams& params, std::uint64_t budget) {
    params.validate();
    const int m = params.m, i = params.i, n = params.n;
    if (i > m - n) {
        throw InvalidArgument("filtration_audit requires i <= min(n, m - n); normalize first");
    }
    const FieldSpec field = params.field;
    const std::uint32_t p = field.characteristic();

    const ExactMatrix a = build_inclusion_matrix(params, budget);
    const SubspaceBasis column_space = column_space_basis(a);

    FiltrationReport report;
    report.params = params;
    report.formula_total = wilson_rank(params).total;

    std::optional<SubspaceBasis> kernels;  // ∩_{k<j} ker psi_k; unset means all of M
    for (int j = 0; j <= i; ++j) {
        const SubspaceBasis layer = kernels ? intersect(column_space, *kernels) : column_space;
        const ExactMatrix psi = build_inclusion_matrix({m, j, i, field}, budget);

        FiltrationLayer out;
        out.j = j;
        out.dim_P = layer.dim();
        out.dim_L = layer.dim() == 0 ? 0 : rank(mat_mul(psi, layer.vectors().transpose()));
        out.included = !p_divides_binomial(p, static_cast<std::uint64_t>(n - j),
                                           static_cast<std::uint64_t>(i - j));
        out.predicted_L = out.included ? specht_dim(m, j) : BigInt(0);
        report.layers.push_back(out);
        report.total += out.dim_L;

        const SubspaceBasis ker = kernel_basis(psi);
        kernels = kernels ? intersect(*kernels, ker) : ker;
    }

    if (report.layers.front().dim_P != rank(a) || report.total != report.layers.front().dim_P) {
        throw std::logic_error("filtration layers do not account for the column space");
    }
    for (std::size_t t = 1; t < report.layers.size(); ++t) {
        if (report.layers[t].dim_P > report.layers[t - 1].dim_P) {
            throw std::logic_error("filtration dimensions increased");
        }
    }
    return report;
}

void write_filtration_json(std::ostream& os, const FiltrationReport& report) {
    auto big = [](const BigInt& v) -> nlohmann::ordered_json {
        if (v.fits_ulong_p()) return static_cast<std::uint64_t>(v.get_ui());
        return v.get_str();
    };
    nlohmann::ordered_json layers = nlohmann::ordered_json::array();
    for (const FiltrationLayer& l : report.layers) {
        layers.push_back({{"j", l.j},
                          {"dim_P", l.dim_P},
                          {"dim_L", l.dim_L},
                          {"predicted_L", big(l.predicted_L)},
                          {"included", l.included}});
    }
    nlohmann::ordered_json doc;
    doc["m"] = report.params.m;
    doc["n"] = report.params.n;
    doc["i"] = report.params.i;
    doc["p"] = report.params.field.characteristic();
    doc["layers"] = std::move(layers);
    doc["total"] = report.total;
    doc["formula_total"] = big(report.formula_total);
    doc["match"] = report.match();
    os << doc.dump(2) << '\n';
}

}  // namespace incmat
