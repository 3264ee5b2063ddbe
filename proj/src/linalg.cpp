#include "incmat/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace incmat {

namespace {

// Field arithmetic policies shared by the dense elimination kernels.

struct ModOps {
    std::uint32_t p;
    using T = Residue;

    static bool is_zero(T a) { return a == 0; }

    T inv(T a) const {
        // Extended Euclid on (a, p); p is prime and a != 0.
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0) t += p;
        return static_cast<T>(t);
    }

    void scale(std::span<T> row, T f) const {
        for (T& x : row) x = static_cast<T>(std::uint64_t{x} * f % p);
    }

    // dst -= f * src
    void sub_scaled(std::span<T> dst, std::span<const T> src, T f) const {
        const std::uint64_t g = p - f;
        for (std::size_t k = 0; k < dst.size(); ++k) {
            if (src[k] != 0) dst[k] = static_cast<T>((dst[k] + g * src[k]) % p);
        }
    }

    T mul(T a, T b) const { return static_cast<T>(std::uint64_t{a} * b % p); }

    T mul_add(T acc, T a, T b) const {
        return static_cast<T>((std::uint64_t{acc} + std::uint64_t{a} * b) % p);
    }
};

struct RatOps {
    using T = Rational;

    static bool is_zero(const T& a) { return sgn(a) == 0; }
    static T inv(const T& a) { return 1 / a; }

    static void scale(std::span<T> row, const T& f) {
        for (T& x : row) {
            if (sgn(x) != 0) x *= f;
        }
    }

    static void sub_scaled(std::span<T> dst, std::span<const T> src, const T& f) {
        for (std::size_t k = 0; k < dst.size(); ++k) {
            if (sgn(src[k]) != 0) dst[k] -= f * src[k];
        }
    }

    static T mul(const T& a, const T& b) { return a * b; }

    static T mul_add(const T& acc, const T& a, const T& b) { return acc + a * b; }
};

// In-place Gaussian elimination on a row-major buffer. With `full`, produces
// RREF (pivot rows normalized, columns cleared above and below); otherwise
// only clears below each pivot. Returns pivot columns; the first
// pivots.size() rows hold the echelon rows.
template <class Ops>
std::vector<std::size_t> eliminate(const Ops& ops, std::span<typename Ops::T> a, std::size_t rows,
                                   std::size_t cols, bool full) {
    using T = typename Ops::T;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    auto row = [&](std::size_t i) { return a.subspan(i * cols, cols); };
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && Ops::is_zero(a[pr * cols + c])) ++pr;
        if (pr == rows) continue;
        if (pr != r) std::swap_ranges(row(pr).begin(), row(pr).end(), row(r).begin());
        auto pivot_tail = row(r).subspan(c);
        if (full) ops.scale(pivot_tail, ops.inv(a[r * cols + c]));
        // After normalization the pivot is 1; otherwise divide by it per row.
        const T pivot_inv = full ? T(1) : ops.inv(a[r * cols + c]);
        for (std::size_t i = full ? 0 : r + 1; i < rows; ++i) {
            if (i == r || Ops::is_zero(a[i * cols + c])) continue;
            const T f = full ? T(a[i * cols + c]) : ops.mul(a[i * cols + c], pivot_inv);
            ops.sub_scaled(row(i).subspan(c), std::span<const T>(pivot_tail), f);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// ---- GF(2), bit-packed ------------------------------------------------------

struct BitRows {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> data;

    BitRows(std::size_t r, std::size_t c) : rows(r), cols(c), words((c + 63) / 64), data(r * words) {}

    std::uint64_t* row(std::size_t i) { return data.data() + i * words; }
    bool get(std::size_t i, std::size_t c) const {
        return (data[i * words + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t c) { data[i * words + c / 64] |= std::uint64_t{1} << (c % 64); }
};

BitRows pack(const ExactMatrix& m) {
    BitRows b(m.rows(), m.cols());
    auto src = m.residues();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (src[r * m.cols() + c]) b.set(r, c);
    return b;
}

std::vector<std::size_t> eliminate_gf2(BitRows& b, bool full) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < b.cols && r < b.rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pr = r;
        while (pr < b.rows && !(b.row(pr)[w] & bit)) ++pr;
        if (pr == b.rows) continue;
        if (pr != r) std::swap_ranges(b.row(pr) + w, b.row(pr) + b.words, b.row(r) + w);
        const std::uint64_t* prow = b.row(r);
        for (std::size_t i = full ? 0 : r + 1; i < b.rows; ++i) {
            if (i == r) continue;
            std::uint64_t* target = b.row(i);
            if (!(target[w] & bit)) continue;
            for (std::size_t k = w; k < b.words; ++k) target[k] ^= prow[k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// ---- characteristic 0, fraction-free ---------------------------------------

std::size_t rank_bareiss(const ExactMatrix& mat) {
    const std::size_t rows = mat.rows(), cols = mat.cols();
    if (rows == 0 || cols == 0) return 0;
    // Clear denominators row by row; row scaling preserves rank.
    std::vector<BigInt> a(rows * cols);
    auto src = mat.rationals();
    for (std::size_t r = 0; r < rows; ++r) {
        BigInt l = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), src[r * cols + c].get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational& x = src[r * cols + c];
            if (sgn(x) != 0) a[r * cols + c] = x.get_num() * (l / x.get_den());
        }
    }
    BigInt prev = 1;
    BigInt tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && sgn(a[pr * cols + c]) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r) {
            for (std::size_t k = c; k < cols; ++k) swap(a[pr * cols + k], a[r * cols + k]);
        }
        const BigInt& pivot = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            BigInt& lead = a[i * cols + c];
            const bool lead_zero = sgn(lead) == 0;
            for (std::size_t k = c + 1; k < cols; ++k) {
                BigInt& x = a[i * cols + k];
                // x = (pivot * x - lead * a[r][k]) / prev, exact.
                mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), x.get_mpz_t());
                if (!lead_zero) {
                    mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), a[r * cols + k].get_mpz_t());
                }
                mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

RowEchelon to_echelon(FieldSpec field, std::size_t cols, std::span<const Residue> buf,
                      std::vector<std::size_t> pivots) {
    ExactMatrix reduced(field, pivots.size(), cols);
    std::copy(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(pivots.size() * cols),
              reduced.residues().begin());
    return RowEchelon{std::move(reduced), std::move(pivots)};
}

void require_same(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
    if (!(a.field() == b.field())) throw InvalidArgument(std::string(what) + ": field mismatch");
}

}  // namespace

RowEchelon rref(const ExactMatrix& mat) {
    const FieldSpec field = mat.field();
    const std::size_t rows = mat.rows(), cols = mat.cols();
    if (field.is_gf2()) {
        BitRows b = pack(mat);
        auto pivots = eliminate_gf2(b, true);
        ExactMatrix reduced(field, pivots.size(), cols);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            for (std::size_t c = pivots[r]; c < cols; ++c)
                if (b.get(r, c)) reduced.set(r, c, 1);
        return RowEchelon{std::move(reduced), std::move(pivots)};
    }
    if (field.is_rational()) {
        std::vector<Rational> buf(mat.rationals().begin(), mat.rationals().end());
        auto pivots = eliminate(RatOps{}, std::span<Rational>(buf), rows, cols, true);
        ExactMatrix reduced(field, pivots.size(), cols);
        std::move(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(pivots.size() * cols),
                  reduced.rationals().begin());
        return RowEchelon{std::move(reduced), std::move(pivots)};
    }
    std::vector<Residue> buf(mat.residues().begin(), mat.residues().end());
    auto pivots = eliminate(ModOps{field.characteristic()}, std::span<Residue>(buf), rows, cols, true);
    return to_echelon(field, cols, buf, std::move(pivots));
}

std::size_t rank(const ExactMatrix& mat) {
    const FieldSpec field = mat.field();
    if (field.is_gf2()) {
        BitRows b = pack(mat);
        return eliminate_gf2(b, false).size();
    }
    if (field.is_rational()) return rank_bareiss(mat);
    std::vector<Residue> buf(mat.residues().begin(), mat.residues().end());
    return eliminate(ModOps{field.characteristic()}, std::span<Residue>(buf), mat.rows(),
                     mat.cols(), false)
        .size();
}

SubspaceBasis::SubspaceBasis(FieldSpec field, std::size_t ambient_dim)
    : echelon_{ExactMatrix(field, 0, ambient_dim), {}} {}

SubspaceBasis SubspaceBasis::span_of_rows(const ExactMatrix& rows) { return SubspaceBasis(rref(rows)); }

bool SubspaceBasis::contains(const ExactVector& v) const {
    if (!(v.field() == field()) || v.size() != ambient_dim()) {
        throw InvalidArgument("contains: field or dimension mismatch");
    }
    ExactVector single[] = {v};
    auto extra = ExactMatrix::from_vectors(field(), ambient_dim(), single);
    return span_sum(*this, span_of_rows(extra)).dim() == dim();
}

SubspaceBasis kernel_basis(const ExactMatrix& mat) {
    const FieldSpec field = mat.field();
    const std::size_t cols = mat.cols();
    RowEchelon e = rref(mat);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    const std::size_t nullity = cols - e.pivots.size();
    ExactMatrix gens(field, nullity, cols);
    std::size_t g = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        gens.set(g, f, 1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            if (!e.reduced.is_zero(r, f)) gens.set(g, e.pivots[r], Rational(-e.reduced.value(r, f)));
        }
        ++g;
    }
    SubspaceBasis out = SubspaceBasis::span_of_rows(gens);
#ifdef INCMAT_CHECK_INVARIANTS
    if (rank(mat) + out.dim() != cols) {
        throw std::logic_error("rank-nullity violated in kernel_basis");
    }
#endif
    return out;
}

SubspaceBasis column_space_basis(const ExactMatrix& mat) {
    return SubspaceBasis::span_of_rows(mat.transpose());
}

SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim()) {
        throw InvalidArgument("span_sum: field or ambient dimension mismatch");
    }
    return SubspaceBasis::span_of_rows(ExactMatrix::stack(a.vectors(), b.vectors()));
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim()) {
        throw InvalidArgument("intersect: field or ambient dimension mismatch");
    }
    if (a.dim() == 0 || b.dim() == 0) return SubspaceBasis(a.field(), a.ambient_dim());
    // (alpha, beta) with alpha*A + beta*B = 0 gives alpha*A in both spaces.
    const ExactMatrix stacked = ExactMatrix::stack(a.vectors(), b.vectors());
    const SubspaceBasis relations = kernel_basis(stacked.transpose());
    if (relations.dim() == 0) return SubspaceBasis(a.field(), a.ambient_dim());
    ExactMatrix alpha(a.field(), relations.dim(), a.dim());
    for (std::size_t r = 0; r < relations.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (!relations.vectors().is_zero(r, c)) alpha.set(r, c, relations.vectors().value(r, c));
    return SubspaceBasis::span_of_rows(mat_mul(alpha, a.vectors()));
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    require_same(a, b, "mat_mul");
    if (a.cols() != b.rows()) throw InvalidArgument("mat_mul: inner dimensions differ");
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    ExactMatrix out(a.field(), n, m);
    if (a.field().is_rational()) {
        auto x = a.rationals(), y = b.rationals();
        auto z = out.rationals();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < k; ++t) {
                const Rational& f = x[i * k + t];
                if (sgn(f) == 0) continue;
                for (std::size_t j = 0; j < m; ++j)
                    if (sgn(y[t * m + j]) != 0) z[i * m + j] += f * y[t * m + j];
            }
    } else {
        const ModOps ops{a.field().characteristic()};
        auto x = a.residues(), y = b.residues();
        auto z = out.residues();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < k; ++t) {
                const Residue f = x[i * k + t];
                if (f == 0) continue;
                for (std::size_t j = 0; j < m; ++j) z[i * m + j] = ops.mul_add(z[i * m + j], f, y[t * m + j]);
            }
    }
    return out;
}

ExactVector mat_vec(const ExactMatrix& mat, const ExactVector& v) {
    if (!(mat.field() == v.field())) throw InvalidArgument("mat_vec: field mismatch");
    if (mat.cols() != v.size()) throw InvalidArgument("mat_vec: length mismatch");
    const std::size_t rows = mat.rows(), cols = mat.cols();
    ExactVector out(mat.field(), rows);
    if (mat.field().is_rational()) {
        auto a = mat.rationals();
        auto x = v.rationals();
        auto y = out.rationals();
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (sgn(a[r * cols + c]) != 0 && sgn(x[c]) != 0) y[r] += a[r * cols + c] * x[c];
    } else {
        const ModOps ops{mat.field().characteristic()};
        auto a = mat.residues();
        auto x = v.residues();
        auto y = out.residues();
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) y[r] = ops.mul_add(y[r], a[r * cols + c], x[c]);
    }
    return out;
}

// ---- streaming echelon basis -------------------------------------------------

struct EchelonBasis::Impl {
    FieldSpec field;
    std::size_t words;
    std::size_t count = 0;
    // Indexed by pivot position; empty when no row owns that pivot.
    std::vector<std::vector<std::uint64_t>> bit_rows;
    std::vector<std::vector<Residue>> mod_rows;

    bool insert_bits(std::vector<std::uint64_t> v) {
        for (std::size_t w = 0; w < words;) {
            if (v[w] == 0) {
                ++w;
                continue;
            }
            const std::size_t pos = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
            auto& row = bit_rows[pos];
            if (row.empty()) {
                row = std::move(v);
                ++count;
                return true;
            }
            for (std::size_t k = w; k < words; ++k) v[k] ^= row[k];
        }
        return false;
    }

    bool insert_residues(std::vector<Residue> v) {
        const ModOps ops{field.characteristic()};
        for (std::size_t pos = 0; pos < v.size(); ++pos) {
            if (v[pos] == 0) continue;
            auto& row = mod_rows[pos];
            std::span<Residue> tail = std::span<Residue>(v).subspan(pos);
            if (row.empty()) {
                ops.scale(tail, ops.inv(v[pos]));
                row = std::move(v);
                ++count;
                return true;
            }
            ops.sub_scaled(tail, std::span<const Residue>(row).subspan(pos), v[pos]);
        }
        return false;
    }
};

EchelonBasis::EchelonBasis(FieldSpec field, std::size_t dim) : dim_(dim) {
    if (field.is_rational()) {
        throw InvalidArgument("streaming echelon basis requires a prime field");
    }
    impl_ = std::make_unique<Impl>(Impl{field, (dim + 63) / 64, 0, {}, {}});
    if (field.is_gf2()) {
        impl_->bit_rows.resize(dim);
    } else {
        impl_->mod_rows.resize(dim);
    }
}

EchelonBasis::~EchelonBasis() = default;
EchelonBasis::EchelonBasis(EchelonBasis&&) noexcept = default;
EchelonBasis& EchelonBasis::operator=(EchelonBasis&&) noexcept = default;

bool EchelonBasis::insert_indicator(std::span<const std::uint64_t> support) {
    if (impl_->field.is_gf2()) {
        std::vector<std::uint64_t> v(impl_->words, 0);
        for (std::uint64_t s : support) {
            if (s >= dim_) throw InvalidArgument("insert_indicator: index out of range");
            v[s / 64] ^= std::uint64_t{1} << (s % 64);
        }
        return impl_->insert_bits(std::move(v));
    }
    std::vector<Residue> v(dim_, 0);
    const std::uint32_t p = impl_->field.characteristic();
    for (std::uint64_t s : support) {
        if (s >= dim_) throw InvalidArgument("insert_indicator: index out of range");
        v[s] = static_cast<Residue>((v[s] + 1) % p);
    }
    return impl_->insert_residues(std::move(v));
}

bool EchelonBasis::insert(const ExactVector& v) {
    if (!(v.field() == impl_->field) || v.size() != dim_) {
        throw InvalidArgument("EchelonBasis::insert: field or length mismatch");
    }
    if (impl_->field.is_gf2()) {
        std::vector<std::uint64_t> bits(impl_->words, 0);
        auto r = v.residues();
        for (std::size_t s = 0; s < dim_; ++s)
            if (r[s]) bits[s / 64] |= std::uint64_t{1} << (s % 64);
        return impl_->insert_bits(std::move(bits));
    }
    auto r = v.residues();
    return impl_->insert_residues(std::vector<Residue>(r.begin(), r.end()));
}

std::size_t EchelonBasis::rank() const noexcept { return impl_->count; }

std::uint64_t EchelonBasis::bytes_used() const noexcept {
    if (impl_->field.is_gf2()) return impl_->count * impl_->words * sizeof(std::uint64_t);
    return impl_->count * dim_ * sizeof(Residue);
}

}  // namespace incmat
