#include "incmat/matrix.hpp"

#include <algorithm>
#include <ostream>

namespace incmat {

Residue reduce_mod(long long v, std::uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Residue>(r);
}

Residue reduce_mod(const Rational& v, std::uint32_t p) {
    BigInt pp = p;
    BigInt num = v.get_num() % pp;
    if (num < 0) num += pp;
    BigInt den = v.get_den() % pp;
    if (den == 0) {
        throw InvalidArgument("denominator is not invertible in GF(" + std::to_string(p) + ")");
    }
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
    BigInt out = num * inv % pp;
    return static_cast<Residue>(out.get_ui());
}

namespace detail {

Entries::Entries(FieldSpec field, std::size_t n) : field_(field) {
    if (field.is_rational()) {
        data_ = std::vector<Rational>(n);
    } else {
        data_ = std::vector<Residue>(n, 0);
    }
}

std::size_t Entries::size() const noexcept {
    return std::visit([](const auto& v) { return v.size(); }, data_);
}

bool Entries::is_zero(std::size_t i) const {
    if (auto* r = std::get_if<std::vector<Residue>>(&data_)) return (*r)[i] == 0;
    return sgn(std::get<std::vector<Rational>>(data_)[i]) == 0;
}

bool Entries::all_zero() const {
    if (auto* r = std::get_if<std::vector<Residue>>(&data_)) {
        return std::all_of(r->begin(), r->end(), [](Residue x) { return x == 0; });
    }
    const auto& q = std::get<std::vector<Rational>>(data_);
    return std::all_of(q.begin(), q.end(), [](const Rational& x) { return sgn(x) == 0; });
}

void Entries::set(std::size_t i, long long v) {
    if (auto* r = std::get_if<std::vector<Residue>>(&data_)) {
        (*r)[i] = reduce_mod(v, field_.characteristic());
    } else {
        std::get<std::vector<Rational>>(data_)[i] = Rational(BigInt(static_cast<long>(v)));
    }
}

void Entries::set(std::size_t i, const Rational& v) {
    if (auto* r = std::get_if<std::vector<Residue>>(&data_)) {
        (*r)[i] = reduce_mod(v, field_.characteristic());
    } else {
        Rational c = v;
        c.canonicalize();
        std::get<std::vector<Rational>>(data_)[i] = std::move(c);
    }
}

void Entries::add(std::size_t i, long long v) {
    if (auto* r = std::get_if<std::vector<Residue>>(&data_)) {
        const std::uint32_t p = field_.characteristic();
        (*r)[i] = static_cast<Residue>((std::uint64_t{(*r)[i]} + reduce_mod(v, p)) % p);
    } else {
        std::get<std::vector<Rational>>(data_)[i] += Rational(BigInt(static_cast<long>(v)));
    }
}

Rational Entries::value(std::size_t i) const {
    if (auto* r = std::get_if<std::vector<Residue>>(&data_)) {
        return Rational(BigInt(static_cast<unsigned long>((*r)[i])));
    }
    return std::get<std::vector<Rational>>(data_)[i];
}

std::string Entries::str(std::size_t i) const {
    if (auto* r = std::get_if<std::vector<Residue>>(&data_)) return std::to_string((*r)[i]);
    return std::get<std::vector<Rational>>(data_)[i].get_str();
}

std::span<const Residue> Entries::residues() const {
    if (auto* r = std::get_if<std::vector<Residue>>(&data_)) return *r;
    throw InvalidArgument("residue view requested for a characteristic-0 buffer");
}

std::span<Residue> Entries::residues() {
    if (auto* r = std::get_if<std::vector<Residue>>(&data_)) return *r;
    throw InvalidArgument("residue view requested for a characteristic-0 buffer");
}

std::span<const Rational> Entries::rationals() const {
    if (auto* q = std::get_if<std::vector<Rational>>(&data_)) return *q;
    throw InvalidArgument("rational view requested for a prime-field buffer");
}

std::span<Rational> Entries::rationals() {
    if (auto* q = std::get_if<std::vector<Rational>>(&data_)) return *q;
    throw InvalidArgument("rational view requested for a prime-field buffer");
}

}  // namespace detail

ExactVector ExactVector::from_integers(FieldSpec field, std::span<const long long> values) {
    ExactVector v(field, values.size());
    for (std::size_t i = 0; i < values.size(); ++i) v.set(i, values[i]);
    return v;
}

std::size_t ExactVector::first_nonzero() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (!is_zero(i)) return i;
    }
    return size();
}

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(field, rows * cols) {}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(FieldSpec field,
                                   std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    ExactMatrix m(field, rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols) throw InvalidArgument("from_rows: ragged rows");
        std::size_t c = 0;
        for (long long v : row) m.set(r, c++, v);
        ++r;
    }
    return m;
}

ExactMatrix ExactMatrix::from_vectors(FieldSpec field, std::size_t cols,
                                      std::span<const ExactVector> rows) {
    ExactMatrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const ExactVector& v = rows[r];
        if (!(v.field() == field) || v.size() != cols) {
            throw InvalidArgument("from_vectors: field or length mismatch");
        }
        if (field.is_rational()) {
            std::copy(v.rationals().begin(), v.rationals().end(),
                      m.rationals().begin() + static_cast<std::ptrdiff_t>(r * cols));
        } else {
            std::copy(v.residues().begin(), v.residues().end(),
                      m.residues().begin() + static_cast<std::ptrdiff_t>(r * cols));
        }
    }
    return m;
}

std::size_t ExactMatrix::index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
    return r * cols_ + c;
}

ExactVector ExactMatrix::row(std::size_t r) const {
    ExactVector v(field(), cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (!is_zero(r, c)) v.set(c, value(r, c));
    }
    return v;
}

ExactVector ExactMatrix::column(std::size_t c) const {
    ExactVector v(field(), rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (!is_zero(r, c)) v.set(r, value(r, c));
    }
    return v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field(), cols_, rows_);
    if (field().is_rational()) {
        auto src = rationals();
        auto dst = t.rationals();
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) dst[c * rows_ + r] = src[r * cols_ + c];
    } else {
        auto src = residues();
        auto dst = t.residues();
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) dst[c * rows_ + r] = src[r * cols_ + c];
    }
    return t;
}

ExactMatrix ExactMatrix::row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw InvalidArgument("row_block out of range");
    ExactMatrix out(field(), count, cols_);
    const auto begin = static_cast<std::ptrdiff_t>(first * cols_);
    const auto end = static_cast<std::ptrdiff_t>((first + count) * cols_);
    if (field().is_rational()) {
        std::copy(rationals().begin() + begin, rationals().begin() + end, out.rationals().begin());
    } else {
        std::copy(residues().begin() + begin, residues().begin() + end, out.residues().begin());
    }
    return out;
}

ExactMatrix ExactMatrix::stack(const ExactMatrix& top, const ExactMatrix& bottom) {
    if (!(top.field() == bottom.field()) || top.cols() != bottom.cols()) {
        throw InvalidArgument("stack: field or column mismatch");
    }
    ExactMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
    if (top.field().is_rational()) {
        auto it = std::copy(top.rationals().begin(), top.rationals().end(), out.rationals().begin());
        std::copy(bottom.rationals().begin(), bottom.rationals().end(), it);
    } else {
        auto it = std::copy(top.residues().begin(), top.residues().end(), out.residues().begin());
        std::copy(bottom.residues().begin(), bottom.residues().end(), it);
    }
    return out;
}

ExactMatrix ExactMatrix::scaled(const BigInt& factor) const {
    ExactMatrix out(field(), rows_, cols_);
    if (field().is_rational()) {
        auto src = rationals();
        auto dst = out.rationals();
        for (std::size_t k = 0; k < src.size(); ++k) dst[k] = src[k] * Rational(factor);
    } else {
        const std::uint32_t p = field().characteristic();
        BigInt f = factor % BigInt(p);
        if (f < 0) f += p;
        const std::uint64_t fr = f.get_ui();
        auto src = residues();
        auto dst = out.residues();
        for (std::size_t k = 0; k < src.size(); ++k) dst[k] = static_cast<Residue>(src[k] * fr % p);
    }
    return out;
}

void write_matrix(std::ostream& os, const ExactMatrix& m) {
    os << m.rows() << ' ' << m.cols() << ' ' << m.field().characteristic() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m.entry_string(r, c);
        }
        os << '\n';
    }
}

}  // namespace incmat
