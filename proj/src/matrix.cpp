#include "homleib/matrix.hpp"

#include <algorithm>
#include <utility>

namespace homleib {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw parse_error("empty rational literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    auto read_digits = [&](std::string_view what) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start)
            throw parse_error("rational literal missing " + std::string(what) + ": '" +
                              std::string(text) + "'");
        return std::string(text.substr(start, pos - start));
    };
    BigInt num(read_digits("numerator"));
    BigInt den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = BigInt(read_digits("denominator"));
        if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    if (pos != text.size())
        throw parse_error("trailing characters in rational literal '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw error("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
    return out;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw error("matrix-vector shape mismatch");
    Vector out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

namespace {

// Reduced row echelon form in place; returns pivot column list.
std::vector<std::size_t> rref(std::vector<Vector>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Vector> to_rows(const Matrix& m) {
    std::vector<Vector> rows(m.rows(), Vector(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

}  // namespace

std::size_t Matrix::rank() const {
    auto rows = to_rows(*this);
    return rref(rows).size();
}

Subspace Matrix::kernel_basis() const {
    auto rows = to_rows(*this);
    auto pivots = rref(rows);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        Vector v(cols_, Rational(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][fc];
        basis.push_back(std::move(v));
    }
    return Subspace::span(cols_, basis);
}

Subspace Matrix::image_basis() const {
    auto rows = to_rows(*this);
    auto pivots = rref(rows);
    std::vector<Vector> basis;
    for (auto c : pivots) {
        Vector col(rows_);
        for (std::size_t i = 0; i < rows_; ++i) col[i] = at(i, c);
        basis.push_back(std::move(col));
    }
    return Subspace::span(rows_, basis);
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace out(ambient_dim);
    // Fully reduced echelon rows: every lead column is zero in all other rows,
    // so one reduction pass per candidate suffices.
    std::vector<Vector> echelon;
    std::vector<std::size_t> lead;
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) throw error("spanning vector has wrong length");
        Vector w = v;
        for (std::size_t i = 0; i < echelon.size(); ++i)
            if (w[lead[i]] != 0) w = sub(w, scale(w[lead[i]], echelon[i]));
        std::size_t p = ambient_dim;
        for (std::size_t j = 0; j < ambient_dim; ++j)
            if (w[j] != 0) {
                p = j;
                break;
            }
        if (p == ambient_dim) continue;
        w = scale(Rational(1) / w[p], w);
        for (std::size_t i = 0; i < echelon.size(); ++i)
            if (echelon[i][p] != 0) echelon[i] = sub(echelon[i], scale(echelon[i][p], w));
        echelon.push_back(w);
        lead.push_back(p);
        out.basis_.push_back(v);
    }
    return out;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw error("vector length does not match ambient dimension");
    if (basis_.empty()) return is_zero(v);
    // Rank comparison on the transposed system: rank[B] == rank[B | v].
    std::vector<Vector> rows(ambient_, Vector(basis_.size() + 1));
    for (std::size_t i = 0; i < ambient_; ++i) {
        for (std::size_t k = 0; k < basis_.size(); ++k) rows[i][k] = basis_[k][i];
        rows[i][basis_.size()] = v[i];
    }
    auto pivots = rref(rows);
    return std::find(pivots.begin(), pivots.end(), basis_.size()) == pivots.end();
}

bool Subspace::contains_all(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw error("ambient dimension mismatch in intersect");
    if (basis_.empty() || other.basis_.empty()) return Subspace(ambient_);
    // Solve B1*x = B2*y: kernel of [B1 | -B2], then map the x-part through B1.
    const std::size_t k1 = basis_.size(), k2 = other.basis_.size();
    Matrix joint(ambient_, k1 + k2);
    for (std::size_t i = 0; i < ambient_; ++i) {
        for (std::size_t a = 0; a < k1; ++a) joint.at(i, a) = basis_[a][i];
        for (std::size_t b = 0; b < k2; ++b) joint.at(i, k1 + b) = -other.basis_[b][i];
    }
    std::vector<Vector> vectors;
    const Subspace kernel = joint.kernel_basis();
    for (const auto& ker : kernel.basis()) {
        Vector v(ambient_, Rational(0));
        for (std::size_t a = 0; a < k1; ++a)
            if (ker[a] != 0) v = add(v, scale(ker[a], basis_[a]));
        vectors.push_back(std::move(v));
    }
    return span(ambient_, vectors);
}

std::size_t Subspace::quotient_dim(const Subspace& small) const {
    if (ambient_ != small.ambient_) throw error("ambient dimension mismatch in quotient");
    if (!contains_all(small))
        throw validation_error("quotient_dim: claimed subspace is not contained");
    return dim() - small.dim();
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw error("vector length mismatch");
    Vector out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw error("vector length mismatch");
    Vector out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vector scale(const Rational& c, const Vector& v) {
    Vector out(v);
    for (auto& x : out) x *= c;
    return out;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::optional<Vector> solve_exact(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows()) throw error("solve shape mismatch");
    std::vector<Vector> rows(m.rows(), Vector(m.cols() + 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
        rows[i][m.cols()] = rhs[i];
    }
    auto pivots = rref(rows);
    if (std::find(pivots.begin(), pivots.end(), m.cols()) != pivots.end()) return std::nullopt;
    Vector x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][m.cols()];
    return x;
}

std::string format_combination(const Vector& v, const std::string& symbol) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (c < 0) c = -c;
        if (c != 1) out += format_rational(c) + "*";
        out += symbol + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace homleib
