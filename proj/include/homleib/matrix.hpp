#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homleib/rational.hpp"

namespace homleib {

using Vector = std::vector<Rational>;

class Subspace;

/// Dense exact matrix, row-major.
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-() const;
    Vector apply(const Vector& v) const;
    bool is_zero() const;
    bool operator==(const Matrix& rhs) const;

    /// Exact Gaussian elimination; pivot = first nonzero in column order, so
    /// every derived basis is deterministic.
    std::size_t rank() const;
    Subspace kernel_basis() const;
    Subspace image_basis() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// A subspace of Q^ambient given by a linearly independent basis.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient_dim);

    /// Reduces the given spanning vectors to an independent basis, keeping the
    /// first spanning vector that introduces each new direction.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    bool contains(const Vector& v) const;
    bool contains_all(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    /// dim(*this) - dim(small); throws validation_error unless small is contained.
    std::size_t quotient_dim(const Subspace& small) const;

  private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

Vector zero_vector(std::size_t n);
// "2*e1 - 1/2*e3" with 1-based symbols, "0" when the vector vanishes
std::string format_combination(const Vector& v, const std::string& symbol);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& c, const Vector& v);
bool is_zero(const Vector& v);

/// One exact solution of m*x = rhs with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<Vector> solve_exact(const Matrix& m, const Vector& rhs);

}  // namespace homleib
