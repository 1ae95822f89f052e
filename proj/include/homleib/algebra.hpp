#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "homleib/matrix.hpp"

namespace homleib {

enum class AlgebraKind { hom_leibniz, hom_associative, hom_zinbiel, hom_lie, untyped };

std::string kind_name(AlgebraKind kind);
std::optional<AlgebraKind> kind_from_name(std::string_view name);

struct AxiomWitness {
    std::vector<std::size_t> indices;  // first failing basis tuple, lexicographic order
    std::string clause;                // which clause of the definition failed
    std::string lhs, rhs;              // the two evaluated sides, formatted
};

struct AxiomReport {
    bool passed = true;
    std::string identity;  // label of the identity that was checked
    std::optional<AxiomWitness> witness;

    std::string describe() const;
};

/// A finite-dimensional bilinear product plus a twist endomorphism, both over Q.
/// Structure constants: product(e_i, e_j) = sum_k c(i,j,k) e_k.
class AlgebraSpec {
  public:
    /// Runs the axiom checker matching `kind`; throws validation_error with the
    /// witness if it fails. `untyped` skips validation.
    static AlgebraSpec validated(std::string name, AlgebraKind kind, std::size_t dim,
                                 std::vector<Rational> structure, Matrix twist);

    /// Escape hatch for negative tests: no axiom is enforced.
    static AlgebraSpec untyped(std::string name, std::size_t dim,
                               std::vector<Rational> structure, Matrix twist);

    const std::string& name() const { return name_; }
    AlgebraKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    const Matrix& twist() const { return twist_; }
    const std::vector<Rational>& structure() const { return structure_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_[(i * dim_ + j) * dim_ + k];
    }

    Vector product(const Vector& x, const Vector& y) const;
    Vector basis_product(std::size_t i, std::size_t j) const;
    Vector twisted(const Vector& x) const { return twist_.apply(x); }
    Vector basis_vector(std::size_t i) const;

  private:
    AlgebraSpec(std::string name, AlgebraKind kind, std::size_t dim,
                std::vector<Rational> structure, Matrix twist);

    std::string name_;
    AlgebraKind kind_;
    std::size_t dim_;
    std::vector<Rational> structure_;
    Matrix twist_;
};

struct LinearMap {
    std::size_t source_dim, target_dim;
    Matrix matrix;  // target_dim x source_dim

    LinearMap(std::size_t source, std::size_t target, Matrix m);
    static LinearMap identity(std::size_t n);
    Vector apply(const Vector& v) const { return matrix.apply(v); }
};

// Axiom checkers. Multilinearity makes basis tuples sufficient; the witness is
// the first failing tuple in lexicographic order.
AxiomReport check_hom_leibniz(const AlgebraSpec& a);
AxiomReport check_multiplicative(const AlgebraSpec& a);
AxiomReport check_hom_associative(const AlgebraSpec& a);  // both clauses
AxiomReport check_commutative(const AlgebraSpec& a);
AxiomReport check_hom_lie(const AlgebraSpec& a);  // skew-symmetry + cyclic hom-Jacobi
AxiomReport check_hom_zinbiel(const AlgebraSpec& a);
AxiomReport check_homomorphism(const LinearMap& phi, const AlgebraSpec& src,
                               const AlgebraSpec& dst);

/// Runs the checker matching a.kind(); for hom_leibniz also requires
/// multiplicativity (the cohomology theory needs it).
AxiomReport check_for_kind(const AlgebraSpec& a);

// Constructions. Each validates its preconditions and throws validation_error
// with a witness on failure.

/// From an ordinary Leibniz algebra (identity twist) and a self-homomorphism
/// alpha: bracket (x,y) -> [alpha(x), alpha(y)], twist alpha.
AlgebraSpec yau_twist(const AlgebraSpec& leibniz, const LinearMap& alpha);

/// From an ordinary Lie algebra, a bracket-compatible endomorphism alpha and a
/// square-zero derivation d commuting with alpha: bracket (x,y) -> [alpha(x), d(alpha(y))].
AlgebraSpec diff_lie_twist(const AlgebraSpec& lie, const LinearMap& d, const LinearMap& alpha);

/// Tensor of a Hom-Leibniz and a Hom-Zinbiel algebra:
/// [x(x)r, y(x)s] = [x,y](x)(rs) - [y,x](x)(sr), twist = twist(x)twist.
/// Tensor basis index: i * dim(r) + p.
AlgebraSpec tensor_hom_lie(const AlgebraSpec& l, const AlgebraSpec& r);

/// Symmetrized product x*y = xy + yx with the same twist. The result is
/// validated as hom_associative, so the input twist must respect the input
/// product (abelian inputs and product-compatible twists qualify).
AlgebraSpec zinbiel_symmetrize(const AlgebraSpec& r);

enum class FixtureFamily { abelian_with_random_twist, yau_twist_of_fixed_leibniz, example_L, example_A };

/// Deterministic in seed; every output passes the checker for its kind.
// numerator in [-3,3], denominator in {1,2,3}; the shared generator for every
// seeded suite, reduced with modulo so seeds are portable across platforms
Rational small_random_rational(std::mt19937_64& gen);

AlgebraSpec random_fixture(std::uint64_t seed, std::size_t dim, FixtureFamily family);

// Built-in fixtures (see builtin_fixture in algfile.hpp for name-based lookup).
AlgebraSpec fixture_example_L();
AlgebraSpec fixture_example_A();
AlgebraSpec fixture_abelian(std::size_t dim);           // identity twist
AlgebraSpec fixture_abelian_twisted2();                 // dim 2, twist [[1,1],[0,1]]
AlgebraSpec fixture_rational_line();                    // dim 1, xx = x, identity twist
AlgebraSpec fixture_leibniz2();                         // [e2,e2]=e1, identity twist
AlgebraSpec fixture_zinbiel2();                         // r1 r1 = r2, compatible twist

}  // namespace homleib
