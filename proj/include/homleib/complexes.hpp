#pragma once

#include <cstddef>
#include <vector>

#include "homleib/algebra.hpp"
#include "homleib/matrix.hpp"

namespace homleib {

// Guard against accidentally huge tensor powers; every entry point that
// builds a matrix over L^{(x)n} takes a cap and throws cap_error beyond it.
inline constexpr std::size_t default_resource_cap = 20000;

// Lexicographic enumeration of degree-n index tuples over {0..base_dim-1},
// leftmost slot most significant.
class TensorBasis {
public:
    TensorBasis(std::size_t base_dim, std::size_t degree,
                std::size_t cap = default_resource_cap);

    std::size_t base_dim() const { return base_dim_; }
    std::size_t degree() const { return degree_; }
    std::size_t size() const { return size_; }

    std::vector<std::size_t> tuple(std::size_t index) const;
    std::size_t index(const std::vector<std::size_t>& tuple) const;

private:
    std::size_t base_dim_, degree_, size_;
};

// checked base_dim^degree used by all the cap guards
std::size_t tensor_power_size(std::size_t base_dim, std::size_t degree, std::size_t cap);

// Matrix of d_n: L^{(x)n} -> L^{(x)n-1} over the lexicographic bases.
// d_n(x_1..x_n) sums (-1)^{j+1} times the tuple with slot i replaced by
// [x_i,x_j], slot j dropped, and every other slot twisted, over 1 <= i < j <= n.
// d_1 is the zero map (one output row). Validates that the algebra satisfies
// the hom-leibniz identity and twist multiplicativity before assembling.
Matrix boundary_matrix(const AlgebraSpec& l, std::size_t n,
                       std::size_t cap = default_resource_cap);

// same assembly, no axiom validation; for measuring deliberately broken inputs
Matrix boundary_matrix_unchecked(const AlgebraSpec& l, std::size_t n,
                                 std::size_t cap = default_resource_cap);

struct HomologyRow {
    std::size_t degree = 0;
    std::size_t chain_dim = 0;     // dim L^{(x)n}
    std::size_t boundary_rank = 0; // rank d_n
    std::size_t cycle_dim = 0;     // dim ker d_n
    std::size_t homology_dim = 0;  // cycle_dim - rank d_{n+1}
};

std::vector<HomologyRow> homology_dims(const AlgebraSpec& l, std::size_t max_degree,
                                       std::size_t cap = default_resource_cap);

// matrix of (twist^power)^{(x)degree} on L^{(x)degree}
Matrix twist_power_tensor(const AlgebraSpec& l, std::size_t degree, std::size_t power = 1,
                          std::size_t cap = default_resource_cap);

// Multilinear map L^{(x)degree} -> A, stored as the flattened coefficient
// table [tuple_index * dim_a + a]. `equivariant` records whether
// twistA . f = f . twistL^{(x)degree} holds; it is verified at construction.
struct Cochain {
    std::size_t degree = 0;
    std::size_t dim_l = 0;
    std::size_t dim_a = 0;
    Vector table;
    bool equivariant = false;
};

Cochain make_cochain(const AlgebraSpec& l, const AlgebraSpec& a, std::size_t degree,
                     Vector table, std::size_t cap = default_resource_cap);

// value on one basis tuple
Vector cochain_value(const Cochain& f, std::size_t tuple_index);
// full multilinear evaluation on arbitrary slot vectors
Vector cochain_eval(const Cochain& f, const std::vector<Vector>& slots);

Cochain cochain_add(const Cochain& f, const Cochain& g);
Cochain cochain_scale(const Rational& c, const Cochain& f);
bool cochain_is_zero(const Cochain& f);

// basis of the equivariant subspace CL^degree, deterministic order (kernel of
// the constraint matrix under first-nonzero-pivot elimination)
std::vector<Cochain> cochain_space_basis(const AlgebraSpec& l, const AlgebraSpec& a,
                                         std::size_t degree,
                                         std::size_t cap = default_resource_cap);

// matrix of f |-> f . d_{degree+1} on the full hom space, flattened as above
Matrix coboundary_matrix(const AlgebraSpec& l, const AlgebraSpec& a, std::size_t degree,
                         std::size_t cap = default_resource_cap);

// f . d_{degree+1}; requires f equivariant; the result's flag is recomputed,
// so closure of the equivariant subspace is observable rather than assumed
Cochain coboundary(const AlgebraSpec& l, const AlgebraSpec& a, const Cochain& f,
                   std::size_t cap = default_resource_cap);

struct CohomologyRow {
    std::size_t degree = 0;
    std::size_t cochain_dim = 0;    // dim CL^n
    std::size_t cocycle_dim = 0;    // dim ker(delta | CL^n)
    std::size_t coboundary_dim = 0; // dim delta(CL^{n-1}); zero in degree 1
    std::size_t cohomology_dim = 0;
    // basis of the coboundary subspace, as flattened tables
    std::vector<Vector> coboundary_basis;
    // first cocycle basis vectors extending a basis of the coboundary space
    // under deterministic elimination
    std::vector<Cochain> representatives;
};

std::vector<CohomologyRow> cohomology_dims(const AlgebraSpec& l, const AlgebraSpec& a,
                                           std::size_t max_degree,
                                           std::size_t cap = default_resource_cap);

struct ClosureReport {
    bool closed = true;
    std::size_t failing_degree = 0;      // meaningful when closed = false
    std::size_t failing_basis_index = 0;
};

// Does the coboundary keep each CL^n inside CL^{n+1}? True whenever the twist
// is multiplicative; runs unchecked so non-multiplicative inputs can be measured.
ClosureReport check_subcomplex_closure(const AlgebraSpec& l, const AlgebraSpec& a,
                                       std::size_t max_degree,
                                       std::size_t cap = default_resource_cap);

}  // namespace homleib
