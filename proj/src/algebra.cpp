#include "homleib/algebra.hpp"

#include <random>
#include <sstream>

namespace homleib {

std::string kind_name(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::hom_leibniz: return "hom_leibniz";
        case AlgebraKind::hom_associative: return "hom_associative";
        case AlgebraKind::hom_zinbiel: return "hom_zinbiel";
        case AlgebraKind::hom_lie: return "hom_lie";
        case AlgebraKind::untyped: return "untyped";
    }
    return "untyped";
}

std::optional<AlgebraKind> kind_from_name(std::string_view name) {
    if (name == "hom_leibniz") return AlgebraKind::hom_leibniz;
    if (name == "hom_associative") return AlgebraKind::hom_associative;
    if (name == "hom_zinbiel") return AlgebraKind::hom_zinbiel;
    if (name == "hom_lie") return AlgebraKind::hom_lie;
    if (name == "untyped") return AlgebraKind::untyped;
    return std::nullopt;
}

namespace {

std::string format_vector(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(v[i]);
    }
    return out + ")";
}

std::string format_tuple(const std::vector<std::size_t>& idx) {
    std::string out = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ", ";
        out += "e" + std::to_string(idx[i] + 1);
    }
    return out + ")";
}

AxiomReport fail_report(std::string identity, std::vector<std::size_t> indices,
                        std::string clause, const Vector& lhs, const Vector& rhs) {
    AxiomReport report;
    report.passed = false;
    report.identity = std::move(identity);
    report.witness = AxiomWitness{std::move(indices), std::move(clause),
                                  format_vector(lhs), format_vector(rhs)};
    return report;
}

AxiomReport pass_report(std::string identity) {
    AxiomReport report;
    report.identity = std::move(identity);
    return report;
}

}  // namespace

std::string AxiomReport::describe() const {
    if (passed) return "PASS " + identity;
    std::ostringstream os;
    os << "FAIL " << identity;
    if (witness) {
        os << " [" << witness->clause << "] at " << format_tuple(witness->indices)
           << ": lhs = " << witness->lhs << ", rhs = " << witness->rhs;
    }
    return os.str();
}

AlgebraSpec::AlgebraSpec(std::string name, AlgebraKind kind, std::size_t dim,
                         std::vector<Rational> structure, Matrix twist)
    : name_(std::move(name)),
      kind_(kind),
      dim_(dim),
      structure_(std::move(structure)),
      twist_(std::move(twist)) {
    if (structure_.size() != dim_ * dim_ * dim_)
        throw parse_error("structure-constant table must have dim^3 entries");
    if (twist_.rows() != dim_ || twist_.cols() != dim_)
        throw parse_error("twist matrix must be dim x dim");
}

AlgebraSpec AlgebraSpec::untyped(std::string name, std::size_t dim,
                                 std::vector<Rational> structure, Matrix twist) {
    return AlgebraSpec(std::move(name), AlgebraKind::untyped, dim, std::move(structure),
                       std::move(twist));
}

AlgebraSpec AlgebraSpec::validated(std::string name, AlgebraKind kind, std::size_t dim,
                                   std::vector<Rational> structure, Matrix twist) {
    AlgebraSpec spec(std::move(name), kind, dim, std::move(structure), std::move(twist));
    if (kind != AlgebraKind::untyped) {
        AxiomReport report = check_for_kind(spec);
        if (!report.passed)
            throw validation_error("algebra '" + spec.name() + "': " + report.describe());
    }
    return spec;
}

Vector AlgebraSpec::product(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw error("product operand length mismatch");
    Vector out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Rational f = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) out[k] += f * c(i, j, k);
        }
    }
    return out;
}

Vector AlgebraSpec::basis_product(std::size_t i, std::size_t j) const {
    Vector out(dim_, Rational(0));
    for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    return out;
}

Vector AlgebraSpec::basis_vector(std::size_t i) const {
    Vector out(dim_, Rational(0));
    out[i] = 1;
    return out;
}

LinearMap::LinearMap(std::size_t source, std::size_t target, Matrix m)
    : source_dim(source), target_dim(target), matrix(std::move(m)) {
    if (matrix.rows() != target_dim || matrix.cols() != source_dim)
        throw parse_error("linear map matrix shape must be target_dim x source_dim");
}

LinearMap LinearMap::identity(std::size_t n) { return LinearMap(n, n, Matrix::identity(n)); }

AxiomReport check_hom_leibniz(const AlgebraSpec& a) {
    const std::size_t d = a.dim();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                Vector lhs = a.product(a.twisted(a.basis_vector(x)), a.basis_product(y, z));
                Vector rhs = sub(a.product(a.basis_product(x, y), a.twisted(a.basis_vector(z))),
                                 a.product(a.basis_product(x, z), a.twisted(a.basis_vector(y))));
                if (lhs != rhs)
                    return fail_report("hom-leibniz identity", {x, y, z}, "hom-leibniz", lhs, rhs);
            }
    return pass_report("hom-leibniz identity");
}

AxiomReport check_multiplicative(const AlgebraSpec& a) {
    const std::size_t d = a.dim();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Vector lhs = a.product(a.twisted(a.basis_vector(x)), a.twisted(a.basis_vector(y)));
            Vector rhs = a.twisted(a.basis_product(x, y));
            if (lhs != rhs)
                return fail_report("twist multiplicativity", {x, y}, "multiplicativity", lhs, rhs);
        }
    return pass_report("twist multiplicativity");
}

AxiomReport check_hom_associative(const AlgebraSpec& a) {
    const std::size_t d = a.dim();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Vector lhs = a.twisted(a.basis_product(x, y));
            Vector rhs = a.product(a.twisted(a.basis_vector(x)), a.twisted(a.basis_vector(y)));
            if (lhs != rhs)
                return fail_report("hom-associativity", {x, y}, "twist multiplicativity", lhs, rhs);
        }
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                Vector lhs = a.product(a.twisted(a.basis_vector(x)), a.basis_product(y, z));
                Vector rhs = a.product(a.basis_product(x, y), a.twisted(a.basis_vector(z)));
                if (lhs != rhs)
                    return fail_report("hom-associativity", {x, y, z}, "hom-associativity", lhs,
                                       rhs);
            }
    return pass_report("hom-associativity");
}

AxiomReport check_commutative(const AlgebraSpec& a) {
    const std::size_t d = a.dim();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Vector lhs = a.basis_product(x, y);
            Vector rhs = a.basis_product(y, x);
            if (lhs != rhs) return fail_report("commutativity", {x, y}, "commutativity", lhs, rhs);
        }
    return pass_report("commutativity");
}

AxiomReport check_hom_lie(const AlgebraSpec& a) {
    const std::size_t d = a.dim();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Vector lhs = a.basis_product(x, y);
            Vector rhs = scale(Rational(-1), a.basis_product(y, x));
            if (lhs != rhs) return fail_report("hom-lie", {x, y}, "skew-symmetry", lhs, rhs);
        }
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                Vector sum = zero_vector(d);
                const std::size_t cyc[3][3] = {{x, y, z}, {y, z, x}, {z, x, y}};
                for (const auto& t : cyc)
                    sum = add(sum, a.product(a.basis_product(t[0], t[1]),
                                             a.twisted(a.basis_vector(t[2]))));
                if (!is_zero(sum))
                    return fail_report("hom-lie", {x, y, z}, "hom-jacobi", sum, zero_vector(d));
            }
    return pass_report("hom-lie");
}

AxiomReport check_hom_zinbiel(const AlgebraSpec& a) {
    const std::size_t d = a.dim();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                Vector lhs = a.product(a.basis_product(x, y), a.twisted(a.basis_vector(z)));
                Vector tx = a.twisted(a.basis_vector(x));
                Vector rhs = add(a.product(tx, a.basis_product(y, z)),
                                 a.product(tx, a.basis_product(z, y)));
                if (lhs != rhs)
                    return fail_report("hom-zinbiel identity", {x, y, z}, "hom-zinbiel", lhs, rhs);
            }
    return pass_report("hom-zinbiel identity");
}

AxiomReport check_homomorphism(const LinearMap& phi, const AlgebraSpec& src,
                               const AlgebraSpec& dst) {
    if (phi.source_dim != src.dim() || phi.target_dim != dst.dim())
        throw error("homomorphism shape mismatch");
    const std::size_t d = src.dim();
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            Vector lhs = phi.apply(src.basis_product(x, y));
            Vector rhs = dst.product(phi.apply(src.basis_vector(x)), phi.apply(src.basis_vector(y)));
            if (lhs != rhs)
                return fail_report("homomorphism", {x, y}, "bracket compatibility", lhs, rhs);
        }
    for (std::size_t x = 0; x < d; ++x) {
        Vector lhs = phi.apply(src.twisted(src.basis_vector(x)));
        Vector rhs = dst.twisted(phi.apply(src.basis_vector(x)));
        if (lhs != rhs) return fail_report("homomorphism", {x}, "twist compatibility", lhs, rhs);
    }
    return pass_report("homomorphism");
}

AxiomReport check_for_kind(const AlgebraSpec& a) {
    switch (a.kind()) {
        case AlgebraKind::hom_leibniz: {
            AxiomReport report = check_hom_leibniz(a);
            if (!report.passed) return report;
            return check_multiplicative(a);
        }
        case AlgebraKind::hom_associative: return check_hom_associative(a);
        case AlgebraKind::hom_zinbiel: return check_hom_zinbiel(a);
        case AlgebraKind::hom_lie: return check_hom_lie(a);
        case AlgebraKind::untyped: return pass_report("untyped (no axiom)");
    }
    return pass_report("untyped (no axiom)");
}

namespace {

void require(const AxiomReport& report, const std::string& where) {
    if (!report.passed) throw validation_error(where + ": " + report.describe());
}

std::vector<Rational> zero_structure(std::size_t dim) {
    return std::vector<Rational>(dim * dim * dim, Rational(0));
}

}  // namespace

AlgebraSpec yau_twist(const AlgebraSpec& leibniz, const LinearMap& alpha) {
    if (!(leibniz.twist() == Matrix::identity(leibniz.dim())))
        throw validation_error("yau_twist: input must carry the identity twist");
    require(check_hom_leibniz(leibniz), "yau_twist input");
    require(check_homomorphism(alpha, leibniz, leibniz), "yau_twist map");
    const std::size_t d = leibniz.dim();
    std::vector<Rational> structure = zero_structure(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector v = leibniz.product(alpha.apply(leibniz.basis_vector(i)),
                                       alpha.apply(leibniz.basis_vector(j)));
            for (std::size_t k = 0; k < d; ++k) structure[(i * d + j) * d + k] = v[k];
        }
    return AlgebraSpec::validated(leibniz.name() + "_yau", AlgebraKind::hom_leibniz, d,
                                  std::move(structure), alpha.matrix);
}

AlgebraSpec diff_lie_twist(const AlgebraSpec& lie, const LinearMap& d, const LinearMap& alpha) {
    const std::size_t n = lie.dim();
    if (!(lie.twist() == Matrix::identity(n)))
        throw validation_error("diff_lie_twist: input must carry the identity twist");
    require(check_hom_lie(lie), "diff_lie_twist input");
    require(check_homomorphism(alpha, lie, lie), "diff_lie_twist alpha");
    if (!(alpha.matrix * d.matrix == d.matrix * alpha.matrix))
        throw validation_error("diff_lie_twist: alpha and d must commute");
    if (!(d.matrix * d.matrix).is_zero())
        throw validation_error("diff_lie_twist: d must square to zero");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = d.apply(lie.basis_product(i, j));
            Vector rhs = add(lie.product(d.apply(lie.basis_vector(i)), lie.basis_vector(j)),
                             lie.product(lie.basis_vector(i), d.apply(lie.basis_vector(j))));
            if (lhs != rhs)
                throw validation_error("diff_lie_twist: d is not a derivation at (e" +
                                       std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")");
        }
    std::vector<Rational> structure = zero_structure(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v = lie.product(alpha.apply(lie.basis_vector(i)),
                                   d.apply(alpha.apply(lie.basis_vector(j))));
            for (std::size_t k = 0; k < n; ++k) structure[(i * n + j) * n + k] = v[k];
        }
    return AlgebraSpec::validated(lie.name() + "_dtwist", AlgebraKind::hom_leibniz, n,
                                  std::move(structure), alpha.matrix);
}

AlgebraSpec tensor_hom_lie(const AlgebraSpec& l, const AlgebraSpec& r) {
    require(check_hom_leibniz(l), "tensor_hom_lie left factor");
    require(check_hom_zinbiel(r), "tensor_hom_lie right factor");
    const std::size_t dl = l.dim(), dr = r.dim(), D = dl * dr;
    std::vector<Rational> structure = zero_structure(D);
    for (std::size_t i = 0; i < dl; ++i)
        for (std::size_t p = 0; p < dr; ++p)
            for (std::size_t j = 0; j < dl; ++j)
                for (std::size_t q = 0; q < dr; ++q) {
                    Vector xy = l.basis_product(i, j), yx = l.basis_product(j, i);
                    Vector rs = r.basis_product(p, q), sr = r.basis_product(q, p);
                    const std::size_t row = i * dr + p, col = j * dr + q;
                    for (std::size_t k = 0; k < dl; ++k)
                        for (std::size_t t = 0; t < dr; ++t)
                            structure[(row * D + col) * D + (k * dr + t)] =
                                xy[k] * rs[t] - yx[k] * sr[t];
                }
    Matrix twist(D, D);
    for (std::size_t k = 0; k < dl; ++k)
        for (std::size_t t = 0; t < dr; ++t)
            for (std::size_t i = 0; i < dl; ++i)
                for (std::size_t p = 0; p < dr; ++p)
                    twist.at(k * dr + t, i * dr + p) = l.twist().at(k, i) * r.twist().at(t, p);
    return AlgebraSpec::validated(l.name() + "_x_" + r.name(), AlgebraKind::hom_lie, D,
                                  std::move(structure), std::move(twist));
}

AlgebraSpec zinbiel_symmetrize(const AlgebraSpec& r) {
    require(check_hom_zinbiel(r), "zinbiel_symmetrize input");
    const std::size_t d = r.dim();
    std::vector<Rational> structure = zero_structure(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                structure[(i * d + j) * d + k] = r.c(i, j, k) + r.c(j, i, k);
    AlgebraSpec out = AlgebraSpec::validated(r.name() + "_sym", AlgebraKind::hom_associative, d,
                                             std::move(structure), r.twist());
    require(check_commutative(out), "zinbiel_symmetrize output");
    return out;
}

Rational small_random_rational(std::mt19937_64& gen) {
    // Modulo keeps seeded fixtures identical across standard libraries.
    auto num = static_cast<std::int64_t>(gen() % 7) - 3;
    auto den = static_cast<std::int64_t>(gen() % 3) + 1;
    return Rational(num, den);
}

AlgebraSpec random_fixture(std::uint64_t seed, std::size_t dim, FixtureFamily family) {
    std::mt19937_64 gen(seed);
    switch (family) {
        case FixtureFamily::example_L: return fixture_example_L();
        case FixtureFamily::example_A: return fixture_example_A();
        case FixtureFamily::abelian_with_random_twist: {
            if (dim == 0 || dim > 3) throw parse_error("abelian fixture dim must be 1..3");
            Matrix twist(dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) twist.at(i, j) = small_random_rational(gen);
            return AlgebraSpec::validated("abelian" + std::to_string(dim) + "_seed" +
                                              std::to_string(seed),
                                          AlgebraKind::hom_leibniz, dim, zero_structure(dim),
                                          std::move(twist));
        }
        case FixtureFamily::yau_twist_of_fixed_leibniz: {
            // Self-homomorphisms of the fixed bracket [e2,e2]=e1 have the shape
            // alpha(e1) = t^2 e1, alpha(e2) = s e1 + t e2.
            Rational t = small_random_rational(gen), s = small_random_rational(gen);
            Matrix m(2, 2);
            m.at(0, 0) = t * t;
            m.at(0, 1) = s;
            m.at(1, 1) = t;
            AlgebraSpec base = fixture_leibniz2();
            AlgebraSpec out = yau_twist(base, LinearMap(2, 2, std::move(m)));
            return AlgebraSpec::validated("yau_seed" + std::to_string(seed), out.kind(), out.dim(),
                                          out.structure(), out.twist());
        }
    }
    throw error("unknown fixture family");
}

AlgebraSpec fixture_example_L() {
    std::vector<Rational> structure = zero_structure(2);
    structure[(1 * 2 + 1) * 2 + 0] = 1;  // [e2,e2] = e1
    Matrix twist(2, 2);
    twist.at(0, 0) = 1;
    twist.at(0, 1) = 1;
    twist.at(1, 1) = 1;
    return AlgebraSpec::validated("example_L", AlgebraKind::hom_leibniz, 2, std::move(structure),
                                  std::move(twist));
}

AlgebraSpec fixture_example_A() {
    std::vector<Rational> structure = zero_structure(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            structure[(i * 2 + j) * 2 + (i == 0 && j == 0 ? 0 : 1)] = 1;
    Matrix twist(2, 2);
    twist.at(0, 0) = 1;   // a1 -> a1 - a2
    twist.at(1, 0) = -1;  // a2 -> 0
    return AlgebraSpec::validated("example_A", AlgebraKind::hom_associative, 2, std::move(structure),
                                  std::move(twist));
}

AlgebraSpec fixture_abelian(std::size_t dim) {
    return AlgebraSpec::validated("abelian" + std::to_string(dim), AlgebraKind::hom_leibniz, dim,
                                  zero_structure(dim), Matrix::identity(dim));
}

AlgebraSpec fixture_abelian_twisted2() {
    Matrix twist(2, 2);
    twist.at(0, 0) = 1;
    twist.at(0, 1) = 1;
    twist.at(1, 1) = 1;
    return AlgebraSpec::validated("abelian2_twisted", AlgebraKind::hom_leibniz, 2,
                                  zero_structure(2), std::move(twist));
}

AlgebraSpec fixture_rational_line() {
    std::vector<Rational> structure = zero_structure(1);
    structure[0] = 1;
    return AlgebraSpec::validated("rational_line", AlgebraKind::hom_associative, 1,
                                  std::move(structure), Matrix::identity(1));
}

AlgebraSpec fixture_leibniz2() {
    std::vector<Rational> structure = zero_structure(2);
    structure[(1 * 2 + 1) * 2 + 0] = 1;
    return AlgebraSpec::validated("leibniz2", AlgebraKind::hom_leibniz, 2, std::move(structure),
                                  Matrix::identity(2));
}

AlgebraSpec fixture_zinbiel2() {
    std::vector<Rational> structure = zero_structure(2);
    structure[(0 * 2 + 0) * 2 + 1] = 1;  // r1 r1 = r2
    Matrix twist(2, 2);                  // r1 -> 2 r1 + r2, r2 -> 4 r2
    twist.at(0, 0) = 2;
    twist.at(1, 0) = 1;
    twist.at(1, 1) = 4;
    return AlgebraSpec::validated("zinbiel2", AlgebraKind::hom_zinbiel, 2, std::move(structure),
                                  std::move(twist));
}

}  // namespace homleib
