#include "homleib/complexes.hpp"

namespace homleib {

std::size_t tensor_power_size(std::size_t base_dim, std::size_t degree, std::size_t cap) {
    if (base_dim == 0) throw parse_error("tensor power of a zero-dimensional space");
    std::size_t size = 1;
    if (size > cap) throw cap_error("tensor power exceeds cap");
    for (std::size_t i = 0; i < degree; ++i) {
        if (size > cap / base_dim) throw cap_error("tensor power exceeds cap");
        size *= base_dim;
    }
    return size;
}

TensorBasis::TensorBasis(std::size_t base_dim, std::size_t degree, std::size_t cap)
    : base_dim_(base_dim), degree_(degree), size_(tensor_power_size(base_dim, degree, cap)) {
    if (base_dim == 0) throw parse_error("tensor basis over empty space");
}

std::vector<std::size_t> TensorBasis::tuple(std::size_t index) const {
    if (index >= size_) throw error("tensor index out of range");
    std::vector<std::size_t> out(degree_);
    for (std::size_t k = degree_; k-- > 0;) {
        out[k] = index % base_dim_;
        index /= base_dim_;
    }
    return out;
}

std::size_t TensorBasis::index(const std::vector<std::size_t>& tuple) const {
    if (tuple.size() != degree_) throw error("tensor tuple arity mismatch");
    std::size_t idx = 0;
    for (std::size_t v : tuple) {
        if (v >= base_dim_) throw error("tensor tuple entry out of range");
        idx = idx * base_dim_ + v;
    }
    return idx;
}

namespace {

// Adds coeff * (v_1 (x) ... (x) v_k) to the column `col` of m, expanding the
// tensor of vectors over the lexicographic row basis.
void distribute(Matrix& m, std::size_t col, const Rational& coeff,
                const std::vector<Vector>& slots, std::size_t dim) {
    const std::size_t k = slots.size();
    std::vector<std::size_t> combo(k, 0);
    while (true) {
        Rational c = coeff;
        for (std::size_t s = 0; s < k && c != 0; ++s) c *= slots[s][combo[s]];
        if (c != 0) {
            std::size_t row = 0;
            for (std::size_t s = 0; s < k; ++s) row = row * dim + combo[s];
            m.at(row, col) += c;
        }
        std::size_t s = k;
        while (s > 0) {
            if (++combo[s - 1] < dim) break;
            combo[s - 1] = 0;
            --s;
        }
        if (s == 0) break;
    }
}

Matrix assemble_boundary(const AlgebraSpec& l, std::size_t n, std::size_t cap) {
    if (n < 1) throw parse_error("boundary degree must be >= 1");
    const std::size_t dim = l.dim();
    const TensorBasis domain(dim, n, cap);
    const std::size_t rows = n >= 2 ? tensor_power_size(dim, n - 1, cap) : 1;
    Matrix m(rows, domain.size());
    if (n == 1) return m;
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const auto t = domain.tuple(col);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                const Rational sgn(j % 2 ? 1 : -1);  // (-1)^{j+1}
                std::vector<Vector> slots;
                slots.reserve(n - 1);
                for (std::size_t k = 1; k <= n; ++k) {
                    if (k == j) continue;
                    if (k == i)
                        slots.push_back(l.basis_product(t[i - 1], t[j - 1]));
                    else
                        slots.push_back(l.twisted(l.basis_vector(t[k - 1])));
                }
                distribute(m, col, sgn, slots, dim);
            }
    }
    return m;
}

}  // namespace

Matrix boundary_matrix(const AlgebraSpec& l, std::size_t n, std::size_t cap) {
    AxiomReport report = check_hom_leibniz(l);
    if (report.passed) report = check_multiplicative(l);
    if (!report.passed)
        throw validation_error("boundary_matrix: " + l.name() + ": " + report.describe());
    return assemble_boundary(l, n, cap);
}

Matrix boundary_matrix_unchecked(const AlgebraSpec& l, std::size_t n, std::size_t cap) {
    return assemble_boundary(l, n, cap);
}

std::vector<HomologyRow> homology_dims(const AlgebraSpec& l, std::size_t max_degree,
                                       std::size_t cap) {
    tensor_power_size(l.dim(), max_degree ? max_degree + 1 : 0, cap);
    AxiomReport report = check_hom_leibniz(l);
    if (report.passed) report = check_multiplicative(l);
    if (!report.passed)
        throw validation_error("homology_dims: " + l.name() + ": " + report.describe());
    std::vector<HomologyRow> out;
    Matrix next = assemble_boundary(l, 1, cap);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        Matrix dn = std::move(next);
        next = assemble_boundary(l, n + 1, cap);
        HomologyRow row;
        row.degree = n;
        row.chain_dim = dn.cols();
        row.boundary_rank = dn.rank();
        row.cycle_dim = row.chain_dim - row.boundary_rank;
        row.homology_dim = row.cycle_dim - next.rank();
        out.push_back(row);
    }
    return out;
}

Matrix twist_power_tensor(const AlgebraSpec& l, std::size_t degree, std::size_t power,
                          std::size_t cap) {
    const std::size_t dim = l.dim();
    Matrix tp = Matrix::identity(dim);
    for (std::size_t i = 0; i < power; ++i) tp = l.twist() * tp;
    const TensorBasis basis(dim, degree, cap);
    Matrix m(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto t = basis.tuple(col);
        std::vector<Vector> slots;
        slots.reserve(degree);
        for (std::size_t k = 0; k < degree; ++k) slots.push_back(tp.apply(l.basis_vector(t[k])));
        distribute(m, col, Rational(1), slots, dim);
    }
    return m;
}

namespace {

bool verify_equivariance(const AlgebraSpec& l, const AlgebraSpec& a, std::size_t degree,
                         const Vector& table, std::size_t cap) {
    const std::size_t da = a.dim();
    const Matrix e = twist_power_tensor(l, degree, 1, cap);
    const std::size_t nt = e.cols();
    for (std::size_t t = 0; t < nt; ++t) {
        Vector ft(table.begin() + static_cast<std::ptrdiff_t>(t * da),
                  table.begin() + static_cast<std::ptrdiff_t>((t + 1) * da));
        Vector lhs = a.twisted(ft);
        Vector rhs = zero_vector(da);
        for (std::size_t s = 0; s < nt; ++s) {
            const Rational& c = e.at(s, t);
            if (c == 0) continue;
            for (std::size_t x = 0; x < da; ++x) rhs[x] += c * table[s * da + x];
        }
        if (lhs != rhs) return false;
    }
    return true;
}

std::size_t hom_space_size(const AlgebraSpec& l, const AlgebraSpec& a, std::size_t degree,
                           std::size_t cap) {
    const std::size_t nt = tensor_power_size(l.dim(), degree, cap);
    if (a.dim() != 0 && nt > cap / a.dim()) throw cap_error("cochain space exceeds cap");
    return nt * a.dim();
}

}  // namespace

Cochain make_cochain(const AlgebraSpec& l, const AlgebraSpec& a, std::size_t degree, Vector table,
                     std::size_t cap) {
    if (degree < 1) throw parse_error("cochain degree must be >= 1");
    const std::size_t size = hom_space_size(l, a, degree, cap);
    if (table.size() != size) throw parse_error("cochain table has wrong size");
    Cochain f;
    f.degree = degree;
    f.dim_l = l.dim();
    f.dim_a = a.dim();
    f.table = std::move(table);
    f.equivariant = verify_equivariance(l, a, degree, f.table, cap);
    return f;
}

Vector cochain_value(const Cochain& f, std::size_t tuple_index) {
    return Vector(f.table.begin() + static_cast<std::ptrdiff_t>(tuple_index * f.dim_a),
                  f.table.begin() + static_cast<std::ptrdiff_t>((tuple_index + 1) * f.dim_a));
}

Vector cochain_eval(const Cochain& f, const std::vector<Vector>& slots) {
    if (slots.size() != f.degree) throw error("cochain arity mismatch");
    Vector out = zero_vector(f.dim_a);
    std::vector<std::size_t> combo(f.degree, 0);
    while (true) {
        Rational c(1);
        for (std::size_t s = 0; s < f.degree && c != 0; ++s) c *= slots[s][combo[s]];
        if (c != 0) {
            std::size_t t = 0;
            for (std::size_t s = 0; s < f.degree; ++s) t = t * f.dim_l + combo[s];
            for (std::size_t x = 0; x < f.dim_a; ++x) out[x] += c * f.table[t * f.dim_a + x];
        }
        std::size_t s = f.degree;
        while (s > 0) {
            if (++combo[s - 1] < f.dim_l) break;
            combo[s - 1] = 0;
            --s;
        }
        if (s == 0) break;
    }
    return out;
}

Cochain cochain_add(const Cochain& f, const Cochain& g) {
    if (f.degree != g.degree || f.dim_l != g.dim_l || f.dim_a != g.dim_a)
        throw error("cochain shape mismatch");
    Cochain out = f;
    out.table = add(f.table, g.table);
    out.equivariant = f.equivariant && g.equivariant;
    return out;
}

Cochain cochain_scale(const Rational& c, const Cochain& f) {
    Cochain out = f;
    out.table = scale(c, f.table);
    return out;
}

bool cochain_is_zero(const Cochain& f) { return is_zero(f.table); }

std::vector<Cochain> cochain_space_basis(const AlgebraSpec& l, const AlgebraSpec& a,
                                         std::size_t degree, std::size_t cap) {
    if (degree < 1) throw parse_error("cochain degree must be >= 1");
    const std::size_t size = hom_space_size(l, a, degree, cap);
    const std::size_t da = a.dim();
    const Matrix e = twist_power_tensor(l, degree, 1, cap);
    const std::size_t nt = e.cols();
    // rows: for each (tuple t, coordinate x): twistA(f(t))_x - f(twistL^{(x)n} t)_x = 0
    Matrix constraint(size, size);
    for (std::size_t t = 0; t < nt; ++t)
        for (std::size_t x = 0; x < da; ++x) {
            const std::size_t row = t * da + x;
            for (std::size_t y = 0; y < da; ++y) constraint.at(row, t * da + y) += a.twist().at(x, y);
            for (std::size_t s = 0; s < nt; ++s) {
                const Rational& c = e.at(s, t);
                if (c != 0) constraint.at(row, s * da + x) -= c;
            }
        }
    Subspace kernel = constraint.kernel_basis();
    std::vector<Cochain> out;
    out.reserve(kernel.dim());
    for (const Vector& v : kernel.basis()) {
        Cochain f;
        f.degree = degree;
        f.dim_l = l.dim();
        f.dim_a = da;
        f.table = v;
        f.equivariant = true;
        out.push_back(std::move(f));
    }
    return out;
}

Matrix coboundary_matrix(const AlgebraSpec& l, const AlgebraSpec& a, std::size_t degree,
                         std::size_t cap) {
    const std::size_t src = hom_space_size(l, a, degree, cap);
    const std::size_t dst = hom_space_size(l, a, degree + 1, cap);
    const std::size_t da = a.dim();
    const Matrix d = boundary_matrix_unchecked(l, degree + 1, cap);
    Matrix m(dst, src);
    for (std::size_t u = 0; u < d.cols(); ++u)
        for (std::size_t t = 0; t < d.rows(); ++t) {
            const Rational& c = d.at(t, u);
            if (c == 0) continue;
            for (std::size_t x = 0; x < da; ++x) m.at(u * da + x, t * da + x) += c;
        }
    return m;
}

Cochain coboundary(const AlgebraSpec& l, const AlgebraSpec& a, const Cochain& f,
                   std::size_t cap) {
    if (!f.equivariant) throw validation_error("coboundary requires an equivariant cochain");
    if (f.dim_l != l.dim() || f.dim_a != a.dim()) throw error("cochain shape mismatch");
    const Matrix m = coboundary_matrix(l, a, f.degree, cap);
    return make_cochain(l, a, f.degree + 1, m.apply(f.table), cap);
}

std::vector<CohomologyRow> cohomology_dims(const AlgebraSpec& l, const AlgebraSpec& a,
                                           std::size_t max_degree, std::size_t cap) {
    {
        AxiomReport report = check_hom_leibniz(l);
        if (report.passed) report = check_multiplicative(l);
        if (!report.passed)
            throw validation_error("cohomology_dims: " + l.name() + ": " + report.describe());
        report = check_hom_associative(a);
        if (!report.passed)
            throw validation_error("cohomology_dims: " + a.name() + ": " + report.describe());
    }
    std::vector<CohomologyRow> out;
    if (max_degree == 0) return out;
    hom_space_size(l, a, max_degree + 1, cap);
    std::vector<Vector> prev_image;  // coboundaries arriving in the current degree
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const auto cl = cochain_space_basis(l, a, n, cap);
        const Matrix delta = coboundary_matrix(l, a, n, cap);
        const std::size_t dst = hom_space_size(l, a, n + 1, cap);
        Matrix restricted(dst, cl.size());
        for (std::size_t k = 0; k < cl.size(); ++k) {
            Vector col = delta.apply(cl[k].table);
            for (std::size_t r = 0; r < dst; ++r) restricted.at(r, k) = col[r];
        }
        CohomologyRow row;
        row.degree = n;
        row.cochain_dim = cl.size();
        // cocycles: kernel coefficients mapped back through the CL basis
        Subspace coeff_kernel = restricted.kernel_basis();
        std::vector<Vector> cocycles;
        const std::size_t src = hom_space_size(l, a, n, cap);
        for (const Vector& kc : coeff_kernel.basis()) {
            Vector v = zero_vector(src);
            for (std::size_t k = 0; k < cl.size(); ++k)
                if (kc[k] != 0) v = add(v, scale(kc[k], cl[k].table));
            cocycles.push_back(std::move(v));
        }
        row.cocycle_dim = cocycles.size();
        row.coboundary_dim = prev_image.size();
        row.cohomology_dim = row.cocycle_dim - row.coboundary_dim;
        row.coboundary_basis = prev_image;
        // representatives: cocycles extending a basis of the coboundary space
        std::vector<Vector> accum = prev_image;
        for (const Vector& z : cocycles) {
            Subspace cur = Subspace::span(src, accum);
            if (!cur.contains(z)) {
                Cochain f;
                f.degree = n;
                f.dim_l = l.dim();
                f.dim_a = a.dim();
                f.table = z;
                f.equivariant = true;
                row.representatives.push_back(std::move(f));
                accum.push_back(z);
            }
        }
        out.push_back(std::move(row));
        prev_image = restricted.image_basis().basis();
    }
    return out;
}

ClosureReport check_subcomplex_closure(const AlgebraSpec& l, const AlgebraSpec& a,
                                       std::size_t max_degree, std::size_t cap) {
    ClosureReport report;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const auto cl = cochain_space_basis(l, a, n, cap);
        for (std::size_t k = 0; k < cl.size(); ++k) {
            const Cochain df = coboundary(l, a, cl[k], cap);
            if (!df.equivariant) {
                report.closed = false;
                report.failing_degree = n;
                report.failing_basis_index = k;
                return report;
            }
        }
    }
    return report;
}

}  // namespace homleib
