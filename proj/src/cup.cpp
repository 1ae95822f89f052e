#include "homleib/cup.hpp"

#include <sstream>

namespace homleib {

namespace {

void require_pass(const AxiomReport& report, const std::string& where) {
    if (!report.passed) throw validation_error(where + ": " + report.describe());
}

void require_equivariant(const Cochain& f, const char* what) {
    if (!f.equivariant)
        throw validation_error(std::string(what) + " must be an equivariant cochain");
}

void require_shape(const CupContext& ctx, const Cochain& f, const char* what) {
    if (f.dim_l != ctx.l().dim() || f.dim_a != ctx.a().dim())
        throw validation_error(std::string(what) + " does not match the context pair");
}

}  // namespace

CupContext::CupContext(AlgebraSpec l, AlgebraSpec a, std::size_t cap)
    : l_(std::move(l)), a_(std::move(a)), cap_(cap) {
    require_pass(check_hom_leibniz(l_), "cup context: " + l_.name());
    require_pass(check_multiplicative(l_), "cup context: " + l_.name());
    require_pass(check_hom_associative(a_), "cup context: " + a_.name());
    require_pass(check_commutative(a_), "cup context: " + a_.name());
    RhoRelationCertificate cert = certify_rho_relation(6);
    if (!cert.unique)
        throw validation_error("cup context: shuffle-relation certificate is not unique");
    rho_variant_ = cert.pinned;
}

const std::vector<Cochain>& CupContext::cochain_basis(std::size_t degree) const {
    auto it = basis_cache_.find(degree);
    if (it == basis_cache_.end())
        it = basis_cache_.emplace(degree, cochain_space_basis(l_, a_, degree, cap_)).first;
    return it->second;
}

const Matrix& CupContext::coboundary_op(std::size_t degree) const {
    auto it = delta_cache_.find(degree);
    if (it == delta_cache_.end())
        it = delta_cache_.emplace(degree, coboundary_matrix(l_, a_, degree, cap_)).first;
    return it->second;
}

const std::vector<CohomologyRow>& CupContext::cohomology(std::size_t max_degree) const {
    if (coh_cache_.size() < max_degree) coh_cache_ = cohomology_dims(l_, a_, max_degree, cap_);
    return coh_cache_;
}

Cochain cup(const CupContext& ctx, const Cochain& f, const Cochain& g) {
    require_equivariant(f, "cup: left factor");
    require_equivariant(g, "cup: right factor");
    require_shape(ctx, f, "cup: left factor");
    require_shape(ctx, g, "cup: right factor");
    const AlgebraSpec& l = ctx.l();
    const AlgebraSpec& a = ctx.a();
    const std::size_t n = f.degree, m = g.degree, dim = l.dim();
    const SignedPermSum r = rho(n, m);
    // twist powers on basis vectors, shared across tuples
    std::vector<Vector> left_slots(dim), right_slots(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Vector v = l.basis_vector(i);
        for (std::size_t k = 0; k + 1 < m; ++k) v = l.twisted(v);
        left_slots[i] = v;
        Vector w = l.basis_vector(i);
        for (std::size_t k = 0; k + 1 < n; ++k) w = l.twisted(w);
        right_slots[i] = w;
    }
    const TensorBasis domain(dim, n + m, ctx.cap());
    Vector table(domain.size() * a.dim(), Rational(0));
    std::vector<Vector> fslots(n), gslots(m);
    for (std::size_t t = 0; t < domain.size(); ++t) {
        const auto tuple = domain.tuple(t);
        Vector acc = zero_vector(a.dim());
        for (const auto& [perm, coeff] : r.terms()) {
            const auto u = perm.act(tuple);
            for (std::size_t k = 0; k < n; ++k) fslots[k] = left_slots[u[k]];
            for (std::size_t k = 0; k < m; ++k) gslots[k] = right_slots[u[n + k]];
            const Vector prod = a.product(cochain_eval(f, fslots), cochain_eval(g, gslots));
            acc = add(acc, scale(coeff, prod));
        }
        for (std::size_t x = 0; x < a.dim(); ++x) table[t * a.dim() + x] = acc[x];
    }
    return make_cochain(l, a, n + m, std::move(table), ctx.cap());
}

Cochain twist_cochain(const CupContext& ctx, const Cochain& f) {
    require_equivariant(f, "twist_cochain: input");
    require_shape(ctx, f, "twist_cochain: input");
    const std::size_t da = f.dim_a;
    Vector table(f.table.size());
    for (std::size_t t = 0; t * da < f.table.size(); ++t) {
        Vector v = ctx.a().twisted(cochain_value(f, t));
        for (std::size_t x = 0; x < da; ++x) table[t * da + x] = v[x];
    }
    return make_cochain(ctx.l(), ctx.a(), f.degree, std::move(table), ctx.cap());
}

LeibnizReport check_leibniz_rule(const CupContext& ctx, const Cochain& f, const Cochain& g) {
    const Cochain lhs = coboundary(ctx.l(), ctx.a(), cup(ctx, f, g), ctx.cap());
    const Cochain df_g = cup(ctx, coboundary(ctx.l(), ctx.a(), f, ctx.cap()), g);
    const Cochain f_dg = cup(ctx, f, coboundary(ctx.l(), ctx.a(), g, ctx.cap()));
    const Rational sgn(f.degree % 2 ? -1 : 1);
    LeibnizReport report;
    report.holds = lhs.table == add(df_g.table, scale(sgn, f_dg.table));
    report.alternative_holds = lhs.table == add(df_g.table, scale(-sgn, f_dg.table));
    return report;
}

Cochain pullback_cochain(const AlgebraSpec& source, const AlgebraSpec& target,
                         const AlgebraSpec& a, const LinearMap& phi, const Cochain& f,
                         std::size_t cap) {
    require_pass(check_homomorphism(phi, source, target), "pullback: map");
    require_equivariant(f, "pullback: input");
    if (f.dim_l != target.dim() || f.dim_a != a.dim())
        throw validation_error("pullback: cochain does not live over the target pair");
    std::vector<Vector> images(source.dim());
    for (std::size_t i = 0; i < source.dim(); ++i) images[i] = phi.apply(source.basis_vector(i));
    const TensorBasis domain(source.dim(), f.degree, cap);
    Vector table(domain.size() * a.dim());
    std::vector<Vector> slots(f.degree);
    for (std::size_t t = 0; t < domain.size(); ++t) {
        const auto tuple = domain.tuple(t);
        for (std::size_t k = 0; k < f.degree; ++k) slots[k] = images[tuple[k]];
        Vector v = cochain_eval(f, slots);
        for (std::size_t x = 0; x < a.dim(); ++x) table[t * a.dim() + x] = v[x];
    }
    return make_cochain(source, a, f.degree, std::move(table), cap);
}

FunctorialityReport check_functoriality(const CupContext& source, const CupContext& target,
                                        const LinearMap& phi, const Cochain& f,
                                        const Cochain& g) {
    if (!(source.a().structure() == target.a().structure() &&
          source.a().twist() == target.a().twist() && source.a().dim() == target.a().dim()))
        throw validation_error("functoriality: contexts must share the coefficient algebra");
    const Cochain both = pullback_cochain(source.l(), target.l(), target.a(), phi,
                                          cup(target, f, g), source.cap());
    const Cochain left = pullback_cochain(source.l(), target.l(), target.a(), phi, f, source.cap());
    const Cochain right = pullback_cochain(source.l(), target.l(), target.a(), phi, g, source.cap());
    FunctorialityReport report;
    report.holds = both.table == cup(source, left, right).table;
    return report;
}

ZinbielReport check_graded_zinbiel(const CupContext& ctx, const Cochain& f, const Cochain& g,
                                   const Cochain& h) {
    for (const Cochain* c : {&f, &g, &h}) {
        require_equivariant(*c, "graded zinbiel: input");
        require_shape(ctx, *c, "graded zinbiel: input");
        if (!cochain_is_zero(coboundary(ctx.l(), ctx.a(), *c, ctx.cap())))
            throw validation_error("graded zinbiel: inputs must be cocycles");
    }
    const std::size_t m = g.degree, r = h.degree;
    const Cochain t1 = cup(ctx, twist_cochain(ctx, cup(ctx, f, g)), h);
    const Cochain t2 = cup(ctx, f, twist_cochain(ctx, cup(ctx, g, h)));
    const Cochain t3 = cup(ctx, f, twist_cochain(ctx, cup(ctx, h, g)));
    const Rational sgn((m * r) % 2 ? -1 : 1);
    const Vector defect = sub(sub(t1.table, t2.table), scale(sgn, t3.table));
    ZinbielReport report;
    report.cochain_level = is_zero(defect);
    if (report.cochain_level) {
        report.cohomology_level = true;
        return report;
    }
    const std::size_t total = f.degree + m + r;
    const auto& rows = ctx.cohomology(total);
    const auto& bnd = rows[total - 1].coboundary_basis;
    report.cohomology_level = Subspace::span(defect.size(), bnd).contains(defect);
    return report;
}

std::vector<SquareZeroRow> square_zero_signature(const CupContext& ctx, std::size_t max_degree) {
    const auto& rows = ctx.cohomology(2 * max_degree);
    std::vector<SquareZeroRow> out;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        SquareZeroRow row;
        row.degree = n;
        const auto& reps = rows[n - 1].representatives;
        row.class_count_checked = reps.size();
        const auto& bnd = rows[2 * n - 1].coboundary_basis;
        for (const Cochain& e : reps) {
            const Cochain sq = cup(ctx, e, e);
            const bool zero_class = cochain_is_zero(sq) ||
                                    Subspace::span(sq.table.size(), bnd).contains(sq.table);
            if (!zero_class) row.all_squares_zero = false;
        }
        out.push_back(row);
    }
    return out;
}

Vector class_in_rep_basis(const CupContext& ctx, const Cochain& f) {
    require_equivariant(f, "class_in_rep_basis: input");
    require_shape(ctx, f, "class_in_rep_basis: input");
    const auto& rows = ctx.cohomology(f.degree);
    const auto& row = rows[f.degree - 1];
    const std::size_t nb = row.coboundary_basis.size(), nr = row.representatives.size();
    Matrix m(f.table.size(), nb + nr);
    for (std::size_t i = 0; i < f.table.size(); ++i) {
        for (std::size_t k = 0; k < nb; ++k) m.at(i, k) = row.coboundary_basis[k][i];
        for (std::size_t k = 0; k < nr; ++k) m.at(i, nb + k) = row.representatives[k].table[i];
    }
    auto solution = solve_exact(m, f.table);
    if (!solution) throw validation_error("class_in_rep_basis: input is not a cocycle");
    return Vector(solution->begin() + static_cast<std::ptrdiff_t>(nb), solution->end());
}

Cochain random_equivariant_cochain(const CupContext& ctx, std::size_t degree,
                                   std::mt19937_64& gen) {
    const auto& basis = ctx.cochain_basis(degree);
    const std::size_t size = tensor_power_size(ctx.l().dim(), degree, ctx.cap()) * ctx.a().dim();
    Cochain out;
    out.degree = degree;
    out.dim_l = ctx.l().dim();
    out.dim_a = ctx.a().dim();
    out.table = zero_vector(size);
    out.equivariant = true;
    for (const Cochain& b : basis)
        out.table = add(out.table, scale(small_random_rational(gen), b.table));
    return out;
}

const char* audit_tag_name(AuditTag tag) {
    switch (tag) {
        case AuditTag::match: return "MATCH";
        case AuditTag::match_up_to_sign: return "MATCH (up to logged global boundary sign)";
        case AuditTag::diverge: return "DIVERGE";
    }
    return "DIVERGE";
}

namespace {

// tensor tuples over a degree-k power: "(e1,e2) - (e2,e1)"
std::string format_tensor(const Vector& v, std::size_t dim, std::size_t degree,
                          const std::string& sym) {
    const TensorBasis basis(dim, degree);
    std::string out;
    for (std::size_t t = 0; t < basis.size(); ++t) {
        Rational c = v[t];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (c < 0) c = -c;
        if (c != 1) out += format_rational(c) + "*";
        out += "(";
        const auto tuple = basis.tuple(t);
        for (std::size_t k = 0; k < degree; ++k) {
            if (k) out += ",";
            out += sym + std::to_string(tuple[k] + 1);
        }
        out += ")";
    }
    return out.empty() ? "0" : out;
}

AuditLine make_line(std::string label, const Vector& computed, const Vector& claimed,
                    std::string computed_text, std::string claimed_text, bool rho_related) {
    AuditLine line;
    line.label = std::move(label);
    line.computed = std::move(computed_text);
    line.claimed = std::move(claimed_text);
    if (computed == claimed)
        line.tag = AuditTag::match;
    else if (computed == scale(Rational(-1), claimed))
        line.tag = AuditTag::match_up_to_sign;
    else
        line.tag = AuditTag::diverge;
    line.traces_to_rho_claim = rho_related && line.tag != AuditTag::match;
    return line;
}

}  // namespace

WorkedExampleAudit audit_worked_example(const CupContext& ctx) {
    const AlgebraSpec ref_l = fixture_example_L();
    const AlgebraSpec ref_a = fixture_example_A();
    if (!(ctx.l().structure() == ref_l.structure() && ctx.l().twist() == ref_l.twist() &&
          ctx.a().structure() == ref_a.structure() && ctx.a().twist() == ref_a.twist()))
        throw validation_error("audit requires the bundled example pair");
    const AlgebraSpec& l = ctx.l();
    const AlgebraSpec& a = ctx.a();
    WorkedExampleAudit audit;
    const Matrix d2 = boundary_matrix(l, 2, ctx.cap());
    const Matrix d3 = boundary_matrix(l, 3, ctx.cap());
    const TensorBasis t2(2, 2);

    auto d_column = [](const Matrix& m, std::size_t col) {
        Vector v(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, col);
        return v;
    };

    // boundary values the example displays
    {
        const Vector computed = d_column(d2, t2.index({1, 1}));
        const Vector claimed{1, 0};  // e1
        AuditLine line = make_line("d2(e2,e2)", computed, claimed, format_combination(computed, "e"),
                                   format_combination(claimed, "e"), false);
        if (line.tag == AuditTag::match_up_to_sign) audit.boundary_global_sign = -1;
        audit.lines.push_back(std::move(line));
    }
    const TensorBasis t3(2, 3);
    const struct {
        const char* label;
        std::size_t tuple_index;
        Vector claimed;
        const char* claimed_text;
    } d3_lines[] = {
        {"d3(e1,e2,e2)", t3.index({0, 1, 1}), Vector{1, 0, 0, 0}, "(e1,e1)"},
        {"d3(e2,e2,e1)", t3.index({1, 1, 0}), Vector{-1, 0, 0, 0}, "-(e1,e1)"},
        {"d3(e2,e2,e2)", t3.index({1, 1, 1}), Vector{1, 0, 1, 0}, "(e1+e2,e1)"},
    };
    for (const auto& spec : d3_lines) {
        const Vector computed = d_column(d3, spec.tuple_index);
        audit.lines.push_back(make_line(spec.label, computed, spec.claimed,
                                        format_tensor(computed, 2, 2, "e"), spec.claimed_text,
                                        false));
    }

    // the example's degree-one cochain f: f(e1) = 0, f(e2) = a2 - a1
    const Cochain f = make_cochain(l, a, 1, Vector{0, 0, -1, 1}, ctx.cap());
    {
        const auto& cl1 = ctx.cochain_basis(1);
        Subspace span = Subspace::span(f.table.size(), [&] {
            std::vector<Vector> vs;
            for (const auto& b : cl1) vs.push_back(b.table);
            return vs;
        }());
        audit.f_in_degree_one_basis = f.equivariant && span.contains(f.table);
        audit.f_is_cocycle = cochain_is_zero(coboundary(l, a, f, ctx.cap()));
    }
    // equivariance displays: twistA(f(x)) and f(twistL(x)) on both basis vectors
    for (std::size_t i = 0; i < 2; ++i) {
        const Vector lhs = a.twisted(cochain_value(f, i));
        const Vector rhs = cochain_eval(f, {l.twisted(l.basis_vector(i))});
        const Vector claimed = i == 0 ? Vector{0, 0} : Vector{-1, 1};  // 0 and a2 - a1
        const std::string ei = "e" + std::to_string(i + 1);
        audit.lines.push_back(make_line("(alpha1 . f)(" + ei + ")", lhs, claimed,
                                        format_combination(lhs, "a"), format_combination(claimed, "a"),
                                        false));
        audit.lines.push_back(make_line("(f . alpha)(" + ei + ")", rhs, claimed,
                                        format_combination(rhs, "a"), format_combination(claimed, "a"),
                                        false));
    }

    // rho_{1,1} on the four basis tuples; the example claims the diagonals vanish
    const SignedPermSum r11 = rho(1, 1);
    for (std::size_t t = 0; t < t2.size(); ++t) {
        const auto tuple = t2.tuple(t);
        Vector computed(t2.size(), Rational(0));
        for (const auto& [perm, coeff] : r11.terms())
            computed[t2.index(perm.act(tuple))] += coeff;
        Vector claimed(t2.size(), Rational(0));
        std::string claimed_text = "0";
        if (tuple[0] != tuple[1]) {
            claimed[t] = 1;
            claimed_text = format_tensor(claimed, 2, 2, "e");
        }
        const std::string label = "rho_{1,1}(e" + std::to_string(tuple[0] + 1) + ",e" +
                                  std::to_string(tuple[1] + 1) + ")";
        audit.lines.push_back(make_line(label, computed, claimed,
                                        format_tensor(computed, 2, 2, "e"), claimed_text, true));
    }

    // (f u f) on the four basis tuples; the example claims f u f = 0
    const Cochain ff = cup(ctx, f, f);
    for (std::size_t t = 0; t < t2.size(); ++t) {
        const auto tuple = t2.tuple(t);
        const Vector computed = cochain_value(ff, t);
        const std::string label = "(f u f)(e" + std::to_string(tuple[0] + 1) + ",e" +
                                  std::to_string(tuple[1] + 1) + ")";
        audit.lines.push_back(make_line(label, computed, Vector{0, 0},
                                        format_combination(computed, "a"), "0", true));
    }

    // term-by-term expansion of the one divergent cup value
    {
        audit.cup_expansion.push_back("rho_{1,1} = " + Permutation::identity(2).to_string() +
                                      " (identity), 1 signed term");
        const Vector fe2 = cochain_value(f, 1);
        audit.cup_expansion.push_back("+1 * mu(f(e2), f(e2)) with f(e2) = " +
                                      format_combination(fe2, "a"));
        Vector total = zero_vector(2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const Rational c = fe2[i] * fe2[j];
                if (c == 0) continue;
                const Vector prod = a.basis_product(i, j);
                std::ostringstream os;
                os << "  " << (c < 0 ? "- " : "+ ") << format_rational(c < 0 ? Rational(-c) : c)
                   << " * mu(a" << i + 1 << ",a" << j + 1 << ") = "
                   << format_combination(scale(c, prod), "a");
                audit.cup_expansion.push_back(os.str());
                total = add(total, scale(c, prod));
            }
        audit.cup_expansion.push_back("total (f u f)(e2,e2) = " + format_combination(total, "a"));
    }

    for (const auto& line : audit.lines) {
        if (line.tag == AuditTag::diverge)
            ++audit.diverge_count;
        else
            ++audit.match_count;
    }
    return audit;
}

}  // namespace homleib
