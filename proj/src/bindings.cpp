#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homleib/algfile.hpp"
#include "homleib/cup.hpp"

namespace py = pybind11;
using namespace homleib;

namespace {

std::vector<std::string> table_strings(const Vector& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Rational& x : v) out.push_back(format_rational(x));
    return out;
}

Vector table_values(const std::vector<std::string>& strings) {
    Vector out;
    out.reserve(strings.size());
    for (const auto& s : strings) out.push_back(parse_rational(s));
    return out;
}

py::dict homology_row(const HomologyRow& r) {
    py::dict d;
    d["degree"] = r.degree;
    d["chain_dim"] = r.chain_dim;
    d["boundary_rank"] = r.boundary_rank;
    d["cycle_dim"] = r.cycle_dim;
    d["homology_dim"] = r.homology_dim;
    return d;
}

py::dict cohomology_row(const CohomologyRow& r) {
    py::dict d;
    d["degree"] = r.degree;
    d["cochain_dim"] = r.cochain_dim;
    d["cocycle_dim"] = r.cocycle_dim;
    d["coboundary_dim"] = r.coboundary_dim;
    d["cohomology_dim"] = r.cohomology_dim;
    return d;
}

// a cohomology pair with cached cochain bases and representatives
class Pair {
  public:
    Pair(const std::string& source_l, const std::string& source_a, std::size_t cap)
        : ctx_(read_algebra_source(source_l).checked(),
               read_algebra_source(source_a).checked(), cap) {}

    py::list cohomology(std::size_t max_degree) const {
        py::list out;
        for (const auto& r : ctx_.cohomology(max_degree)) out.append(cohomology_row(r));
        return out;
    }

    std::vector<std::vector<std::string>> representatives(std::size_t degree) const {
        std::vector<std::vector<std::string>> out;
        for (const auto& f : ctx_.cohomology(degree)[degree - 1].representatives)
            out.push_back(table_strings(f.table));
        return out;
    }

    std::vector<std::vector<std::string>> cochain_basis(std::size_t degree) const {
        std::vector<std::vector<std::string>> out;
        for (const auto& f : ctx_.cochain_basis(degree)) out.push_back(table_strings(f.table));
        return out;
    }

    std::vector<std::string> cup_tables(const std::vector<std::string>& f, std::size_t n,
                                        const std::vector<std::string>& g, std::size_t m) const {
        const Cochain cf = make_cochain(ctx_.l(), ctx_.a(), n, table_values(f), ctx_.cap());
        const Cochain cg = make_cochain(ctx_.l(), ctx_.a(), m, table_values(g), ctx_.cap());
        return table_strings(cup(ctx_, cf, cg).table);
    }

    std::vector<std::string> cup_class(std::size_t n, std::size_t m, std::size_t i,
                                       std::size_t j) const {
        const auto& rows = ctx_.cohomology(n + m);
        const auto& left = rows[n - 1].representatives;
        const auto& right = rows[m - 1].representatives;
        if (i >= left.size() || j >= right.size())
            throw parse_error("representative index out of range");
        return table_strings(class_in_rep_basis(ctx_, cup(ctx_, left[i], right[j])));
    }

    py::list square_zero(std::size_t max_degree) const {
        py::list out;
        for (const auto& row : square_zero_signature(ctx_, max_degree)) {
            py::dict d;
            d["degree"] = row.degree;
            d["classes_checked"] = row.class_count_checked;
            d["all_squares_zero"] = row.all_squares_zero;
            out.append(d);
        }
        return out;
    }

    bool leibniz_rule_holds(std::size_t n, std::size_t m, std::uint64_t seed,
                            std::size_t trials) const {
        std::mt19937_64 gen(seed);
        for (std::size_t t = 0; t < trials; ++t) {
            const Cochain f = random_equivariant_cochain(ctx_, n, gen);
            const Cochain g = random_equivariant_cochain(ctx_, m, gen);
            if (!check_leibniz_rule(ctx_, f, g).holds) return false;
        }
        return true;
    }

    std::string rho_variant() const { return ctx_.rho_variant(); }

    const CupContext& ctx() const { return ctx_; }

  private:
    CupContext ctx_;
};

py::dict audit_dict(const WorkedExampleAudit& audit) {
    py::dict d;
    py::list lines;
    for (const auto& line : audit.lines) {
        py::dict ld;
        ld["label"] = line.label;
        ld["computed"] = line.computed;
        ld["claimed"] = line.claimed;
        ld["tag"] = audit_tag_name(line.tag);
        ld["traces_to_rho_claim"] = line.traces_to_rho_claim;
        lines.append(ld);
    }
    d["lines"] = lines;
    d["boundary_global_sign"] = audit.boundary_global_sign;
    d["f_in_degree_one_basis"] = audit.f_in_degree_one_basis;
    d["f_is_cocycle"] = audit.f_is_cocycle;
    d["cup_expansion"] = audit.cup_expansion;
    d["match_count"] = audit.match_count;
    d["diverge_count"] = audit.diverge_count;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact homology, cohomology and cup products for twisted Leibniz-type algebras";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<cap_error>(m, "CapError", PyExc_RuntimeError);
    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);

    py::class_<AlgebraSpec>(m, "Algebra")
        .def_property_readonly("name", &AlgebraSpec::name)
        .def_property_readonly("kind", [](const AlgebraSpec& a) { return kind_name(a.kind()); })
        .def_property_readonly("dim", &AlgebraSpec::dim)
        .def("__repr__", [](const AlgebraSpec& a) {
            return "<Algebra '" + a.name() + "' " + kind_name(a.kind()) + " dim " +
                   std::to_string(a.dim()) + ">";
        });

    m.def("builtin_names", [] { return builtin_algebra_names(); },
          "names accepted as builtin:<name>");
    m.def(
        "algebra",
        [](const std::string& source) { return read_algebra_source(source).checked(); },
        py::arg("source"), "load and axiom-check an algebra from a path or builtin:<name>");
    m.def(
        "verify",
        [](const std::string& source) {
            const AlgebraFile file = read_algebra_source(source);
            const AlgebraSpec spec = file.unchecked();
            std::vector<std::tuple<std::string, bool, std::string>> out;
            std::vector<AxiomReport> checks;
            switch (file.kind) {
                case AlgebraKind::hom_leibniz:
                    checks = {check_hom_leibniz(spec), check_multiplicative(spec)};
                    break;
                case AlgebraKind::hom_associative:
                    checks = {check_hom_associative(spec), check_commutative(spec)};
                    break;
                case AlgebraKind::hom_zinbiel: checks = {check_hom_zinbiel(spec)}; break;
                case AlgebraKind::hom_lie: checks = {check_hom_lie(spec)}; break;
                case AlgebraKind::untyped: break;
            }
            for (const auto& r : checks) out.emplace_back(r.identity, r.passed, r.describe());
            return out;
        },
        py::arg("source"), "per-identity (label, passed, report) for the declared kind");
    m.def(
        "serialize",
        [](const std::string& source) {
            return serialize_algebra(read_algebra_source(source));
        },
        py::arg("source"), "canonical JSON text of an algebra file or builtin");
    m.def(
        "homology",
        [](const std::string& source, std::size_t max_degree, std::size_t cap) {
            py::list out;
            for (const auto& r :
                 homology_dims(read_algebra_source(source).unchecked(), max_degree, cap))
                out.append(homology_row(r));
            return out;
        },
        py::arg("source"), py::arg("max_degree"), py::arg("cap") = default_resource_cap);
    m.def(
        "cohomology",
        [](const std::string& source_l, const std::string& source_a, std::size_t max_degree,
           std::size_t cap) {
            py::list out;
            for (const auto& r :
                 cohomology_dims(read_algebra_source(source_l).unchecked(),
                                 read_algebra_source(source_a).unchecked(), max_degree, cap))
                out.append(cohomology_row(r));
            return out;
        },
        py::arg("source_l"), py::arg("source_a"), py::arg("max_degree"),
        py::arg("cap") = default_resource_cap);
    m.def(
        "boundary",
        [](const std::string& source, std::size_t degree, std::size_t cap) {
            const Matrix d =
                boundary_matrix(read_algebra_source(source).unchecked(), degree, cap);
            std::vector<std::vector<std::string>> out;
            for (std::size_t r = 0; r < d.rows(); ++r) {
                std::vector<std::string> row;
                for (std::size_t c = 0; c < d.cols(); ++c)
                    row.push_back(format_rational(d.at(r, c)));
                out.push_back(std::move(row));
            }
            return out;
        },
        py::arg("source"), py::arg("degree"), py::arg("cap") = default_resource_cap,
        "boundary matrix in degree n as rational strings, rows = degree n-1 tuples");
    m.def(
        "rho_terms",
        [](std::size_t n, std::size_t m) {
            std::vector<std::pair<std::vector<std::size_t>, std::string>> out;
            const auto r = rho(n, m);
            for (const auto& [perm, coeff] : r.terms()) {
                std::vector<std::size_t> one_line;
                for (std::size_t i = 1; i <= n + m; ++i) one_line.push_back(perm.image(i));
                out.emplace_back(std::move(one_line), format_rational(coeff));
            }
            return out;
        },
        py::arg("n"), py::arg("m"),
        "signed permutation terms of the product kernel, 1-based one-line notation");
    m.def(
        "audit",
        [](std::size_t cap) {
            const CupContext ctx(fixture_example_L(), fixture_example_A(), cap);
            return audit_dict(audit_worked_example(ctx));
        },
        py::arg("cap") = default_resource_cap,
        "recompute every displayed value of the bundled worked example");

    py::class_<Pair>(m, "Pair")
        .def(py::init<const std::string&, const std::string&, std::size_t>(), py::arg("source_l"),
             py::arg("source_a"), py::arg("cap") = default_resource_cap)
        .def_property_readonly("algebra", [](const Pair& p) { return p.ctx().l(); })
        .def_property_readonly("coefficients", [](const Pair& p) { return p.ctx().a(); })
        .def_property_readonly("rho_variant", &Pair::rho_variant)
        .def("cohomology", &Pair::cohomology, py::arg("max_degree"))
        .def("cochain_basis", &Pair::cochain_basis, py::arg("degree"))
        .def("representatives", &Pair::representatives, py::arg("degree"))
        .def("cup", &Pair::cup_tables, py::arg("f"), py::arg("n"), py::arg("g"), py::arg("m"),
             "cup product of two cochain tables given as rational strings")
        .def("cup_class", &Pair::cup_class, py::arg("n"), py::arg("m"), py::arg("i"),
             py::arg("j"), "class of rep_i cup rep_j in the degree n+m representative basis")
        .def("square_zero", &Pair::square_zero, py::arg("max_degree"))
        .def("leibniz_rule_holds", &Pair::leibniz_rule_holds, py::arg("n"), py::arg("m"),
             py::arg("seed") = 0, py::arg("trials") = 5);
}
