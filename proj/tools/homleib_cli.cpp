#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homleib/algfile.hpp"
#include "homleib/cup.hpp"

namespace {

using homleib::AlgebraFile;
using homleib::AlgebraKind;
using homleib::AlgebraSpec;
using homleib::AxiomReport;
using homleib::Cochain;
using homleib::CupContext;
using homleib::Rational;
using homleib::TensorBasis;
using homleib::Vector;
using json = nlohmann::ordered_json;

struct Common {
    bool json_out = false;
    std::size_t cap = homleib::default_resource_cap;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json_out, "machine-readable JSON on stdout");
    sub->add_option("--cap", c.cap, "resource cap on the largest tensor power built")
        ->capture_default_str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string tuple_label(const std::vector<std::size_t>& tuple) {
    std::string out = "(";
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k) out += ",";
        out += "e" + std::to_string(tuple[k] + 1);
    }
    return out + ")";
}

// nonzero values only: "(e2) -> -a1 + a2; (e1,e2) -> a1"
std::string describe_cochain(const Cochain& f) {
    const TensorBasis basis(f.dim_l, f.degree);
    std::string out;
    for (std::size_t t = 0; t < basis.size(); ++t) {
        const Vector v = homleib::cochain_value(f, t);
        if (homleib::is_zero(v)) continue;
        if (!out.empty()) out += "; ";
        out += tuple_label(basis.tuple(t)) + " -> " + homleib::format_combination(v, "a");
    }
    return out.empty() ? "0" : out;
}

json table_json(const Vector& v) {
    json out = json::array();
    for (const Rational& x : v) out.push_back(homleib::format_rational(x));
    return out;
}

// axiom checks per declared kind; hom_associative adds commutativity because
// every use of that kind here is as a coefficient algebra
std::vector<AxiomReport> kind_checks(const AlgebraSpec& a, AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::hom_leibniz:
            return {homleib::check_hom_leibniz(a), homleib::check_multiplicative(a)};
        case AlgebraKind::hom_associative:
            return {homleib::check_hom_associative(a), homleib::check_commutative(a)};
        case AlgebraKind::hom_zinbiel: return {homleib::check_hom_zinbiel(a)};
        case AlgebraKind::hom_lie: return {homleib::check_hom_lie(a)};
        case AlgebraKind::untyped: return {};
    }
    return {};
}

void require_kind(const AlgebraFile& file, AlgebraKind kind, const std::string& role) {
    if (file.kind != kind)
        throw homleib::parse_error("kind mismatch: " + role + " must declare " +
                                   homleib::kind_name(kind) + ", '" + file.name + "' declares " +
                                   homleib::kind_name(file.kind));
}

int cmd_verify(const std::string& source, const Common& c) {
    const AlgebraFile file = homleib::read_algebra_source(source);
    const AlgebraSpec spec = file.unchecked();
    const auto checks = kind_checks(spec, file.kind);
    bool passed = true;
    for (const auto& r : checks) passed = passed && r.passed;
    if (c.json_out) {
        json j;
        j["command"] = "verify";
        j["algebra"] = file.name;
        j["kind"] = homleib::kind_name(file.kind);
        j["dim"] = file.dim;
        j["checks"] = json::array();
        for (const auto& r : checks)
            j["checks"].push_back({{"identity", r.identity},
                                   {"passed", r.passed},
                                   {"report", r.describe()}});
        j["passed"] = passed;
        emit(j);
    } else {
        std::cout << "algebra '" << file.name << "': kind " << homleib::kind_name(file.kind)
                  << ", dim " << file.dim << "\n";
        if (checks.empty()) std::cout << "  untyped: no axioms to check\n";
        for (const auto& r : checks) std::cout << "  " << r.describe() << "\n";
        std::cout << "result: " << (passed ? "PASS" : "FAIL") << "\n";
    }
    return passed ? 0 : 1;
}

int cmd_homology(const std::string& source, std::size_t max_degree, const Common& c) {
    const AlgebraFile file = homleib::read_algebra_source(source);
    require_kind(file, AlgebraKind::hom_leibniz, "the algebra");
    const auto rows = homleib::homology_dims(file.unchecked(), max_degree, c.cap);
    if (c.json_out) {
        json j;
        j["command"] = "homology";
        j["algebra"] = file.name;
        j["max_degree"] = max_degree;
        j["rows"] = json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"degree", r.degree},
                                 {"chain_dim", r.chain_dim},
                                 {"boundary_rank", r.boundary_rank},
                                 {"cycle_dim", r.cycle_dim},
                                 {"homology_dim", r.homology_dim}});
        emit(j);
    } else {
        std::cout << "homology of '" << file.name << "' up to degree " << max_degree << "\n";
        std::cout << "  n  dim  rank d_n  cycles  HL_n\n";
        for (const auto& r : rows)
            std::cout << "  " << r.degree << "  " << r.chain_dim << "    " << r.boundary_rank
                      << "         " << r.cycle_dim << "       " << r.homology_dim << "\n";
    }
    return 0;
}

int cmd_cohomology(const std::string& source_l, const std::string& source_a,
                   std::size_t max_degree, const Common& c) {
    const AlgebraFile fl = homleib::read_algebra_source(source_l);
    const AlgebraFile fa = homleib::read_algebra_source(source_a);
    require_kind(fl, AlgebraKind::hom_leibniz, "the first argument");
    require_kind(fa, AlgebraKind::hom_associative, "the second argument");
    const auto rows = homleib::cohomology_dims(fl.unchecked(), fa.unchecked(), max_degree, c.cap);
    if (c.json_out) {
        json j;
        j["command"] = "cohomology";
        j["algebra"] = fl.name;
        j["coefficients"] = fa.name;
        j["max_degree"] = max_degree;
        j["rows"] = json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"degree", r.degree},
                                 {"cochain_dim", r.cochain_dim},
                                 {"cocycle_dim", r.cocycle_dim},
                                 {"coboundary_dim", r.coboundary_dim},
                                 {"cohomology_dim", r.cohomology_dim}});
        emit(j);
    } else {
        std::cout << "cohomology of '" << fl.name << "' with coefficients in '" << fa.name
                  << "' up to degree " << max_degree << "\n";
        std::cout << "  n  dim CL^n  cocycles  coboundaries  HL^n\n";
        for (const auto& r : rows)
            std::cout << "  " << r.degree << "  " << r.cochain_dim << "         " << r.cocycle_dim
                      << "         " << r.coboundary_dim << "             " << r.cohomology_dim
                      << "\n";
    }
    return 0;
}

int cmd_cup(const std::string& source_l, const std::string& source_a,
            const std::vector<std::size_t>& degrees, const Common& c) {
    const AlgebraFile fl = homleib::read_algebra_source(source_l);
    const AlgebraFile fa = homleib::read_algebra_source(source_a);
    require_kind(fl, AlgebraKind::hom_leibniz, "the first argument");
    require_kind(fa, AlgebraKind::hom_associative, "the second argument");
    const std::size_t n = degrees[0], m = degrees[1];
    if (n == 0 || m == 0) throw homleib::parse_error("--deg expects degrees >= 1");
    const CupContext ctx(fl.unchecked(), fa.unchecked(), c.cap);
    const auto& rows = ctx.cohomology(2 * std::max(n, m));
    const auto& left = rows[n - 1].representatives;
    const auto& right = rows[m - 1].representatives;
    const auto& target = rows[n + m - 1].representatives;
    const auto signature = homleib::square_zero_signature(ctx, std::max(n, m));

    struct Entry { std::size_t i, j; Vector coords; };
    std::vector<Entry> classes;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            classes.push_back(
                {i, j, homleib::class_in_rep_basis(ctx, homleib::cup(ctx, left[i], right[j]))});

    if (c.json_out) {
        json j;
        j["command"] = "cup";
        j["algebra"] = fl.name;
        j["coefficients"] = fa.name;
        j["degrees"] = {n, m};
        auto reps = [](const std::vector<Cochain>& v) {
            json out = json::array();
            for (const auto& f : v)
                out.push_back({{"table", table_json(f.table)}, {"display", describe_cochain(f)}});
            return out;
        };
        j["left_representatives"] = reps(left);
        j["right_representatives"] = reps(right);
        j["target_representatives"] = reps(target);
        j["classes"] = json::array();
        for (const auto& e : classes)
            j["classes"].push_back({{"left", e.i}, {"right", e.j}, {"coords", table_json(e.coords)}});
        j["square_zero"] = json::array();
        for (const auto& row : signature)
            j["square_zero"].push_back({{"degree", row.degree},
                                        {"classes_checked", row.class_count_checked},
                                        {"all_squares_zero", row.all_squares_zero}});
        emit(j);
    } else {
        std::cout << "pair '" << fl.name << "' x '" << fa.name << "', degrees (" << n << ", " << m
                  << ")\n";
        std::cout << "degree-" << n << " representatives (" << left.size() << "):\n";
        for (std::size_t i = 0; i < left.size(); ++i)
            std::cout << "  f" << i + 1 << ": " << describe_cochain(left[i]) << "\n";
        std::cout << "degree-" << m << " representatives (" << right.size() << "):\n";
        for (std::size_t j = 0; j < right.size(); ++j)
            std::cout << "  g" << j + 1 << ": " << describe_cochain(right[j]) << "\n";
        std::cout << "degree-" << n + m << " representatives (" << target.size() << "):\n";
        for (std::size_t k = 0; k < target.size(); ++k)
            std::cout << "  h" << k + 1 << ": " << describe_cochain(target[k]) << "\n";
        std::cout << "cup classes in the h basis:\n";
        if (classes.empty()) std::cout << "  (empty product table)\n";
        for (const auto& e : classes)
            std::cout << "  [f" << e.i + 1 << " u g" << e.j + 1
                      << "] = " << homleib::format_combination(e.coords, "h") << "\n";
        std::cout << "square-zero signature:\n";
        for (const auto& row : signature)
            std::cout << "  degree " << row.degree << ": " << row.class_count_checked
                      << " class(es), all squares zero: " << (row.all_squares_zero ? "yes" : "no")
                      << "\n";
    }
    return 0;
}

int cmd_check_identities(const std::string& source_l, const std::string& source_a,
                         std::size_t max_total, std::uint64_t seed, const Common& c) {
    const AlgebraFile fl = homleib::read_algebra_source(source_l);
    const AlgebraFile fa = homleib::read_algebra_source(source_a);
    require_kind(fl, AlgebraKind::hom_leibniz, "the first argument");
    require_kind(fa, AlgebraKind::hom_associative, "the second argument");
    if (max_total < 2) throw homleib::parse_error("--max-total-degree must be at least 2");
    const AlgebraSpec l = fl.unchecked();
    const AlgebraSpec a = fa.unchecked();

    json j;
    j["command"] = "check-identities";
    j["algebra"] = fl.name;
    j["coefficients"] = fa.name;
    j["seed"] = seed;
    j["max_total_degree"] = max_total;
    j["axioms"] = json::array();
    if (!c.json_out)
        std::cout << "identity suite for '" << fl.name << "' x '" << fa.name << "' (seed " << seed
                  << ", max total degree " << max_total << ")\naxioms:\n";
    bool axioms_ok = true;
    const std::vector<AxiomReport> axioms = {
        homleib::check_hom_leibniz(l), homleib::check_multiplicative(l),
        homleib::check_hom_associative(a), homleib::check_commutative(a)};
    for (const auto& r : axioms) {
        axioms_ok = axioms_ok && r.passed;
        if (c.json_out)
            j["axioms"].push_back({{"identity", r.identity}, {"passed", r.passed},
                                   {"report", r.describe()}});
        else
            std::cout << "  " << r.describe() << "\n";
    }
    if (!axioms_ok) {
        if (c.json_out) {
            j["passed"] = false;
            j["suite"] = json::array();
            emit(j);
        } else {
            std::cout << "result: FAIL (axioms rejected, identity suite skipped)\n";
        }
        return 1;
    }

    bool all_ok = true;
    j["suite"] = json::array();
    auto record = [&](const std::string& label, bool ok, const std::string& detail) {
        all_ok = all_ok && ok;
        if (c.json_out)
            j["suite"].push_back({{"label", label}, {"passed", ok}, {"detail", detail}});
        else
            std::cout << "  " << label << ": " << (ok ? "PASS" : "FAIL")
                      << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    };
    if (!c.json_out) std::cout << "suite:\n";

    {
        bool ok = true;
        for (std::size_t nn = 1; nn <= max_total; ++nn) {
            const auto d = homleib::boundary_matrix(l, nn, c.cap);
            const auto dn = homleib::boundary_matrix(l, nn + 1, c.cap);
            ok = ok && (d * dn).is_zero();
        }
        record("boundary squares to zero (n <= " + std::to_string(max_total + 1) + ")", ok, "");
    }
    {
        bool ok = true;
        for (std::size_t nn = 1; nn + 1 < max_total; ++nn) {
            for (const auto& f : homleib::cochain_space_basis(l, a, nn, c.cap)) {
                const auto once = homleib::coboundary(l, a, f, c.cap);
                ok = ok && homleib::cochain_is_zero(homleib::coboundary(l, a, once, c.cap));
            }
        }
        record("coboundary squares to zero (basis cochains, n <= " +
                   std::to_string(max_total < 2 ? 0 : max_total - 2) + ")",
               ok, "");
    }
    {
        const auto closure = homleib::check_subcomplex_closure(l, a, max_total, c.cap);
        record("equivariant subcomplex closed under the coboundary (n <= " +
                   std::to_string(max_total) + ")",
               closure.closed, "");
    }

    const CupContext ctx(l, a, c.cap);
    std::mt19937_64 gen(seed);
    {
        bool ok = true;
        std::size_t pairs = 0;
        for (std::size_t nn = 1; nn + 1 <= max_total; ++nn)
            for (std::size_t mm = 1; nn + mm <= max_total; ++mm)
                for (int trial = 0; trial < 5; ++trial) {
                    const Cochain f = homleib::random_equivariant_cochain(ctx, nn, gen);
                    const Cochain g = homleib::random_equivariant_cochain(ctx, mm, gen);
                    ok = ok && homleib::check_leibniz_rule(ctx, f, g).holds;
                    ++pairs;
                }
        record("leibniz rule for the coboundary over the cup product, sign (-1)^n",
               ok, std::to_string(pairs) + " random pairs, n+m <= " + std::to_string(max_total));
    }
    {
        const homleib::LinearMap phi(l.dim(), l.dim(), l.twist());
        bool ok = true;
        for (auto [nn, mm] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}}) {
            if (nn + mm > max_total) continue;
            const Cochain f = homleib::random_equivariant_cochain(ctx, nn, gen);
            const Cochain g = homleib::random_equivariant_cochain(ctx, mm, gen);
            ok = ok && homleib::check_functoriality(ctx, ctx, phi, f, g).holds;
        }
        record("functoriality of the cup product along the twist endomorphism", ok,
               "degrees (1,1) and (1,2)");
    }
    {
        const auto& rows = ctx.cohomology(max_total);
        bool ok = true;
        std::size_t triples = 0, cochain_zero = 0;
        for (std::size_t nn = 1; nn + 2 <= max_total; ++nn)
            for (std::size_t mm = 1; nn + mm + 1 <= max_total; ++mm)
                for (std::size_t rr = 1; nn + mm + rr <= max_total; ++rr)
                    for (const auto& f : rows[nn - 1].representatives)
                        for (const auto& g : rows[mm - 1].representatives)
                            for (const auto& h : rows[rr - 1].representatives) {
                                const auto rep = homleib::check_graded_zinbiel(ctx, f, g, h);
                                ok = ok && rep.cohomology_level;
                                ++triples;
                                if (rep.cochain_level) ++cochain_zero;
                            }
        record("graded zinbiel relation on representative triples (total <= " +
                   std::to_string(max_total) + ")",
               ok,
               std::to_string(triples) + " triples, cochain-level zero for " +
                   std::to_string(cochain_zero));
    }
    {
        const auto cert = homleib::certify_rho_relation(6);
        const bool ok = cert.unique && cert.pinned == ctx.rho_variant();
        std::string detail = "survivor: " + cert.pinned;
        for (const auto& o : cert.outcomes)
            if (!o.holds_everywhere && o.first_failure)
                detail += "; " + o.label + " first fails at (" +
                          std::to_string((*o.first_failure)[0]) + "," +
                          std::to_string((*o.first_failure)[1]) + "," +
                          std::to_string((*o.first_failure)[2]) + ")";
        record("shuffle relation certificate (total degree <= 6, unique survivor)", ok, detail);
    }
    {
        bool ok = true;
        for (std::uint64_t s = 0; s < 5; ++s) {
            try {
                homleib::random_fixture(seed + s, 2,
                                        homleib::FixtureFamily::yau_twist_of_fixed_leibniz);
            } catch (const homleib::validation_error&) {
                ok = false;
            }
        }
        record("yau twists of seeded data are hom-leibniz and multiplicative", ok, "5 seeds");
    }
    {
        bool ok = true;
        try {
            homleib::tensor_hom_lie(homleib::fixture_leibniz2(), homleib::fixture_zinbiel2());
            homleib::tensor_hom_lie(homleib::fixture_example_L(), homleib::fixture_zinbiel2());
        } catch (const homleib::validation_error&) {
            ok = false;
        }
        record("leibniz (x) zinbiel tensor is hom-lie", ok, "2 pairs");
    }
    {
        bool ok = true;
        try {
            homleib::zinbiel_symmetrize(homleib::fixture_zinbiel2());
        } catch (const homleib::validation_error&) {
            ok = false;
        }
        record("symmetrized zinbiel is hom-associative and commutative", ok, "");
    }

    const json conventions = {
        {"boundary_sign", "(-1)^(j+1) on the (i,j) insertion"},
        {"leibniz_rule_sign", std::string("(-1)^") + CupContext::leibniz_sign_degree},
        {"graded_zinbiel_sign", std::string("(-1)^(") + CupContext::zinbiel_sign_degrees + ")"},
        {"shuffle_relation_variant", ctx.rho_variant()},
    };
    if (c.json_out) {
        j["conventions"] = conventions;
        j["passed"] = all_ok;
        emit(j);
    } else {
        std::cout << "conventions:\n";
        for (const auto& [key, value] : conventions.items())
            std::cout << "  " << key << ": " << value.get<std::string>() << "\n";
        std::cout << "result: " << (all_ok ? "PASS" : "FAIL") << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_example_audit(const Common& c) {
    const CupContext ctx(homleib::fixture_example_L(), homleib::fixture_example_A(), c.cap);
    const auto audit = homleib::audit_worked_example(ctx);
    if (c.json_out) {
        json j;
        j["command"] = "example-audit";
        j["lines"] = json::array();
        for (const auto& line : audit.lines)
            j["lines"].push_back({{"label", line.label},
                                  {"computed", line.computed},
                                  {"claimed", line.claimed},
                                  {"tag", homleib::audit_tag_name(line.tag)},
                                  {"traces_to_rho_claim", line.traces_to_rho_claim}});
        j["boundary_global_sign"] = audit.boundary_global_sign;
        j["f_in_degree_one_basis"] = audit.f_in_degree_one_basis;
        j["f_is_cocycle"] = audit.f_is_cocycle;
        j["cup_expansion"] = audit.cup_expansion;
        j["match_count"] = audit.match_count;
        j["diverge_count"] = audit.diverge_count;
        emit(j);
    } else {
        std::cout << "worked-example audit: 'example_L' with coefficients in 'example_A'\n";
        for (const auto& line : audit.lines)
            std::cout << "  " << line.label << ": computed " << line.computed << ", claimed "
                      << line.claimed << " -> " << homleib::audit_tag_name(line.tag) << "\n";
        std::cout << "global boundary sign: " << audit.boundary_global_sign
                  << " (dimension tables are unaffected)\n";
        std::cout << "f in the degree-one equivariant basis: "
                  << (audit.f_in_degree_one_basis ? "yes" : "no")
                  << "; f is a cocycle: " << (audit.f_is_cocycle ? "yes" : "no") << "\n";
        std::cout << "term-by-term expansion of the divergent value:\n";
        for (const auto& s : audit.cup_expansion) std::cout << "  " << s << "\n";
        bool all_traced = true;
        for (const auto& line : audit.lines)
            if (line.tag == homleib::AuditTag::diverge && !line.traces_to_rho_claim)
                all_traced = false;
        std::cout << "summary: " << audit.match_count << " match, " << audit.diverge_count
                  << " diverge";
        if (audit.diverge_count > 0 && all_traced)
            std::cout << " (every divergence traces to the rho_{1,1} diagonal claims)";
        std::cout << "\n";
    }
    return 0;
}

int cmd_shuffle_table(std::size_t n, std::size_t m, const Common& c) {
    if (n + m > 8)
        throw homleib::cap_error("shuffle table limited to n+m <= 8, got " +
                                 std::to_string(n + m));
    const auto shuffles = homleib::enumerate_shuffles(n, m);
    if (c.json_out) {
        json j;
        j["command"] = "shuffle-table";
        j["n"] = n;
        j["m"] = m;
        j["shuffles"] = json::array();
        for (const auto& s : shuffles) {
            json one = json::array();
            for (std::size_t i = 1; i <= n + m; ++i) one.push_back(s.image(i));
            j["shuffles"].push_back({{"one_line", one}, {"sign", s.sign() > 0 ? 1 : -1}});
        }
        if (n >= 1) {
            j["rho_terms"] = json::array();
            const auto r = homleib::rho(n, m);
            for (const auto& [perm, coeff] : r.terms()) {
                json one = json::array();
                for (std::size_t i = 1; i <= n + m; ++i) one.push_back(perm.image(i));
                j["rho_terms"].push_back(
                    {{"one_line", one}, {"coeff", homleib::format_rational(coeff)}});
            }
        }
        emit(j);
    } else {
        std::cout << "(" << n << "," << m << ")-shuffles of {1.." << n + m << "} (" << shuffles.size()
                  << "):\n";
        for (const auto& s : shuffles)
            std::cout << "  " << s.to_string() << "  sign " << (s.sign() > 0 ? "+1" : "-1") << "\n";
        if (n >= 1) {
            const auto r = homleib::rho(n, m);
            std::cout << "rho_{" << n << "," << m << "} expansion (" << r.terms().size()
                      << " signed terms):\n";
            for (const auto& [perm, coeff] : r.terms())
                std::cout << "  " << (coeff > 0 ? "+" : "") << homleib::format_rational(coeff)
                          << " * " << perm.to_string() << "\n";
        } else {
            std::cout << "rho_{0," << m << "} is not part of the product formula (left degree 0)\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homology, cohomology and cup products for twisted Leibniz-type algebras"};
    app.require_subcommand(1);

    Common common;
    std::string source_l, source_a;
    std::size_t max_degree = 3;
    std::size_t arg_n = 1, arg_m = 1;
    std::vector<std::size_t> degrees{1, 1};
    std::size_t max_total = 4;
    std::uint64_t seed = 0;
    std::function<int()> action;

    auto* verify = app.add_subcommand("verify", "check the declared axioms of an algebra file");
    verify->add_option("algebra", source_l, "path or builtin:<name>")->required();
    add_common(verify, common);
    verify->callback([&] { action = [&] { return cmd_verify(source_l, common); }; });

    auto* homology = app.add_subcommand("homology", "dimension table of the twisted homology");
    homology->add_option("algebra", source_l, "path or builtin:<name>")->required();
    homology->add_option("--max-degree", max_degree, "top degree of the table")
        ->capture_default_str();
    add_common(homology, common);
    homology->callback(
        [&] { action = [&] { return cmd_homology(source_l, max_degree, common); }; });

    auto* cohomology =
        app.add_subcommand("cohomology", "dimension table of the equivariant cohomology");
    cohomology->add_option("algebra", source_l, "path or builtin:<name>")->required();
    cohomology->add_option("coefficients", source_a, "path or builtin:<name>")->required();
    cohomology->add_option("--max-degree", max_degree, "top degree of the table")
        ->capture_default_str();
    add_common(cohomology, common);
    cohomology->callback(
        [&] { action = [&] { return cmd_cohomology(source_l, source_a, max_degree, common); }; });

    auto* cup = app.add_subcommand(
        "cup", "cup classes of cohomology representatives and the square-zero signature");
    cup->add_option("algebra", source_l, "path or builtin:<name>")->required();
    cup->add_option("coefficients", source_a, "path or builtin:<name>")->required();
    cup->add_option("--deg", degrees, "the two cup factor degrees")->expected(2);
    add_common(cup, common);
    cup->callback([&] { action = [&] { return cmd_cup(source_l, source_a, degrees, common); }; });

    auto* identities = app.add_subcommand(
        "check-identities", "run the full identity suite with seeded random cochains");
    identities->add_option("algebra", source_l, "path or builtin:<name>")->required();
    identities->add_option("coefficients", source_a, "path or builtin:<name>")->required();
    identities->add_option("--max-total-degree", max_total, "degree budget for the suite")
        ->capture_default_str();
    identities->add_option("--seed", seed, "random cochain seed")->capture_default_str();
    add_common(identities, common);
    identities->callback([&] {
        action = [&] {
            return cmd_check_identities(source_l, source_a, max_total, seed, common);
        };
    });

    auto* audit = app.add_subcommand(
        "example-audit", "recompute every displayed value of the bundled worked example");
    add_common(audit, common);
    audit->callback([&] { action = [&] { return cmd_example_audit(common); }; });

    auto* table = app.add_subcommand("shuffle-table", "enumerate shuffles and the rho expansion");
    table->add_option("n", arg_n, "left block size")->required();
    table->add_option("m", arg_m, "right block size")->required();
    add_common(table, common);
    table->callback([&] { action = [&] { return cmd_shuffle_table(arg_n, arg_m, common); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const homleib::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const homleib::cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const homleib::validation_error& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    } catch (const homleib::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
