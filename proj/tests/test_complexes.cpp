#include "doctest.h"
#include "homleib/complexes.hpp"

using namespace homleib;

namespace {

Vector from_ints(const std::vector<int>& xs) {
    Vector v;
    for (int x : xs) v.push_back(Rational(x));
    return v;
}

Vector column(const Matrix& m, std::size_t c) {
    Vector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m.at(r, c);
    return out;
}

// bracket [e2,e2] = e1 with every twist entry -1; hom-leibniz holds but the
// twist is not multiplicative, so the equivariant subcomplex is not closed
AlgebraSpec closure_counterexample() {
    std::vector<Rational> structure(8, Rational(0));
    structure[(1 * 2 + 1) * 2 + 0] = 1;
    Matrix twist(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) twist.at(i, j) = Rational(-1);
    return AlgebraSpec::untyped("nonclosed", 2, std::move(structure), std::move(twist));
}

}  // namespace

TEST_CASE("tensor index tuples enumerate lexicographically and round-trip") {
    const TensorBasis basis(3, 2);
    CHECK(basis.size() == 9);
    CHECK(basis.tuple(0) == std::vector<std::size_t>{0, 0});
    CHECK(basis.tuple(1) == std::vector<std::size_t>{0, 1});
    CHECK(basis.tuple(5) == std::vector<std::size_t>{1, 2});
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis.index(basis.tuple(i)) == i);
    CHECK_THROWS_AS(TensorBasis(10, 9), cap_error);
    CHECK_THROWS_AS(TensorBasis(3, 4, 80), cap_error);
    CHECK(tensor_power_size(2, 3, default_resource_cap) == 8);
}

TEST_CASE("low boundary matrices of the bundled twisted bracket") {
    const auto l = fixture_example_L();
    CHECK(boundary_matrix(l, 1).rows() == 1);
    CHECK(boundary_matrix(l, 1).is_zero());

    // d2(e_i,e_j) = -[e_i,e_j]: only (e2,e2) -> -e1 survives
    const Matrix d2 = boundary_matrix(l, 2);
    CHECK(d2.rows() == 2);
    CHECK(d2.cols() == 4);
    for (std::size_t c = 0; c < 3; ++c) CHECK(is_zero(column(d2, c)));
    CHECK(column(d2, 3) == from_ints({-1, 0}));

    // d3 columns live over the 4-element degree-2 basis
    const Matrix d3 = boundary_matrix(l, 3);
    CHECK(d3.rows() == 4);
    CHECK(d3.cols() == 8);
    // (e2,e2,e1): only the signed (1,2) insertion fires, giving -(e1, alpha(e1))
    CHECK(column(d3, TensorBasis(2, 3).index({1, 1, 0})) == from_ints({-1, 0, 0, 0}));
    // (e1,e2,e2) and (e2,e1,e2): one positive insertion each
    CHECK(column(d3, TensorBasis(2, 3).index({0, 1, 1})) == from_ints({1, 0, 0, 0}));
    CHECK(column(d3, TensorBasis(2, 3).index({1, 0, 1})) == from_ints({1, 0, 0, 0}));
    // (e2,e2,e2) keeps the (1,2) and (2,3) insertions
    CHECK(column(d3, TensorBasis(2, 3).index({1, 1, 1})) == from_ints({1, 0, 1, 0}));
    // every other column vanishes
    for (std::size_t c : {0u, 1u, 2u, 4u}) CHECK(is_zero(column(d3, c)));
}

TEST_CASE("consecutive boundaries compose to zero") {
    const std::vector<AlgebraSpec> fixtures = {
        fixture_example_L(),     fixture_abelian(1), fixture_abelian(2),
        fixture_abelian_twisted2(), fixture_leibniz2(),
        random_fixture(7, 2, FixtureFamily::yau_twist_of_fixed_leibniz)};
    for (const auto& l : fixtures) {
        for (std::size_t n = 1; n + 1 <= 5; ++n) {
            const Matrix d_n = boundary_matrix(l, n);
            const Matrix d_next = boundary_matrix(l, n + 1);
            CHECK((d_n * d_next).is_zero());
        }
    }
}

TEST_CASE("homology of the bundled fixtures") {
    const auto rows = homology_dims(fixture_example_L(), 4);
    REQUIRE(rows.size() == 4);
    const std::size_t expected[4][4] = {
        {2, 0, 2, 1}, {4, 1, 3, 1}, {8, 2, 6, 1}, {16, 5, 11, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rows[i].degree == i + 1);
        CHECK(rows[i].chain_dim == expected[i][0]);
        CHECK(rows[i].boundary_rank == expected[i][1]);
        CHECK(rows[i].cycle_dim == expected[i][2]);
        CHECK(rows[i].homology_dim == expected[i][3]);
    }

    // identity twist, same bracket: the dimensions agree degree by degree
    const auto classical = homology_dims(fixture_leibniz2(), 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(classical[i].homology_dim == rows[i].homology_dim);

    // abelian brackets have zero boundary everywhere
    for (std::size_t dim = 2; dim <= 3; ++dim) {
        const auto ab = homology_dims(fixture_abelian(dim), 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(ab[i].boundary_rank == 0);
            CHECK(ab[i].homology_dim == ab[i].chain_dim);
        }
    }
}

TEST_CASE("boundary rank ignores a global sign flip") {
    const auto l = fixture_example_L();
    for (std::size_t n = 2; n <= 4; ++n) {
        const Matrix d = boundary_matrix(l, n);
        CHECK((-d).rank() == d.rank());
    }
}

TEST_CASE("twist power tensor is the kronecker power of the twist") {
    const auto l = fixture_example_L();
    const Matrix t2 = twist_power_tensor(l, 2);
    REQUIRE(t2.rows() == 4);
    const auto& a = l.twist();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t t = 0; t < 2; ++t)
                    CHECK(t2.at(i * 2 + k, j * 2 + t) == a.at(i, j) * a.at(k, t));
    // squared twist on one slot
    const Matrix sq = twist_power_tensor(l, 1, 2);
    CHECK(sq == (a * a));
}

TEST_CASE("equivariant cochain bases over the bundled pair") {
    const auto l = fixture_example_L();
    const auto a = fixture_example_A();
    const auto cl1 = cochain_space_basis(l, a, 1);
    REQUIRE(cl1.size() == 1);
    CHECK(cl1[0].table == from_ints({0, 0, -1, 1}));
    CHECK(cl1[0].equivariant);
    CHECK(cochain_space_basis(l, a, 2).size() == 2);
    CHECK(cochain_space_basis(l, a, 3).size() == 3);

    // abelian base: the constraint only couples the twists
    const auto ab = fixture_abelian(2);
    CHECK(cochain_space_basis(ab, a, 1).size() == 2);
    CHECK(cochain_space_basis(ab, a, 2).size() == 4);
    CHECK(cochain_space_basis(ab, a, 3).size() == 8);
}

TEST_CASE("cochain constructors verify the equivariance flag") {
    const auto l = fixture_example_L();
    const auto a = fixture_example_A();
    const auto good = make_cochain(l, a, 1, from_ints({0, 0, -1, 1}));
    CHECK(good.equivariant);
    const auto bad = make_cochain(l, a, 1, from_ints({1, 0, 0, 0}));
    CHECK(!bad.equivariant);
    CHECK_THROWS_AS(coboundary(l, a, bad), validation_error);
    CHECK_THROWS_AS(make_cochain(l, a, 1, from_ints({1, 0, 0})), error);

    // the bundled degree-1 generator is a cocycle
    CHECK(cochain_is_zero(coboundary(l, a, good)));
    // linear structure
    const auto doubled = cochain_add(good, good);
    CHECK(doubled.table == cochain_scale(Rational(2), good).table);
    CHECK(cochain_value(good, 1) == from_ints({-1, 1}));
    CHECK(cochain_eval(good, {from_ints({0, 2})}) == from_ints({-2, 2}));
}

TEST_CASE("cohomology of the bundled pair, with representatives") {
    const auto l = fixture_example_L();
    const auto a = fixture_example_A();
    const auto rows = cohomology_dims(l, a, 4);
    REQUIRE(rows.size() == 4);
    const std::size_t expected[4][4] = {{1, 1, 0, 1}, {2, 1, 0, 1}, {3, 2, 1, 1}, {6, 3, 1, 2}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(rows[i].degree == i + 1);
        CHECK(rows[i].cochain_dim == expected[i][0]);
        CHECK(rows[i].cocycle_dim == expected[i][1]);
        CHECK(rows[i].coboundary_dim == expected[i][2]);
        CHECK(rows[i].cohomology_dim == expected[i][3]);
        CHECK(rows[i].representatives.size() == expected[i][3]);
        CHECK(rows[i].coboundary_basis.size() == expected[i][2]);
        for (const auto& rep : rows[i].representatives) {
            CHECK(rep.equivariant);
            CHECK(cochain_is_zero(coboundary(l, a, rep)));
        }
    }

    // abelian bracket, shear twist: no coboundaries, everything is a cocycle
    const auto uni = cohomology_dims(fixture_abelian_twisted2(), a, 3);
    REQUIRE(uni.size() == 3);
    CHECK(uni[0].cochain_dim == 1);
    CHECK(uni[1].cochain_dim == 2);
    CHECK(uni[2].cochain_dim == 3);
    CHECK(uni[0].cohomology_dim == 1);
    CHECK(uni[1].cohomology_dim == 2);
    CHECK(uni[2].cohomology_dim == 3);
    CHECK(uni[0].representatives[0].table == from_ints({0, 0, -1, 1}));
    for (std::size_t i = 0; i < 3; ++i) CHECK(uni[i].coboundary_dim == 0);
}

TEST_CASE("the equivariant subcomplex closes exactly when the twist is multiplicative") {
    const auto l = fixture_example_L();
    const auto a = fixture_example_A();
    const auto good = check_subcomplex_closure(l, a, 3);
    CHECK(good.closed);

    const auto bad = closure_counterexample();
    CHECK(check_hom_leibniz(bad).passed);
    CHECK(!check_multiplicative(bad).passed);
    CHECK(cochain_space_basis(bad, a, 1).size() == 1);
    CHECK(cochain_space_basis(bad, a, 2).size() == 3);
    const auto report = check_subcomplex_closure(bad, a, 2);
    CHECK(!report.closed);
    CHECK(report.failing_degree == 1);
}

TEST_CASE("validated boundary assembly refuses a non-multiplicative twist") {
    const auto bad = closure_counterexample();
    CHECK_THROWS_AS(boundary_matrix(bad, 2), validation_error);
    CHECK(boundary_matrix_unchecked(bad, 2).rows() == 2);
}

TEST_CASE("resource caps bound every tensor-power entry point") {
    CHECK_THROWS_AS(homology_dims(fixture_abelian(3), 12), cap_error);
    CHECK_THROWS_AS(boundary_matrix(fixture_example_L(), 3, 7), cap_error);
    CHECK_THROWS_AS(cohomology_dims(fixture_example_L(), fixture_example_A(), 3, 7), cap_error);
}
