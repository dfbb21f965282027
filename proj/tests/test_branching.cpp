#include <doctest.h>

#include <liefan/branching.hpp>
#include <liefan/errors.hpp>
#include <liefan/oracle.hpp>

#include "test_helpers.hpp"

using namespace liefan;
using namespace liefan::testing;

namespace {

InjectionSpec a2_in_g2() {
    AlgebraSpec g2 = AlgebraSpec::finite(Series::G, 2);
    AlgebraSpec sub = AlgebraSpec::finite_from_simple_roots(
        {roots(g2, {1, 0}), roots(g2, {1, 3})}, GramForm::identity(3), "A2-long");
    std::vector<std::vector<Rat>> identity(5, std::vector<Rat>(5, Rat(0)));
    for (int i = 0; i < 5; ++i) identity[i][i] = 1;
    return InjectionSpec(std::move(g2), std::move(sub), std::move(identity), 1, "A2-in-G2");
}

AnomalousTable fan_table(const InjectionSpec& inj, const Weight& mu, const Rat& cutoff) {
    Rat ambient_cutoff = inj.ambient().is_affine() ? cutoff / inj.grade_scale() : cutoff;
    SignedSeries projected =
        inj.project_series(inj.ambient().singular_weights(mu, ambient_cutoff).series);
    Fan fan = build_fan(compute_phi(inj, cutoff), inj, cutoff);
    Window window = inj.sub().is_affine() ? Window::down_to(-cutoff) : Window::unbounded();
    return anomalous_coefficients(projected, fan, window);
}

AnomalousTable star_table(const InjectionSpec& inj, const Weight& mu, const Rat& cutoff) {
    Rat ambient_cutoff = inj.ambient().is_affine() ? cutoff / inj.grade_scale() : cutoff;
    SignedSeries projected =
        inj.project_series(inj.ambient().singular_weights(mu, ambient_cutoff).series);
    SignedSeries ambient_psi0 = inj.project_series(
        inj.ambient()
            .singular_weights(Weight::zero(inj.ambient().ambient_dim()), ambient_cutoff)
            .series);
    Window window = inj.sub().is_affine() ? Window::down_to(-cutoff) : Window::unbounded();
    return anomalous_coefficients_star(projected, ambient_psi0, inj, window);
}

} // namespace

TEST_CASE("identity injection reproduces the singular element") {
    AlgebraSpec a2 = AlgebraSpec::finite(Series::A, 2);
    InjectionSpec inj = InjectionSpec::identity(a2);
    Weight mu = roots(a2, {1, 1});
    AnomalousTable table = fan_table(inj, mu, 0);
    CHECK(table.values() == a2.singular_weights(mu, 0).series);
}

TEST_CASE("special injection of the A2 adjoint: full anomalous table") {
    InjectionSpec inj = InjectionSpec::preset("B1-in-A2");
    Weight mu = inj.ambient().weight_from_root_coords({Rat(1), Rat(1)});
    AnomalousTable table = fan_table(inj, mu, 0);

    const Weight beta = Weight::classical({Rat(1)});
    CHECK(table.value_at(beta.scaled(2)) == 1);
    CHECK(table.value_at(beta) == 1);
    CHECK(table.value_at(beta.scaled(-2)) == -1);
    CHECK(table.value_at(beta.scaled(-3)) == -1);
    CHECK(table.values().size() == 4);

    BranchingResult result = extract_branching(table, inj.sub());
    CHECK(result.coefficients.size() == 2);
    CHECK(result.coefficients.coefficient(beta.scaled(2)) == 1);
    CHECK(result.coefficients.coefficient(beta) == 1);

    // Dimension conservation: 8 = 5 + 3.
    Int total = 0;
    for (const auto& [nu, b] : result.coefficients.terms())
        total += b * weyl_dimension(inj.sub(), nu);
    CHECK(total == weyl_dimension(inj.ambient(), mu));
    CHECK(total == 8);
}

TEST_CASE("G2 adjoint branches to the A2 adjoint plus both fundamentals") {
    InjectionSpec inj = a2_in_g2();
    const AlgebraSpec& g2 = inj.ambient();
    Weight mu = roots(g2, {2, 3});
    AnomalousTable table = fan_table(inj, mu, 0);
    BranchingResult result = extract_branching(table, inj.sub());

    CHECK(result.coefficients.size() == 3);
    CHECK(result.coefficients.coefficient(roots(g2, {2, 3})) == 1);
    CHECK(result.coefficients.coefficient(roots(g2, {1, 2})) == 1);
    CHECK(result.coefficients.coefficient(roots(g2, {1, 1})) == 1);

    // 14 = 8 + 3 + 3.
    Int total = 0;
    for (const auto& [nu, b] : result.coefficients.terms())
        total += b * weyl_dimension(inj.sub(), nu);
    CHECK(total == weyl_dimension(g2, mu));
    CHECK(total == 14);
}

TEST_CASE("the twisted level-one reduction yields both branching functions") {
    InjectionSpec inj = InjectionSpec::preset("A2_2-in-A2_1");
    Weight omega0 = inj.ambient().fundamental_weight(0);
    BranchingResult result = branch(inj, omega0, 10);

    auto functions = branching_functions(result);
    REQUIRE(functions.size() == 2);

    // Classes sit at level 2: the vacuum class and the 2 omega_1 class.
    const Weight class_I = Weight({Rat(0)}, 2, 0);
    const Weight class_II = Weight({Rat(1)}, 2, 0);
    CHECK(functions[0].class_rep == class_I);
    CHECK(functions[1].class_rep == class_II);

    using Pairs = std::vector<std::pair<Int, Int>>;
    CHECK(functions[0].q_series ==
          Pairs{{0, 1}, {4, 1}, {6, 2}, {8, 3}, {10, 4}});
    CHECK(functions[1].q_series ==
          Pairs{{1, 1}, {3, 2}, {5, 2}, {7, 4}, {9, 5}});
}

TEST_CASE("fan and double-sum recursions agree termwise") {
    SUBCASE("B1 in A2") {
        InjectionSpec inj = InjectionSpec::preset("B1-in-A2");
        Weight mu = inj.ambient().weight_from_root_coords({Rat(1), Rat(1)});
        CHECK(fan_table(inj, mu, 0).values() == star_table(inj, mu, 0).values());
    }
    SUBCASE("A2 in G2") {
        InjectionSpec inj = a2_in_g2();
        Weight mu = inj.ambient().weight_from_root_coords({Rat(2), Rat(3)});
        CHECK(fan_table(inj, mu, 0).values() == star_table(inj, mu, 0).values());
    }
    SUBCASE("A2^(2) in A2^(1)") {
        InjectionSpec inj = InjectionSpec::preset("A2_2-in-A2_1");
        Weight omega0 = inj.ambient().fundamental_weight(0);
        CHECK(fan_table(inj, omega0, 6).values() == star_table(inj, omega0, 6).values());
    }
    SUBCASE("identity injection, trivial module") {
        AlgebraSpec a2 = AlgebraSpec::finite(Series::A, 2);
        InjectionSpec inj = InjectionSpec::identity(a2);
        AnomalousTable table = star_table(inj, Weight::zero(3), 0);
        // k_0 = 1 and nothing above it; the full table is the subalgebra
        // denominator (b = {0 -> 1} alone).
        CHECK(table.value_at(Weight::zero(3)) == 1);
        CHECK(table.values() == a2.singular_weights(Weight::zero(3), 0).series);
        for (const auto& [xi, k] : table.values().terms()) {
            (void)k;
            if (!(xi == Weight::zero(3))) CHECK(inj.order().less(xi, Weight::zero(3)));
        }
        CHECK(table.values() == star_table(inj, Weight::zero(3), 0).values());
    }
}

TEST_CASE("defining identity: the carrier convolution annihilates the table") {
    // For every window point, sum over the carrier of s(gamma) k_{xi+gamma}
    // plus the signed source indicator vanishes; equivalently the divisor
    // times the table reproduces the projected singular element.
    auto residual_is_zero = [](const InjectionSpec& inj, const Weight& mu, const Rat& cutoff) {
        Rat ambient_cutoff = inj.ambient().is_affine() ? cutoff / inj.grade_scale() : cutoff;
        SignedSeries projected =
            inj.project_series(inj.ambient().singular_weights(mu, ambient_cutoff).series);
        Fan fan = build_fan(compute_phi(inj, cutoff), inj, cutoff);
        Window window = inj.sub().is_affine() ? Window::down_to(-cutoff) : Window::unbounded();
        AnomalousTable table = anomalous_coefficients(projected, fan, window);

        SignedSeries reproduced = SignedSeries::product_truncated(
            fan.divisor_series(), table.values(), window.floor_grade);
        SignedSeries expected =
            window.floor_grade ? projected.truncated(*window.floor_grade) : projected;
        return reproduced == expected;
    };

    InjectionSpec b1 = InjectionSpec::preset("B1-in-A2");
    CHECK(residual_is_zero(b1, b1.ambient().weight_from_root_coords({Rat(1), Rat(1)}), 0));
    InjectionSpec g2 = a2_in_g2();
    CHECK(residual_is_zero(g2, g2.ambient().weight_from_root_coords({Rat(2), Rat(3)}), 0));
    InjectionSpec tw = InjectionSpec::preset("A2_2-in-A2_1");
    CHECK(residual_is_zero(tw, tw.ambient().fundamental_weight(0), 8));
}

TEST_CASE("Weyl antisymmetry of anomalous tables") {
    auto check_antisymmetry = [](const InjectionSpec& inj, const AnomalousTable& table) {
        const AlgebraSpec& sub = inj.sub();
        const Weight rho_a = sub.rho();
        for (const Weight& simple : sub.simple_roots()) {
            for (const auto& [xi, k] : table.values().terms()) {
                Weight reflected = sub.reflect(xi + rho_a, simple) - rho_a;
                if (table.window().floor_grade &&
                    reflected.grade() < *table.window().floor_grade)
                    continue;
                CHECK(table.value_at(reflected) == -k);
            }
        }
    };
    InjectionSpec b1 = InjectionSpec::preset("B1-in-A2");
    check_antisymmetry(b1, fan_table(b1, b1.ambient().weight_from_root_coords({Rat(1), Rat(1)}), 0));
    InjectionSpec tw = InjectionSpec::preset("A2_2-in-A2_1");
    check_antisymmetry(tw, fan_table(tw, tw.ambient().fundamental_weight(0), 7));
}

TEST_CASE("branching coefficients are nonnegative and stable under deeper cutoffs") {
    InjectionSpec inj = InjectionSpec::preset("A2_2-in-A2_1");
    Weight omega0 = inj.ambient().fundamental_weight(0);
    BranchingResult shallow = branch(inj, omega0, 5);
    BranchingResult deep = branch(inj, omega0, 10);

    for (const auto& [nu, b] : deep.coefficients.terms()) {
        CHECK(b > 0);
        CHECK(inj.sub().is_dominant(nu));
    }
    // Everything visible at the shallow window agrees with the deep run.
    CHECK(shallow.coefficients == deep.coefficients.truncated(-5));
}

TEST_CASE("a fan with vanishing leading sign is malformed") {
    InjectionSpec inj = InjectionSpec::preset("B1-in-A2");
    Fan broken(Weight::zero(1), 0, {}, 0, inj.order());
    SignedSeries anything = SignedSeries::term(Weight::zero(1), 1);
    CHECK_THROWS_AS(anomalous_coefficients(anything, broken, Window::unbounded()), ConfigError);
}

TEST_CASE("window guards") {
    InjectionSpec inj = InjectionSpec::preset("A2_2-in-A2_1");
    Weight omega0 = inj.ambient().fundamental_weight(0);
    SignedSeries projected =
        inj.project_series(inj.ambient().singular_weights(omega0, 6).series);

    // A fan computed to depth 3 cannot drive a depth-6 window.
    Fan shallow_fan = build_fan(compute_phi(inj, 3), inj, 3);
    CHECK_THROWS_AS(anomalous_coefficients(projected, shallow_fan, Window::down_to(Rat(-6))),
                    WindowError);

    // Lookups below the window floor refuse to answer.
    Fan fan = build_fan(compute_phi(inj, 6), inj, 6);
    AnomalousTable table = anomalous_coefficients(projected, fan, Window::down_to(Rat(-6)));
    CHECK_THROWS_AS(table.value_at(Weight({Rat(0)}, 2, -7)), WindowError);
    CHECK(table.value_at(Weight({Rat(5)}, 2, 0)) == 0); // above the support
}

TEST_CASE("weight diagrams from the recursion match the classical oracle") {
    SUBCASE("A2 adjoint") {
        AlgebraSpec a2 = AlgebraSpec::finite(Series::A, 2);
        Weight mu = roots(a2, {1, 1});
        AnomalousTable table = weight_multiplicities(a2, mu, 0);
        CHECK(table.value_at(mu) == 1);
        CHECK(table.value_at(Weight::zero(3)) == 2);
        CHECK(table.value_at(roots(a2, {1, 0})) == 1);

        FiniteModuleDiagram diagram = freudenthal(a2, mu);
        CHECK(diagram.dimension == 8);
        CHECK(table.values().size() == diagram.multiplicities.size());
        for (const auto& [w, m] : diagram.multiplicities) CHECK(table.value_at(w) == m);
    }
    SUBCASE("G2 adjoint") {
        AlgebraSpec g2 = AlgebraSpec::finite(Series::G, 2);
        Weight mu = roots(g2, {2, 3});
        AnomalousTable table = weight_multiplicities(g2, mu, 0);
        CHECK(table.value_at(Weight::zero(3)) == 2);
        Int total = 0;
        for (const auto& [w, m] : table.values().terms()) {
            (void)w;
            total += m;
        }
        CHECK(total == 14);

        FiniteModuleDiagram diagram = freudenthal(g2, mu);
        for (const auto& [w, m] : diagram.multiplicities) CHECK(table.value_at(w) == m);
        CHECK(table.values().size() == diagram.multiplicities.size());
    }
    SUBCASE("B1 spin-2 string") {
        AlgebraSpec b1 = AlgebraSpec::finite(Series::B, 1);
        const Weight beta = Weight::classical({Rat(1)});
        AnomalousTable table = weight_multiplicities(b1, beta.scaled(2), 0);
        CHECK(table.values().size() == 5);
        for (long x = -2; x <= 2; ++x) CHECK(table.value_at(beta.scaled(x)) == 1);
    }
}

TEST_CASE("weight diagrams are Weyl-invariant, not anti-invariant") {
    AlgebraSpec g2 = AlgebraSpec::finite(Series::G, 2);
    Weight mu = roots(g2, {2, 3});
    AnomalousTable table = weight_multiplicities(g2, mu, 0);
    for (const auto& [xi, m] : table.values().terms()) {
        for (int i = 0; i < 2; ++i)
            CHECK(table.value_at(g2.simple_reflect(xi, i)) == m);
    }
}

TEST_CASE("affine weight diagram of the level-one vacuum module") {
    // Independent of the recursion engine's own fixtures: the depth-n
    // multiplicities of the basic A2^(1) module are two-color partition
    // numbers 1, 2, 5, 10, ...
    AlgebraSpec a21 = AlgebraSpec::affine(Series::A, 2, 1);
    Weight omega0 = a21.fundamental_weight(0);
    AnomalousTable table = weight_multiplicities(a21, omega0, 3);
    const Weight delta = Weight::delta(3);
    CHECK(table.value_at(omega0) == 1);
    CHECK(table.value_at(omega0 - delta) == 2);
    CHECK(table.value_at(omega0 - delta.scaled(2)) == 5);
    CHECK(table.value_at(omega0 - delta.scaled(3)) == 10);
    Weight alpha1 = a21.weight_from_root_coords({Rat(1), Rat(0)});
    CHECK(table.value_at(omega0 - alpha1) == 0);
    CHECK(table.value_at(omega0 - alpha1 - delta) == 1);
    CHECK(table.value_at(omega0 - alpha1 - delta.scaled(3)) == 5);
}

TEST_CASE("branching functions need an affine grading") {
    InjectionSpec inj = InjectionSpec::preset("B1-in-A2");
    Weight mu = inj.ambient().weight_from_root_coords({Rat(1), Rat(1)});
    BranchingResult result = branch(inj, mu, 0);
    CHECK_THROWS_AS(branching_functions(result), ConfigError);
}

TEST_CASE("trivial module under the identity injection") {
    AlgebraSpec a21 = AlgebraSpec::affine(Series::A, 2, 1);
    InjectionSpec inj = InjectionSpec::identity(a21);
    BranchingResult result = branch(inj, Weight::zero(3), 4);
    auto functions = branching_functions(result);
    REQUIRE(functions.size() == 1);
    CHECK(functions[0].class_rep == Weight::zero(3));
    CHECK(functions[0].q_series == std::vector<std::pair<Int, Int>>{{0, 1}});
}
