#include "liefan/branching.hpp"

#include "liefan/errors.hpp"

#include <algorithm>
#include <map>

namespace liefan {

AnomalousTable::AnomalousTable(SignedSeries values, Window window)
    : values_(std::move(values)), window_(std::move(window)) {}

Int AnomalousTable::value_at(const Weight& xi) const {
    if (window_.floor_grade && xi.grade() < *window_.floor_grade)
        throw WindowError("lookup below the window floor at " + xi.to_string());
    return values_.coefficient(xi);
}

SignedSeries divide_leading(const SignedSeries& source, const SignedSeries& divisor,
                            const TraversalOrder& order, const Window& window) {
    if (divisor.empty()) throw ConfigError("division by the empty series");

    // Locate the divisor's maximal term. It must sit at grade 0 (carriers
    // and denominators have nonpositive exponents) and be strictly maximal,
    // otherwise top-down elimination is not well founded.
    const Weight* top_exp = nullptr;
    for (const auto& [w, c] : divisor.terms()) {
        (void)c;
        if (!top_exp || order.less(*top_exp, w)) top_exp = &w;
    }
    for (const auto& [w, c] : divisor.terms()) {
        (void)c;
        if (w == *top_exp) continue;
        if (w.grade() == top_exp->grade() && order.height(w) == order.height(*top_exp))
            throw WindowError("divisor has no strict leading term");
    }
    if (top_exp->grade() != 0)
        throw WindowError("divisor leading term must sit at grade 0");
    const Int top_coef = divisor.coefficient(*top_exp);

    // Remainder ordered top-first; peel the current maximal term, emit one
    // quotient term, subtract its multiple of the divisor, repeat. Terms
    // below the window floor can never influence the retained quotient
    // (the divisor only moves downward) and are dropped eagerly.
    std::map<Weight, Int, TraversalOrder::Desc> remainder(order.desc());
    for (const auto& [w, c] : source.terms()) {
        if (window.floor_grade && w.grade() < *window.floor_grade) continue;
        remainder.emplace(w, c);
    }

    SignedSeries quotient;
    std::size_t steps = 0;
    const std::size_t step_budget =
        10'000'000 + 1000 * (source.size() + 1) * (divisor.size() + 1);
    while (!remainder.empty()) {
        if (++steps > step_budget)
            throw WindowError("recursion does not close: step budget exhausted");
        auto top_it = remainder.begin();
        const Weight exponent = top_it->first - *top_exp;
        Int coefficient = top_it->second;
        if (!mpz_divisible_p(coefficient.get_mpz_t(), top_coef.get_mpz_t()))
            throw WindowError("recursion not closed: leading coefficient does not divide");
        coefficient /= top_coef;
        quotient.add_term(exponent, coefficient);

        for (const auto& [w, c] : divisor.terms()) {
            Weight target = exponent + w;
            if (window.floor_grade && target.grade() < *window.floor_grade) continue;
            Int delta = -coefficient * c;
            auto [it, inserted] = remainder.emplace(target, delta);
            if (!inserted) {
                it->second += delta;
                if (it->second == 0) remainder.erase(it);
            } else if (it->second == 0) {
                remainder.erase(it);
            }
        }
    }
    return quotient;
}

AnomalousTable anomalous_coefficients(const SignedSeries& psi_projected, const Fan& fan,
                                      const Window& window) {
    if (fan.s0() == 0) throw ConfigError("malformed fan: s(gamma0) = 0");
    if (window.floor_grade && fan.cutoff() < -*window.floor_grade)
        throw WindowError("fan cutoff is shallower than the requested window");
    SignedSeries values =
        divide_leading(psi_projected, fan.divisor_series(), fan.order(), window);
    return AnomalousTable(std::move(values), window);
}

AnomalousTable anomalous_coefficients_star(const SignedSeries& psi_projected,
                                           const SignedSeries& ambient_psi0,
                                           const InjectionSpec& injection,
                                           const Window& window) {
    // The double-Weyl-sum identity: projected Psi^(mu) times the subalgebra
    // denominator equals projected Psi^(0) times the anomalous table.
    Rat sub_cutoff = 0;
    if (window.floor_grade) sub_cutoff = -*window.floor_grade;
    SignedSeries psi_a0 =
        injection.sub().singular_weights(Weight::zero(injection.sub().ambient_dim()), sub_cutoff)
            .series;
    SignedSeries source =
        SignedSeries::product_truncated(psi_projected, psi_a0, window.floor_grade);
    SignedSeries values = divide_leading(source, ambient_psi0, injection.order(), window);
    return AnomalousTable(std::move(values), window);
}

BranchingResult extract_branching(const AnomalousTable& table, const AlgebraSpec& sub) {
    BranchingResult result;
    result.sub_is_affine = sub.is_affine();
    for (const auto& [xi, k] : table.values().terms()) {
        if (!sub.is_dominant(xi)) continue;
        if (k < 0)
            throw WindowError("negative branching coefficient at dominant weight " +
                              xi.to_string());
        result.coefficients.add_term(xi, k);
    }
    return result;
}

std::vector<BranchingFunction> branching_functions(const BranchingResult& result) {
    if (!result.sub_is_affine)
        throw ConfigError("branching functions need an affine subalgebra grading");

    std::map<Weight, std::vector<std::pair<Int, Int>>, Weight::Less> classes;
    for (const auto& [nu, b] : result.coefficients.terms()) {
        Weight rep = nu.with_grade(0);
        Rat exponent = -nu.grade();
        if (!rat_is_integer(exponent))
            throw ConfigError("non-integral grade in branching result");
        classes[rep].emplace_back(exponent.get_num(), b);
    }
    std::vector<BranchingFunction> functions;
    for (auto& [rep, series] : classes) {
        std::sort(series.begin(), series.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        functions.push_back(BranchingFunction{rep, std::move(series)});
    }
    return functions;
}

AnomalousTable weight_multiplicities(const AlgebraSpec& spec, const Weight& mu,
                                     const Rat& cutoff) {
    // Subalgebra = Cartan: trivial projection, trivial subgroup. The
    // diagram is the singular element divided by the denominator, i.e. the
    // recursion in its full form with the singular source kept.
    SingularElement psi_mu = spec.singular_weights(mu, cutoff);
    SingularElement psi_0 = spec.singular_weights(Weight::zero(spec.ambient_dim()), cutoff);
    TraversalOrder order(spec.gram(), Weight::classical(spec.rho().finite()));
    Window window = spec.is_affine() ? Window::down_to(-cutoff) : Window::unbounded();
    SignedSeries values = divide_leading(psi_mu.series, psi_0.series, order, window);
    return AnomalousTable(std::move(values), window);
}

BranchingResult branch(const InjectionSpec& injection, const Weight& mu, const Rat& cutoff) {
    Rat ambient_cutoff = cutoff;
    if (injection.ambient().is_affine()) ambient_cutoff = cutoff / injection.grade_scale();
    SingularElement psi = injection.ambient().singular_weights(mu, ambient_cutoff);
    SignedSeries projected = injection.project_series(psi.series);

    SignedSeries phi = compute_phi(injection, cutoff);
    Fan fan = build_fan(phi, injection, cutoff);

    Window window =
        injection.sub().is_affine() ? Window::down_to(-cutoff) : Window::unbounded();
    AnomalousTable table = anomalous_coefficients(projected, fan, window);
    return extract_branching(table, injection.sub());
}

} // namespace liefan
