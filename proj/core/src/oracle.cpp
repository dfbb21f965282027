#include "liefan/oracle.hpp"

#include "liefan/errors.hpp"
#include "liefan/linalg.hpp"

#include <algorithm>

namespace liefan {

namespace {

void require_finite_dominant(const AlgebraSpec& spec, const Weight& mu) {
    if (spec.is_affine()) throw ConfigError("oracle supports finite algebras only");
    if (!spec.is_dominant_integral(mu))
        throw ConfigError("highest weight is not dominant integral");
}

// Fundamental coweights: (x_i | alpha_j) = delta_ij, classical parts.
std::vector<Weight> fundamental_coweights(const AlgebraSpec& spec) {
    const auto& simples = spec.classical_simple_roots();
    const std::size_t r = simples.size();
    std::vector<Weight> coweights;
    for (std::size_t i = 0; i < r; ++i) {
        RatMatrix system(r, RatVector(r));
        RatVector rhs(r, Rat(0));
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < r; ++j)
                system[k][j] = spec.gram().classical_inner(simples[j], simples[k]);
        rhs[i] = 1;
        RatVector c = solve_linear(std::move(system), std::move(rhs));
        Weight x = Weight::zero(spec.ambient_dim());
        for (std::size_t j = 0; j < r; ++j) x = x + simples[j].scaled(c[j]);
        coweights.push_back(std::move(x));
    }
    return coweights;
}

} // namespace

Int weyl_dimension(const AlgebraSpec& spec, const Weight& mu) {
    require_finite_dominant(spec, mu);
    const Weight shifted = mu + spec.rho();
    Rat product = 1;
    for (const auto& [alpha, mult] : spec.positive_roots_with_mult(0)) {
        (void)mult;
        product *= spec.inner(shifted, alpha) / spec.inner(spec.rho(), alpha);
    }
    if (!rat_is_integer(product))
        throw ConfigError("Weyl dimension is not an integer: inconsistent root data");
    return product.get_num();
}

FiniteModuleDiagram freudenthal(const AlgebraSpec& spec, const Weight& mu) {
    require_finite_dominant(spec, mu);
    const auto& simples = spec.classical_simple_roots();
    const std::size_t r = simples.size();
    const auto coweights = fundamental_coweights(spec);
    const Weight mu_rho = mu + spec.rho();
    const Rat top_norm = spec.gram().norm2(mu_rho);
    const Rat mu_norm = spec.gram().norm2(mu);

    // Dominant weights mu - sum c_i alpha_i inside the orbit hull
    // |lambda| <= |mu|; the hull bounds each root coordinate through the
    // fundamental coweights.
    std::vector<Int> bounds(r);
    for (std::size_t i = 0; i < r; ++i) {
        Rat cw_norm = spec.gram().norm2(coweights[i]);
        bounds[i] = isqrt_floor(4 * mu_norm * cw_norm) + 1;
    }

    std::vector<Weight> dominant;
    std::vector<Int> coords(r, Int(0));
    while (true) {
        Weight lambda = mu;
        for (std::size_t i = 0; i < r; ++i)
            lambda = lambda - simples[i].scaled(Rat(coords[i]));
        if (spec.gram().norm2(lambda) <= mu_norm && spec.is_dominant(lambda))
            dominant.push_back(lambda);

        std::size_t pos = 0;
        while (pos < r) {
            ++coords[pos];
            if (coords[pos] <= bounds[pos]) break;
            coords[pos] = 0;
            ++pos;
        }
        if (pos == r) break;
    }
    // Process in increasing depth below mu.
    std::sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
        Rat ha = spec.gram().classical_inner(mu - a, spec.rho());
        Rat hb = spec.gram().classical_inner(mu - b, spec.rho());
        int c = cmp(ha, hb);
        if (c != 0) return c < 0;
        return Weight::compare(a, b) < 0;
    });

    std::map<Weight, Int, Weight::Less> dominant_mult;
    auto lookup = [&](const Weight& w) -> Int {
        auto [rep, sign] = spec.dominant_representative(w);
        (void)sign;
        auto it = dominant_mult.find(rep);
        return it == dominant_mult.end() ? Int(0) : it->second;
    };

    for (const Weight& lambda : dominant) {
        if (lambda == mu) {
            dominant_mult.emplace(mu, 1);
            continue;
        }
        Rat denominator = top_norm - spec.gram().norm2(lambda + spec.rho());
        if (denominator == 0) continue; // not a weight of the module
        Rat sum = 0;
        for (const auto& [alpha, mult] : spec.positive_roots_with_mult(0)) {
            (void)mult;
            for (Int j = 1;; ++j) {
                Weight above = lambda + alpha.scaled(Rat(j));
                if (spec.gram().norm2(above) > mu_norm) break;
                Int m = lookup(above);
                if (m != 0) sum += 2 * Rat(m) * spec.inner(above, alpha);
            }
        }
        Rat value = sum / denominator;
        if (!rat_is_integer(value))
            throw ConfigError("Freudenthal recursion produced a non-integer multiplicity");
        if (value > 0) dominant_mult.emplace(lambda, value.get_num());
    }

    // Expand by Weyl invariance.
    FiniteModuleDiagram diagram;
    diagram.highest_weight = mu;
    diagram.dimension = 0;
    for (const auto& [lambda, m] : dominant_mult) {
        std::vector<Weight> orbit;
        std::map<Weight, bool, Weight::Less> seen;
        seen.emplace(lambda, true);
        orbit.push_back(lambda);
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (std::size_t i = 0; i < r; ++i) {
                Weight image = spec.simple_reflect(orbit[head], static_cast<int>(i));
                if (seen.emplace(image, true).second) orbit.push_back(image);
            }
        }
        for (const Weight& w : orbit) {
            diagram.multiplicities[w] = m;
            diagram.dimension += m;
        }
    }
    return diagram;
}

} // namespace liefan
