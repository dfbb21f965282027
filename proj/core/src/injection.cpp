#include "liefan/injection.hpp"

#include "liefan/errors.hpp"

#include <algorithm>
#include <map>

namespace liefan {

TraversalOrder::TraversalOrder(GramForm gram, Weight order_vector)
    : gram_(std::move(gram)), order_vector_(std::move(order_vector)) {}

Rat TraversalOrder::height(const Weight& w) const {
    return gram_.classical_inner(w, order_vector_);
}

bool TraversalOrder::less(const Weight& a, const Weight& b) const {
    int c = cmp(a.grade(), b.grade());
    if (c != 0) return c < 0;
    c = cmp(height(a), height(b));
    if (c != 0) return c < 0;
    return Weight::compare(a, b) < 0;
}

InjectionSpec::InjectionSpec(AlgebraSpec ambient, AlgebraSpec sub,
                             std::vector<std::vector<Rat>> projection, Rat level_scale,
                             std::string name)
    : ambient_(std::move(ambient)),
      sub_(std::move(sub)),
      projection_(std::move(projection)),
      level_scale_(std::move(level_scale)),
      name_(std::move(name)) {
    const std::size_t rows = static_cast<std::size_t>(sub_.ambient_dim()) + 2;
    const std::size_t cols = static_cast<std::size_t>(ambient_.ambient_dim()) + 2;
    if (projection_.size() != rows)
        throw ConfigError("projection must have sub_dim + 2 rows");
    for (const auto& row : projection_)
        if (row.size() != cols) throw ConfigError("projection must have ambient_dim + 2 columns");

    // The grade direction must be preserved up to a nonnegative factor.
    Weight delta_image = project(Weight::delta(ambient_.ambient_dim()));
    if (!delta_image.classical_is_zero() || delta_image.level() != 0 || delta_image.grade() < 0)
        throw ConfigError("projection must map delta to a nonnegative multiple of delta");
    grade_scale_ = delta_image.grade();
    if (grade_scale_ == 0 && (ambient_.is_affine() || sub_.is_affine()))
        throw ConfigError("projection collapses the grade direction of an affine algebra");

    order_ = TraversalOrder(
        sub_.gram(),
        Weight::classical((sub_.rho() + project(ambient_.rho()).with_grade(0)).finite()));
}

Weight InjectionSpec::project(const Weight& w) const {
    if (w.dim() != ambient_.ambient_dim())
        throw ConfigError("projected weight has wrong dimension");
    const std::size_t cols = static_cast<std::size_t>(ambient_.ambient_dim()) + 2;
    std::vector<Rat> in(cols);
    for (int i = 0; i < ambient_.ambient_dim(); ++i)
        in[static_cast<std::size_t>(i)] = w.finite()[static_cast<std::size_t>(i)];
    in[cols - 2] = w.level();
    in[cols - 1] = w.grade();

    const std::size_t rows = projection_.size();
    std::vector<Rat> out(rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (projection_[i][j] != 0 && in[j] != 0) out[i] += projection_[i][j] * in[j];

    std::vector<Rat> finite(out.begin(), out.end() - 2);
    return Weight(std::move(finite), out[rows - 2], out[rows - 1]);
}

SignedSeries InjectionSpec::project_series(const SignedSeries& s) const {
    SignedSeries result;
    for (const auto& [w, c] : s.terms()) result.add_term(project(w), c);
    return result;
}

InjectionSpec InjectionSpec::identity(const AlgebraSpec& algebra) {
    const std::size_t n = static_cast<std::size_t>(algebra.ambient_dim()) + 2;
    std::vector<std::vector<Rat>> proj(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) proj[i][i] = 1;
    return InjectionSpec(algebra, algebra, std::move(proj), 1, "identity");
}

std::vector<std::string> InjectionSpec::preset_names() {
    return {"B1-in-A2", "A2_2-in-A2_1"};
}

InjectionSpec InjectionSpec::preset(const std::string& name) {
    if (name == "B1-in-A2") {
        // Orthogonal projection onto span(alpha_1); the B1 root is
        // beta = alpha_1 / 2, so the beta-coordinate of lambda is
        // (lambda|alpha_1) = lambda_1 - lambda_2.
        AlgebraSpec ambient = AlgebraSpec::finite(Series::A, 2);
        AlgebraSpec sub = AlgebraSpec::finite(Series::B, 1);
        std::vector<std::vector<Rat>> proj = {
            {Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0)},
            {Rat(0), Rat(0), Rat(0), Rat(1), Rat(0)},
            {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)},
        };
        return InjectionSpec(std::move(ambient), std::move(sub), std::move(proj), 1, name);
    }
    if (name == "A2_2-in-A2_1") {
        // Classically the same special injection, with the root rescaling
        // beta = alpha_1 / 2 compensated by doubling the level.
        AlgebraSpec ambient = AlgebraSpec::affine(Series::A, 2, 1);
        AlgebraSpec sub = AlgebraSpec::affine(Series::A, 2, 2);
        std::vector<std::vector<Rat>> proj = {
            {Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0)},
            {Rat(0), Rat(0), Rat(0), Rat(2), Rat(0)},
            {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)},
        };
        return InjectionSpec(std::move(ambient), std::move(sub), std::move(proj), 2, name);
    }
    throw ConfigError("unknown injection preset: " + name);
}

SignedSeries compute_phi(const InjectionSpec& injection, const Rat& cutoff) {
    if (cutoff < 0) throw ConfigError("negative cutoff");
    const AlgebraSpec& ambient = injection.ambient();
    const AlgebraSpec& sub = injection.sub();

    // Net exponents mult(alpha) - mult_a(alpha) over projected positive roots.
    std::map<Weight, int, Weight::Less> net;
    Rat ambient_cutoff = cutoff;
    if (ambient.is_affine()) ambient_cutoff = cutoff / injection.grade_scale();
    for (const auto& [root, mult] : ambient.positive_roots_with_mult(ambient_cutoff)) {
        Weight image = injection.project(root);
        if (image.grade() > cutoff) continue;
        net[image] += mult;
    }
    for (const auto& [root, mult] : sub.positive_roots_with_mult(cutoff)) {
        auto it = net.find(root);
        if (it == net.end())
            throw ConfigError("subalgebra root " + root.to_string() +
                              " is not a projected ambient root");
        it->second -= mult;
        if (it->second < 0)
            throw ConfigError("negative net multiplicity at " + root.to_string() +
                              ": not a reductive embedding");
    }

    const Weight zero = Weight::zero(sub.ambient_dim());
    SignedSeries product = SignedSeries::term(zero, 1);
    const Rat floor = -cutoff;
    for (const auto& [root, exponent] : net) {
        if (exponent == 0) continue;
        if (root.is_zero())
            throw ConfigError("projection kills a positive root (zero carrier exponent)");
        SignedSeries factor = SignedSeries::term(zero, 1);
        factor.add_term(-root, -1);
        for (int m = 0; m < exponent; ++m)
            product = SignedSeries::product_truncated(product, factor, floor);
    }

    // The product equals -sum_gamma s(gamma) e^{-gamma}; report the carrier
    // {gamma -> s(gamma)} itself.
    SignedSeries carrier;
    for (const auto& [w, c] : product.terms()) carrier.add_term(-w, -c);
    return carrier;
}

Fan::Fan(Weight gamma0, Int s0, std::vector<Entry> entries, Rat cutoff, TraversalOrder order)
    : gamma0_(std::move(gamma0)),
      s0_(std::move(s0)),
      entries_(std::move(entries)),
      cutoff_(std::move(cutoff)),
      order_(std::move(order)) {}

SignedSeries Fan::divisor_series() const {
    SignedSeries divisor = SignedSeries::term(-gamma0_, -s0_);
    for (const Entry& entry : entries_) divisor.add_term(-(entry.gamma + gamma0_), -entry.sign);
    return divisor;
}

Fan build_fan(const SignedSeries& phi, const InjectionSpec& injection, const Rat& phi_cutoff) {
    if (phi.empty()) throw ConfigError("empty carrier");
    const TraversalOrder& order = injection.order();

    const Weight* minimal = nullptr;
    for (const auto& [gamma, sign] : phi.terms()) {
        (void)sign;
        if (gamma.grade() < 0) throw ConfigError("carrier vector with negative grade");
        if (!minimal || order.less(gamma, *minimal)) minimal = &gamma;
    }
    // A second carrier element at the minimal (grade, height) means the
    // order functional cannot separate the recursion steps.
    for (const auto& [gamma, sign] : phi.terms()) {
        (void)sign;
        if (gamma == *minimal) continue;
        if (gamma.grade() == minimal->grade() && order.height(gamma) == order.height(*minimal))
            throw WindowError("tie for the lowest carrier vector: order functional is degenerate");
    }

    const Weight gamma0 = *minimal;
    const Int s0 = phi.coefficient(gamma0);
    std::vector<Fan::Entry> entries;
    for (const auto& [gamma, sign] : phi.terms()) {
        if (gamma == gamma0) continue;
        Weight shifted = gamma - gamma0;
        // Strict positivity under the traversal order drives the recursion.
        if (shifted.grade() < 0 ||
            (shifted.grade() == 0 && order.height(shifted) <= 0))
            throw ConfigError("fan vector " + shifted.to_string() +
                              " is not positive under the traversal order");
        entries.push_back(Fan::Entry{std::move(shifted), sign});
    }
    std::sort(entries.begin(), entries.end(), [&](const Fan::Entry& a, const Fan::Entry& b) {
        return order.less(a.gamma, b.gamma);
    });

    // gamma0 has grade 0, so the shifted fan is complete to the same depth
    // the carrier was computed to.
    return Fan(gamma0, s0, std::move(entries), phi_cutoff, order);
}

} // namespace liefan
