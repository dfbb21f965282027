#include "liefan/algebra.hpp"

#include "liefan/errors.hpp"
#include "liefan/linalg.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace liefan {

namespace {

std::string series_letter(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::G: return "G";
    }
    return "?";
}

Rat factorial(int n) {
    Rat f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::size_t weyl_order_formula(Series series, int rank) {
    Rat order = 0;
    switch (series) {
        case Series::A: order = factorial(rank + 1); break;
        case Series::B:
        case Series::C: {
            order = factorial(rank);
            for (int i = 0; i < rank; ++i) order *= 2;
            break;
        }
        case Series::D: {
            order = factorial(rank);
            for (int i = 0; i < rank - 1; ++i) order *= 2;
            break;
        }
        case Series::G: order = 12; break;
    }
    return static_cast<std::size_t>(order.get_num().get_ui());
}

// Canonical simple roots in the orthogonal ambient basis.
std::vector<Weight> canonical_simple_roots(Series series, int rank, int& ambient_dim) {
    auto unit = [](int dim, int i, int sign) {
        std::vector<Rat> v(static_cast<std::size_t>(dim), Rat(0));
        v[static_cast<std::size_t>(i)] = sign;
        return v;
    };
    std::vector<Weight> simples;
    switch (series) {
        case Series::A: {
            ambient_dim = rank + 1;
            for (int i = 0; i < rank; ++i) {
                auto v = unit(ambient_dim, i, 1);
                v[static_cast<std::size_t>(i + 1)] = -1;
                simples.push_back(Weight::classical(std::move(v)));
            }
            break;
        }
        case Series::B:
        case Series::C:
        case Series::D: {
            ambient_dim = rank;
            for (int i = 0; i + 1 < rank; ++i) {
                auto v = unit(ambient_dim, i, 1);
                v[static_cast<std::size_t>(i + 1)] = -1;
                simples.push_back(Weight::classical(std::move(v)));
            }
            if (series == Series::B) {
                simples.push_back(Weight::classical(unit(ambient_dim, rank - 1, 1)));
            } else if (series == Series::C) {
                simples.push_back(Weight::classical(unit(ambient_dim, rank - 1, 2)));
            } else {
                auto v = unit(ambient_dim, rank - 2, 1);
                v[static_cast<std::size_t>(rank - 1)] = 1;
                simples.push_back(Weight::classical(std::move(v)));
            }
            break;
        }
        case Series::G: {
            // alpha_1 long, alpha_2 short, realized inside the sum-zero
            // hyperplane of Q^3 so all coordinates stay rational.
            ambient_dim = 3;
            simples.push_back(Weight::classical({Rat(-2), Rat(1), Rat(1)}));
            simples.push_back(Weight::classical({Rat(1), Rat(-1), Rat(0)}));
            break;
        }
    }
    return simples;
}

void validate_finite_kind(Series series, int rank) {
    switch (series) {
        case Series::A:
        case Series::B:
        case Series::C:
            if (rank < 1) throw UnsupportedAlgebraError("rank must be >= 1");
            break;
        case Series::D:
            if (rank < 2) throw UnsupportedAlgebraError("series D needs rank >= 2");
            break;
        case Series::G:
            if (rank != 2) throw UnsupportedAlgebraError("G2 has rank 2");
            break;
    }
    if (rank > 12) throw UnsupportedAlgebraError("rank too large");
}

std::vector<std::vector<Rat>> cartan_matrix(const std::vector<Weight>& simples,
                                            const GramForm& gram) {
    const std::size_t r = simples.size();
    std::vector<std::vector<Rat>> c(r, std::vector<Rat>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            c[i][j] = 2 * gram.classical_inner(simples[i], simples[j]) /
                      gram.classical_inner(simples[j], simples[j]);
    return c;
}

} // namespace

std::string AlgebraKind::name() const {
    std::string base = series_letter(series) + std::to_string(rank);
    if (twist == 0) return base;
    return base + "^(" + std::to_string(twist) + ")";
}

const Weight& AlgebraSpec::affine_simple_root() const {
    if (!affine_root_) throw ConfigError("finite algebra has no affine simple root");
    return *affine_root_;
}

std::vector<Weight> AlgebraSpec::simple_roots() const {
    std::vector<Weight> all = classical_simple_roots_;
    if (affine_root_) all.push_back(*affine_root_);
    return all;
}

Rat AlgebraSpec::coroot_pairing(const Weight& lam, const Weight& alpha) const {
    return 2 * inner(lam, alpha) / inner(alpha, alpha);
}

Weight AlgebraSpec::simple_reflect(const Weight& w, int i) const {
    return reflect(w, classical_simple_roots_.at(static_cast<std::size_t>(i)));
}

Weight AlgebraSpec::reflect(const Weight& w, const Weight& root) const {
    return w - root.scaled(coroot_pairing(w, root));
}

Weight AlgebraSpec::translate(const Weight& lam, const Weight& alpha) const {
    const Rat k = lam.level();
    Weight shifted = lam + alpha.scaled(k);
    Rat drop = inner(lam, alpha) + inner(alpha, alpha) * k / 2;
    return shifted - Weight::delta(ambient_dim()).scaled(drop);
}

bool AlgebraSpec::is_dominant(const Weight& mu) const {
    for (const Weight& s : simple_roots())
        if (coroot_pairing(mu, s) < 0) return false;
    return true;
}

bool AlgebraSpec::is_dominant_integral(const Weight& mu) const {
    for (const Weight& s : simple_roots()) {
        Rat c = coroot_pairing(mu, s);
        if (c < 0 || !rat_is_integer(c)) return false;
    }
    return true;
}

const Weight& AlgebraSpec::highest_root() const {
    if (!has_highest_root_)
        throw UnsupportedAlgebraError("reducible root system has no highest root");
    return highest_root_;
}

// Builds positive roots (reflection closure of the simple roots), the Weyl
// vector, and the highest root; validates Cartan integrality.
void AlgebraSpec::finish_classical_data() {
    const auto& simples = classical_simple_roots_;
    if (simples.empty()) throw ConfigError("no simple roots");
    for (const Weight& s : simples) {
        if (s.dim() != ambient_dim()) throw ConfigError("simple root dimension mismatch");
        if (s.level() != 0 || s.grade() != 0)
            throw ConfigError("classical simple roots must have zero level and grade");
        if (gram_.classical_inner(s, s) <= 0)
            throw ConfigError("simple root with nonpositive norm");
    }

    // Reflection closure.
    std::set<Weight, Weight::Less> roots(simples.begin(), simples.end());
    std::deque<Weight> queue(simples.begin(), simples.end());
    const std::size_t closure_cap = 4096;
    while (!queue.empty()) {
        Weight r = queue.front();
        queue.pop_front();
        for (const Weight& s : simples) {
            Rat pairing = coroot_pairing(r, s);
            if (!rat_is_integer(pairing))
                throw ConfigError("non-integral Cartan pairing: not a root system");
            Weight image = r - s.scaled(pairing);
            if (roots.insert(image).second) queue.push_back(image);
        }
        if (roots.size() > closure_cap)
            throw ConfigError("reflection closure does not terminate: not a finite root system");
    }

    // Positivity from simple-root coordinates; the highest root is the
    // unique root of maximal height (a tie means a reducible system).
    std::vector<RatVector> columns;
    for (const Weight& s : simples) columns.push_back(s.finite());
    classical_positive_roots_.clear();
    std::optional<Rat> max_height;
    bool height_tie = false;
    for (const Weight& r : roots) {
        auto coords = solve_in_span(columns, r.finite());
        if (!coords) throw ConfigError("root outside the span of the simple roots");
        bool nonneg = true, nonpos = true;
        Rat height = 0;
        for (const Rat& c : *coords) {
            if (c < 0) nonneg = false;
            if (c > 0) nonpos = false;
            height += c;
        }
        if (nonneg == nonpos) throw ConfigError("root with mixed signs: inconsistent system");
        if (nonneg) {
            classical_positive_roots_.push_back(r);
            if (!max_height || height > *max_height) {
                max_height = height;
                highest_root_ = r;
                height_tie = false;
            } else if (height == *max_height) {
                height_tie = true;
            }
        }
    }
    has_highest_root_ = !height_tie;
    std::sort(classical_positive_roots_.begin(), classical_positive_roots_.end(),
              [](const Weight& a, const Weight& b) { return Weight::compare(a, b) < 0; });

    Weight half_sum = Weight::zero(ambient_dim());
    for (const Weight& r : classical_positive_roots_) half_sum = half_sum + r;
    rho_ = half_sum.scaled(Rat(1, 2));
    for (const Weight& s : simples)
        if (coroot_pairing(rho_, s) != 1)
            throw ConfigError("Weyl vector fails (rho|alpha^vee) = 1");

}

AlgebraSpec AlgebraSpec::finite(Series series, int rank) {
    validate_finite_kind(series, rank);
    AlgebraSpec spec;
    spec.kind_ = AlgebraKind{series, rank, 0};
    spec.name_ = spec.kind_.name();
    int ambient_dim = 0;
    spec.classical_simple_roots_ = canonical_simple_roots(series, rank, ambient_dim);
    spec.gram_ = GramForm::identity(ambient_dim);
    spec.finish_classical_data();
    spec.classical_weyl_order_ = weyl_order_formula(series, rank);
    return spec;
}

AlgebraSpec AlgebraSpec::finite_from_simple_roots(std::vector<Weight> simple_roots,
                                                  GramForm gram, std::string name) {
    AlgebraSpec spec;
    spec.gram_ = std::move(gram);
    spec.classical_simple_roots_ = std::move(simple_roots);
    spec.name_ = std::move(name);
    spec.finish_classical_data();

    // Identify the kind from the Cartan matrix; the standard matrix of the
    // kind must be reproduced exactly (same simple-root order).
    const int rank = spec.classical_rank();
    auto cartan = cartan_matrix(spec.classical_simple_roots_, spec.gram_);
    for (Series series : {Series::A, Series::B, Series::C, Series::D, Series::G}) {
        if (series == Series::G && rank != 2) continue;
        if (series == Series::D && rank < 2) continue;
        int dim = 0;
        auto candidate = canonical_simple_roots(series, rank, dim);
        if (cartan == cartan_matrix(candidate, GramForm::identity(dim))) {
            spec.kind_ = AlgebraKind{series, rank, 0};
            spec.classical_weyl_order_ = weyl_order_formula(series, rank);
            return spec;
        }
    }
    throw UnsupportedAlgebraError("Cartan matrix matches no supported finite series");
}

AlgebraSpec AlgebraSpec::affine(Series series, int rank, int twist) {
    if (twist == 1) {
        AlgebraSpec spec = finite(series, rank);
        spec.kind_ = AlgebraKind{series, rank, 1};
        spec.name_ = spec.kind_.name();

        // Normalize |theta|^2 = 2: the level pairing (delta|lam) = lam.level
        // is fixed, so the classical form is pinned up to nothing.
        Rat theta_norm = spec.gram_.norm2(spec.highest_root_);
        if (theta_norm != 2) {
            Rat scale = 2 / theta_norm;
            auto m = spec.gram_.matrix();
            for (auto& row : m)
                for (auto& entry : row) entry *= scale;
            spec.gram_ = GramForm(std::move(m));
        }

        spec.affine_root_ = Weight::delta(spec.ambient_dim()) - spec.highest_root_;
        Rat level = spec.gram_.classical_inner(spec.rho_, spec.highest_root_) + 1;
        spec.rho_ = Weight(spec.rho_.finite(), level, 0);

        // M = nu(coroot lattice): generators 2 alpha_i / |alpha_i|^2.
        spec.translation_basis_.clear();
        for (const Weight& s : spec.classical_simple_roots_)
            spec.translation_basis_.push_back(s.scaled(2 / spec.gram_.norm2(s)));
        return spec;
    }
    if (twist == 2) {
        if (series != Series::A || rank < 2 || rank % 2 != 0)
            throw UnsupportedAlgebraError("twist 2 is supported for A_{2r} only");
        const int r = rank / 2;
        AlgebraSpec spec;
        spec.kind_ = AlgebraKind{series, rank, 2};
        spec.name_ = spec.kind_.name();
        spec.gram_ = GramForm::identity(r);
        // Grade-zero root system of B_r type with unit short roots; the
        // long roots 2 e_i live at odd grades only.
        std::vector<Weight> simples;
        for (int i = 0; i + 1 < r; ++i) {
            std::vector<Rat> v(static_cast<std::size_t>(r), Rat(0));
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(i + 1)] = -1;
            simples.push_back(Weight::classical(std::move(v)));
        }
        {
            std::vector<Rat> v(static_cast<std::size_t>(r), Rat(0));
            v[static_cast<std::size_t>(r - 1)] = 1;
            simples.push_back(Weight::classical(std::move(v)));
        }
        spec.classical_simple_roots_ = std::move(simples);
        spec.finish_classical_data();
        spec.classical_weyl_order_ = weyl_order_formula(Series::B, r);

        std::vector<Rat> e1(static_cast<std::size_t>(r), Rat(0));
        e1[0] = 2;
        Weight phi = Weight::classical(e1);
        spec.affine_root_ = Weight::delta(r) - phi;
        Rat level = spec.gram_.classical_inner(spec.rho_, phi) + spec.gram_.norm2(phi) / 2;
        spec.rho_ = Weight(spec.rho_.finite(), level, 0);

        // Translations: s_{alpha_0} s_{2 e_1 direction} shifts by e_1, so M
        // is the full unit lattice (strictly larger than the classical
        // coroot lattice).
        spec.translation_basis_.clear();
        for (int i = 0; i < r; ++i) {
            std::vector<Rat> v(static_cast<std::size_t>(r), Rat(0));
            v[static_cast<std::size_t>(i)] = 1;
            spec.translation_basis_.push_back(Weight::classical(std::move(v)));
        }
        return spec;
    }
    throw UnsupportedAlgebraError("unsupported twist " + std::to_string(twist));
}

std::vector<std::pair<Weight, int>> AlgebraSpec::positive_roots_with_mult(
    const Rat& grade_cutoff) const {
    std::vector<std::pair<Weight, int>> result;
    for (const Weight& r : classical_positive_roots_) result.emplace_back(r, 1);
    if (!is_affine()) return result;

    const Weight delta = Weight::delta(ambient_dim());
    const int imaginary_mult = classical_rank();
    for (Int n = 1; Rat(n) <= grade_cutoff; ++n) {
        const Weight shift = delta.scaled(Rat(n));
        for (const Weight& r : classical_positive_roots_) {
            result.emplace_back(r + shift, 1);
            result.emplace_back(-r + shift, 1);
        }
        result.emplace_back(shift, imaginary_mult);
        if (kind_.twist == 2 && n % 2 != 0) {
            // Doubled short roots appear at odd grades.
            for (int i = 0; i < ambient_dim(); ++i) {
                std::vector<Rat> v(static_cast<std::size_t>(ambient_dim()), Rat(0));
                v[static_cast<std::size_t>(i)] = 2;
                Weight doubled = Weight::classical(v);
                result.emplace_back(doubled + shift, 1);
                result.emplace_back(-doubled + shift, 1);
            }
        }
    }
    return result;
}

std::size_t AlgebraSpec::classical_weyl_order() const {
    return classical_weyl_order_;
}

std::pair<Weight, int> AlgebraSpec::dominant_representative(const Weight& w) const {
    Weight current = w;
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i < classical_simple_roots_.size(); ++i) {
            if (coroot_pairing(current, classical_simple_roots_[i]) < 0) {
                current = simple_reflect(current, static_cast<int>(i));
                sign = -sign;
                moved = true;
                break;
            }
        }
    }
    for (const Weight& s : classical_simple_roots_)
        if (inner(current, s) == 0) return {current, 0};
    return {current, sign};
}

SignedSeries AlgebraSpec::classical_weyl_orbit(const Weight& w) const {
    auto [dominant, sign] = dominant_representative(w);
    SignedSeries result;
    if (sign == 0) return result; // singular: the signed sum cancels

    std::map<Weight, int, Weight::Less> seen;
    std::deque<Weight> queue;
    seen.emplace(dominant, sign);
    queue.push_back(dominant);
    while (!queue.empty()) {
        Weight current = queue.front();
        queue.pop_front();
        int current_sign = seen.at(current);
        for (std::size_t i = 0; i < classical_simple_roots_.size(); ++i) {
            Weight image = simple_reflect(current, static_cast<int>(i));
            if (seen.emplace(image, -current_sign).second) queue.push_back(image);
        }
    }
    for (const auto& [weight, eps] : seen) result.add_term(weight, eps);
    return result;
}

// All alpha in M with grade drop (lam|alpha) + |alpha|^2 k/2 <= max_drop.
// The positive definite quadratic part confines the search to an ellipsoid;
// coordinates are boxed through the inverse Gram of the translation basis.
std::vector<Weight> AlgebraSpec::translation_ball(const Weight& lam, const Rat& max_drop) const {
    std::vector<Weight> result;
    if (max_drop < 0) return result;
    const Rat k = lam.level();
    if (k <= 0) throw ConfigError("translation ball needs positive level");

    const std::size_t r = translation_basis_.size();
    RatMatrix t(r, RatVector(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            t[i][j] = gram_.classical_inner(translation_basis_[i], translation_basis_[j]);
    RatMatrix t_inv = invert_matrix(t);

    Rat lam_norm = gram_.classical_inner(lam, lam);
    if (lam_norm < 0) lam_norm = 0;
    // From k|a|^2/2 - |lam||a| <= N: |a|^2 <= (4|lam|^2 + 4kN)/k^2.
    Rat radius2 = (4 * lam_norm + 4 * k * max_drop) / (k * k);

    std::vector<Int> bounds(r);
    for (std::size_t i = 0; i < r; ++i) bounds[i] = isqrt_floor(radius2 * t_inv[i][i]);

    std::vector<Int> coords(r);
    for (std::size_t i = 0; i < r; ++i) coords[i] = -bounds[i];
    while (true) {
        Weight alpha = Weight::zero(ambient_dim());
        for (std::size_t i = 0; i < r; ++i)
            alpha = alpha + translation_basis_[i].scaled(Rat(coords[i]));
        Rat drop = gram_.classical_inner(lam, alpha) + gram_.classical_inner(alpha, alpha) * k / 2;
        if (drop <= max_drop) result.push_back(alpha);

        std::size_t pos = 0;
        while (pos < r) {
            ++coords[pos];
            if (coords[pos] <= bounds[pos]) break;
            coords[pos] = -bounds[pos];
            ++pos;
        }
        if (pos == r) break;
    }
    return result;
}

SingularElement AlgebraSpec::singular_weights(const Weight& mu, const Rat& cutoff) const {
    if (cutoff < 0) throw ConfigError("negative cutoff");
    if (mu.dim() != ambient_dim()) throw ConfigError("highest weight dimension mismatch");
    if (!is_dominant_integral(mu))
        throw ConfigError("highest weight is not dominant integral for " + name_);

    const Weight lam = mu + rho_;
    SignedSeries series;
    if (!is_affine()) {
        series = classical_weyl_orbit(lam).shifted(-rho_);
    } else {
        // W = classical group extended by translations; the translated
        // weight's grade alone decides the cutoff, the classical orbit
        // preserves it.
        const Rat max_drop = cutoff + lam.grade();
        for (const Weight& alpha : translation_ball(lam, max_drop)) {
            Weight translated = translate(lam, alpha);
            series += classical_weyl_orbit(translated).shifted(-rho_);
        }
    }
    return SingularElement{std::move(series), mu, cutoff};
}

SignedSeries AlgebraSpec::expand_denominator(const Rat& cutoff) const {
    if (cutoff < 0) throw ConfigError("negative cutoff");
    SignedSeries result = SignedSeries::term(Weight::zero(ambient_dim()), 1);
    const Rat floor = -cutoff;
    for (const auto& [root, mult] : positive_roots_with_mult(cutoff)) {
        SignedSeries factor = SignedSeries::term(Weight::zero(ambient_dim()), 1);
        factor.add_term(-root, -1);
        for (int m = 0; m < mult; ++m)
            result = SignedSeries::product_truncated(result, factor, floor);
    }
    return result;
}

Weight AlgebraSpec::fundamental_weight(int i) const {
    const int r = classical_rank();
    const bool affine = is_affine();
    const int lo = affine ? 0 : 1;
    if (i < lo || i > r) throw ConfigError("fundamental weight index out of range");

    // Classical coefficients from (x|alpha_k^vee) = delta_{ik}, k = 1..r.
    RatMatrix system(static_cast<std::size_t>(r), RatVector(static_cast<std::size_t>(r)));
    RatVector rhs(static_cast<std::size_t>(r), Rat(0));
    for (int k = 1; k <= r; ++k) {
        const Weight& alpha_k = classical_simple_roots_[static_cast<std::size_t>(k - 1)];
        for (int j = 1; j <= r; ++j)
            system[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] =
                2 * gram_.classical_inner(classical_simple_roots_[static_cast<std::size_t>(j - 1)],
                                          alpha_k) /
                gram_.classical_inner(alpha_k, alpha_k);
        if (k == i) rhs[static_cast<std::size_t>(k - 1)] = 1;
    }
    RatVector coeffs = solve_linear(std::move(system), std::move(rhs));
    Weight classical = Weight::zero(ambient_dim());
    for (int j = 0; j < r; ++j)
        classical = classical + classical_simple_roots_[static_cast<std::size_t>(j)].scaled(
                                    coeffs[static_cast<std::size_t>(j)]);
    if (!affine) return classical;

    // Level from the affine node: alpha_0 = delta - phi.
    const Weight phi = Weight::delta(ambient_dim()) - *affine_root_;
    Rat phi_norm = gram_.classical_inner(phi, phi);
    Rat level = gram_.classical_inner(classical, phi);
    if (i == 0) level += phi_norm / 2;
    return Weight(classical.finite(), level, 0);
}

Weight AlgebraSpec::weight_from_fw(const std::vector<Rat>& coeffs) const {
    const int lo = is_affine() ? 0 : 1;
    const int expected = classical_rank() + (is_affine() ? 1 : 0);
    if (static_cast<int>(coeffs.size()) != expected)
        throw ConfigError("expected " + std::to_string(expected) +
                          " fundamental-weight coordinates for " + name_);
    Weight result = Weight::zero(ambient_dim());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        result = result + fundamental_weight(lo + static_cast<int>(j)).scaled(coeffs[j]);
    }
    return result;
}

std::optional<std::vector<Rat>> AlgebraSpec::to_root_coords(const Weight& w) const {
    std::vector<RatVector> columns;
    for (const Weight& s : classical_simple_roots_) columns.push_back(s.finite());
    return solve_in_span(columns, w.finite());
}

Weight AlgebraSpec::weight_from_root_coords(const std::vector<Rat>& coeffs) const {
    if (coeffs.size() != classical_simple_roots_.size())
        throw ConfigError("root coordinate count mismatch");
    Weight result = Weight::zero(ambient_dim());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        result = result + classical_simple_roots_[i].scaled(coeffs[i]);
    return result;
}

} // namespace liefan
