#pragma once

#include "liefan/gram.hpp"
#include "liefan/series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liefan {

enum class Series { A, B, C, D, G };

/// Identifies a finite series (twist 0) or an affine algebra: twist 1 for
/// untwisted X_r^(1), twist 2 for A_{2r}^(2) (rank stores the A-label 2r).
struct AlgebraKind {
    Series series = Series::A;
    int rank = 1;
    int twist = 0;

    bool is_affine() const { return twist != 0; }
    std::string name() const;
};

/// The signed set {w(mu+rho) - rho, eps(w)} over the Weyl group, truncated
/// to grade >= -grade_cutoff. Every coefficient is eps(w) = det(w) = +-1;
/// all terms share the level of mu.
struct SingularElement {
    SignedSeries series;
    Weight highest_weight;
    Rat grade_cutoff;
};

/// Root data of a finite or affine algebra: simple roots in an orthogonal
/// ambient basis, Gram form, Weyl vector, translation lattice and root
/// multiplicities. Immutable; all operations are pure.
class AlgebraSpec {
public:
    static AlgebraSpec finite(Series series, int rank);
    static AlgebraSpec affine(Series series, int rank, int twist);
    /// A finite algebra from an explicit realization (e.g. the long-root
    /// subsystem of another algebra, kept in the ambient coordinates).
    /// Validates that the reflection closure is a finite root system with
    /// integral Cartan pairings.
    static AlgebraSpec finite_from_simple_roots(std::vector<Weight> simple_roots,
                                                GramForm gram, std::string name);

    const AlgebraKind& kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool is_affine() const { return kind_.is_affine(); }
    int ambient_dim() const { return gram_.dim(); }
    int classical_rank() const { return static_cast<int>(classical_simple_roots_.size()); }

    const GramForm& gram() const { return gram_; }
    const std::vector<Weight>& classical_simple_roots() const { return classical_simple_roots_; }
    /// alpha_0 = delta - phi. Throws for finite algebras.
    const Weight& affine_simple_root() const;
    /// All simple roots: classical ones, then alpha_0 for affine kinds.
    std::vector<Weight> simple_roots() const;
    const Weight& rho() const { return rho_; }
    const std::vector<Weight>& classical_positive_roots() const { return classical_positive_roots_; }
    /// Generators of the translation lattice M (affine only).
    const std::vector<Weight>& translation_basis() const { return translation_basis_; }

    Rat inner(const Weight& a, const Weight& b) const { return gram_.inner(a, b); }
    /// 2(lam|alpha)/(alpha|alpha).
    Rat coroot_pairing(const Weight& lam, const Weight& alpha) const;

    /// Reflection in the i-th classical simple root (classical part only).
    Weight simple_reflect(const Weight& w, int i) const;
    /// Reflection in an arbitrary real root.
    Weight reflect(const Weight& w, const Weight& root) const;
    /// Translation t_alpha: lam + k*alpha - ((lam|alpha) + |alpha|^2 k/2) delta.
    Weight translate(const Weight& lam, const Weight& alpha) const;

    /// (mu|alpha_i^vee) in Z>=0 for every simple coroot (affine root
    /// included for affine kinds).
    bool is_dominant_integral(const Weight& mu) const;
    /// Dominance only (no integrality): all simple coroot pairings >= 0.
    bool is_dominant(const Weight& mu) const;

    /// Fundamental weights: indices 1..r finite, 0..r affine; grade 0.
    Weight fundamental_weight(int i) const;
    /// Sum of coeffs[i] * fundamental weights; coeff vector indexed from
    /// alpha_1 for finite kinds and from alpha_0 for affine kinds.
    Weight weight_from_fw(const std::vector<Rat>& coeffs) const;
    /// Coordinates of a classical part in the simple-root basis, if it lies
    /// in their span.
    std::optional<std::vector<Rat>> to_root_coords(const Weight& w) const;
    Weight weight_from_root_coords(const std::vector<Rat>& coeffs) const;

    /// Positive roots with multiplicities, up to the given grade (finite
    /// kinds ignore the cutoff). Imaginary roots n*delta carry multiplicity
    /// classical_rank().
    std::vector<std::pair<Weight, int>> positive_roots_with_mult(const Rat& grade_cutoff) const;

    std::size_t classical_weyl_order() const;

    /// The signed orbit sum over the classical Weyl group:
    /// sum_s eps(s) e^{s(w)}. Exactly |W| terms for regular w; empty for
    /// singular w (fixed by some reflection).
    SignedSeries classical_weyl_orbit(const Weight& w) const;

    /// Maps the classical part into the dominant chamber, tracking det.
    /// Returns {dominant representative, sign}; sign is 0 when the weight
    /// is singular (lies on a wall).
    std::pair<Weight, int> dominant_representative(const Weight& w) const;

    /// All singular weights w(mu+rho)-rho with grade >= -cutoff, with signs
    /// eps(w). For affine kinds the Weyl group is enumerated as the
    /// classical group extended by translations t_alpha, alpha in M; the
    /// quadratic grade drop of t_alpha bounds the enumeration to a finite
    /// ball. Requires mu dominant integral, cutoff >= 0.
    SingularElement singular_weights(const Weight& mu, const Rat& cutoff) const;

    /// The truncated product over positive roots of (1 - e^{-alpha})^mult,
    /// keeping grades >= -cutoff. Equals singular_weights(0, cutoff) by the
    /// denominator identity; the two are computed independently.
    SignedSeries expand_denominator(const Rat& cutoff) const;

    /// Highest classical root (the unique dominant one).
    const Weight& highest_root() const;

private:
    AlgebraSpec() = default;

    AlgebraKind kind_;
    std::string name_;
    GramForm gram_{GramForm::identity(1)};
    std::vector<Weight> classical_simple_roots_;
    std::vector<Weight> classical_positive_roots_;
    Weight highest_root_;
    bool has_highest_root_ = false;
    Weight rho_;
    std::optional<Weight> affine_root_;
    std::vector<Weight> translation_basis_;
    std::size_t classical_weyl_order_ = 1;

    void finish_classical_data();
    void finish_affine_data();
    std::vector<Weight> translation_ball(const Weight& lam, const Rat& max_grade_drop) const;
};

} // namespace liefan
