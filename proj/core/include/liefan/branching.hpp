#pragma once

#include "liefan/injection.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace liefan {

/// Grade window of a recursion: values are complete for grades >= floor.
/// No floor means the computation runs to exhaustion (finite algebras).
struct Window {
    std::optional<Rat> floor_grade;

    static Window unbounded() { return Window{std::nullopt}; }
    static Window down_to(Rat floor) { return Window{std::move(floor)}; }
};

/// Anomalous branching coefficients k_xi on a window: the coefficients of
/// sum over dominant nu of b_nu Psi_a^(nu). Zero values are not stored;
/// lookups above the computed support return 0, lookups below the window
/// floor are refused.
class AnomalousTable {
public:
    AnomalousTable(SignedSeries values, Window window);

    const SignedSeries& values() const { return values_; }
    const Window& window() const { return window_; }

    /// Throws WindowError below the floor instead of guessing 0.
    Int value_at(const Weight& xi) const;

private:
    SignedSeries values_;
    Window window_;
};

/// Exact leading-term division in the ordered group algebra: solves
/// divisor * quotient = source for quotient, truncated to the window.
/// The divisor's maximal term must be unique at grade 0; each step must
/// divide exactly. This one primitive realizes the fan recursion, the
/// double-Weyl-sum recursion and the weight-diagram recursion.
SignedSeries divide_leading(const SignedSeries& source, const SignedSeries& divisor,
                            const TraversalOrder& order, const Window& window);

/// Fan recursion for anomalous branching coefficients: psi_projected is the
/// projected singular element of the ambient module; values are computed in
/// strictly decreasing traversal order, the delta source entering at
/// (projected singular weight + gamma0). The fan cutoff must reach the
/// window depth.
AnomalousTable anomalous_coefficients(const SignedSeries& psi_projected, const Fan& fan,
                                      const Window& window);

/// Cross-check oracle: the same table through the double-Weyl-sum identity
///   projected Psi^(mu) * Psi_a^(0) = projected Psi^(0) * K,
/// solved at the maximal carrier element of projected Psi^(0). Exists
/// purely as an independent route; must agree termwise with the fan route.
AnomalousTable anomalous_coefficients_star(const SignedSeries& psi_projected,
                                           const SignedSeries& ambient_psi0,
                                           const InjectionSpec& injection,
                                           const Window& window);

/// Branching coefficients: the anomalous table restricted to the dominant
/// chamber of the subalgebra. All values are multiplicities (>= 0).
struct BranchingResult {
    SignedSeries coefficients;
    bool sub_is_affine = false;
};

BranchingResult extract_branching(const AnomalousTable& table, const AlgebraSpec& sub);

/// One branching function: the dominant class representative at grade 0
/// and the q-series coefficients (exponent, multiplicity), exponent = -grade.
struct BranchingFunction {
    Weight class_rep;
    std::vector<std::pair<Int, Int>> q_series;
};

/// Groups branching coefficients into q-series per delta-congruence class.
/// Requires an affine subalgebra (the grading is meaningless otherwise).
std::vector<BranchingFunction> branching_functions(const BranchingResult& result);

/// Weight-diagram mode (subalgebra = Cartan): multiplicities of the module
/// with highest weight mu, to grade >= -cutoff for affine kinds; the full
/// diagram for finite kinds. Computed by dividing the singular element by
/// the denominator — the recursion in its full form, with the singular
/// source term included.
AnomalousTable weight_multiplicities(const AlgebraSpec& spec, const Weight& mu,
                                     const Rat& cutoff);

/// Convenience pipeline: singular element, projection, fan, recursion,
/// extraction. cutoff is in subalgebra grades.
BranchingResult branch(const InjectionSpec& injection, const Weight& mu, const Rat& cutoff);

} // namespace liefan
