#pragma once

#include "liefan/algebra.hpp"

#include <string>
#include <vector>

namespace liefan {

class Fan;

/// Comparison context for the recursion: weights are ordered grade-major,
/// then by classical pairing with a fixed order vector, then lexicographic
/// for determinism. The order vector is chosen so that every fan vector of
/// the owning injection is strictly positive.
class TraversalOrder {
public:
    TraversalOrder(GramForm gram, Weight order_vector);

    /// Strict "comes later in the recursion" comparison: true when a < b
    /// under (grade, height, lex).
    bool less(const Weight& a, const Weight& b) const;
    /// Height of the positivity functional: used for fan positivity checks.
    Rat height(const Weight& w) const;
    const Weight& order_vector() const { return order_vector_; }

    struct Desc {
        const TraversalOrder* order;
        bool operator()(const Weight& a, const Weight& b) const {
            return order->less(b, a);
        }
    };
    Desc desc() const { return Desc{this}; }

private:
    GramForm gram_;
    Weight order_vector_;
};

/// A reductive embedding a in g: the ambient and sub algebra data plus the
/// exact-rational projection on (finite + level + grade) coordinates.
class InjectionSpec {
public:
    /// projection has (sub dim + 2) rows and (ambient dim + 2) columns,
    /// acting on column vectors [finite; level; grade]. It must map delta_g
    /// to a nonnegative multiple of delta_a.
    InjectionSpec(AlgebraSpec ambient, AlgebraSpec sub,
                  std::vector<std::vector<Rat>> projection, Rat level_scale,
                  std::string name = "custom");

    static InjectionSpec identity(const AlgebraSpec& algebra);
    /// Built-in presets: "B1-in-A2" and "A2_2-in-A2_1".
    static InjectionSpec preset(const std::string& name);
    static std::vector<std::string> preset_names();

    const AlgebraSpec& ambient() const { return ambient_; }
    const AlgebraSpec& sub() const { return sub_; }
    const std::string& name() const { return name_; }
    const Rat& level_scale() const { return level_scale_; }
    /// The multiple c with projection(delta_g) = c * delta_a.
    const Rat& grade_scale() const { return grade_scale_; }
    const std::vector<std::vector<Rat>>& projection_matrix() const { return projection_; }

    Weight project(const Weight& w) const;
    /// Projects term by term; coefficients of coalescing weights accumulate.
    SignedSeries project_series(const SignedSeries& s) const;

    /// Order vector rho_a + projection(rho_g), classical parts. Strictly
    /// positive on every shipped fan; checked at fan construction.
    const TraversalOrder& order() const { return order_; }

private:
    AlgebraSpec ambient_;
    AlgebraSpec sub_;
    std::vector<std::vector<Rat>> projection_;
    Rat level_scale_;
    Rat grade_scale_;
    std::string name_;
    TraversalOrder order_{GramForm::identity(1), Weight::zero(1)};
};

/// Carrier of the projected denominator quotient
///   prod over projected positive roots of (1-e^{-a})^{mult - mult_a}
///     = - sum over gamma in Phi of s(gamma) e^{-gamma},
/// returned as the signed carrier {gamma -> s(gamma)}, truncated to
/// grade <= cutoff. Depends only on the injection, not on any module.
SignedSeries compute_phi(const InjectionSpec& injection, const Rat& cutoff);

/// The fan of an injection: the lowest carrier vector gamma0 with its sign,
/// and the shifted carrier {gamma - gamma0} with signs s(gamma + gamma0).
/// Every entry is strictly positive under the traversal order.
class Fan {
public:
    struct Entry {
        Weight gamma;
        Int sign;
    };

    Fan(Weight gamma0, Int s0, std::vector<Entry> entries, Rat cutoff,
        TraversalOrder order);

    const Weight& gamma0() const { return gamma0_; }
    const Int& s0() const { return s0_; }
    const std::vector<Entry>& entries() const { return entries_; }
    const Rat& cutoff() const { return cutoff_; }
    const TraversalOrder& order() const { return order_; }

    /// The series -s0 e^{-gamma0} - sum s(gamma+gamma0) e^{-gamma-gamma0},
    /// i.e. the defining product this fan was read from.
    SignedSeries divisor_series() const;

private:
    Weight gamma0_;
    Int s0_;
    std::vector<Entry> entries_;
    Rat cutoff_;
    TraversalOrder order_;
};

/// Reads the fan off a carrier computed by compute_phi to depth phi_cutoff.
/// Throws WindowError on a tie for the minimal carrier element (the order
/// functional cannot drive the recursion) and ConfigError if some entry
/// fails positivity.
Fan build_fan(const SignedSeries& phi, const InjectionSpec& injection, const Rat& phi_cutoff);

} // namespace liefan
