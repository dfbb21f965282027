#pragma once

#include "liefan/weight.hpp"

#include <map>
#include <optional>

namespace liefan {

/// A finitely supported integer-valued function on weights: an element of
/// the group algebra of the weight lattice. Stored sparse with no zero
/// coefficients, keyed deterministically. Houses singular-weight elements,
/// denominators, carriers and anomalous coefficient tables.
class SignedSeries {
public:
    using Map = std::map<Weight, Int, Weight::Less>;

    SignedSeries() = default;

    static SignedSeries term(Weight w, Int coefficient);

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    /// Coefficient at w; 0 if absent.
    Int coefficient(const Weight& w) const;

    /// Accumulates; drops the entry when the sum cancels to zero.
    void add_term(const Weight& w, const Int& coefficient);

    SignedSeries& operator+=(const SignedSeries& other);
    SignedSeries operator+(const SignedSeries& other) const;
    SignedSeries operator-() const;
    SignedSeries scaled(const Int& factor) const;
    /// Multiplication by e^{shift}.
    SignedSeries shifted(const Weight& shift) const;

    bool operator==(const SignedSeries& other) const { return terms_ == other.terms_; }

    /// Restriction to grade >= min_grade.
    SignedSeries truncated(const Rat& min_grade) const;

    /// Distributive product e^a * e^b = e^{a+b}, discarding every product
    /// term with grade < min_grade (no truncation if nullopt). Exact on the
    /// retained window for inputs supported on grades >= some finite bound.
    static SignedSeries product_truncated(const SignedSeries& a, const SignedSeries& b,
                                          const std::optional<Rat>& min_grade);

    std::optional<Rat> min_term_grade() const;

private:
    Map terms_;
};

} // namespace liefan
