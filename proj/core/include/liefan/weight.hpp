#pragma once

#include "liefan/rational.hpp"

#include <string>
#include <vector>

namespace liefan {

/// A point of an (affine) weight lattice: classical part in a fixed
/// orthogonal ambient basis, plus level and grade. Finite algebras carry
/// level = grade = 0. Immutable after construction.
class Weight {
public:
    Weight() = default;
    Weight(std::vector<Rat> finite, Rat level, Rat grade);

    static Weight zero(int dim);
    static Weight classical(std::vector<Rat> finite);
    /// The imaginary direction: zero classical part, zero level, grade 1.
    static Weight delta(int dim);

    const std::vector<Rat>& finite() const { return finite_; }
    const Rat& level() const { return level_; }
    const Rat& grade() const { return grade_; }
    int dim() const { return static_cast<int>(finite_.size()); }

    bool is_zero() const;
    bool classical_is_zero() const;

    Weight operator+(const Weight& other) const;
    Weight operator-(const Weight& other) const;
    Weight operator-() const;
    Weight scaled(const Rat& factor) const;
    Weight with_grade(Rat grade) const;

    bool operator==(const Weight& other) const;
    bool operator!=(const Weight& other) const { return !(*this == other); }

    /// Total lexicographic order on (grade, level, finite); any strict
    /// order works for map keys, this one keeps iteration deterministic.
    static int compare(const Weight& a, const Weight& b);

    struct Less {
        bool operator()(const Weight& a, const Weight& b) const {
            return compare(a, b) < 0;
        }
    };

    /// "(1,0,-1; 4; 0)" style rendering.
    std::string to_string() const;

private:
    std::vector<Rat> finite_;
    Rat level_ = 0;
    Rat grade_ = 0;

    void check_same_dim(const Weight& other) const;
};

} // namespace liefan
