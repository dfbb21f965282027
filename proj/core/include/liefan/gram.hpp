#pragma once

#include "liefan/weight.hpp"

#include <vector>

namespace liefan {

/// Symmetric bilinear form on the ambient basis, extended to affine weights
/// by (a|b) = a.finite * M * b.finite + a.level*b.grade + a.grade*b.level.
/// With this extension (delta|delta) = 0 and (delta|x) = x.level.
class GramForm {
public:
    explicit GramForm(std::vector<std::vector<Rat>> matrix);

    static GramForm identity(int dim);

    int dim() const { return static_cast<int>(matrix_.size()); }
    const std::vector<std::vector<Rat>>& matrix() const { return matrix_; }

    /// The affine-extended pairing. Throws ConfigError on dimension mismatch.
    Rat inner(const Weight& a, const Weight& b) const;
    Rat norm2(const Weight& a) const { return inner(a, a); }

    /// Pairing of classical parts only (no level/grade cross terms).
    Rat classical_inner(const Weight& a, const Weight& b) const;

private:
    std::vector<std::vector<Rat>> matrix_;
};

} // namespace liefan
