#include "liefan/gram.hpp"

#include "liefan/errors.hpp"

namespace liefan {

GramForm::GramForm(std::vector<std::vector<Rat>> matrix) : matrix_(std::move(matrix)) {
    const std::size_t n = matrix_.size();
    for (const auto& row : matrix_)
        if (row.size() != n) throw ConfigError("Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix_[i][j] != matrix_[j][i]) throw ConfigError("Gram matrix is not symmetric");
}

GramForm GramForm::identity(int dim) {
    std::vector<std::vector<Rat>> m(static_cast<std::size_t>(dim),
                                    std::vector<Rat>(static_cast<std::size_t>(dim), Rat(0)));
    for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return GramForm(std::move(m));
}

Rat GramForm::classical_inner(const Weight& a, const Weight& b) const {
    if (a.dim() != dim() || b.dim() != dim())
        throw ConfigError("weight dimension does not match Gram form");
    Rat sum = 0;
    for (int i = 0; i < dim(); ++i) {
        const Rat& ai = a.finite()[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        Rat row = 0;
        for (int j = 0; j < dim(); ++j) {
            const Rat& bj = b.finite()[static_cast<std::size_t>(j)];
            if (bj == 0) continue;
            row += matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * bj;
        }
        sum += ai * row;
    }
    return sum;
}

Rat GramForm::inner(const Weight& a, const Weight& b) const {
    Rat sum = classical_inner(a, b);
    sum += a.level() * b.grade();
    sum += a.grade() * b.level();
    return sum;
}

} // namespace liefan
