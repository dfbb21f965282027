#include "liefan/linalg.hpp"

#include "liefan/errors.hpp"

namespace liefan {

namespace {

// Row-reduces [a | rhs] in place; rhs has one or more columns.
void eliminate(RatMatrix& a, RatMatrix& rhs) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw ConfigError("singular matrix in exact solve");
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rat inv = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) a[col][j] *= inv;
        for (std::size_t j = 0; j < rhs[col].size(); ++j) rhs[col][j] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rat f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) a[row][j] -= f * a[col][j];
            for (std::size_t j = 0; j < rhs[row].size(); ++j) rhs[row][j] -= f * rhs[col][j];
        }
    }
}

} // namespace

RatVector solve_linear(RatMatrix a, RatVector b) {
    RatMatrix rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = {b[i]};
    eliminate(a, rhs);
    RatVector x(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) x[i] = rhs[i][0];
    return x;
}

RatMatrix invert_matrix(const RatMatrix& a) {
    const std::size_t n = a.size();
    RatMatrix work = a;
    RatMatrix rhs(n, RatVector(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) rhs[i][i] = 1;
    eliminate(work, rhs);
    return rhs;
}

std::optional<RatVector> solve_in_span(const std::vector<RatVector>& columns,
                                       const RatVector& target) {
    // Solve the normal equations G x = p with G the Gram matrix of the
    // columns (in the standard inner product), then verify exactly.
    const std::size_t k = columns.size();
    const std::size_t n = target.size();
    RatMatrix gram(k, RatVector(k, Rat(0)));
    RatVector p(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (columns[i].size() != n) throw ConfigError("span solve: column size mismatch");
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < n; ++t) gram[i][j] += columns[i][t] * columns[j][t];
        for (std::size_t t = 0; t < n; ++t) p[i] += columns[i][t] * target[t];
    }
    RatVector x = solve_linear(std::move(gram), std::move(p));
    for (std::size_t t = 0; t < n; ++t) {
        Rat acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc += x[i] * columns[i][t];
        if (acc != target[t]) return std::nullopt;
    }
    return x;
}

} // namespace liefan
