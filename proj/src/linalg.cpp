#include "hilb/linalg.hpp"

#include <numeric>

namespace hilb {

RatMatrix identity_matrix(int size) {
    RatMatrix m(static_cast<std::size_t>(size),
                std::vector<Rat>(static_cast<std::size_t>(size), Rat(0)));
    for (int i = 0; i < size; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

std::vector<std::pair<int, int>> rref(RatMatrix& m, const std::vector<int>& col_order) {
    std::vector<std::pair<int, int>> pivots;
    if (m.empty())
        return pivots;
    const std::size_t rows = m.size();
    std::size_t next_row = 0;
    for (int col : col_order) {
        if (next_row >= rows)
            break;
        std::size_t pivot_row = next_row;
        while (pivot_row < rows && m[pivot_row][static_cast<std::size_t>(col)] == 0)
            ++pivot_row;
        if (pivot_row == rows)
            continue;
        std::swap(m[next_row], m[pivot_row]);
        Rat inv = Rat(1) / m[next_row][static_cast<std::size_t>(col)];
        for (Rat& x : m[next_row])
            x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next_row)
                continue;
            Rat factor = m[r][static_cast<std::size_t>(col)];
            if (factor == 0)
                continue;
            for (std::size_t c = 0; c < m[r].size(); ++c)
                m[r][c] -= factor * m[next_row][c];
        }
        pivots.emplace_back(static_cast<int>(next_row), col);
        ++next_row;
    }
    return pivots;
}

std::vector<std::pair<int, int>> rref(RatMatrix& m) {
    std::vector<int> cols(m.empty() ? 0 : m[0].size());
    std::iota(cols.begin(), cols.end(), 0);
    return rref(m, cols);
}

int rank(RatMatrix m) {
    return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rat>> kernel_basis(RatMatrix m) {
    if (m.empty())
        return {};
    const std::size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<int> pivot_of_col(cols, -1);
    for (auto [r, c] : pivots)
        pivot_of_col[static_cast<std::size_t>(c)] = r;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0)
            continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (auto [r, c] : pivots)
            v[static_cast<std::size_t>(c)] = -m[static_cast<std::size_t>(r)][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hilb
