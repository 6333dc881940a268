#include "sl2lab/linsolve.hpp"

namespace sl2lab {

std::vector<Vec> nullspace(Mat a, int cols) {
    size_t n = static_cast<size_t>(cols);
    for (auto& row : a) row.resize(n);

    // Gauss-Jordan; any nonzero pivot is fine over an exact field.
    std::vector<int> pivot_col_of_row;
    size_t row = 0;
    std::vector<bool> is_pivot(n, false);
    for (size_t col = 0; col < n && row < a.size(); ++col) {
        size_t sel = row;
        while (sel < a.size() && a[sel][col].is_zero()) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[sel], a[row]);
        GaussianRational inv = a[row][col].inverse();
        for (size_t j = col; j < n; ++j) a[row][j] = inv * a[row][j];
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            GaussianRational factor = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= factor * a[row][j];
        }
        is_pivot[col] = true;
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }

    std::vector<Vec> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n);
        v[free_col] = GaussianRational(1);
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            size_t pc = static_cast<size_t>(pivot_col_of_row[r]);
            v[pc] = -a[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sl2lab
