#include "qst/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qst {

Field Field::signal(std::vector<double> samples) {
    Field f;
    f.kind = FieldKind::Signal1D;
    f.width = static_cast<int>(samples.size());
    f.height = 1;
    f.values = std::move(samples);
    f.require_valid();
    return f;
}

Field Field::image(int rows, int cols, std::vector<double> row_major) {
    Field f;
    f.kind = FieldKind::Image2D;
    f.width = cols;
    f.height = rows;
    f.values = std::move(row_major);
    f.require_valid();
    return f;
}

Field Field::image_filled(int rows, int cols, double fill) {
    return image(rows, cols, std::vector<double>(static_cast<std::size_t>(rows) * cols, fill));
}

Field Field::signal_filled(int n, double fill) {
    return signal(std::vector<double>(static_cast<std::size_t>(n), fill));
}

bool Field::all_finite() const {
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return std::isfinite(v); });
}

void Field::require_valid() const {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("field: width and height must be positive");
    if (kind == FieldKind::Signal1D && height != 1)
        throw std::invalid_argument("field: 1D signal must have height 1");
    if (values.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument(
            "field: value count " + std::to_string(values.size()) + " does not match " +
            std::to_string(width) + "x" + std::to_string(height));
    if (!all_finite())
        throw std::invalid_argument("field: values must be finite");
}

double Field::min_value() const {
    return *std::min_element(values.begin(), values.end());
}

double Field::max_value() const {
    return *std::max_element(values.begin(), values.end());
}

GridIndexMap::GridIndexMap(int rows, int cols) : n_rows(rows), n_cols(cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("grid index map: dimensions must be positive");
}

int GridIndexMap::flatten(int i, int j) const {
    if (i < 1 || i > n_rows || j < 1 || j > n_cols)
        throw std::out_of_range("flatten: index (" + std::to_string(i) + "," +
                                std::to_string(j) + ") outside " + std::to_string(n_rows) +
                                "x" + std::to_string(n_cols) + " grid");
    return (i - 1) * n_cols + j;
}

std::pair<int, int> GridIndexMap::unflatten(int k) const {
    if (k < 1 || k > n_rows * n_cols)
        throw std::out_of_range("unflatten: index " + std::to_string(k) + " outside grid");
    const int i = (k - 1) / n_cols + 1;
    const int j = (k - 1) % n_cols + 1;
    return {i, j};
}

}  // namespace qst
