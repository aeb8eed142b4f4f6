#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace qst {

enum class FieldKind { Signal1D, Image2D };

/// A 1D signal or 2D grayscale image of real samples, stored row-major.
/// The same object serves as the potential placed on the Hamiltonian diagonal
/// and as the data being denoised.
struct Field {
    FieldKind kind = FieldKind::Signal1D;
    int width = 0;   ///< samples for 1D, columns for 2D
    int height = 1;  ///< 1 for 1D, rows for 2D
    std::vector<double> values;

    static Field signal(std::vector<double> samples);
    static Field image(int rows, int cols, std::vector<double> row_major);
    static Field image_filled(int rows, int cols, double fill);
    static Field signal_filled(int n, double fill);

    int size() const { return width * height; }

    double at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * width + col];
    }
    double& at(int row, int col) {
        return values[static_cast<std::size_t>(row) * width + col];
    }

    bool all_finite() const;

    /// Throws std::invalid_argument on dimension/value-count mismatch or
    /// non-finite samples.
    void require_valid() const;

    double min_value() const;
    double max_value() const;
};

/// Shape of a field without its samples; used to rebuild a Field from a flat
/// coefficient vector.
struct FieldShape {
    FieldKind kind = FieldKind::Signal1D;
    int width = 0;
    int height = 1;

    static FieldShape of(const Field& f) { return {f.kind, f.width, f.height}; }
    int size() const { return width * height; }
};

/// Row-major bijection between (row, col) grid coordinates and linear
/// Hamiltonian indices. Indices are 1-based here, matching the convention in
/// the documentation and the coordinate-format debug dumps; internal loops
/// elsewhere are 0-based.
struct GridIndexMap {
    int n_rows = 0;
    int n_cols = 0;

    GridIndexMap(int rows, int cols);

    /// k = (i-1)*n_cols + j. Cells k and k+1 are horizontal neighbors except
    /// across a row boundary; k and k+n_cols are vertical neighbors.
    int flatten(int i, int j) const;
    std::pair<int, int> unflatten(int k) const;
};

}  // namespace qst
