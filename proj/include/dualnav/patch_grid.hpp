#pragma once

#include <vector>

namespace dualnav {

// Grid of unit-norm local feature vectors for one captured frame.
// Row-major cells, contiguous dim-length vectors.
struct PatchGrid {
  int rows = 14;
  int cols = 14;
  int dim = 32;
  std::vector<double> data;  // rows * cols * dim

  PatchGrid() = default;
  PatchGrid(int r, int c, int d) : rows(r), cols(c), dim(d) {
    data.assign(static_cast<std::size_t>(r) * c * d, 0.0);
  }

  double* patch(int r, int c) {
    return data.data() + (static_cast<std::size_t>(r) * cols + c) * dim;
  }
  const double* patch(int r, int c) const {
    return data.data() + (static_cast<std::size_t>(r) * cols + c) * dim;
  }

  bool same_shape(const PatchGrid& o) const {
    return rows == o.rows && cols == o.cols && dim == o.dim;
  }
};

}  // namespace dualnav
