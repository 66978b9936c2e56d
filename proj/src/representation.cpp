#include "shinglesim/representation.hpp"

namespace shinglesim {

double matrix_similarity(const RepresentationMatrix& matrix, Eigen::Index h, Eigen::Index k) {
    if (h < 0 || k < 0 || h >= matrix.m() || k >= matrix.m()) throw ParameterError("column index out of range");
    const auto col_h = matrix.cells().col(h).array() != 0;
    const auto col_k = matrix.cells().col(k).array() != 0;
    const auto both = (col_h && col_k).count();
    const auto either = (col_h || col_k).count();
    return either == 0 ? 1.0 : static_cast<double>(both) / static_cast<double>(either);
}

}  // namespace shinglesim
