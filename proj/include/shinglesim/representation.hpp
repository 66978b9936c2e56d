#pragma once

#include "shinglesim/error.hpp"
#include "shinglesim/minhash.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace shinglesim {

/// cell(i, j) = 1 iff universe[i] is in sets[j]. Universe elements must be
/// distinct and every set must lie inside the universe (ParameterError otherwise).
template <class T, class Compare>
RepresentationMatrix build_matrix(const std::vector<T>& universe, const std::vector<std::set<T, Compare>>& sets) {
    std::set<T, Compare> seen;
    for (const auto& e : universe) {
        if (!seen.insert(e).second) throw ParameterError("universe elements must be distinct");
    }
    RepresentationMatrix matrix(static_cast<Eigen::Index>(universe.size()), static_cast<Eigen::Index>(sets.size()));
    for (std::size_t j = 0; j < sets.size(); ++j) {
        for (const auto& member : sets[j]) {
            if (!seen.contains(member)) throw ParameterError("set member outside the universe");
        }
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if (sets[j].contains(universe[i])) {
                matrix.set(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), true);
            }
        }
    }
    return matrix;
}

/// P(both columns hold 1 | at least one does) over the rows; 1 when both
/// columns are empty. Rows that are 0 in both columns never matter.
double matrix_similarity(const RepresentationMatrix& matrix, Eigen::Index h, Eigen::Index k);

}  // namespace shinglesim
