// json_matrix.hpp — Internal helper: complex matrices as JSON [re, im] grids

#pragma once

#include "lindblock/model.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace lindblock::detail {

inline Matrix parse_complex_matrix(const nlohmann::json& node, const std::string& key) {
    if (!node.is_array()) throw ParseError(key + ": expected an array of rows");
    const auto n = node.size();
    if (n == 0) throw ParseError(key + ": matrix must not be empty");
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = node[i];
        if (!row.is_array() || row.size() != n)
            throw ParseError(key + ": row " + std::to_string(i + 1) + " must have " +
                             std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) {
            const auto& entry = row[j];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number())
                throw ParseError(key + ": entry (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") must be a [re, im] pair");
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::complex<double>(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return out;
}

}  // namespace lindblock::detail
