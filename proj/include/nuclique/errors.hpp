#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nuclique {

/// Input failed a precondition (bad sizes, malformed file, invalid flag).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact solver was asked for an instance above its hard size guard.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Witness construction is impossible: some outside vertex is adjacent to
/// every planted vertex, so no multiplier assignment balances the identity.
class CertificateInfeasible : public std::runtime_error {
public:
    CertificateInfeasible(std::string message, std::vector<int> saturated)
        : std::runtime_error(std::move(message)), saturated_vertices(std::move(saturated)) {}

    std::vector<int> saturated_vertices;
};

/// Column recentering is undefined when a column is all ones.
class SaturatedColumn : public std::runtime_error {
public:
    SaturatedColumn(std::string message, std::vector<int> columns)
        : std::runtime_error(std::move(message)), saturated_columns(std::move(columns)) {}

    std::vector<int> saturated_columns;
};

}  // namespace nuclique
