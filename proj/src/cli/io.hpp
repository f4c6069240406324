#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "partlat/fuzzy.hpp"
#include "partlat/partition.hpp"

namespace partlat::cli {

/// Malformed input file (exit code 2).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Clusterings or membership files disagree on n (exit code 3).
class InconsistentSize : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ClusteringFormat { Csv, Json };

/// `.json` selects JSON, anything else CSV.
ClusteringFormat format_for_path(const std::string &path);

/// CSV: one clustering per line, comma-separated labels, blank lines and
/// `#` comments ignored. JSON: an array of arrays of integer or string labels.
/// Labels are canonicalized per clustering; element identity is positional.
std::vector<Partition> read_clusterings(std::istream &in, ClusteringFormat format);
std::vector<Partition> load_clusterings(const std::string &path, ClusteringFormat format);

/// Writes canonical labels in the same formats.
void write_clusterings(std::ostream &out, const std::vector<Partition> &clusterings, ClusteringFormat format);

/// { "n": int, "clusters": [ { "support": [elements], "memberships": [n reals] } ] }
/// with 0-based support elements; rows must sum to 1 within `row_tol`.
MembershipMatrix read_membership(std::istream &in, double row_tol = 1e-6);
MembershipMatrix load_membership(const std::string &path, double row_tol = 1e-6);

/// Fixed six decimals.
std::string format_real(double x);

}  // namespace partlat::cli
