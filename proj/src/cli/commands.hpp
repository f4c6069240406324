#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "partlat/fuzzy.hpp"
#include "partlat/metrics.hpp"

namespace partlat::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,  // usage error or a failed verification
    kParseError = 2,
    kInconsistentSize = 3,
    kUnsupportedMetric = 4,
    kCapExceeded = 5,
};

struct Caps {
    std::size_t enumeration;
    std::size_t verify;
    std::size_t brute_force;

    /// Library defaults, all replaced by PARTLAT_MAX_N when it is set.
    static Caps from_environment();
};

enum class OutputFormat { Tsv, Json };

struct DistOptions {
    std::string input;
    DistanceKind metric = DistanceKind::HD;
    std::optional<std::string> input_format;  // "csv" | "json"; default by extension
    OutputFormat output = OutputFormat::Tsv;
};

struct ConsensusOptions {
    std::string input;
    DistanceKind metric = DistanceKind::HD;
    std::optional<std::string> input_format;
    OutputFormat output = OutputFormat::Tsv;
    bool brute_force = false;
};

struct FuzzyOptions {
    std::string first;
    std::string second;
    Norm norm = Norm::L1;
    bool decompose = false;
    OutputFormat output = OutputFormat::Tsv;
};

struct VerifyOptions {
    std::size_t n = 4;
    std::string functional = "size";
};

enum class LatticeReport { Sizes, Bell, Table2 };

struct LatticeOptions {
    std::size_t n = 4;
    LatticeReport report = LatticeReport::Sizes;
};

int cmd_dist(const DistOptions &opt, const Caps &caps, std::ostream &out, std::ostream &err);
int cmd_consensus(const ConsensusOptions &opt, const Caps &caps, std::ostream &out, std::ostream &err);
int cmd_fuzzy(const FuzzyOptions &opt, const Caps &caps, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &opt, const Caps &caps, std::ostream &out, std::ostream &err);
int cmd_lattice(const LatticeOptions &opt, const Caps &caps, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches to a subcommand.
int run(const std::vector<std::string> &args, const Caps &caps, std::ostream &out, std::ostream &err);

}  // namespace partlat::cli
