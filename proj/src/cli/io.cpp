#include "cli/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace partlat::cli {

namespace {

std::string trim(const std::string &s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

Partition from_tokens(const std::vector<std::string> &tokens) {
    std::unordered_map<std::string, long long> ids;
    std::vector<long long> raw;
    raw.reserve(tokens.size());
    for (const auto &t : tokens) {
        auto [it, inserted] = ids.try_emplace(t, static_cast<long long>(ids.size()));
        raw.push_back(it->second);
    }
    return Partition::canonicalize(raw);
}

void check_consistent(const std::vector<Partition> &clusterings) {
    for (std::size_t r = 1; r < clusterings.size(); ++r) {
        if (clusterings[r].n() != clusterings.front().n()) {
            throw InconsistentSize("clustering " + std::to_string(r + 1) + " has " +
                                   std::to_string(clusterings[r].n()) + " elements, expected " +
                                   std::to_string(clusterings.front().n()));
        }
    }
}

std::ifstream open_or_throw(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    return in;
}

}  // namespace

ClusteringFormat format_for_path(const std::string &path) {
    const std::string ext = ".json";
    if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
        return ClusteringFormat::Json;
    }
    return ClusteringFormat::Csv;
}

std::vector<Partition> read_clusterings(std::istream &in, ClusteringFormat format) {
    std::vector<Partition> out;
    if (format == ClusteringFormat::Csv) {
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            if (trim(line).empty()) {
                continue;
            }
            std::vector<std::string> tokens;
            std::stringstream fields(line);
            std::string field;
            while (std::getline(fields, field, ',')) {
                field = trim(field);
                if (field.empty()) {
                    throw ParseError("line " + std::to_string(line_no) + ": empty label");
                }
                tokens.push_back(field);
            }
            if (!line.empty() && trim(line).back() == ',') {
                throw ParseError("line " + std::to_string(line_no) + ": trailing comma");
            }
            out.push_back(from_tokens(tokens));
        }
    } else {
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception &e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_array()) {
            throw ParseError("expected a JSON array of clusterings");
        }
        for (const auto &row : doc) {
            if (!row.is_array() || row.empty()) {
                throw ParseError("each clustering must be a non-empty array of labels");
            }
            std::vector<std::string> tokens;
            for (const auto &label : row) {
                if (label.is_number_integer()) {
                    tokens.push_back(std::to_string(label.get<long long>()));
                } else if (label.is_string()) {
                    tokens.push_back(label.get<std::string>());
                } else {
                    throw ParseError("labels must be integers or strings");
                }
            }
            out.push_back(from_tokens(tokens));
        }
    }
    check_consistent(out);
    return out;
}

std::vector<Partition> load_clusterings(const std::string &path, ClusteringFormat format) {
    auto in = open_or_throw(path);
    return read_clusterings(in, format);
}

void write_clusterings(std::ostream &out, const std::vector<Partition> &clusterings, ClusteringFormat format) {
    if (format == ClusteringFormat::Csv) {
        for (const auto &p : clusterings) {
            for (std::size_t i = 0; i < p.n(); ++i) {
                out << (i ? "," : "") << p.label(i);
            }
            out << '\n';
        }
        return;
    }
    nlohmann::json doc = nlohmann::json::array();
    for (const auto &p : clusterings) {
        doc.push_back(p.labels());
    }
    out << doc.dump() << '\n';
}

MembershipMatrix read_membership(std::istream &in, double row_tol) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        const auto n = doc.at("n").get<std::size_t>();
        const auto &clusters = doc.at("clusters");
        if (n == 0 || !clusters.is_array() || clusters.empty()) {
            throw ParseError("membership file needs n > 0 and a non-empty clusters array");
        }
        const std::size_t m = clusters.size();
        std::vector<double> values(n * m, 0.0);
        std::vector<std::vector<std::size_t>> supports(m);
        bool any_support = false;
        for (std::size_t l = 0; l < m; ++l) {
            const auto &c = clusters[l];
            const auto memberships = c.at("memberships").get<std::vector<double>>();
            if (memberships.size() != n) {
                throw InconsistentSize("cluster " + std::to_string(l) + " has " +
                                       std::to_string(memberships.size()) + " memberships, expected " +
                                       std::to_string(n));
            }
            for (std::size_t i = 0; i < n; ++i) {
                values[i * m + l] = memberships[i];
            }
            if (c.contains("support")) {
                any_support = true;
                supports[l] = c.at("support").get<std::vector<std::size_t>>();
            } else {
                supports[l].resize(n);
                for (std::size_t i = 0; i < n; ++i) {
                    supports[l][i] = i;
                }
            }
        }
        std::optional<std::vector<std::vector<std::size_t>>> support_arg;
        if (any_support) {
            support_arg = std::move(supports);
        }
        return MembershipMatrix(n, m, std::move(values), std::move(support_arg), row_tol);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("malformed membership file: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

MembershipMatrix load_membership(const std::string &path, double row_tol) {
    auto in = open_or_throw(path);
    return read_membership(in, row_tol);
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s(buf);
    if (s == "-0.000000") {
        s.erase(0, 1);
    }
    return s;
}

}  // namespace partlat::cli
