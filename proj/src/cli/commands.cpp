#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/io.hpp"
#include "partlat/consensus.hpp"
#include "partlat/errors.hpp"
#include "partlat/hasse.hpp"
#include "partlat/lattice.hpp"

namespace partlat::cli {

namespace {

using nlohmann::json;

std::string format_value(DistanceKind kind, double x) {
    if (is_integral(kind)) {
        return std::to_string(std::llround(x));
    }
    return format_real(x);
}

json json_value(DistanceKind kind, double x) {
    if (is_integral(kind)) {
        return std::llround(x);
    }
    return x;
}

std::string join_labels(const Partition &p) {
    std::string s;
    for (std::size_t i = 0; i < p.n(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(p.label(i));
    }
    return s;
}

std::vector<Partition> load(const std::string &path, const std::optional<std::string> &format) {
    ClusteringFormat f = format_for_path(path);
    if (format) {
        if (*format == "csv") {
            f = ClusteringFormat::Csv;
        } else if (*format == "json") {
            f = ClusteringFormat::Json;
        } else {
            throw ParseError("unknown input format " + *format);
        }
    }
    return load_clusterings(path, f);
}

/// Runs `body`, mapping library exceptions to exit codes with a message on `err`.
template <class Body>
int guarded(std::ostream &err, Body &&body) {
    try {
        return body();
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const InconsistentSize &e) {
        err << "error: " << e.what() << '\n';
        return kInconsistentSize;
    } catch (const SizeMismatch &e) {
        err << "error: " << e.what() << '\n';
        return kInconsistentSize;
    } catch (const UnsupportedMetric &e) {
        err << "error: " << e.what() << '\n';
        return kUnsupportedMetric;
    } catch (const CapExceeded &e) {
        err << "error: " << e.what() << " (set PARTLAT_MAX_N to raise it)\n";
        return kCapExceeded;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

std::string describe(Monotonicity m) {
    switch (m) {
    case Monotonicity::StrictlyPreserving:
        return "preserving";
    case Monotonicity::StrictlyInverting:
        return "inverting";
    default:
        return "neither";
    }
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Caps Caps::from_environment() {
    Caps caps{kEnumerationCap, kClassifyCap, kExhaustiveCap};
    if (const char *env = std::getenv("PARTLAT_MAX_N")) {
        char *end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            caps = {v, v, v};
        }
    }
    return caps;
}

int cmd_dist(const DistOptions &opt, const Caps &, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto ps = load(opt.input, opt.input_format);
        if (ps.size() < 2) {
            throw ParseError("need at least two clusterings, found " + std::to_string(ps.size()));
        }
        const std::size_t m = ps.size();
        std::vector<double> d(m * m, 0.0);
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                d[a * m + b] = d[b * m + a] = distance(opt.metric, ps[a], ps[b]);
            }
        }
        if (opt.output == OutputFormat::Json) {
            json matrix = json::array();
            for (std::size_t a = 0; a < m; ++a) {
                json row = json::array();
                for (std::size_t b = 0; b < m; ++b) {
                    row.push_back(json_value(opt.metric, d[a * m + b]));
                }
                matrix.push_back(row);
            }
            out << json{{"metric", name_of(opt.metric)}, {"n", ps.front().n()}, {"matrix", matrix}}.dump()
                << '\n';
            return kOk;
        }
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                out << (b ? "\t" : "") << format_value(opt.metric, d[a * m + b]);
            }
            out << '\n';
        }
        return kOk;
    });
}

int cmd_consensus(const ConsensusOptions &opt, const Caps &caps, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        auto ps = load(opt.input, opt.input_format);
        if (ps.size() < 2) {
            throw ParseError("need at least two clusterings, found " + std::to_string(ps.size()));
        }
        const Instance inst(std::move(ps));
        if (!opt.brute_force) {
            const auto result = consensus(inst, opt.metric);
            if (opt.output == OutputFormat::Json) {
                out << json{{"metric", name_of(opt.metric)},
                            {"labels", result.partition.labels()},
                            {"objective", json_value(opt.metric, result.objective)}}
                           .dump()
                    << '\n';
            } else {
                out << "labels\t" << join_labels(result.partition) << '\n'
                    << "objective\t" << format_value(opt.metric, result.objective) << '\n';
            }
            return kOk;
        }
        const auto result = brute_force_consensus(inst, opt.metric, caps.brute_force);
        if (opt.output == OutputFormat::Json) {
            json minimizers = json::array();
            for (const auto &q : result.minimizers) {
                minimizers.push_back(q.labels());
            }
            out << json{{"metric", name_of(opt.metric)},
                        {"minimizers", minimizers},
                        {"objective", json_value(opt.metric, result.objective)}}
                       .dump()
                << '\n';
        } else {
            for (const auto &q : result.minimizers) {
                out << "labels\t" << join_labels(q) << '\n';
            }
            out << "objective\t" << format_value(opt.metric, result.objective) << '\n';
        }
        return kOk;
    });
}

int cmd_fuzzy(const FuzzyOptions &opt, const Caps &caps, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto x1 = load_membership(opt.first);
        const auto x2 = load_membership(opt.second);
        if (x1.n() != x2.n()) {
            throw InconsistentSize("membership files have n = " + std::to_string(x1.n()) + " and " +
                                   std::to_string(x2.n()));
        }
        const FuzzyPartition y = embed(x1);
        const FuzzyPartition z = embed(x2);
        const double d = fuzzy_distance(y, z, opt.norm);
        const char *norm_name = opt.norm == Norm::L1 ? "l1" : "l2";

        std::vector<ConvexCombination> parts;
        if (opt.decompose) {
            parts.push_back(decompose(y, 1e-9, caps.brute_force));
            parts.push_back(decompose(z, 1e-9, caps.brute_force));
        }

        if (opt.output == OutputFormat::Json) {
            json doc{{"n", y.n}, {"y", y.coords}, {"y_prime", z.coords}, {"norm", norm_name}, {"distance", d}};
            if (opt.decompose) {
                json decs = json::array();
                for (const auto &c : parts) {
                    json terms = json::array();
                    for (const auto &[p, alpha] : c.terms) {
                        terms.push_back({{"alpha", alpha}, {"labels", p.labels()}, {"blocks", to_block_string(p)}});
                    }
                    decs.push_back({{"success", c.success},
                                    {"method", c.method == DecompositionMethod::Greedy ? "greedy" : "exhaustive"},
                                    {"residual", c.residual_norm},
                                    {"terms", terms}});
                }
                doc["decompositions"] = decs;
            }
            out << doc.dump() << '\n';
            return kOk;
        }

        auto print_coords = [&](const char *name, const FuzzyPartition &v) {
            out << name;
            for (double c : v.coords) {
                out << '\t' << format_real(c);
            }
            out << '\n';
        };
        out << "atoms";
        for (std::size_t i = 0; i < y.n; ++i) {
            for (std::size_t j = i + 1; j < y.n; ++j) {
                out << "\t[" << i << ',' << j << ']';
            }
        }
        out << '\n';
        print_coords("y", y);
        print_coords("y'", z);
        out << "distance_" << norm_name << '\t' << format_real(d) << '\n';
        const char *names[] = {"y", "y'"};
        bool ok = true;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const auto &c = parts[k];
            ok = ok && c.success;
            out << "decomposition\t" << names[k] << '\t'
                << (c.method == DecompositionMethod::Greedy ? "greedy" : "exhaustive") << '\t'
                << (c.success ? "ok" : "failed") << '\n';
            for (const auto &[p, alpha] : c.terms) {
                out << "term\t" << format_real(alpha) << '\t' << to_block_string(p) << '\n';
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3e", c.residual_norm);
            out << "residual\t" << buf << '\n';
        }
        return ok ? kOk : kFailure;
    });
}

int cmd_verify(const VerifyOptions &opt, const Caps &caps, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto f = FunctionalDescriptor::by_name(opt.functional);
        if (!f) {
            throw std::invalid_argument("unknown functional " + opt.functional);
        }
        if (opt.n == 0 || opt.n > caps.verify) {
            throw CapExceeded("verify", opt.n, caps.verify);
        }
        const PartitionFunction fn = [&](const Partition &p) { return f->evaluate(p); };
        const auto cls = classify(opt.n, fn, 1e-12, caps.verify);
        const auto graph = HasseGraph::build(opt.n, std::max(caps.verify, opt.n));
        MinWeightPaths paths(graph, fn);

        double max_dev = 0.0;
        std::size_t pairs = 0;
        for (std::size_t s = 0; s < graph.num_vertices(); ++s) {
            paths.run(s);
            for (std::size_t t = 0; t < graph.num_vertices(); ++t) {
                const double closed = closed_form_delta(*f, graph.vertex(s), graph.vertex(t));
                max_dev = std::max(max_dev, std::abs(paths.distance_to(t) - closed));
                ++pairs;
            }
        }
        const bool integral = f->kind == FunctionalKind::Size || f->kind == FunctionalKind::Rank ||
                              f->kind == FunctionalKind::Cosize;
        const bool pass = integral ? max_dev == 0.0 : max_dev < 1e-9;

        const bool declared_direction =
            (f->order_direction == OrderDirection::Preserving &&
             cls.order_direction == Monotonicity::StrictlyPreserving) ||
            (f->order_direction == OrderDirection::Inverting &&
             cls.order_direction == Monotonicity::StrictlyInverting);
        const bool declared_modularity = f->modularity == Modularity::Supermodular ? cls.supermodular
                                                                                   : cls.submodular;

        char dev[32];
        std::snprintf(dev, sizeof dev, "%.3e", max_dev);
        out << "functional\t" << f->name << '\n'
            << "n\t" << opt.n << '\n'
            << "vertices\t" << graph.num_vertices() << '\n'
            << "edges\t" << graph.num_edges() << '\n'
            << "symmetric\t" << yes_no(cls.symmetric) << '\n'
            << "order\t" << describe(cls.order_direction) << '\n'
            << "supermodular\t" << yes_no(cls.supermodular) << '\n'
            << "submodular\t" << yes_no(cls.submodular) << '\n'
            << "totally_positive\t" << yes_no(cls.totally_positive) << '\n'
            << "declared_class_holds\t" << yes_no(declared_direction && declared_modularity) << '\n'
            << "pairs\t" << pairs << '\n'
            << "max_deviation\t" << dev << '\n'
            << (pass ? "PASS" : "FAIL") << '\n';
        return pass ? kOk : kFailure;
    });
}

int cmd_lattice(const LatticeOptions &opt, const Caps &caps, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        switch (opt.report) {
        case LatticeReport::Bell:
            out << bell_number(opt.n) << '\n';
            break;
        case LatticeReport::Sizes: {
            bool first = true;
            for (auto s : available_sizes(opt.n, caps.enumeration)) {
                out << (first ? "" : ",") << s;
                first = false;
            }
            out << '\n';
            break;
        }
        case LatticeReport::Table2: {
            auto ps = enumerate(opt.n, caps.enumeration);
            std::vector<std::pair<Partition, IndicatorVector>> rows;
            rows.reserve(ps.size());
            for (auto &p : ps) {
                auto ind = indicator(p);
                rows.emplace_back(std::move(p), std::move(ind));
            }
            // rank, then size, then indicator descending: the printed table order
            std::stable_sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
                const auto ka = std::make_pair(rank(a.first), size(a.first));
                const auto kb = std::make_pair(rank(b.first), size(b.first));
                if (ka != kb) {
                    return ka < kb;
                }
                return a.second.bits > b.second.bits;
            });
            out << "partition";
            for (std::size_t i = 0; i < opt.n; ++i) {
                for (std::size_t j = i + 1; j < opt.n; ++j) {
                    out << "\t[" << i + 1 << (opt.n > 9 ? "," : "") << j + 1 << ']';
                }
            }
            out << '\n';
            for (const auto &[p, ind] : rows) {
                out << to_block_string(p);
                for (auto bit : ind.bits) {
                    out << '\t' << static_cast<int>(bit);
                }
                out << '\n';
            }
            break;
        }
        }
        return kOk;
    });
}

int run(const std::vector<std::string> &args, const Caps &caps, std::ostream &out, std::ostream &err) {
    CLI::App app{"Distances, consensus and fuzzy embeddings for set partitions", "partlat"};
    app.require_subcommand(1);

    const std::map<std::string, DistanceKind> metrics{
        {"hd", DistanceKind::HD},           {"vi", DistanceKind::VI},
        {"mmd", DistanceKind::MMD},         {"rank", DistanceKind::DeltaRank},
        {"logical", DistanceKind::DeltaLogical}, {"cosize", DistanceKind::DeltaCosize},
        {"relation", DistanceKind::RelationMatrix},
    };
    const std::map<std::string, OutputFormat> outputs{{"tsv", OutputFormat::Tsv}, {"json", OutputFormat::Json}};

    DistOptions dist;
    std::string dist_format;
    auto *dist_cmd = app.add_subcommand("dist", "Pairwise distance matrix of the clusterings in a file");
    dist_cmd->add_option("input", dist.input, "Clustering file (.csv or .json)")->required();
    dist_cmd->add_option("-m,--metric", dist.metric, "Distance")->transform(CLI::CheckedTransformer(metrics));
    dist_cmd->add_option("-f,--format", dist_format, "Input format")->check(CLI::IsMember({"csv", "json"}));
    dist_cmd->add_option("-o,--output", dist.output, "Output format")->transform(CLI::CheckedTransformer(outputs));

    ConsensusOptions cons;
    std::string cons_format;
    auto *cons_cmd = app.add_subcommand("consensus", "Consensus partition of the clusterings in a file");
    cons_cmd->add_option("input", cons.input, "Clustering file (.csv or .json)")->required();
    cons_cmd->add_option("-m,--metric", cons.metric, "Distance")->transform(CLI::CheckedTransformer(metrics));
    cons_cmd->add_option("-f,--format", cons_format, "Input format")->check(CLI::IsMember({"csv", "json"}));
    cons_cmd->add_option("-o,--output", cons.output, "Output format")->transform(CLI::CheckedTransformer(outputs));
    cons_cmd->add_flag("--brute-force", cons.brute_force, "Scan every partition and print all minimizers");

    FuzzyOptions fuzzy;
    auto *fuzzy_cmd = app.add_subcommand("fuzzy", "Embed two membership matrices and compare them");
    fuzzy_cmd->add_option("first", fuzzy.first, "Membership file")->required();
    fuzzy_cmd->add_option("second", fuzzy.second, "Membership file")->required();
    fuzzy_cmd->add_option("--norm", fuzzy.norm, "l1 or l2")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Norm>{{"l1", Norm::L1}, {"l2", Norm::L2}}));
    fuzzy_cmd->add_flag("--decompose", fuzzy.decompose, "Print convex decompositions of both embeddings");
    fuzzy_cmd->add_option("-o,--output", fuzzy.output, "Output format")->transform(CLI::CheckedTransformer(outputs));

    VerifyOptions verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check closed-form distances against shortest Hasse paths");
    verify_cmd->add_option("-n,--n", verify.n, "Ground set size")->required();
    verify_cmd->add_option("--f", verify.functional, "size, rank, entropy, logical_entropy or cosize")->required();

    LatticeOptions lattice;
    auto *lattice_cmd = app.add_subcommand("lattice", "Partition lattice reports");
    lattice_cmd->add_option("-n,--n", lattice.n, "Ground set size")->required();
    lattice_cmd->add_option("--report", lattice.report, "sizes, bell or table2")
        ->transform(CLI::CheckedTransformer(std::map<std::string, LatticeReport>{
            {"sizes", LatticeReport::Sizes}, {"bell", LatticeReport::Bell}, {"table2", LatticeReport::Table2}}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kFailure;
    }

    if (!dist_format.empty()) {
        dist.input_format = dist_format;
    }
    if (!cons_format.empty()) {
        cons.input_format = cons_format;
    }
    if (*dist_cmd) {
        return cmd_dist(dist, caps, out, err);
    }
    if (*cons_cmd) {
        return cmd_consensus(cons, caps, out, err);
    }
    if (*fuzzy_cmd) {
        return cmd_fuzzy(fuzzy, caps, out, err);
    }
    if (*verify_cmd) {
        return cmd_verify(verify, caps, out, err);
    }
    return cmd_lattice(lattice, caps, out, err);
}

}  // namespace partlat::cli
