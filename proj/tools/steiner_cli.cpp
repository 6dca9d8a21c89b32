#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "steiner/enumerate.hpp"
#include "steiner/error.hpp"
#include "steiner/extremal.hpp"
#include "steiner/indices.hpp"
#include "steiner/medians.hpp"
#include "steiner/verify.hpp"

using nlohmann::ordered_json;
using namespace steiner;

namespace {

std::string fnv1a64_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct TreeInput {
    Tree tree;
    ordered_json echo;
};

TreeInput load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw MalformedInput("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    Tree tree = parse_tree(std::string_view(bytes));
    ordered_json echo;
    echo["tree"] = path;
    echo["digest"] = "fnv1a64:" + fnv1a64_hex(bytes);
    return {std::move(tree), std::move(echo)};
}

void emit(const std::string& cmd, ordered_json input, ordered_json result) {
    ordered_json record;
    record["cmd"] = cmd;
    record["input"] = std::move(input);
    record["result"] = std::move(result);
    std::cout << record.dump() << "\n";
}

std::vector<int> parse_id_list(const std::string& csv) {
    std::vector<int> ids;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size()) {
            throw MalformedInput("bad id list entry '" + item + "'");
        }
        ids.push_back(value);
    }
    if (ids.empty()) {
        throw MalformedInput("empty id list");
    }
    return ids;
}

IndexMode parse_mode(const std::string& name) {
    if (name == "all") return IndexMode::All;
    if (name == "leaf") return IndexMode::Leaf;
    if (name == "internal") return IndexMode::Internal;
    throw MalformedInput("mode must be all, leaf or internal");
}

ordered_json ratio_json(const Ratio& r) {
    ordered_json j;
    j["value"] = r.str();
    j["approx"] = r.approx();
    return j;
}

ordered_json report_json(const VerificationReport& report, const std::string& checks_echo,
                         const std::string& k_echo) {
    ordered_json doc;
    doc["nmax"] = report.n_max;
    doc["checks_requested"] = checks_echo;
    doc["k_policy"] = k_echo;
    doc["checks"] = ordered_json::array();
    for (const CheckResult& c : report.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["trees_examined"] = c.trees_examined;
        jc["cases_checked"] = c.cases_checked;
        jc["cases_skipped"] = c.cases_skipped;
        jc["violations"] = ordered_json::array();
        for (const Violation& v : c.violations) {
            ordered_json jv;
            jv["n"] = v.n;
            jv["k"] = v.k;
            jv["level_sequence"] = v.level_sequence;
            jv["params"] = v.params;
            jv["observed"] = v.observed;
            jv["bound"] = v.bound;
            jc["violations"].push_back(std::move(jv));
        }
        jc["tightness"] = ordered_json::array();
        for (const TightnessWitness& w : c.tightness) {
            ordered_json jw;
            jw["n"] = w.n;
            jw["k"] = w.k;
            jw["level_sequence"] = w.level_sequence;
            jw["value"] = w.value;
            jc["tightness"].push_back(std::move(jw));
        }
        doc["checks"].push_back(std::move(jc));
    }
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Steiner distance invariants on trees"};
    app.require_subcommand(1);

    // dist
    auto* dist_cmd = app.add_subcommand("dist", "Steiner distance of a vertex set");
    std::string dist_tree, dist_set;
    dist_cmd->add_option("--tree", dist_tree, "tree file")->required();
    dist_cmd->add_option("--set", dist_set, "comma-separated vertex ids")->required();

    // vertex-index
    auto* vi_cmd = app.add_subcommand("vertex-index", "Steiner k-distance of vertices");
    std::string vi_tree, vi_mode = "all";
    int vi_k = 0, vi_v = -1;
    bool vi_all = false;
    vi_cmd->add_option("--tree", vi_tree, "tree file")->required();
    vi_cmd->add_option("--k", vi_k, "subset size")->required();
    vi_cmd->add_option("--mode", vi_mode, "all|leaf|internal");
    auto* vi_vopt = vi_cmd->add_option("--v", vi_v, "vertex id");
    vi_cmd->add_flag("--all-vertices", vi_all, "whole table")->excludes(vi_vopt);

    // wiener
    auto* w_cmd = app.add_subcommand("wiener", "Steiner k-Wiener index");
    std::string w_tree;
    int w_k = 0;
    w_cmd->add_option("--tree", w_tree, "tree file")->required();
    w_cmd->add_option("--k", w_k, "subset size")->required();

    // median
    auto* med_cmd = app.add_subcommand("median", "the three k-medians and their gaps");
    std::string med_tree;
    int med_k = 0;
    med_cmd->add_option("--tree", med_tree, "tree file")->required();
    med_cmd->add_option("--k", med_k, "subset size")->required();

    // comet
    auto* comet_cmd = app.add_subcommand("comet", "emit an r-comet in tree file format");
    int comet_n = 0, comet_r = 0;
    comet_cmd->add_option("--n", comet_n, "order")->required();
    comet_cmd->add_option("--r", comet_r, "path parameter")->required();

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "extremal ratio bounds");
    bounds_cmd->require_subcommand(1);
    int b_n = 0, b_k = 0;
    auto add_nk = [&](CLI::App* sub) {
        sub->add_option("--n", b_n, "order")->required();
        sub->add_option("--k", b_k, "subset size")->required();
    };
    auto* b_leaf = bounds_cmd->add_subcommand("leaf-pair", "max d_k ratio over leaf pairs");
    auto* b_int = bounds_cmd->add_subcommand("internal-pair", "max over internal pairs");
    auto* b_cent = bounds_cmd->add_subcommand("leaf-centroid", "min leaf/centroid ratio");
    auto* b_gl = bounds_cmd->add_subcommand("global-local", "range of wiener/centroid ratio");
    add_nk(b_leaf);
    add_nk(b_int);
    add_nk(b_cent);
    add_nk(b_gl);

    // closed-form
    auto* cf_cmd = app.add_subcommand("closed-form", "path / pendant-path distance formulas");
    cf_cmd->require_subcommand(1);
    int cf_a = 0, cf_b = 0, cf_k = 0;
    auto add_abk = [&](CLI::App* sub) {
        sub->add_option("--a", cf_a, "vertices on one side")->required();
        sub->add_option("--b", cf_b, "vertices on the other side")->required();
        sub->add_option("--k", cf_k, "subset size")->required();
    };
    auto* cf_path = cf_cmd->add_subcommand("path", "vertex on a path");
    auto* cf_pend = cf_cmd->add_subcommand("pendant", "attachment vertex of a pendant path");
    add_abk(cf_path);
    add_abk(cf_pend);

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "run the theorem checks over all free trees");
    int ver_nmax = 0;
    std::string ver_checks = "all", ver_k = "all", ver_report;
    ver_cmd->add_option("--nmax", ver_nmax, "largest tree order")->required();
    ver_cmd->add_option("--checks", ver_checks, "all or comma-separated check names");
    ver_cmd->add_option("--k", ver_k, "all or comma-separated k values");
    ver_cmd->add_option("--report", ver_report, "write the full report document here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*dist_cmd) {
            TreeInput in = load_tree(dist_tree);
            std::vector<int> ids = parse_id_list(dist_set);
            in.echo["set"] = ids;
            int d = steiner_distance(in.tree, ids);
            emit("dist", in.echo, {{"value", std::to_string(d)}});
        } else if (*vi_cmd) {
            TreeInput in = load_tree(vi_tree);
            IndexMode mode = parse_mode(vi_mode);
            in.echo["k"] = vi_k;
            in.echo["mode"] = vi_mode;
            if (vi_all) {
                IndexVector table = all_vertex_index(in.tree, vi_k, mode);
                ordered_json values = ordered_json::array();
                for (const BigCount& v : table.values) {
                    values.push_back(to_decimal(v));
                }
                emit("vertex-index", in.echo, {{"values", values}});
            } else {
                if (vi_v < 0) {
                    throw MalformedInput("need --v or --all-vertices");
                }
                in.echo["v"] = vi_v;
                BigCount value = vertex_index(in.tree, vi_v, vi_k, mode);
                emit("vertex-index", in.echo, {{"value", to_decimal(value)}});
            }
        } else if (*w_cmd) {
            TreeInput in = load_tree(w_tree);
            in.echo["k"] = w_k;
            emit("wiener", in.echo, {{"value", to_decimal(steiner_wiener(in.tree, w_k))}});
        } else if (*med_cmd) {
            TreeInput in = load_tree(med_tree);
            in.echo["k"] = med_k;
            MedianReport rep = median_report(in.tree, med_k);
            ordered_json result;
            result["k"] = rep.k;
            result["median_all"] = rep.median_all;
            result["median_leaf"] = rep.median_leaf;
            result["median_internal"] = rep.median_internal;
            result["gap_leaf_internal"] = rep.gap_leaf_internal;
            result["gap_leaf_all"] = rep.gap_leaf_all;
            result["gap_internal_all"] = rep.gap_internal_all;
            emit("median", in.echo, result);
        } else if (*comet_cmd) {
            CometSpec spec = comet_spec(comet_n, comet_r);
            Tree t = comet(comet_n, comet_r);
            std::cout << "# comet n=" << spec.n << " r=" << spec.r << "\n";
            std::cout << "# marked a=" << spec.leaf_a << " b=" << spec.end_b;
            if (spec.neighbor_c >= 0) {
                std::cout << " c=" << spec.neighbor_c;
            }
            std::cout << " d=" << spec.attach_d << "\n";
            std::cout << t.order() << "\n";
            for (auto [u, v] : t.edges()) {
                std::cout << u << " " << v << "\n";
            }
        } else if (*bounds_cmd) {
            ordered_json input{{"n", b_n}, {"k", b_k}};
            if (*b_gl) {
                auto [lower, upper] = global_local_bounds(b_n, b_k);
                ordered_json result;
                result["lower"] = lower.str();
                result["lower_approx"] = lower.approx();
                result["upper"] = upper.str();
                result["upper_approx"] = upper.approx();
                emit("bounds global-local", input, result);
            } else {
                RatioBound bound = *b_leaf  ? leaf_pair_ratio_bound(b_n, b_k)
                                   : *b_int ? internal_pair_ratio_bound(b_n, b_k)
                                            : leaf_centroid_lower_bound(b_n, b_k);
                ordered_json result = ratio_json(bound.value);
                if (bound.regime.empty()) {
                    result["witness_r"] = bound.witness_r;
                } else {
                    result["regime"] = bound.regime;
                }
                result["extremal"] = bound.extremal_desc;
                result["vertex_num"] = bound.vertex_num;
                result["vertex_den"] = bound.vertex_den;
                const char* name = *b_leaf  ? "bounds leaf-pair"
                                   : *b_int ? "bounds internal-pair"
                                            : "bounds leaf-centroid";
                emit(name, input, result);
            }
        } else if (*cf_cmd) {
            ordered_json input{{"a", cf_a}, {"b", cf_b}, {"k", cf_k}};
            if (*cf_path) {
                emit("closed-form path", input,
                     {{"value", to_decimal(path_vertex_distance_closed(cf_a, cf_b, cf_k))}});
            } else {
                emit("closed-form pendant", input,
                     {{"value", to_decimal(pendant_path_distance_closed(cf_a, cf_b, cf_k))}});
            }
        } else if (*ver_cmd) {
            std::vector<std::string> checks;
            {
                std::stringstream ss(ver_checks);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    if (!item.empty()) checks.push_back(item);
                }
            }
            std::vector<int> ks;
            if (ver_k != "all") {
                for (int k : parse_id_list(ver_k)) ks.push_back(k);
            }
            VerificationReport report = verify(ver_nmax, checks, ks);

            ordered_json input{{"nmax", ver_nmax}, {"checks", ver_checks}, {"k", ver_k}};
            for (const CheckResult& c : report.checks) {
                ordered_json result;
                result["check"] = c.name;
                result["trees"] = c.trees_examined;
                result["cases"] = c.cases_checked;
                result["skipped"] = c.cases_skipped;
                result["violations"] = static_cast<long>(c.violations.size());
                emit("verify", input, result);
                std::cerr << "verify " << c.name << ": " << c.elapsed_seconds << "s\n";
            }
            if (!ver_report.empty()) {
                std::ofstream out(ver_report);
                if (!out) {
                    throw MalformedInput("cannot write '" + ver_report + "'");
                }
                out << report_json(report, ver_checks, ver_k).dump(2) << "\n";
            }
            if (!report.ok()) {
                return 2;
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
