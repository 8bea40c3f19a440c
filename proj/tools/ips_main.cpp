#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ips/characteristic.hpp"
#include "ips/classify.hpp"
#include "ips/construct.hpp"
#include "ips/enumerate.hpp"
#include "ips/format.hpp"
#include "ips/svg.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ips::Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ips::PointSet load_set(const std::string& path) {
    std::vector<std::string> warnings;
    ips::PointSet S = ips::parse_set(read_file(path), &warnings);
    for (const std::string& w : warnings) std::cerr << path << ": warning: " << w << "\n";
    return S;
}

std::string rational_string(const ips::Integer& num, const ips::Integer& den) {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

std::string axis_string(const ips::SymmetryAxis& axis) {
    std::ostringstream os;
    if (axis.orientation == ips::SymmetryAxis::Orientation::horizontal)
        os << "horizontal y = ";
    else
        os << "vertical x = ";
    os << rational_string(axis.position_num, axis.position_den);
    return os.str();
}

int cmd_verify(const std::string& path) {
    ips::PointSet S = load_set(path);
    ips::VerifyReport report = ips::verify(S);
    std::cout << (report.total_pairs - report.violations.size()) << "/" << report.total_pairs
              << " pairs integral\n";
    for (const ips::PairViolation& v : report.violations) {
        const ips::LatticePoint& a = S[v.first_index];
        const ips::LatticePoint& b = S[v.second_index];
        std::cout << "violation: (" << a.x << "; " << a.y << ") -- (" << b.x << "; " << b.y
                  << "): squared numerator " << v.numerator << ", squarefree part "
                  << v.squarefree << "\n";
    }
    std::cout << (report.is_noncollinear ? "points are non-collinear\n"
                                         : "points are collinear or too few\n");
    return report.is_integral && report.is_noncollinear ? kExitOk : kExitPropertyFailed;
}

int cmd_info(const std::string& path, bool as_json) {
    ips::PointSet S = load_set(path);
    ips::VerifyReport v = ips::verify(S);
    if (!v.is_valid_pips()) {
        std::cout << "not a valid integral point set (" << v.violations.size()
                  << " violating pairs" << (v.is_noncollinear ? "" : ", collinear") << ")\n";
        return kExitPropertyFailed;
    }
    ips::ClassificationReport r = ips::classify(S);
    if (as_json) {
        json axes = json::array();
        for (const auto& axis : r.symmetry_axes)
            axes.push_back(
                {{"orientation",
                  axis.orientation == ips::SymmetryAxis::Orientation::horizontal ? "horizontal"
                                                                                 : "vertical"},
                 {"position", rational_string(axis.position_num, axis.position_den)}});
        json out = {{"cardinality", r.cardinality},
                    {"diameter", r.diameter.str()},
                    {"characteristic", r.characteristic.str()},
                    {"max_collinear", r.max_collinear},
                    {"lines_cover", r.lines_cover},
                    {"is_facher", r.is_facher},
                    {"is_rails", r.is_rails},
                    {"is_circular", r.is_circular},
                    {"semi_general", r.semi_general},
                    {"general", r.general},
                    {"symmetry_axes", axes}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "cardinality: " << r.cardinality << "\n"
              << "diameter: " << r.diameter << "\n"
              << "characteristic: " << r.characteristic << "\n"
              << "max_collinear: " << r.max_collinear << "\n"
              << "lines_cover: " << r.lines_cover << "\n"
              << "facher: " << (r.is_facher ? "yes" : "no") << "\n"
              << "rails: " << (r.is_rails ? "yes" : "no") << "\n"
              << "circular: " << (r.is_circular ? "yes" : "no") << "\n"
              << "semi_general: " << (r.semi_general ? "yes" : "no") << "\n"
              << "general: " << (r.general ? "yes" : "no") << "\n";
    std::cout << "symmetry_axes:";
    if (r.symmetry_axes.empty()) std::cout << " none";
    for (const auto& axis : r.symmetry_axes) std::cout << " [" << axis_string(axis) << "]";
    std::cout << "\n";
    return kExitOk;
}

int cmd_merge(const std::string& path_a, const std::string& path_b) {
    ips::PointSet A = load_set(path_a);
    ips::PointSet B = load_set(path_b);
    ips::MergeOutcome outcome = ips::merge(A, B);
    if (!outcome.success) {
        std::cout << "merge failed: " << outcome.obstructions.size() << " obstructing pair(s)\n";
        for (const ips::ObstructingPair& o : outcome.obstructions)
            std::cout << "obstruction: (" << o.from_a.x << "; " << o.from_a.y << ") -- ("
                      << o.from_b.x << "; " << o.from_b.y << "): squared numerator " << o.numerator
                      << ", squarefree part " << o.squarefree << "\n";
        return kExitPropertyFailed;
    }
    std::cout << ips::serialize_set(*outcome.merged);
    return kExitOk;
}

int cmd_extend_axis(const std::string& path, const std::string& bound_str) {
    ips::PointSet S = load_set(path);
    std::optional<ips::Integer> bound;
    if (!bound_str.empty()) bound = ips::Integer(bound_str);
    std::vector<ips::AxisCandidate> candidates = ips::extend_on_axis(S, bound);
    std::cout << candidates.size() << " candidate(s)\n";
    for (const ips::AxisCandidate& c : candidates) {
        std::cout << "t = " << c.t << "  distances:";
        for (const ips::Integer& d : c.distances) std::cout << " " << d;
        if (c.already_present) std::cout << "  (already in set)";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_reflect_extend(const std::string& path) {
    ips::PointSet S = load_set(path);
    ips::MergeOutcome outcome = ips::reflect_extend(S);
    if (!outcome.success) {
        std::cout << "reflection extension failed: " << outcome.obstructions.size()
                  << " obstructing pair(s)\n";
        for (const ips::ObstructingPair& o : outcome.obstructions)
            std::cout << "obstruction: (" << o.from_a.x << "; " << o.from_a.y << ") -- ("
                      << o.from_b.x << "; " << o.from_b.y << "): squared numerator " << o.numerator
                      << ", squarefree part " << o.squarefree << "\n";
        return kExitPropertyFailed;
    }
    std::cout << ips::serialize_set(*outcome.merged);
    return kExitOk;
}

int cmd_rotate90(const std::string& path) {
    ips::PointSet S = load_set(path);
    ips::RotationOutcome outcome = ips::rotate90(S);
    if (!outcome.ok()) {
        std::cout << "rotation impossible: radicand " << outcome.obstruction_radicand
                  << " is not 1 after normalization\n";
        return kExitPropertyFailed;
    }
    std::cout << ips::serialize_set(*outcome.rotated);
    return kExitOk;
}

int cmd_enumerate(std::size_t n, const std::string& diameter_str, bool semi_general, bool general,
                  const std::string& out_dir) {
    ips::EnumerationTask task;
    task.cardinality = n;
    task.max_diameter = ips::Integer(diameter_str);
    task.semi_general_only = semi_general || general;
    task.general_only = general;
    std::vector<ips::PointSet> sets = ips::enumerate_sets(task);

    std::filesystem::create_directories(out_dir);
    json manifest;
    manifest["cardinality"] = n;
    manifest["max_diameter"] = diameter_str;
    manifest["count"] = sets.size();
    json entries = json::array();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        ips::Integer diam = ips::diameter(sets[i]);
        std::ostringstream name;
        name << "n" << n << "_d" << diam << "_" << i << ".ips";
        std::ofstream out(std::filesystem::path(out_dir) / name.str(), std::ios::binary);
        out << ips::serialize_set(sets[i]);
        entries.push_back({{"file", name.str()}, {"diameter", diam.str()}});
    }
    manifest["sets"] = entries;
    std::ofstream mf(std::filesystem::path(out_dir) / "manifest.json", std::ios::binary);
    mf << manifest.dump(2) << "\n";

    std::cout << sets.size() << " set(s) with cardinality " << n << " and diameter <= "
              << diameter_str << " written to " << out_dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar integral point sets: verification, classification, construction"};
    app.require_subcommand(1);

    std::string file_a, file_b, out_path, bound, axis, k_str, diameter_str = "1";
    std::size_t n_points = 3;
    bool as_json = false, semi_general = false, general = false, labels = false;
    std::string out_dir = "enumerated";

    auto* verify = app.add_subcommand("verify", "check all pairwise distances");
    verify->add_option("file", file_a)->required();

    auto* info = app.add_subcommand("info", "print the classification report");
    info->add_option("file", file_a)->required();
    info->add_flag("--json", as_json, "machine-readable output");

    auto* dilate = app.add_subcommand("dilate", "scale all coordinates by an integer");
    dilate->add_option("file", file_a)->required();
    dilate->add_option("k", k_str)->required();

    auto* shrink = app.add_subcommand("shrink", "divide all coordinates by their gcd");
    shrink->add_option("file", file_a)->required();

    auto* reflect = app.add_subcommand("reflect", "reflect in the x or y axis");
    reflect->add_option("file", file_a)->required();
    reflect->add_option("--axis", axis, "x or y")->required()->check(CLI::IsMember({"x", "y"}));

    auto* rotate = app.add_subcommand("rotate90", "rotate by a quarter turn if possible");
    rotate->add_option("file", file_a)->required();

    auto* merge = app.add_subcommand("merge", "union two sets on a shared lattice");
    merge->add_option("fileA", file_a)->required();
    merge->add_option("fileB", file_b)->required();

    auto* extend = app.add_subcommand("extend-axis", "find axis points integral to the whole set");
    extend->add_option("file", file_a)->required();
    extend->add_option("--bound", bound, "restrict |t| to this bound");

    auto* refl_ext = app.add_subcommand("reflect-extend", "symmetrize across the x axis");
    refl_ext->add_option("file", file_a)->required();

    auto* enumerate = app.add_subcommand("enumerate", "brute-force sets up to a diameter bound");
    enumerate->add_option("--n", n_points, "cardinality")->required();
    enumerate->add_option("--max-diameter", diameter_str)->required();
    enumerate->add_flag("--semi-general", semi_general, "no three points collinear");
    enumerate->add_flag("--general", general, "additionally no four concyclic");
    enumerate->add_option("--out-dir", out_dir, "output directory (default: enumerated)");

    auto* plot = app.add_subcommand("plot", "render the set as SVG");
    plot->add_option("file", file_a)->required();
    plot->add_option("--out", out_path)->required();
    plot->add_flag("--labels", labels, "label points with coordinates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(file_a);
        if (info->parsed()) return cmd_info(file_a, as_json);
        if (dilate->parsed()) {
            ips::PointSet S = load_set(file_a);
            std::cout << ips::serialize_set(ips::dilate(S, ips::Integer(k_str)));
            return kExitOk;
        }
        if (shrink->parsed()) {
            ips::ShrinkResult r = ips::shrink(load_set(file_a));
            std::cerr << "extracted factor " << r.factor << "\n";
            std::cout << ips::serialize_set(r.reduced);
            return kExitOk;
        }
        if (reflect->parsed()) {
            ips::PointSet S = load_set(file_a);
            std::cout << ips::serialize_set(axis == "x" ? ips::reflect_x(S) : ips::reflect_y(S));
            return kExitOk;
        }
        if (rotate->parsed()) return cmd_rotate90(file_a);
        if (merge->parsed()) return cmd_merge(file_a, file_b);
        if (extend->parsed()) return cmd_extend_axis(file_a, bound);
        if (refl_ext->parsed()) return cmd_reflect_extend(file_a);
        if (enumerate->parsed())
            return cmd_enumerate(n_points, diameter_str, semi_general, general, out_dir);
        if (plot->parsed()) {
            ips::PointSet S = load_set(file_a);
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw ips::Error("cannot write " + out_path);
            out << ips::render_svg(S, {.width = 800, .labels = labels});
            return kExitOk;
        }
    } catch (const ips::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ips::DuplicatePointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ips::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFailed;
    }
    return kExitUsage;
}
