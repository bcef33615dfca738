// cobordia: persistence barcodes and chain representatives of open
// cobordisms (tunnels) between two marked subcomplexes of a filtered
// complex, with an alpha-complex ingestion path for point clouds and the
// Voronoi-dual formulation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cobordia/alpha.hpp"
#include "cobordia/cell_complex.hpp"
#include "cobordia/cobordism.hpp"
#include "cobordia/errors.hpp"
#include "cobordia/fixtures.hpp"
#include "cobordia/io.hpp"
#include "cobordia/oracle.hpp"
#include "cobordia/voronoi_dual.hpp"

namespace {

using namespace cobordia;

constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;
constexpr int kExitOracleMismatch = 3;

struct AlphaOptions {
    int axis = 2;
    double epsilon = 0.1;
    bool strip_slabs = false;
    std::vector<double> epsilon_sweep;  // lo, hi, steps
};

bool is_point_input(const std::string& path, const std::string& format) {
    if (format == "complex-json") return false;
    if (format == "csv-points" || format == "xyz") return true;
    const auto ext = std::filesystem::path(path).extension().string();
    return ext == ".csv" || ext == ".xyz" || ext == ".pts";
}

FilteredComplex complex_from_cloud(const PointCloud& cloud, const AlphaOptions& opt,
                                   double epsilon) {
    const SliceSpec spec{opt.axis, epsilon};
    AlphaComplex alpha = alpha_filtration(delaunay(cloud), cloud);
    alpha = label_slices(alpha, spec, cloud);
    if (opt.strip_slabs)
        return strip_slab_interiors(alpha.complex, cloud.dim - 1);
    return alpha.complex;
}

FilteredComplex load_input(const std::string& path, const std::string& format,
                           const AlphaOptions& opt) {
    if (is_point_input(path, format)) {
        const PointCloud cloud = load_point_cloud_file(path);
        return complex_from_cloud(cloud, opt, opt.epsilon);
    }
    return totalize_filtration(load_complex_json_file(path));
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

void add_alpha_flags(CLI::App* cmd, AlphaOptions& opt) {
    cmd->add_option("--axis", opt.axis, "slab axis for point inputs")->check(CLI::Range(0, 2));
    cmd->add_option("--epsilon", opt.epsilon, "slab thickness in (0, 0.5)")
        ->check(CLI::Range(1e-9, 0.5));
    cmd->add_flag("--strip-slabs", opt.strip_slabs,
                  "remove (d-1)-cells lying inside a slab, with their cofaces");
}

int run_validate(const std::string& input) {
    std::ifstream in(input);
    if (!in) {
        std::cerr << "cannot open " << input << "\n";
        return kExitValidation;
    }
    try {
        load_complex_json(in);
    } catch (const ValidationError& e) {
        std::cerr << e.report().to_string();
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    }
    std::cout << "valid\n";
    return 0;
}

int run_alpha(const std::string& input, const AlphaOptions& opt, const std::string& out) {
    const PointCloud cloud = load_point_cloud_file(input);
    const FilteredComplex complex = complex_from_cloud(cloud, opt, opt.epsilon);
    write_text(complex_to_json(complex), out);
    return 0;
}

int run_kernel(const std::string& input, const std::string& format, const AlphaOptions& opt,
               const std::string& block_name, const std::string& out) {
    const FilteredComplex complex = load_input(input, format, opt);
    std::vector<KernelPairs> computed;
    if (block_name == "A" || block_name == "all")
        computed.push_back(kernel_pairs(complex, Block::A));
    if (block_name == "B" || block_name == "all")
        computed.push_back(kernel_pairs(complex, Block::B));
    if (block_name == "AB" || block_name == "all")
        computed.push_back(kernel_pairs(complex, Block::AB));
    std::vector<const KernelPairs*> refs;
    for (const auto& kp : computed) refs.push_back(&kp);
    write_text(kernel_bars_to_csv(refs), out);
    return 0;
}

std::vector<CobordismPair> filter_degrees(const std::vector<CobordismPair>& pairs,
                                          const std::vector<int>& degrees) {
    if (degrees.empty()) return pairs;
    std::vector<CobordismPair> out;
    for (const auto& p : pairs)
        if (std::find(degrees.begin(), degrees.end(), p.degree) != degrees.end())
            out.push_back(p);
    return out;
}

int run_cobordism(const std::string& input, const std::string& format, const AlphaOptions& opt,
                  const std::vector<int>& degrees, const std::string& out,
                  const std::string& representatives, const std::string& svg) {
    // An epsilon sweep reruns the pipeline per slab thickness and prepends
    // an epsilon column.
    if (!opt.epsilon_sweep.empty()) {
        if (!is_point_input(input, format))
            throw Error("--epsilon-sweep needs a point cloud input");
        const PointCloud cloud = load_point_cloud_file(input);
        const double lo = opt.epsilon_sweep[0], hi = opt.epsilon_sweep[1];
        const int steps = static_cast<int>(opt.epsilon_sweep[2]);
        std::ostringstream combined;
        combined << "epsilon,degree,birth,death,birth_cell,death_cell,case_birth,case_death\n";
        for (int s = 0; s < steps; ++s) {
            const double eps = steps == 1 ? lo : lo + (hi - lo) * s / (steps - 1);
            const FilteredComplex complex = complex_from_cloud(cloud, opt, eps);
            const CobordismResult result = compute_cobordisms(complex);
            std::istringstream csv(bars_to_csv(filter_degrees(result.pairs, degrees)));
            std::string line;
            std::getline(csv, line);  // drop header
            while (std::getline(csv, line))
                combined << format_value(eps) << ',' << line << '\n';
        }
        write_text(combined.str(), out);
        return 0;
    }

    const FilteredComplex complex = load_input(input, format, opt);
    const CobordismResult result = compute_cobordisms(complex);
    const auto pairs = filter_degrees(result.pairs, degrees);
    write_text(bars_to_csv(pairs), out);
    if (!representatives.empty()) write_text(representatives_to_json(pairs, complex), representatives);
    if (!svg.empty()) write_text(persistence_diagram_svg(pairs), svg);
    return 0;
}

int run_dual(const std::string& input, const AlphaOptions& opt, bool include_box_boundary,
             const std::vector<int>& degrees, const std::string& out,
             const std::string& representatives, const std::string& svg) {
    const PointCloud cloud = load_point_cloud_file(input);
    AlphaComplex alpha = alpha_filtration(delaunay(cloud), cloud);
    const DualComplex dual = dualize(alpha.complex, cloud.dim);

    // A*/B* heuristic: dual vertices whose primal top cell has its
    // circumcenter in the top/bottom slab; optionally cells falling outside
    // the box join the nearer slab.
    std::vector<CellId> a_star, b_star;
    for (CellId dual_id = 0; dual_id < dual.complex.size(); ++dual_id) {
        if (dual.complex.cell(dual_id).dim != 0) continue;
        const CellId primal_id = dual.primal_of[dual_id];
        const Circumsphere cs = circumsphere(cloud, alpha.simplex_of_cell[primal_id]);
        const double c = cs.center[opt.axis];
        bool top = c >= 1.0 - opt.epsilon;
        bool bottom = c <= opt.epsilon;
        if (include_box_boundary) {
            bool outside = false;
            for (int axis = 0; axis < cloud.dim; ++axis)
                outside |= cs.center[axis] < 0.0 || cs.center[axis] > 1.0;
            if (outside && !top && !bottom) (c >= 0.5 ? top : bottom) = true;
        }
        if (top) a_star.push_back(dual_id);
        else if (bottom) b_star.push_back(dual_id);
    }

    const DualTunnels tunnels = dual_tunnels(dual, a_star, b_star);
    const auto bars = filter_degrees(tunnels.bars, degrees);
    write_text(bars_to_csv(bars), out);
    if (!representatives.empty())
        write_text(representatives_to_json(bars, dual.complex), representatives);
    if (!svg.empty()) write_text(persistence_diagram_svg(bars), svg);
    return 0;
}

int run_oracle_check(const std::string& input, int seeds) {
    auto check_one = [](const FilteredComplex& complex, const std::string& name) {
        const CobordismResult result = compute_cobordisms(complex);
        const auto expected = oracle::barcode(complex);
        std::vector<std::tuple<int, std::uint32_t, std::int64_t>> got, want;
        for (const auto& p : result.pairs)
            got.emplace_back(p.degree, p.birth_position,
                             p.death_position ? static_cast<std::int64_t>(*p.death_position) : -1);
        for (const auto& b : expected)
            want.emplace_back(b.degree, b.birth_position,
                              b.death_position ? static_cast<std::int64_t>(*b.death_position) : -1);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) {
            std::cerr << name << ": barcode mismatch (" << got.size() << " computed vs "
                      << want.size() << " expected bars)\n";
            return false;
        }
        return true;
    };

    bool ok = true;
    if (!input.empty()) {
        ok = check_one(totalize_filtration(load_complex_json_file(input)), input);
    } else {
        for (int s = 0; s < seeds; ++s)
            ok &= check_one(fixtures::random_labeled_complex(s), "seed " + std::to_string(s));
    }
    if (!ok) return kExitOracleMismatch;
    std::cout << "barcodes agree\n";
    return 0;
}

int run_fixtures(const std::string& out_dir, std::uint64_t seed) {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    save_complex_json_file(fixtures::cylinder(), (dir / "cylinder.json").string());
    save_complex_json_file(fixtures::cylinder_with_top(), (dir / "cylinder_top.json").string());
    save_complex_json_file(fixtures::cylinder_with_middle(),
                           (dir / "cylinder_middle.json").string());
    save_complex_json_file(fixtures::two_tunnel(), (dir / "two_tunnel.json").string());
    save_complex_json_file(fixtures::degenerate_tunnel(),
                           (dir / "degenerate_tunnel.json").string());
    save_complex_json_file(fixtures::random_labeled_complex(seed),
                           (dir / ("random_" + std::to_string(seed) + ".json")).string());
    const auto lattice = fixtures::lattice_cloud(seed);
    std::ofstream cloud_out(dir / "lattice_cloud.csv");
    cloud_out << point_cloud_to_csv(lattice.cloud);
    std::cout << "wrote fixtures to " << dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"open-cobordism (tunnel) barcodes for filtered cell complexes"};
    app.require_subcommand(1);

    std::string input, out, format = "auto", representatives, svg, block = "all";
    std::string out_dir = "fixtures";
    std::vector<int> degrees;
    std::uint64_t seed = 7;
    int seeds = 100;
    bool include_box_boundary = false;
    AlphaOptions alpha_opt;

    auto* validate_cmd = app.add_subcommand("validate", "check a complex JSON file");
    validate_cmd->add_option("input", input)->required();

    auto* alpha_cmd =
        app.add_subcommand("alpha", "build the labeled alpha complex of a point cloud");
    alpha_cmd->add_option("input", input)->required();
    alpha_cmd->add_option("--out", out, "output path (default stdout)");
    add_alpha_flags(alpha_cmd, alpha_opt);

    auto* kernel_cmd = app.add_subcommand("kernel", "kernel persistence bars per block");
    kernel_cmd->add_option("input", input)->required();
    kernel_cmd->add_option("--block", block, "A, B, AB or all")
        ->check(CLI::IsMember({"A", "B", "AB", "all"}));
    kernel_cmd->add_option("--format", format, "complex-json, csv-points or xyz");
    kernel_cmd->add_option("--out", out);
    add_alpha_flags(kernel_cmd, alpha_opt);

    auto* cob_cmd = app.add_subcommand("cobordism", "open-cobordism barcode");
    cob_cmd->add_option("input", input)->required();
    cob_cmd->add_option("--format", format, "complex-json, csv-points or xyz");
    cob_cmd->add_option("--degrees", degrees, "restrict output degrees");
    cob_cmd->add_option("--out", out);
    cob_cmd->add_option("--representatives", representatives, "write chain JSON here");
    cob_cmd->add_option("--svg", svg, "write a persistence diagram here");
    cob_cmd->add_option("--epsilon-sweep", alpha_opt.epsilon_sweep,
                        "lo hi steps: rerun over a slab-thickness range")
        ->expected(3);
    add_alpha_flags(cob_cmd, alpha_opt);

    auto* dual_cmd =
        app.add_subcommand("dual", "degree-0 tunnels on the dual Voronoi complex");
    dual_cmd->add_option("input", input, "point cloud")->required();
    dual_cmd->add_option("--degrees", degrees);
    dual_cmd->add_option("--out", out);
    dual_cmd->add_option("--representatives", representatives);
    dual_cmd->add_option("--svg", svg);
    dual_cmd->add_flag("--include-box-boundary", include_box_boundary,
                       "assign hull cells with circumcenters outside the box to a slab");
    add_alpha_flags(dual_cmd, alpha_opt);

    auto* oracle_cmd = app.add_subcommand(
        "oracle-check", "diff the pairing barcode against the dense rank oracle");
    oracle_cmd->add_option("input", input, "complex JSON (omit to use seeded random complexes)");
    oracle_cmd->add_option("--seeds", seeds, "number of random complexes when no input given");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "emit the reference inputs");
    fixtures_cmd->add_option("--out-dir", out_dir);
    fixtures_cmd->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return run_validate(input);
        if (alpha_cmd->parsed()) return run_alpha(input, alpha_opt, out);
        if (kernel_cmd->parsed()) return run_kernel(input, format, alpha_opt, block, out);
        if (cob_cmd->parsed())
            return run_cobordism(input, format, alpha_opt, degrees, out, representatives, svg);
        if (dual_cmd->parsed())
            return run_dual(input, alpha_opt, include_box_boundary, degrees, out,
                            representatives, svg);
        if (oracle_cmd->parsed())
            return run_oracle_check(oracle_cmd->count("input") ? input : "", seeds);
        if (fixtures_cmd->parsed()) return run_fixtures(out_dir, seed);
    } catch (const ValidationError& e) {
        std::cerr << e.what();
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitComputation;
    }
    return 0;
}
