#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "sgm/census.hpp"
#include "sgm/dyadic_gen.hpp"
#include "sgm/equivalence.hpp"
#include "sgm/errors.hpp"
#include "sgm/graph_io.hpp"
#include "sgm/matrix_io.hpp"
#include "sgm/property_suites.hpp"
#include "sgm/sg_enum.hpp"
#include "sgm/signed_graph.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_input = 2;
constexpr int exit_bound = 3;

// Thrown for failed checks so main can map it to its exit code.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        sgm::write_text_file(path, text);
    }
}

std::string numbered(std::size_t k) {
    std::ostringstream s;
    s << std::setw(2) << std::setfill('0') << k;
    return s.str();
}

int cmd_generate(std::size_t max_size, int bound, bool verify_bound, const std::string& out) {
    sgm::GenerateOptions opt;
    opt.exponent_bound = bound;
    opt.verify_bound = verify_bound;
    auto catalog = sgm::generate_matroids(max_size, opt);
    emit(out, sgm::format_catalog(catalog));
    std::map<std::size_t, std::size_t> per_size;
    for (const auto& e : catalog) ++per_size[e.size()];
    std::ostream& log = out.empty() || out == "-" ? std::cerr : std::cout;
    for (const auto& [size, count] : per_size) log << "size " << size << ": " << count << '\n';
    log << "total: " << catalog.size() << '\n';
    return exit_ok;
}

int cmd_reps(const std::string& input, const std::string& out_dir, const std::string& format) {
    sgm::LinearMatroid m{sgm::parse_matrix(sgm::read_text_file(input))};
    auto reps = sgm::enumerate_signed_graphic(m);
    if (reps.empty()) {
        std::cerr << input << ": the matroid has no signed-graphic representation\n";
        return exit_verification;
    }
    fs::create_directories(out_dir);
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const std::string stem = (fs::path(out_dir) / ("rep_" + numbered(k + 1))).string();
        sgm::write_text_file(stem + ".txt", sgm::format_representation(reps[k]));
        sgm::SignedGraph g = sgm::from_representation(reps[k]);
        if (format == "dot") {
            sgm::write_text_file(stem + ".dot", sgm::graph_to_dot(g, "rep_" + numbered(k + 1)));
        } else {
            sgm::write_text_file(stem + ".json", sgm::graph_to_json(g));
        }
    }
    auto classes = sgm::classify_row_equivalence(reps);
    const std::string report = sgm::format_partition_report(classes);
    sgm::write_text_file((fs::path(out_dir) / "partition.txt").string(), report);
    std::cout << reps.size() << " representations\n" << report;
    return exit_ok;
}

int cmd_census(const std::string& catalog_file, const std::string& out) {
    auto catalog = sgm::parse_catalog(sgm::read_text_file(catalog_file));
    emit(out, sgm::format_census(sgm::run_census(catalog)));
    return exit_ok;
}

int cmd_flip(const std::string& graph_file, const std::string& split_file, const std::string& out) {
    sgm::SignedGraph g = sgm::graph_from_json(sgm::read_text_file(graph_file));
    sgm::CylinderSplit split = sgm::split_from_json(sgm::read_text_file(split_file));
    if (split.side.empty()) {
        // Only the cut vertices were given: take the first matching split.
        bool found = false;
        for (const auto& cand : sgm::find_cylinder_splits(g)) {
            if (cand.s1 == split.s1 && cand.s2 == split.s2 && cand.t1 == split.t1 && cand.t2 == split.t2) {
                split = cand;
                found = true;
                break;
            }
        }
        if (!found) {
            throw sgm::InvalidSplit("no cylinder split of the graph uses s1=" + split.s1 + " s2=" + split.s2 +
                                    " t1=" + split.t1 + " t2=" + split.t2);
        }
    }
    sgm::SignedGraph flipped = sgm::cylinder_flip(g, split);
    if (!sgm::verify_flip(g, flipped)) {
        throw VerificationFailure("the flipped graph has a different circuit family");
    }
    emit(out, sgm::graph_to_json(flipped));
    std::cerr << "flip verified: circuits unchanged\n";
    return exit_ok;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, double scale) {
    sgm::SuiteOptions opt;
    opt.seed = seed;
    opt.scale = scale;
    auto results = sgm::run_suite(suite, opt);
    std::cout << sgm::format_report(results);
    bool ok = std::all_of(results.begin(), results.end(), [](const sgm::CheckResult& r) { return r.passed(); });
    return ok ? exit_ok : exit_verification;
}

int cmd_export(const std::string& input, const std::string& format, const std::string& out) {
    const std::string text = sgm::read_text_file(input);
    auto first = text.find_first_not_of(" \t\r\n");
    sgm::SignedGraph g = first != std::string::npos && text[first] == '{'
                             ? sgm::graph_from_json(text)
                             : sgm::from_representation(sgm::parse_representation(text));
    emit(out, format == "dot" ? sgm::graph_to_dot(g, fs::path(input).stem().string()) : sgm::graph_to_json(g));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dyadic matroids and their signed-graphic representations"};
    app.require_subcommand(1);

    std::string out;
    std::size_t max_size = 10;
    int bound = 2;
    bool skip_bound_check = false;
    auto* gen = app.add_subcommand("generate", "Generate the catalog of 3-connected dyadic matroids");
    gen->add_option("--max-size", max_size, "Largest groundset size (7 to 12)")->check(CLI::Range(7, 12));
    gen->add_option("--exponent-bound", bound, "Entries of extension columns are 0 or +-2^k with |k| <= bound")
        ->check(CLI::NonNegativeNumber);
    gen->add_flag("--skip-bound-check", skip_bound_check, "Do not rerun with the bound raised by one");
    gen->add_option("--out", out, "Catalog file (stdout if omitted)");

    std::string input, format = "dot";
    auto* reps = app.add_subcommand("reps", "Enumerate signed-graphic representations of a matrix");
    reps->add_option("matrix", input, "Matrix file")->required();
    reps->add_option("--out", out, "Output directory")->required();
    reps->add_option("--format", format, "Graph file format")->check(CLI::IsMember({"dot", "text"}));

    auto* census = app.add_subcommand("census", "Classify every catalog entry by row-equivalence structure");
    census->add_option("catalog", input, "Catalog file")->required();
    census->add_option("--out", out, "Report file (stdout if omitted)");

    std::string split_file;
    auto* flip = app.add_subcommand("flip", "Apply a cylinder flip and check that the circuits survive");
    flip->add_option("graph", input, "Signed graph file")->required();
    flip->add_option("split", split_file, "Split file")->required();
    flip->add_option("--out", out, "Flipped graph file (stdout if omitted)");

    std::string suite = "all";
    std::uint64_t seed = 0;
    double scale = 1.0;
    auto* verify = app.add_subcommand("verify", "Run randomized property suites");
    verify->add_option("suite", suite, "Suite name")
        ->check(CLI::IsMember({"linalg", "matroid", "siggraph", "equivalence", "all"}));
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--scale", scale, "Trial count multiplier")->check(CLI::PositiveNumber);

    auto* exp = app.add_subcommand("export", "Convert a graph or representation file");
    exp->add_option("input", input, "Graph or representation file")->required();
    exp->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "text"}));
    exp->add_option("--out", out, "Output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*gen) return cmd_generate(max_size, bound, !skip_bound_check, out);
        if (*reps) return cmd_reps(input, out, format);
        if (*census) return cmd_census(input, out);
        if (*flip) return cmd_flip(input, split_file, out);
        if (*verify) return cmd_verify(suite, seed, scale);
        if (*exp) return cmd_export(input, format, out);
    } catch (const sgm::CandidateBoundExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bound;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return exit_verification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
