// Command-line front end. Exit codes across all subcommands: 0 when the
// checked statement holds (or the operation succeeded), 1 when a decision
// subcommand refuted its statement and printed a witness, 2 for usage,
// format or validation errors, which go to stderr as one "softset: ..."
// line.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <softset/softset.hpp>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw softset::Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw softset::Error("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw softset::Error("cannot write " + path);
}

softset::SoftSet load(const std::string& path) {
    return softset::parse_document(read_file(path));
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    if (csv.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = csv.find(',', start);
        const std::string token = csv.substr(start, comma - start);
        if (token.empty()) throw softset::Error("empty element name in --set");
        out.push_back(token);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run_check(const std::string& mode, const std::string& file) {
    const softset::SoftSet s = load(file);
    const softset::Verdict verdict =
        mode == "convex" ? softset::is_convex(s) : softset::is_concave(s);
    std::cout << mode << ": " << (verdict.holds() ? "holds" : "refuted") << "\n";
    if (verdict.holds()) return 0;
    std::cout << softset::to_string(*verdict.witness, s.universe()) << "\n";
    return 1;
}

int run_op(const std::string& kind, const std::vector<std::string>& files,
           const std::string& out_path) {
    if (kind == "complement") {
        if (files.size() != 1)
            throw softset::Error("op complement takes exactly one input file");
        write_file(out_path, softset::serialize_document(complement(load(files[0]))));
        return 0;
    }
    if (files.size() != 2)
        throw softset::Error("op " + kind + " takes exactly two input files");
    const softset::SoftSet a = load(files[0]);
    const softset::SoftSet b = load(files[1]);
    const softset::SoftSet result =
        kind == "union" ? softset::union_of(a, b) : softset::intersection_of(a, b);
    write_file(out_path, softset::serialize_document(result));
    return 0;
}

int run_alpha(const std::string& csv, const std::string& file) {
    const softset::SoftSet s = load(file);
    softset::ElemSubset alpha(s.universe().size());
    for (const auto& name : split_names(csv)) {
        const auto index = s.universe().index_of(name);
        if (!index) throw softset::Error("unknown element: " + name);
        alpha.set(*index);
    }
    for (const auto& point : softset::alpha_inclusion(s, alpha))
        std::cout << softset::to_string(point) << "\n";
    return 0;
}

int run_subset(const std::string& file_a, const std::string& file_b) {
    const softset::SoftSet a = load(file_a);
    const softset::SoftSet b = load(file_b);
    a.require_same_carrier(b);
    const auto violation = softset::find_subset_violation(a, b);
    std::cout << "subset: " << (violation ? "refuted" : "holds") << "\n";
    if (!violation) return 0;
    std::cout << "x=" << softset::to_string(violation->first)
              << " u=" << a.universe().name(violation->second) << "\n";
    return 1;
}

int run_fuzz(std::size_t trials, std::uint64_t seed, const softset::SuiteConfig& config,
             const std::string& law) {
    const softset::SuiteReport report = softset::theorem_suite(trials, config, seed, law);
    std::cout << report.to_text();
    return report.all_expected_laws_hold() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact convexity and concavity analysis for soft sets on an integer lattice",
                 "softset"};
    app.require_subcommand(1);

    std::string check_mode;
    std::string check_file;
    auto* check = app.add_subcommand("check", "decide convexity or concavity");
    check->add_option("--mode", check_mode, "convex or concave")
        ->required()
        ->check(CLI::IsMember({"convex", "concave"}));
    check->add_option("file", check_file, "soft set document")->required();

    std::string op_kind;
    std::vector<std::string> op_files;
    std::string op_out;
    auto* op = app.add_subcommand("op", "apply a set operation and write the result");
    op->add_option("--kind", op_kind, "union, intersect or complement")
        ->required()
        ->check(CLI::IsMember({"union", "intersect", "complement"}));
    op->add_option("files", op_files, "input documents")->expected(1, 2)->required();
    op->add_option("--out", op_out, "output document path")->required();

    std::string alpha_csv;
    std::string alpha_file;
    auto* alpha = app.add_subcommand("alpha", "list the points whose value contains every named element");
    alpha->add_option("--set", alpha_csv, "comma-separated element names, empty for the empty set");
    alpha->add_option("file", alpha_file, "soft set document")->required();

    std::vector<std::string> subset_files;
    auto* subset = app.add_subcommand("subset", "decide soft-subset between two documents");
    subset->add_option("files", subset_files, "two documents, tested left against right")
        ->expected(2)
        ->required();

    std::size_t fuzz_trials = 100;
    std::uint64_t fuzz_seed = 0;
    softset::SuiteConfig fuzz_config;
    std::string fuzz_law = "all";
    auto* fuzz = app.add_subcommand("fuzz", "run the randomized theorem suite");
    fuzz->add_option("--trials", fuzz_trials, "instances per law");
    fuzz->add_option("--seed", fuzz_seed, "master seed");
    fuzz->add_option("--dim", fuzz_config.dim, "lattice dimension");
    fuzz->add_option("--box-side", fuzz_config.box_side, "points per axis, box is [0, side-1]^dim");
    fuzz->add_option("--universe", fuzz_config.universe_size, "universe size");
    fuzz->add_option("--family", fuzz_config.family_size, "family width for the finite-family laws");
    fuzz->add_option("--law", fuzz_law, "law name, or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "softset: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) return run_check(check_mode, check_file);
        if (*op) return run_op(op_kind, op_files, op_out);
        if (*alpha) return run_alpha(alpha_csv, alpha_file);
        if (*subset) return run_subset(subset_files[0], subset_files[1]);
        if (*fuzz) return run_fuzz(fuzz_trials, fuzz_seed, fuzz_config, fuzz_law);
    } catch (const std::exception& e) {
        std::cerr << "softset: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "softset: no subcommand\n";
    return 2;
}
