// prismlab: build, verify and measure the prism complexes Y_{N,r}, and check
// linear Tverberg partitions with exact arithmetic.
//
// Exit codes: 0 pass/found, 1 verification failure/not found, 2 usage error.

#include "prismlab/combinatorics.hpp"
#include "prismlab/errors.hpp"
#include "prismlab/generic_complex.hpp"
#include "prismlab/homology.hpp"
#include "prismlab/json_io.hpp"
#include "prismlab/orientation.hpp"
#include "prismlab/prism_complex.hpp"
#include "prismlab/symmetry.hpp"
#include "prismlab/tverberg.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace prismlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Text };

struct Output {
    Json payload;
    std::string text;
    int exit_code = kExitPass;
};

std::uint64_t max_cells()
{
    const char* env = std::getenv("PRISMLAB_MAX_CELLS");
    if (env == nullptr || *env == '\0')
        return 1'000'000;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0)
            throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("PRISMLAB_MAX_CELLS must be a positive integer, got \"") +
                         env + "\"");
    }
}

ComplexSpec checked_spec(int n, int r)
{
    ComplexSpec spec{n, r};
    spec.validate();
    const std::uint64_t tops = cell_count_closed_form(n, r, spec.top_dimension());
    const std::uint64_t cap = max_cells();
    if (tops > cap)
        throw UsageError("Y_{" + std::to_string(n) + "," + std::to_string(r) + "} has " +
                         std::to_string(tops) + " top cells, above the cap of " +
                         std::to_string(cap) + " (set PRISMLAB_MAX_CELLS to raise it)");
    return spec;
}

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write \"" + path + "\"");
    out << contents;
}

Json spec_json(const ComplexSpec& spec)
{
    return Json{{"N", spec.n_vertices_minus_one}, {"r", spec.parts}};
}

Output cmd_build(int n, int r, std::optional<int> dim, const std::string& out_path)
{
    const ComplexSpec spec = checked_spec(n, r);
    const FVector f = f_vector(spec);
    Output out;
    out.payload = spec_json(spec);
    out.payload["dimension"] = spec.top_dimension();
    out.payload["f_vector"] = f.counts;
    out.text = "Y_{" + std::to_string(n) + "," + std::to_string(r) + "} dimension " +
               std::to_string(spec.top_dimension()) + "\nf-vector: " + join(f.counts) + "\n";
    if (dim) {
        const auto cells = enumerate_cells(spec, *dim);
        Json list = Json::array();
        std::string lines;
        for (const Cell& c : cells) {
            list.push_back(cell_to_json(c));
            lines += c.to_string() + "\n";
        }
        Json listing{{"dim", *dim}, {"cells", list}};
        if (!out_path.empty()) {
            write_file(out_path, listing.dump(2) + "\n");
            out.payload["cells_written"] = out_path;
        } else {
            out.payload["cells"] = list;
            out.payload["cells_dim"] = *dim;
            out.text += "cells of dimension " + std::to_string(*dim) + ":\n" + lines;
        }
    }
    return out;
}

Output cmd_verify(int n, int r)
{
    const ComplexSpec spec = checked_spec(n, r);
    spec.require_top_cells();

    const auto squares = verify_boundary_squared_zero(spec);
    const auto coherence = verify_o_orientability(spec);
    const bool parents_ok = coherence.uniform_parent_count(static_cast<std::size_t>(r));
    const auto free = verify_free_action(spec);

    Json fixed = Json::array();
    for (const auto& fx : free.fixed)
        fixed.push_back(Json{{"sigma", fx.sigma.to_string()}, {"cell", fx.cell.to_string()}});
    Json failures = Json::array();
    for (const auto& c : squares.failures)
        failures.push_back(c.to_string());

    Output out;
    out.payload = spec_json(spec);
    out.payload["checks"] = Json{
        {"boundary_squared_zero",
         {{"pass", squares.pass}, {"cells_checked", squares.cells_checked}, {"failures", failures}}},
        {"parent_count",
         {{"pass", parents_ok}, {"expected", r}, {"faces_checked", coherence.faces.size()}}},
        {"free_action", {{"pass", free.pass}, {"cells_checked", free.cells_checked}, {"fixed", fixed}}},
        {"o_orientation", coherence_to_json(coherence, false)},
    };
    const bool pass = squares.pass && parents_ok && free.pass && coherence.pass;
    out.payload["pass"] = pass;
    auto mark = [](bool ok) { return ok ? "PASS" : "FAIL"; };
    out.text = "Y_{" + std::to_string(n) + "," + std::to_string(r) + "}\n" +
               "  boundary squared zero  " + mark(squares.pass) + "\n" +
               "  parent count = r       " + mark(parents_ok) + "\n" +
               "  free S_r action        " + mark(free.pass) + "\n" +
               "  O-orientation          " + mark(coherence.pass) + "\n";
    out.exit_code = pass ? kExitPass : kExitFail;
    return out;
}

Output cmd_homology(int n, int r, bool unreduced)
{
    const ComplexSpec spec = checked_spec(n, r);
    const auto groups = homology(spec, HomologyOptions{!unreduced});
    const std::int64_t chi = euler_characteristic(spec);
    std::int64_t chi_betti = unreduced ? 0 : 1;
    std::vector<std::uint64_t> betti;
    for (const auto& h : groups) {
        betti.push_back(h.free_rank);
        chi_betti += (h.dimension % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h.free_rank);
    }
    Output out;
    out.payload = spec_json(spec);
    out.payload["reduced"] = !unreduced;
    out.payload["groups"] = homology_to_json(groups);
    out.payload["betti"] = betti;
    out.payload["euler_characteristic"] = chi;
    out.payload["euler_consistent"] = chi == chi_betti;
    std::string text = std::string(unreduced ? "H_k" : "reduced H_k") + " of Y_{" +
                       std::to_string(n) + "," + std::to_string(r) + "}\n";
    for (const auto& h : groups) {
        text += "  k=" + std::to_string(h.dimension) + "  Z^" + std::to_string(h.free_rank);
        for (const auto& t : h.torsion)
            text += " + Z/" + t.str();
        text += "\n";
    }
    text += "euler characteristic " + std::to_string(chi) + "\n";
    bool pass = chi == chi_betti;
    if (!unreduced) {
        const bool connected = connectivity_holds(spec, groups);
        out.payload["connectivity"] = Json{{"pass", connected}, {"up_to", n - r}};
        text += std::string("connectivity through degree ") + std::to_string(n - r) + ": " +
                (connected ? "PASS" : "FAIL") + "\n";
        pass = pass && connected;
    }
    out.text = text;
    out.exit_code = pass ? kExitPass : kExitFail;
    return out;
}

Output cmd_quotient(int n, int r, bool list_orbits)
{
    const ComplexSpec spec = checked_spec(n, r);
    const FVector f = f_vector(spec);
    const auto free = verify_free_action(spec);
    Output out;
    out.payload = spec_json(spec);
    out.payload["f_vector"] = f.counts;
    out.payload["free_action"] = free.pass;

    bool pass = free.pass;
    try {
        const FVector q = quotient_f_vector(spec);
        out.payload["quotient_f_vector"] = q.counts;
        out.text = "f-vector: " + join(f.counts) + "\nquotient f-vector: " + join(q.counts) + "\n";
    } catch (const FreenessViolationError& e) {
        out.payload["quotient_f_vector"] = nullptr;
        out.payload["error"] = e.what();
        out.text = std::string("quotient: ") + e.what() + "\n";
        pass = false;
    }

    Json sizes = Json::array();
    Json reports = Json::array();
    const std::uint64_t group_order = factorial(r);
    for (int k = 0; k <= spec.top_dimension(); ++k) {
        const auto orb = orbits(spec, k);
        std::uint64_t regular = 0;
        for (const auto& o : orb)
            if (o.size() == group_order)
                ++regular;
        pass = pass && regular == orb.size();
        sizes.push_back(Json{{"dim", k}, {"orbits", orb.size()}, {"all_size_r_factorial", regular == orb.size()}});
        if (list_orbits)
            reports.push_back(orbit_report_to_json(k, orb));
    }
    out.payload["orbit_counts"] = sizes;
    if (list_orbits)
        out.payload["orbits"] = reports;

    if (n >= r) {
        Json eq = Json::array();
        for (const auto& c : orientation_equivariance(spec))
            eq.push_back(Json{{"sigma", c.sigma.to_string()}, {"preserved", c.preserved}, {"reversed", c.reversed}});
        out.payload["orientation_equivariance"] = eq;
    }
    out.payload["pass"] = pass;
    out.text += std::string("free action: ") + (free.pass ? "PASS" : "FAIL") + "\n";
    out.exit_code = pass ? kExitPass : kExitFail;
    return out;
}

Output cmd_tverberg(int d, int r, const std::string& points_path, bool ttt)
{
    if (d < 1)
        throw UsageError("--dim must be at least 1");
    if (r < 2)
        throw UsageError("--parts must be at least 2");
    PointConfig config = parse_points(read_file(points_path));
    if (config.dim != d)
        throw ParseError("points have " + std::to_string(config.dim) + " coordinates but --dim is " +
                         std::to_string(d));
    Output out;
    out.payload = Json{{"dim", d}, {"parts", r}, {"points", config.points.size()},
                       {"tverberg_number", tverberg_number(d, r)}};
    if (ttt) {
        if (config.points.size() != tverberg_number(d, r))
            throw UsageError("--ttt needs exactly " + std::to_string(tverberg_number(d, r)) + " points");
        const AffineTttResult res = affine_ttt_check(config, r);
        out.payload["found"] = true;
        out.payload["guaranteed"] = true;
        out.payload["theorem_violation"] = false;
        out.payload["certificate"] = certificate_to_json(res.certificate);
        out.payload["verified"] = verify_certificate(config, res.certificate);
        out.payload["top_cell"] = cell_to_json(res.top_cell);
        out.payload["faces"] = res.faces;
        out.text = "complementary faces " + res.top_cell.to_string() + " meet\n";
        out.exit_code = out.payload["verified"].get<bool>() ? kExitPass : kExitFail;
        return out;
    }
    const TverbergResult res = tverberg_search(config, r);
    out.payload["guaranteed"] = res.guaranteed;
    out.payload["partitions_tried"] = res.partitions_tried;
    out.payload["found"] = res.certificate.has_value();
    out.payload["theorem_violation"] = res.theorem_violation();
    if (res.certificate) {
        const bool verified = verify_certificate(config, *res.certificate);
        out.payload["certificate"] = certificate_to_json(*res.certificate);
        out.payload["verified"] = verified;
        std::string text = "partition:";
        for (const auto& block : res.certificate->parts) {
            text += " {";
            for (std::size_t i = 0; i < block.size(); ++i)
                text += (i ? "," : "") + std::to_string(block[i]);
            text += "}";
        }
        text += "\nwitness:";
        for (const auto& c : res.certificate->witness)
            text += " " + to_string(c);
        out.text = text + "\n";
        out.exit_code = verified ? kExitPass : kExitFail;
    } else {
        out.text = res.theorem_violation() ? "no partition found: THEOREM VIOLATION\n"
                                           : "no Tverberg partition\n";
        out.exit_code = kExitFail;
    }
    return out;
}

Output cmd_export_matrix(int n, int r, int k, const std::string& out_path)
{
    const ComplexSpec spec = checked_spec(n, r);
    const SparseIntMatrix m = boundary_matrix(spec, k);
    Output out;
    out.payload = spec_json(spec);
    out.payload["k"] = k;
    out.payload["rows"] = m.rows();
    out.payload["cols"] = m.cols();
    out.payload["nnz"] = m.nnz();
    if (!out_path.empty()) {
        write_file(out_path, m.to_text());
        out.payload["written"] = out_path;
        out.text = "wrote " + out_path + "\n";
    } else {
        Json entries = Json::array();
        for (const auto& e : m.entries())
            entries.push_back(Json::array({e.row, e.col, e.value.str()}));
        out.payload["entries"] = entries;
        out.text = m.to_text();
    }
    return out;
}

Output cmd_export_generic(int n, int r, const std::string& out_path)
{
    const ComplexSpec spec = checked_spec(n, r);
    const Json generic = generic_to_json(to_generic(spec));
    Output out;
    if (!out_path.empty()) {
        write_file(out_path, generic.dump(2) + "\n");
        out.payload = spec_json(spec);
        out.payload["written"] = out_path;
        out.text = "wrote " + out_path + "\n";
    } else {
        out.payload = generic;
        out.text = generic.dump(2) + "\n";
    }
    return out;
}

Output cmd_orient_generic(const std::string& path, const std::string& method_name)
{
    SearchMethod method = SearchMethod::Auto;
    if (method_name == "exhaustive")
        method = SearchMethod::Exhaustive;
    else if (method_name == "propagation")
        method = SearchMethod::Propagation;
    else if (method_name != "auto")
        throw UsageError("--method must be auto, exhaustive or propagation");

    Json description;
    try {
        description = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const GenericPrismComplex complex = generic_from_json(description);
    const GenericVerdict verdict = verify_generic_prism_complex(complex, method);

    Output out;
    out.payload = Json{{"satisfiable", verdict.satisfiable},
                       {"method", to_string(verdict.method)},
                       {"top_cells", complex.tops.size()},
                       {"report", coherence_to_json(verdict.report, false)}};
    if (verdict.satisfiable) {
        Json witness = Json::object();
        for (std::size_t i = 0; i < complex.tops.size(); ++i)
            witness[complex.tops[i].id] = verdict.witness[i];
        out.payload["witness"] = witness;
        out.text = "O-orientable (" + std::string(to_string(verdict.method)) + ")\n";
    } else {
        out.text = "not O-orientable (" + std::string(to_string(verdict.method)) + ")\n";
    }
    out.exit_code = verdict.satisfiable ? kExitPass : kExitFail;
    return out;
}

void emit(const Output& out, Format format)
{
    if (format == Format::Text)
        std::cout << out.text;
    else
        std::cout << out.payload.dump(2) << "\n";
}

int fail_usage(const std::string& message, Format format)
{
    std::cerr << "prismlab: " << message << "\n";
    if (format == Format::Json)
        std::cout << Json{{"error", message}}.dump(2) << "\n";
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Prism complexes Y_{N,r}, O-orientation, homology and Tverberg partitions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "json";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "text"}));

    int n = 0;
    int r = 0;
    int k = 0;
    std::optional<int> dim;
    std::string out_path;
    bool unreduced = false;
    bool list_orbits = false;
    bool ttt = false;
    int tv_dim = 0;
    int tv_parts = 0;
    std::string points_path;
    std::string generic_path;
    std::string method = "auto";

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("N", n, "Simplex dimension (vertices 0..N)")->required();
        cmd->add_option("r", r, "Number of parts")->required();
    };

    auto* build = app.add_subcommand("build", "f-vector and optionally the cells of one dimension");
    add_spec(build);
    build->add_option("--dim", dim, "List the cells of this dimension");
    build->add_option("--out", out_path, "Write the cell list to a file");

    auto* verify = app.add_subcommand("verify", "Boundary, parent-count, free-action and O-orientation checks");
    add_spec(verify);

    auto* hom = app.add_subcommand("homology", "Integral homology via Smith normal form");
    add_spec(hom);
    hom->add_flag("--unreduced", unreduced, "Unreduced homology");

    auto* quot = app.add_subcommand("quotient", "S_r orbits and the quotient f-vector");
    add_spec(quot);
    quot->add_flag("--orbits", list_orbits, "Include orbit representatives");

    auto* tv = app.add_subcommand("tverberg", "Search a Tverberg partition of a point file");
    tv->add_option("--dim", tv_dim, "Ambient dimension d")->required();
    tv->add_option("--parts", tv_parts, "Number of parts r")->required();
    tv->add_option("--points", points_path, "Point file")->required();
    tv->add_flag("--ttt", ttt, "Treat the points as vertex images of an affine map of the simplex boundary");

    auto* em = app.add_subcommand("export-matrix", "Boundary matrix from k-cells to (k-1)-cells");
    add_spec(em);
    em->add_option("k", k, "Dimension of the column cells")->required();
    em->add_option("--out", out_path, "Write the text matrix to a file");

    auto* eg = app.add_subcommand("export-generic", "Y_{N,r} in the generic prism complex schema");
    add_spec(eg);
    eg->add_option("--out", out_path, "Write to a file");

    auto* og = app.add_subcommand("orient-generic", "Decide O-orientability of a generic prism complex");
    og->add_option("file", generic_path, "JSON description")->required();
    og->add_option("--method", method, "auto, exhaustive or propagation");

    Format format = Format::Json;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail_usage(e.what(), format);
    }
    format = format_name == "text" ? Format::Text : Format::Json;

    try {
        Output out;
        if (*build)
            out = cmd_build(n, r, dim, out_path);
        else if (*verify)
            out = cmd_verify(n, r);
        else if (*hom)
            out = cmd_homology(n, r, unreduced);
        else if (*quot)
            out = cmd_quotient(n, r, list_orbits);
        else if (*tv)
            out = cmd_tverberg(tv_dim, tv_parts, points_path, ttt);
        else if (*em)
            out = cmd_export_matrix(n, r, k, out_path);
        else if (*eg)
            out = cmd_export_generic(n, r, out_path);
        else
            out = cmd_orient_generic(generic_path, method);
        emit(out, format);
        return out.exit_code;
    } catch (const TheoremViolationError& e) {
        std::cerr << "prismlab: " << e.what() << "\n";
        if (format == Format::Json)
            std::cout << Json{{"error", e.what()}, {"found", false}, {"theorem_violation", true}}.dump(2) << "\n";
        return kExitFail;
    } catch (const UsageError& e) {
        return fail_usage(e.what(), format);
    } catch (const ParseError& e) {
        return fail_usage(e.what(), format);
    } catch (const std::invalid_argument& e) {
        return fail_usage(e.what(), format);
    } catch (const std::out_of_range& e) {
        return fail_usage(e.what(), format);
    }
}
