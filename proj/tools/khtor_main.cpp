#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "khtor/alexander.hpp"
#include "khtor/construct.hpp"
#include "khtor/khovanov.hpp"

using namespace khtor;

namespace {

// exit codes: 0 success/pass, 1 check failed, 2 input error, 3 cap exceeded
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

int default_threads() {
    if (const char* env = std::getenv("KHTOR_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

struct CommonOpts {
    std::string ring = "Z";
    int cap = kDefaultCap;
    int threads = default_threads();
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--ring,-r", o.ring, "Coefficient ring: Z, Q, or Fp (p prime)");
    cmd->add_option("--cap", o.cap, "Crossing cap for state enumeration (default 16)");
    cmd->add_option("--threads,-t", o.threads, "Worker threads over quantum gradings");
    cmd->add_option("--format,-f", o.format, "Output format: text, csv, json");
}

KhOptions kh_options(const CommonOpts& o) {
    KhOptions k;
    k.cap = o.cap;
    k.threads = o.threads;
    return k;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw pd_error("cannot write file: " + out_path);
        out << text;
        if (!text.empty() && text.back() != '\n') out << "\n";
    }
}

std::string base_name(const std::string& path) {
    size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"khtor: integral Khovanov homology, torsion, and diagram constructions"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string file0, file1, out_path;
    int arc1 = 0, arc2 = 0;
    bool have_arc1 = false, have_arc2 = false;
    std::string family_path;
    int family_n = 3;
    std::string dump_path;

    auto* cmd_kh = app.add_subcommand("kh", "Compute the Khovanov homology table");
    add_common(cmd_kh, opts);
    cmd_kh->add_option("file", file0, "PD or JSON diagram file")->required();
    cmd_kh->add_option("--dump-complex", dump_path, "Also dump boundary matrices (triplet format)");

    auto* cmd_summand = app.add_subcommand(
        "summand", "Check that Kh(first) is a degreewise direct summand of Kh(second)");
    add_common(cmd_summand, opts);
    cmd_summand->add_option("file0", file0, "Smaller diagram")->required();
    cmd_summand->add_option("file1", file1, "Larger diagram")->required();

    auto* cmd_alex = app.add_subcommand("alexander", "Normalized Alexander polynomial");
    add_common(cmd_alex, opts);
    cmd_alex->add_option("file", file0, "PD or JSON diagram file")->required();
    cmd_alex->add_option("--family", family_path, "Check the iterated connected-sum family with this summand");
    cmd_alex->add_option("--n", family_n, "Family size bound (default 3)");

    auto* cmd_construct = app.add_subcommand("construct", "Emit constructed diagrams as PD");
    auto* cc_consum = cmd_construct->add_subcommand("consum", "Connected sum of two diagrams");
    cc_consum->add_option("file0", file0)->required();
    cc_consum->add_option("file1", file1)->required();
    cc_consum->add_option("--arc1", arc1)->each([&](const std::string&) { have_arc1 = true; });
    cc_consum->add_option("--arc2", arc2)->each([&](const std::string&) { have_arc2 = true; });
    cc_consum->add_option("-o,--out", out_path, "Output file (stdout by default)");

    auto* cc_ktjoin = cmd_construct->add_subcommand("ktjoin", "Replace a trivial tangle by the KT tangle");
    cc_ktjoin->add_option("file0", file0)->required();
    cc_ktjoin->add_option("--arc1", arc1)->each([&](const std::string&) { have_arc1 = true; });
    cc_ktjoin->add_option("--arc2", arc2)->each([&](const std::string&) { have_arc2 = true; });
    cc_ktjoin->add_option("-o,--out", out_path);

    auto* cc_sat = cmd_construct->add_subcommand("satellite", "0-framed satellite with the bundled pattern");
    cc_sat->add_option("file0", file0)->required();
    cc_sat->add_option("-o,--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_kh->parsed()) {
            LinkDiagram d = parse_diagram_file(file0);
            KhTable t = kh(d, Ring::parse(opts.ring), kh_options(opts));
            t.name = base_name(file0);
            if (!dump_path.empty()) emit(dump_complex_triplets(d, opts.cap), dump_path);
            if (opts.format == "csv")
                emit(render_table_csv(t), "");
            else if (opts.format == "json")
                emit(render_table_json(t), "");
            else
                emit(render_table_text(t), "");
            return kExitOk;
        }
        if (cmd_summand->parsed()) {
            Ring ring = Ring::parse(opts.ring);
            KhTable t0 = kh(parse_diagram_file(file0), ring, kh_options(opts));
            KhTable t1 = kh(parse_diagram_file(file1), ring, kh_options(opts));
            SummandReport rep = check_summand(t0, t1);
            for (const auto& item : rep.items) {
                std::cout << (item.pass ? "ok   " : "FAIL ") << "(" << item.i << "," << item.j
                          << "): " << item.lhs.to_string() << " vs " << item.rhs.to_string()
                          << "\n";
            }
            std::cout << (rep.all_pass ? "PASS" : "FAIL") << ": Kh(" << base_name(file0)
                      << ") as a degreewise summand of Kh(" << base_name(file1) << ")\n";
            return rep.all_pass ? kExitOk : kExitCheckFailed;
        }
        if (cmd_alex->parsed()) {
            LinkDiagram d = parse_diagram_file(file0);
            if (family_path.empty()) {
                std::cout << alexander(d).to_string() << "\n";
                return kExitOk;
            }
            LinkDiagram j0 = parse_diagram_file(family_path);
            FamilyReport rep = check_family(d, j0, family_n);
            for (const auto& item : rep.items)
                std::cout << "n=" << item.n << ": " << item.delta.to_string() << " "
                          << (item.product_ok ? "ok" : "MISMATCH") << "\n";
            std::cout << (rep.pass() ? "PASS" : "FAIL") << ": products "
                      << (rep.products_ok ? "match" : "mismatch") << ", values "
                      << (rep.all_distinct ? "pairwise distinct" : "collide") << "\n";
            return rep.pass() ? kExitOk : kExitCheckFailed;
        }
        if (cc_consum->parsed()) {
            LinkDiagram d1 = parse_diagram_file(file0);
            LinkDiagram d2 = parse_diagram_file(file1);
            LinkDiagram out = (have_arc1 && have_arc2) ? connected_sum(d1, d2, arc1, arc2)
                                                       : connected_sum_default(d1, d2);
            emit(out.serialize(), out_path);
            return kExitOk;
        }
        if (cc_ktjoin->parsed()) {
            LinkDiagram d = parse_diagram_file(file0);
            LinkDiagram out = (have_arc1 && have_arc2) ? ktjoin(d, arc1, arc2) : ktjoin_auto(d);
            emit(out.serialize(), out_path);
            return kExitOk;
        }
        if (cc_sat->parsed()) {
            LinkDiagram d = parse_diagram_file(file0);
            emit(satellite(d, livingston_pattern()).serialize(), out_path);
            return kExitOk;
        }
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const pd_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
