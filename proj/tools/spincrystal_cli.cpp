// command-line front end: enumeration, graph export, per-partition stats,
// branching reports, Jantzen-Seitz checks, basic spin data, property suites
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "spincrystal/appendix.hpp"
#include "spincrystal/blocks.hpp"
#include "spincrystal/branching.hpp"
#include "spincrystal/cartan.hpp"
#include "spincrystal/crystal.hpp"
#include "spincrystal/elements.hpp"
#include "spincrystal/graph.hpp"
#include "spincrystal/partitions.hpp"

using namespace spincrystal;

namespace {

constexpr int kExitBad = 2;       // invalid input
constexpr int kExitViolation = 1;  // a suite found a counterexample

CartanType parse_h(const std::string& s) {
    if (s == "inf") return CartanType::b_infinity();
    int h;
    try {
        size_t pos = 0;
        h = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("--h must be an odd integer >= 3 or 'inf'");
    }
    if (h < 3 || h % 2 == 0)
        throw std::invalid_argument("--h must be an odd integer >= 3 or 'inf'");
    return CartanType::finite((h - 1) / 2);
}

int residue_bound(const CartanType& ct, int n) {
    return ct.is_infinite() ? std::max(n, 1) : ct.ell() + 1;
}

int cmd_enumerate(const CartanType& ct, int n, bool all) {
    auto list = all ? enumerate_h_strict(n, ct) : enumerate_restricted(n, ct);
    for (const auto& lam : list) std::cout << to_string(lam) << "\n";
    return 0;
}

int cmd_graph(const CartanType& ct, int max_n, const std::string& format,
              const std::string& out) {
    CrystalGraph g(ct, max_n);
    std::string text = format == "dot" ? g.export_dot() : g.export_json();
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open " << out << "\n";
            return kExitBad;
        }
        f << text;
    }
    return 0;
}

int cmd_stats(const CartanType& ct, const Partition& lam) {
    if (!is_restricted(lam, ct)) {
        std::cerr << to_string(lam) << " is not restricted "
                  << (ct.is_infinite() ? "strict" : std::to_string(ct.h()) + "-strict")
                  << "\n";
        return kExitBad;
    }
    std::cout << "partition: " << to_string(lam) << "\n";
    std::cout << "degree: " << degree(lam) << "\n";
    ContentVector gamma = content(lam, ct);
    std::cout << "content:";
    for (auto& [i, c] : gamma.entries()) std::cout << " " << i << ":" << c;
    std::cout << "\n";
    int bound = residue_bound(ct, degree(lam) + 1);
    std::cout << "eps:";
    for (Residue i = 0; i < bound; ++i) std::cout << " " << eps(lam, ct, i);
    std::cout << "\nphi:";
    for (Residue i = 0; i < bound; ++i) std::cout << " " << phi(lam, ct, i);
    std::cout << "\n";
    std::cout << "wt: L0";
    for (auto& [i, c] : gamma.entries()) std::cout << " - " << c << "a" << i;
    std::cout << "\n";
    std::cout << "b: " << b_of(lam, ct) << "\n";
    std::cout << "a: " << a_of(lam, ct) << "\n";
    std::cout << "type_W: " << (type_W(lam, ct) == ModuleType::M ? "M" : "Q") << "\n";
    std::cout << "type_S: " << (type_S(lam, ct) == ModuleType::M ? "M" : "Q") << "\n";
    if (!ct.is_infinite()) {
        std::cout << "bar_core: " << to_string(bar_core(lam, ct)) << "\n";
        std::cout << "bar_weight: " << bar_weight(lam, ct) << "\n";
    }
    std::cout << "block_size: " << block_size(lam, ct) << "\n";
    return 0;
}

int cmd_branch(const CartanType& ct, const Partition& lam, const std::string& algebra,
               const std::string& direction) {
    BranchReport rep;
    if (algebra == "W")
        rep = direction == "res" ? restrict_W(lam, ct) : induce_W(lam, ct);
    else
        rep = direction == "res" ? restrict_S(lam, ct) : induce_S(lam, ct);
    std::cout << branch_report_json(rep);
    return 0;
}

int cmd_js(const CartanType& ct, const Partition& lam, const std::string& group) {
    bool verdict = group == "S" ? jantzen_seitz_S(lam, ct) : jantzen_seitz_A(lam, ct);
    std::cout << to_string(lam) << " is " << (verdict ? "" : "not ")
              << "Jantzen-Seitz for " << group << "(n)\n";
    return 0;
}

int cmd_spin(const CartanType& ct, int n) {
    auto [dw, ds] = basic_spin_dims(n, ct);
    std::cout << "omega: " << to_string(omega(n, ct)) << "\n";
    std::cout << "dim_W: " << dw << "\n";
    std::cout << "dim_S: " << ds << "\n";
    return 0;
}

// ---- property suites ----

int suite_axioms(const CartanType& ct, int max_n) {
    // the union over degrees is e_tilde-closed; only f_tilde images at the
    // top degree fall outside, and those are reported, not failed
    std::vector<ElementPtr> elems;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& lam : enumerate_h_strict(n, ct))
            elems.push_back(std::make_shared<PartitionElement>(lam, ct));
    std::vector<Residue> residues;
    for (Residue i = 0; i < residue_bound(ct, max_n + 1); ++i) residues.push_back(i);
    auto rep = verify_axioms(elems, ct, residues);
    for (const auto& v : rep.violations) std::cerr << "axioms: " << v << "\n";
    std::cout << "axioms: " << (rep.ok() ? "ok" : "FAIL") << " (" << rep.checks
              << " checks, " << rep.outside_f_images.size()
              << " top-degree f-images skipped)\n";
    return rep.ok() ? 0 : kExitViolation;
}

int suite_kac(const CartanType& ct, int max_n) {
    int bad = 0;
    for (int n = 0; n <= max_n; ++n) {
        auto rep = kac_check(n, ct);
        for (const auto& f : rep.failures) {
            std::cerr << "kac(n=" << n << "): " << f << "\n";
            ++bad;
        }
    }
    std::cout << "kac: " << (bad ? "FAIL" : "ok") << "\n";
    return bad ? kExitViolation : 0;
}

int suite_cores(const CartanType& ct, int max_n) {
    if (ct.is_infinite()) {
        std::cout << "cores: ok (no bars at h=inf)\n";
        return 0;
    }
    int bad = 0;
    for (int n = 0; n <= max_n; ++n) {
        auto layer = enumerate_h_strict(n, ct);
        for (size_t a = 0; a < layer.size(); ++a)
            for (size_t b = a + 1; b < layer.size(); ++b) {
                bool same_content = content(layer[a], ct) == content(layer[b], ct);
                bool same_core = bar_core(layer[a], ct) == bar_core(layer[b], ct);
                if (same_content != same_core) {
                    std::cerr << "cores(n=" << n << "): " << to_string(layer[a]) << " vs "
                              << to_string(layer[b]) << "\n";
                    ++bad;
                }
            }
    }
    std::cout << "cores: " << (bad ? "FAIL" : "ok") << "\n";
    return bad ? kExitViolation : 0;
}

int suite_fixtures(const CartanType& ct) {
    if (ct.is_infinite()) {
        std::cerr << "fixtures suite needs a finite h\n";
        return kExitBad;
    }
    auto rep = cross_check(load_appendix(ct), ct);
    for (const auto& f : rep.flagged) std::cerr << "fixtures (flagged): " << f << "\n";
    for (const auto& f : rep.failures) std::cerr << "fixtures: " << f << "\n";
    std::cout << "fixtures: " << (rep.ok() ? "ok" : "FAIL") << " (" << rep.survivors
              << " survivors / " << rep.entries << " entries)\n";
    return rep.ok() ? 0 : kExitViolation;
}

int cmd_check(const CartanType& ct, const std::string& suite, int max_n) {
    int rc = 0;
    auto merge = [&](int r) { rc = std::max(rc, r); };
    if (suite == "axioms" || suite == "all") merge(suite_axioms(ct, max_n));
    if (suite == "kac" || suite == "all") merge(suite_kac(ct, max_n));
    if (suite == "cores" || suite == "all") merge(suite_cores(ct, max_n));
    if (suite == "fixtures" || (suite == "all" && !ct.is_infinite()))
        merge(suite_fixtures(ct));
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial crystal of restricted h-strict partitions"};
    app.require_subcommand(1);

    std::string h_str = "3", partition_str, format = "dot", out_path, algebra = "W",
                direction = "res", group = "S", suite = "all";
    int n = 0, max_n = 6;
    bool all = false;

    app.set_help_flag("--help", "print help");  // frees -h/--h for the parameter
    auto add_h = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--h", h_str, "odd h >= 3, or 'inf'")->required();
    };

    auto* c_enum = app.add_subcommand("enumerate", "list restricted h-strict partitions");
    add_h(c_enum);
    c_enum->add_option("--n", n, "degree")->required();
    c_enum->add_flag("--all", all, "include non-restricted h-strict partitions");

    auto* c_graph = app.add_subcommand("graph", "export the crystal graph");
    add_h(c_graph);
    c_graph->add_option("--max-n", max_n, "top degree")->required();
    c_graph->add_option("--format", format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));
    c_graph->add_option("--out", out_path, "write to file instead of stdout");

    auto* c_stats = app.add_subcommand("stats", "statistics of one partition");
    add_h(c_stats);
    c_stats->add_option("--partition", partition_str, "comma-separated parts")->required();

    auto* c_branch = app.add_subcommand("branch", "restriction/induction report");
    add_h(c_branch);
    c_branch->add_option("--partition", partition_str)->required();
    c_branch->add_option("--algebra", algebra)->check(CLI::IsMember({"W", "S"}));
    c_branch->add_option("--direction", direction)->check(CLI::IsMember({"res", "ind"}));

    auto* c_js = app.add_subcommand("js", "Jantzen-Seitz verdict");
    add_h(c_js);
    c_js->add_option("--partition", partition_str)->required();
    c_js->add_option("--group", group)->check(CLI::IsMember({"S", "A"}));

    auto* c_spin = app.add_subcommand("spin", "basic spin label and dimensions");
    add_h(c_spin);
    c_spin->add_option("--n", n, "degree")->required();

    auto* c_check = app.add_subcommand("check", "run property suites");
    add_h(c_check);
    c_check->add_option("--suite", suite)
        ->check(CLI::IsMember({"axioms", "kac", "cores", "fixtures", "all"}));
    c_check->add_option("--max-n", max_n, "top degree for the suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBad;  // help/version exit 0, bad flags exit 2
    }

    try {
        CartanType ct = parse_h(h_str);
        if (c_enum->parsed()) {
            if (n < 0) throw std::invalid_argument("--n must be >= 0");
            return cmd_enumerate(ct, n, all);
        }
        if (c_graph->parsed()) {
            if (max_n < 0) throw std::invalid_argument("--max-n must be >= 0");
            return cmd_graph(ct, max_n, format, out_path);
        }
        if (c_stats->parsed()) return cmd_stats(ct, parse_partition(partition_str));
        if (c_branch->parsed())
            return cmd_branch(ct, parse_partition(partition_str), algebra, direction);
        if (c_js->parsed()) return cmd_js(ct, parse_partition(partition_str), group);
        if (c_spin->parsed()) {
            if (ct.is_infinite())
                throw std::invalid_argument("spin needs a finite h");
            return cmd_spin(ct, n);
        }
        if (c_check->parsed()) return cmd_check(ct, suite, max_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBad;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBad;
    }
    return 0;
}
