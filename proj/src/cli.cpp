#include "hopfx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfx/catalog.hpp"
#include "hopfx/double.hpp"
#include "hopfx/exponent.hpp"
#include "hopfx/serialize.hpp"
#include "hopfx/twist.hpp"

namespace hopfx {
namespace {

// bad arguments (exit 2), as opposed to failed contracts (exit 1)
struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

HopfAlgebra resolve_input(const std::string& in) {
    const auto& names = preset_names();
    if (std::find(names.begin(), names.end(), in) != names.end()) return preset(in).algebra;
    std::ifstream probe(in);
    if (!probe.good()) throw UsageFailure("no preset or readable file named '" + in + "'");
    return load_algebra(in);
}

std::string pad(const std::string& s, size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string num(unsigned long v, size_t w) {
    std::string s = std::to_string(v);
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// ---- exp ----------------------------------------------------------------

std::string cert_phrase(const std::string& kind) {
    if (kind == "skew-primitive") return "skew-primitive x with g";
    if (kind == "u-minpoly-not-squarefree") return "u minimal polynomial not squarefree";
    return kind;
}

std::string exp_line(const ExponentResult& r) {
    switch (r.status) {
        case ExpStatus::Finite: return "exp = " + std::to_string(r.value);
        case ExpStatus::Infinite: {
            std::string s = "exp = INFINITE (certificates: ";
            for (size_t i = 0; i < r.certificates.size(); ++i) {
                if (i) s += "; ";
                s += cert_phrase(r.certificates[i].kind);
            }
            return s + ")";
        }
        case ExpStatus::Unknown: break;
    }
    return "exp = UNKNOWN (cap " + std::to_string(r.cap) + " exhausted)";
}

ExponentResult run_method(const HopfAlgebra& h, const std::string& m, unsigned long cap) {
    if (m == "direct") return exponent_direct(h, cap);
    if (m == "u") return exponent_via_u(h, cap);
    if (m == "rproduct") return exponent_via_r_product(h, cap);
    if (m == "r21r") return exponent_via_r21r(h, cap);
    return decide_exponent(h, cap);
}

// A finite answer contradicts another finite answer with a different value,
// any infinite verdict, and any unknown verdict whose sweep covered it.
std::string find_disagreement(const std::vector<std::pair<std::string, ExponentResult>>& rs) {
    for (size_t i = 0; i < rs.size(); ++i)
        for (size_t j = 0; j < rs.size(); ++j) {
            if (i == j) continue;
            const auto& [na, a] = rs[i];
            const auto& [nb, b] = rs[j];
            if (a.status != ExpStatus::Finite) continue;
            if (b.status == ExpStatus::Finite && a.value != b.value)
                return na + " found " + std::to_string(a.value) + " but " + nb + " found " +
                       std::to_string(b.value);
            if (b.status == ExpStatus::Infinite)
                return na + " found " + std::to_string(a.value) + " but " + nb + " certified INFINITE";
            if (b.status == ExpStatus::Unknown && b.cap >= a.value)
                return nb + " swept past " + std::to_string(a.value) + " (cap " + std::to_string(b.cap) +
                       ") without terminating";
        }
    return "";
}

int cmd_exp(std::ostream& out, std::ostream& err, const std::string& input, const std::string& method,
            unsigned long cap_opt, bool has_cap, bool as_json) {
    HopfAlgebra h = resolve_input(input);
    unsigned long cap = has_cap ? cap_opt : default_cap(h);

    if (method != "all") {
        ExponentResult r = run_method(h, method, cap);
        if (as_json) {
            out << exponent_result_to_json(r, h.field);
        } else {
            out << exp_line(r) << "\n";
            if (r.order_certificate && r.order_certificate->char_p_ab) {
                auto [a, b] = *r.order_certificate->char_p_ab;
                out << "order decomposition: " << a << " * " << h.field.param << "^" << b << "\n";
            }
        }
        return 0;
    }

    static const char* kFour[] = {"direct", "u", "rproduct", "r21r"};
    std::vector<std::pair<std::string, ExponentResult>> rs;
    for (const char* m : kFour) rs.emplace_back(m, run_method(h, m, cap));

    std::string complaint = find_disagreement(rs);
    if (as_json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [m, r] : rs) arr.push_back(nlohmann::ordered_json::parse(exponent_result_to_json(r, h.field)));
        out << arr.dump(2) << "\n";
    } else {
        bool all_finite_equal = complaint.empty();
        for (const auto& [m, r] : rs)
            if (r.status != ExpStatus::Finite || r.value != rs[0].second.value) all_finite_equal = false;
        if (all_finite_equal) {
            out << "exp = " << rs[0].second.value << ", methods agree: direct,u,rproduct,r21r\n";
        } else {
            for (const auto& [m, r] : rs) out << pad(m, 10) << exp_line(r) << "\n";
            if (complaint.empty()) out << "methods compatible: no contradiction\n";
        }
    }
    if (!complaint.empty()) {
        err << "method disagreement: " << complaint << "\n";
        return 1;
    }
    return 0;
}

// ---- verify / double ------------------------------------------------------

bool print_axioms(std::ostream& out, const AxiomReport& rep) {
    auto row = [&](const char* label, bool ok) { out << "  " << pad(label, 24) << (ok ? "pass" : "FAIL") << "\n"; };
    row("associative", rep.associative);
    row("unital", rep.unital);
    row("coassociative", rep.coassociative);
    row("counital", rep.counital);
    row("bialgebra maps", rep.bialgebra);
    row("antipode axiom", rep.antipode_axiom);
    row("antipode invertible", rep.antipode_invertible);
    if (!rep.all()) out << "  first failure: " << rep.detail << "\n";
    return rep.all();
}

bool print_double_checks(std::ostream& out, const DrinfeldDouble& dd) {
    auto row = [&](const char* label, bool ok) { out << "  " << pad(label, 24) << (ok ? "pass" : "FAIL") << "\n"; };
    AxiomReport ax = verify_hopf(dd.algebra);
    QuasitriangularReport qt = verify_quasitriangular(dd);
    DrinfeldReport dr = verify_drinfeld_identities(dd);
    DeterminantReport det = determinant_lemma_check(dd);
    bool central_ok = true;
    std::string central_err;
    try {
        central_element_z(dd);
    } catch (const std::exception& e) {
        central_ok = false;
        central_err = e.what();
    }
    row("hopf axioms", ax.all());
    row("r invertible", qt.r_invertible);
    row("r conjugation", qt.conjugation);
    row("hexagon 1", qt.hexagon1);
    row("hexagon 2", qt.hexagon2);
    row("s^2 inner via u", dr.s2_inner);
    row("delta(u) identity", dr.delta_u);
    row("eps slices of u", dr.counit_slices);
    row("z central, g grouplike", central_ok);
    row("determinant powers", det.all());
    if (!ax.all()) out << "  first failure: " << ax.detail << "\n";
    if (!qt.all() && !qt.detail.empty()) out << "  first failure: " << qt.detail << "\n";
    if (!dr.all() && !dr.detail.empty()) out << "  first failure: " << dr.detail << "\n";
    if (!central_ok) out << "  first failure: " << central_err << "\n";
    return ax.all() && qt.all() && dr.all() && det.all() && central_ok;
}

int cmd_verify(std::ostream& out, std::ostream& err, const std::string& input, bool with_double) {
    HopfAlgebra h = resolve_input(input);
    out << h.name << ": dimension " << h.dim << " over " << h.field.str() << "\n";
    bool ok = print_axioms(out, verify_hopf(h));
    if (ok && with_double) {
        DrinfeldDouble dd = build_double(h);
        out << dd.algebra.name << ": dimension " << dd.algebra.dim << "\n";
        ok = print_double_checks(out, dd);
    }
    out << (ok ? "all checks passed\n" : "verification FAILED\n");
    if (!ok) err << "verification failed for " << h.name << "\n";
    return ok ? 0 : 1;
}

int cmd_double(std::ostream& out, std::ostream& err, const std::string& input, const std::string& opath) {
    HopfAlgebra h = resolve_input(input);
    DrinfeldDouble dd = build_double(h);
    out << dd.algebra.name << ": dimension " << dd.algebra.dim << " over " << dd.algebra.field.str() << "\n";
    bool ok = print_double_checks(out, dd);
    if (!ok) {
        err << "double verification failed for " << h.name << "\n";
        return 1;
    }
    save_algebra(dd.algebra, opath);
    out << "wrote " << opath << "\n";
    return 0;
}

int cmd_transform(std::ostream& out, const std::string& which, const std::string& input, const std::string& opath) {
    HopfAlgebra h = resolve_input(input);
    HopfAlgebra g = which == "dual" ? dual(h) : which == "op" ? opposite(h) : coopposite(h);
    AxiomReport rep = verify_hopf(g);
    if (!rep.all()) throw std::runtime_error(which + " fails verification: " + rep.detail);
    save_algebra(g, opath);
    out << g.name << ": dimension " << g.dim << " over " << g.field.str() << "\n";
    out << "wrote " << opath << "\n";
    return 0;
}

// ---- twist ----------------------------------------------------------------

std::vector<uint32_t> parse_indices(const std::string& s, uint32_t dim) {
    std::vector<uint32_t> idx;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
            throw UsageFailure("bad basis index '" + tok + "' in --subgroup");
        }
        if (pos != tok.size() || v >= dim) throw UsageFailure("bad basis index '" + tok + "' in --subgroup");
        idx.push_back((uint32_t)v);
    }
    if (idx.empty()) throw UsageFailure("--subgroup needs at least one basis index");
    return idx;
}

std::vector<std::vector<Scalar>> parse_table(const std::string& s, const FieldSpec& f) {
    std::vector<std::vector<Scalar>> table;
    std::stringstream rows(s);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<Scalar> r;
        std::stringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                r.push_back(Scalar::parse(f, cell));
            } catch (const std::exception& e) {
                throw UsageFailure(std::string("bad --bichar entry '") + cell + "': " + e.what());
            }
        }
        table.push_back(std::move(r));
    }
    if (table.empty()) throw UsageFailure("--bichar table is empty");
    return table;
}

int cmd_twist(std::ostream& out, const std::string& input, const std::string& subgroup, const std::string& bichar,
              const std::string& opath) {
    HopfAlgebra h = resolve_input(input);
    std::vector<Vec> gens;
    for (uint32_t i : parse_indices(subgroup, h.dim)) gens.push_back(h.basis_vec(i));
    Twist t = bicharacter_twist(h, gens, parse_table(bichar, h.field));
    HopfAlgebra g = apply_twist(h, t.j);
    out << g.name << ": dimension " << g.dim << " over " << g.field.str() << "\n";
    out << "grouplikes surviving the twist: " << g.known_grouplikes.size() << "\n";
    out << (g.comult == h.comult ? "coproduct unchanged (twist acts trivially)\n" : "coproduct deformed\n");
    save_algebra(g, opath);
    out << "wrote " << opath << "\n";
    return 0;
}

// ---- spectrum ---------------------------------------------------------------

int cmd_spectrum(std::ostream& out, const std::string& input, bool as_json) {
    HopfAlgebra h = resolve_input(input);
    SpectrumReport r = classify_u_spectrum(h);
    if (as_json) {
        out << spectrum_report_to_json(r, h.field);
        return 0;
    }
    unsigned long d = h.dim;
    out << "u minimal polynomial: " << r.u_minpoly.str() << "\n";
    out << "u squarefree: " << yesno(r.u_squarefree) << "\n";
    out << "squarefree part divides x^N - 1 for N <= 2*dim^3 = " << 2 * d * d * d << ": " << yesno(r.u_bound_ok);
    if (r.u_bound_ok) out << " (N = " << r.u_root_order << ")";
    out << "\n";
    if (!r.root_orders.empty()) {
        out << "distinct roots of order dividing n: ";
        for (size_t i = 0; i < r.root_orders.size(); ++i) {
            if (i) out << ", ";
            out << r.root_orders[i].first << " -> " << r.root_orders[i].second;
        }
        out << "\n";
    }
    out << "z minimal polynomial: " << r.z_minpoly.str() << "\n";
    out << "z squarefree part divides x^N - 1 for N <= dim^3 = " << d * d * d << ": " << yesno(r.z_bound_ok) << "\n";
    return 0;
}

// ---- catalog / scan --------------------------------------------------------

int cmd_catalog_list(std::ostream& out) {
    out << pad("name", 20) << pad("dim", 5) << pad("field", 8) << pad("exponent", 10) << pad("semisimple", 12)
        << pad("cosemisimple", 14) << "family\n";
    for (const std::string& name : preset_names()) {
        CatalogEntry e = preset(name);
        std::string expo = e.exponent ? (e.exponent->infinite ? "INFINITE" : std::to_string(e.exponent->value)) : "?";
        out << pad(name, 20) << pad(std::to_string(e.algebra.dim), 5) << pad(e.algebra.field.str(), 8)
            << pad(expo, 10) << pad(e.semisimple ? yesno(*e.semisimple) : "?", 12)
            << pad(e.cosemisimple ? yesno(*e.cosemisimple) : "?", 14) << e.family << "\n";
    }
    return 0;
}

int cmd_scan(std::ostream& out, std::ostream& err, const std::string& family, unsigned max_dim) {
    out << pad("name", 20) << pad("dim", 5) << pad("exp", 10) << pad("exp|dim", 9) << "exp|dim^3\n";
    std::vector<std::string> violations;
    for (const std::string& name : preset_names()) {
        CatalogEntry e = preset(name);
        bool group_derived = e.family == "group" || e.family == "dual" || e.family == "twist";
        if (family == "groups" && !(e.family == "group" || e.family == "dual")) continue;
        if (family == "twists" && e.family != "twist") continue;
        const HopfAlgebra& h = e.algebra;
        if (h.dim > max_dim) continue;
        ExponentResult r = decide_exponent(h, default_cap(h));
        unsigned long d = h.dim, d3 = d * d * d;
        std::string expo, div_d = "-", div_d3 = "-";
        if (r.status == ExpStatus::Finite) {
            expo = std::to_string(r.value);
            div_d = yesno(d % r.value == 0);
            div_d3 = yesno(d3 % r.value == 0);
        } else {
            expo = r.status == ExpStatus::Infinite ? "INFINITE" : "UNKNOWN";
        }
        out << pad(name, 20) << pad(std::to_string(d), 5) << pad(expo, 10) << pad(div_d, 9) << div_d3 << "\n";

        if (group_derived && (r.status != ExpStatus::Finite || d % r.value != 0))
            violations.push_back(name + ": exponent " + expo + " does not divide dim " + std::to_string(d));
        if (is_semisimple(h) && is_cosemisimple(h) && (r.status != ExpStatus::Finite || d3 % r.value != 0))
            violations.push_back(name + ": exponent " + expo + " does not divide dim^3 = " + std::to_string(d3));
    }
    for (const std::string& v : violations) err << "divisibility violation: " << v << "\n";
    return violations.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic Hopf algebra workbench"};
    app.name("hopfx");
    app.require_subcommand(1);

    std::string input, opath, subgroup, bichar;
    std::string method = "decide";
    std::string family = "all";
    unsigned long cap = 0;
    unsigned max_dim = 0xffffffff;
    bool with_double = false, as_json = false;

    CLI::App* c_catalog = app.add_subcommand("catalog", "the preset catalog");
    c_catalog->require_subcommand(1);
    CLI::App* c_list = c_catalog->add_subcommand("list", "list presets with their expectations");

    CLI::App* c_verify = app.add_subcommand("verify", "check every Hopf axiom exactly");
    c_verify->add_option("input", input, "preset name or algebra document path")->required();
    c_verify->add_flag("--double", with_double, "also build the Drinfeld double and check it");

    CLI::App* c_exp = app.add_subcommand("exp", "compute the exponent");
    c_exp->add_option("input", input, "preset name or algebra document path")->required();
    CLI::Option* exp_method =
        c_exp->add_option("--method", method, "direct|u|rproduct|r21r|all (default: certificate-driven decide)")
            ->check(CLI::IsMember({"direct", "u", "rproduct", "r21r", "all", "decide"}));
    CLI::Option* exp_cap = c_exp->add_option("--cap", cap, "search bound (default: dim^3 when semisimple and cosemisimple, else 4096)");
    c_exp->add_flag("--json", as_json, "print the machine-readable result document");

    CLI::App* c_double = app.add_subcommand("double", "build the Drinfeld double, check it, emit it");
    c_double->add_option("input", input, "preset name or algebra document path")->required();
    c_double->add_option("-o,--output", opath, "output document path")->required();

    CLI::App* c_dual = app.add_subcommand("dual", "emit the dual Hopf algebra");
    c_dual->add_option("input", input, "preset name or algebra document path")->required();
    c_dual->add_option("-o,--output", opath, "output document path")->required();

    CLI::App* c_op = app.add_subcommand("op", "emit the opposite-algebra Hopf algebra");
    c_op->add_option("input", input, "preset name or algebra document path")->required();
    c_op->add_option("-o,--output", opath, "output document path")->required();

    CLI::App* c_cop = app.add_subcommand("cop", "emit the opposite-coalgebra Hopf algebra");
    c_cop->add_option("input", input, "preset name or algebra document path")->required();
    c_cop->add_option("-o,--output", opath, "output document path")->required();

    CLI::App* c_twist = app.add_subcommand("twist", "apply a bicharacter/cocycle twist");
    c_twist->add_option("input", input, "preset name or algebra document path")->required();
    c_twist->add_option("--subgroup", subgroup, "comma-separated basis indices of grouplike generators")->required();
    c_twist->add_option("--bichar", bichar, "cocycle table on the character group: rows ';'-separated, entries ','-separated scalars")
        ->required();
    c_twist->add_option("-o,--output", opath, "output document path")->required();

    CLI::App* c_spec = app.add_subcommand("spectrum", "eigenvalue-order report for the Drinfeld element");
    c_spec->add_option("input", input, "preset name or algebra document path")->required();
    c_spec->add_flag("--json", as_json, "print the machine-readable report");

    CLI::App* c_scan = app.add_subcommand("scan", "exponent/divisibility table across the catalog");
    c_scan->add_option("--family", family, "groups|twists|all (default all)")
        ->check(CLI::IsMember({"groups", "twists", "all"}));
    c_scan->add_option("--max-dim", max_dim, "skip presets above this dimension");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_list) return cmd_catalog_list(out);
        if (*c_verify) return cmd_verify(out, err, input, with_double);
        if (*c_exp) return cmd_exp(out, err, input, *exp_method ? method : "decide", cap, (bool)*exp_cap, as_json);
        if (*c_double) return cmd_double(out, err, input, opath);
        if (*c_dual) return cmd_transform(out, "dual", input, opath);
        if (*c_op) return cmd_transform(out, "op", input, opath);
        if (*c_cop) return cmd_transform(out, "cop", input, opath);
        if (*c_twist) return cmd_twist(out, input, subgroup, bichar, opath);
        if (*c_spec) return cmd_spectrum(out, input, as_json);
        if (*c_scan) return cmd_scan(out, err, family, max_dim);
        err << "no subcommand given\n";
        return 2;
    } catch (const UsageFailure& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hopfx
