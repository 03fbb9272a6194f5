#include "hopfx/cli.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hopfx/catalog.hpp"
#include "hopfx/double.hpp"
#include "hopfx/exponent.hpp"
#include "hopfx/serialize.hpp"

using namespace hopfx;

namespace {

struct CliRun {
    int rc;
    std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    int rc = run_cli(args, o, e);
    return {rc, o.str(), e.str()};
}

uint32_t label_index(const HopfAlgebra& h, const std::string& label) {
    for (uint32_t i = 0; i < h.dim; ++i)
        if (h.basis_labels[i] == label) return i;
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("pinned exponent lines") {
    CliRun all = cli({"exp", "s3", "--method", "all"});
    CHECK(all.rc == 0);
    CHECK(all.out == "exp = 6, methods agree: direct,u,rproduct,r21r\n");

    CliRun inf = cli({"exp", "sweedler_q"});
    CHECK(inf.rc == 0);
    CHECK(inf.out ==
          "exp = INFINITE (certificates: skew-primitive x with g; u minimal polynomial not squarefree)\n");
}

TEST_CASE("exp variants") {
    SUBCASE("single method and char-p decomposition") {
        CHECK(cli({"exp", "z4", "--method", "u"}).out == "exp = 4\n");
        CliRun f3 = cli({"exp", "sweedler_f3"});
        CHECK(f3.rc == 0);
        CHECK(f3.out == "exp = 6\norder decomposition: 2 * 3^1\n");
    }
    SUBCASE("cap exhaustion is reported, not an error") {
        CliRun r = cli({"exp", "z4", "--method", "direct", "--cap", "3"});
        CHECK(r.rc == 0);
        CHECK(r.out == "exp = UNKNOWN (cap 3 exhausted)\n");
        CliRun all = cli({"exp", "z4", "--method", "all", "--cap", "3"});
        CHECK(all.rc == 0);
        CHECK(all.out.find("methods compatible") != std::string::npos);
    }
    SUBCASE("json round trip") {
        CliRun r = cli({"exp", "z4", "--json"});
        CHECK(r.rc == 0);
        ExponentResult back = exponent_result_from_json(r.out);
        CHECK(back.status == ExpStatus::Finite);
        CHECK(back.value == 4);
        HopfAlgebra h = preset("z4").algebra;
        CHECK(exponent_result_to_json(back, h.field) == r.out);
    }
    SUBCASE("json for method all is an array of four results") {
        CliRun r = cli({"exp", "z2", "--method", "all", "--json"});
        CHECK(r.rc == 0);
        auto arr = nlohmann::json::parse(r.out);
        REQUIRE(arr.is_array());
        REQUIRE(arr.size() == 4);
        std::vector<std::string> methods;
        for (const auto& e : arr) {
            ExponentResult one = exponent_result_from_json(e.dump());
            CHECK(one.status == ExpStatus::Finite);
            CHECK(one.value == 2);
            methods.push_back(one.method);
        }
        CHECK(methods == std::vector<std::string>{"direct", "u", "rproduct", "r21r"});
    }
}

TEST_CASE("verify subcommand") {
    CliRun v = cli({"verify", "s3"});
    CHECK(v.rc == 0);
    CHECK(v.out.find("antipode axiom          pass") != std::string::npos);
    CHECK(v.out.find("FAIL") == std::string::npos);
    CHECK(v.out.find("all checks passed") != std::string::npos);

    CliRun vd = cli({"verify", "z2", "--double"});
    CHECK(vd.rc == 0);
    CHECK(vd.out.find("D(z2): dimension 4") != std::string::npos);
    CHECK(vd.out.find("hexagon 2") != std::string::npos);
    CHECK(vd.out.find("determinant powers") != std::string::npos);
}

TEST_CASE("documents written by one subcommand feed the next") {
    std::string dpath = "cli_double.json", tpath = "cli_dual.json";

    CliRun d = cli({"double", "z2", "-o", dpath});
    CHECK(d.rc == 0);
    CHECK(d.out.find("wrote " + dpath) != std::string::npos);
    // the emitted double is byte-identical to an in-process build
    CHECK(load_algebra(dpath).dim == 4);
    CHECK(emit_algebra(build_double(preset("z2").algebra).algebra) == emit_algebra(load_algebra(dpath)));
    CHECK(cli({"exp", dpath}).out == "exp = 2\n");

    for (const char* t : {"dual", "op", "cop"}) {
        CliRun r = cli({t, "s3", "-o", tpath});
        CHECK(r.rc == 0);
        CHECK(cli({"exp", tpath}).out == "exp = 6\n");
    }
    std::remove(dpath.c_str());
    std::remove(tpath.c_str());
}

TEST_CASE("twist subcommand reproduces the catalog twist") {
    HopfAlgebra d4 = preset("d4").algebra;
    std::string sub = std::to_string(label_index(d4, "r^2")) + "," + std::to_string(label_index(d4, "s"));
    std::string path = "cli_twist.json";
    CliRun r = cli({"twist", "d4", "--subgroup", sub, "--bichar", "1,1,1,1;1,1,-1,-1;1,1,1,1;1,1,-1,-1",
                    "-o", path});
    CHECK(r.rc == 0);
    CHECK(r.out.find("coproduct deformed") != std::string::npos);
    HopfAlgebra twisted = load_algebra(path);
    CHECK(twisted.comult == preset("d4_twisted").algebra.comult);
    CHECK(twisted.mult == d4.mult);
    std::remove(path.c_str());

    SUBCASE("a symmetric table twists trivially and says so") {
        HopfAlgebra kl = preset("klein").algebra;
        std::string ksub = std::to_string(label_index(kl, "a")) + "," + std::to_string(label_index(kl, "b"));
        CliRun v = cli({"twist", "klein", "--subgroup", ksub, "--bichar",
                        "1,1,1,1;1,1,-1,-1;1,-1,1,-1;1,-1,-1,1", "-o", path});
        CHECK(v.rc == 0);
        CHECK(v.out.find("coproduct unchanged") != std::string::npos);
        std::remove(path.c_str());
    }
    SUBCASE("contract failures exit 1, usage failures exit 2") {
        // r and s generate all of D4: not abelian
        std::string bad = std::to_string(label_index(d4, "r")) + "," + std::to_string(label_index(d4, "s"));
        CliRun nonab = cli({"twist", "d4", "--subgroup", bad, "--bichar", "1", "-o", path});
        CHECK(nonab.rc == 1);
        CHECK(nonab.err.find("nonabelian") != std::string::npos);
        CHECK(cli({"twist", "d4", "--subgroup", "99", "--bichar", "1", "-o", path}).rc == 2);
        CHECK(cli({"twist", "d4", "--subgroup", "1,x", "--bichar", "1", "-o", path}).rc == 2);
    }
}

TEST_CASE("spectrum subcommand") {
    CliRun r = cli({"spectrum", "klein"});
    CHECK(r.rc == 0);
    CHECK(r.out.find("u minimal polynomial: x^2 - 1") != std::string::npos);
    CHECK(r.out.find("distinct roots of order dividing n: 1 -> 1, 2 -> 2") != std::string::npos);

    CliRun j = cli({"spectrum", "klein", "--json"});
    HopfAlgebra h = preset("klein").algebra;
    CHECK(j.out == spectrum_report_to_json(classify_u_spectrum(h), h.field));
}

TEST_CASE("catalog list and scan are deterministic tables") {
    CliRun a = cli({"catalog", "list"});
    CliRun b = cli({"catalog", "list"});
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("sweedler_q") != std::string::npos);
    CHECK(a.out.find("INFINITE") != std::string::npos);
    // one line per preset plus the header
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == (long)preset_names().size() + 1);

    CliRun s1 = cli({"scan", "--family", "groups", "--max-dim", "6"});
    CliRun s2 = cli({"scan", "--family", "groups", "--max-dim", "6"});
    CHECK(s1.rc == 0);
    CHECK(s1.out == s2.out);
    CHECK(s1.out.find("s3_dual") != std::string::npos);
    CHECK(s1.out.find("z8") == std::string::npos);       // dimension filtered
    CHECK(s1.out.find("sweedler") == std::string::npos); // family filtered
    CHECK(s1.err.empty());

    CliRun tw = cli({"scan", "--family", "twists"});
    CHECK(tw.rc == 0);
    CHECK(tw.out.find("d4_twisted") != std::string::npos);
    CHECK(tw.out.find("q8_twisted") != std::string::npos);
}

TEST_CASE("exit codes: 0 success, 1 broken contract, 2 usage") {
    CHECK(cli({}).rc == 2);
    CHECK(cli({"frobnicate"}).rc == 2);
    CHECK(cli({"exp"}).rc == 2);
    CHECK(cli({"exp", "no_such_preset"}).rc == 2);
    CHECK(cli({"exp", "s3", "--method", "bogus"}).rc == 2);
    CHECK(cli({"double", "s3"}).rc == 2);
    CHECK(cli({"--help"}).rc == 0);
    CHECK(cli({"exp", "--help"}).rc == 0);

    std::string bad = "cli_bad.json";
    {
        std::ofstream f(bad);
        f << "{\"format_version\": 1}\n";
    }
    CliRun r = cli({"verify", bad});
    CHECK(r.rc == 1);
    CHECK(r.err.find("cannot parse algebra document") != std::string::npos);
    std::remove(bad.c_str());
}
