#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "c4gb/cli.hpp"
#include "c4gb/json_io.hpp"
#include "c4gb/random_gen.hpp"
#include "support.hpp"

using namespace c4gb;
using c4gb::testing::make_set;

namespace {

FieldElement q(long n, long d = 1) { return FieldElement::rational(n, d); }

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("c4gb-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name, const Json& content) {
        auto p = path / name;
        std::ofstream out(p);
        out << content.dump(2) << "\n";
        return p.string();
    }
};

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("standard set round trip") {
    Rng rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_staircase(rng, 1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 9));
        CHECK(standard_set_from_json(json_of(s)) == s);
    }
    CHECK_THROWS_AS(standard_set_from_json(Json{{"dim", 2}, {"elements", {{1, 0}}}}), ParseError);
}

TEST_CASE("polynomial and basis round trip") {
    LexPolynomial p(2, field_q());
    p.add_term({2, 0}, q(1));
    p.add_term({0, 1}, q(-7, 3));
    p.add_term({0, 0}, q(5));
    CHECK(polynomial_from_json(json_of(p)) == p);
    // decreasing lex order in the serialized form
    auto j = json_of(p);
    CHECK(j["terms"][0]["exp"] == Json::array({2, 0}));
    CHECK(j["terms"][0]["coef"] == "1");
    CHECK(j["terms"][1]["coef"] == "-7/3");

    LexPolynomial fp(1, field_fp(101));
    fp.add_term({3}, FieldElement::prime(1, 101));
    fp.add_term({0}, FieldElement::prime(100, 101));
    CHECK(polynomial_from_json(json_of(fp)) == fp);

    Rng rng(5);
    auto gb = vanishing_ideal_gb(random_point_set(rng, field_q(), 2, 5, 5));
    auto back = gb_from_json(json_of(gb));
    CHECK(back.delta() == gb.delta());
    CHECK(back.entries() == gb.entries());
}

TEST_CASE("point set and instance round trip") {
    Rng rng(77);
    auto a = random_point_set(rng, field_fp(101), 3, 6, 5);
    auto a2 = point_set_from_json(json_of(a));
    CHECK(a2.points == a.points);

    auto inst = random_instance(rng, field_q(), 3, 6);
    auto inst2 = instance_from_json(json_of(inst));
    CHECK(inst2.delta() == inst.delta());
    REQUIRE(inst2.summands().size() == inst.summands().size());
    for (std::size_t i = 0; i < inst.summands().size(); ++i) {
        CHECK(inst2.summands()[i].delta == inst.summands()[i].delta);
        CHECK(inst2.summands()[i].lambda == inst.summands()[i].lambda);
        CHECK(inst2.summands()[i].basis.entries() == inst.summands()[i].basis.entries());
    }
}

TEST_CASE("decomposition json round trip") {
    auto s = make_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    for (const auto& d : enumerate_decompositions(s)) {
        auto d2 = decomposition_from_json(json_of(d));
        CHECK(d2 == d);
    }
}

TEST_CASE("cli add reproduces the embedded split sum") {
    TempDir dir;
    auto a = dir.file("a.json", json_of(make_set(3, {{0, 0, 0}, {1, 0, 0}})));
    auto b = dir.file("b.json", json_of(make_set(3, {{0, 0, 0}, {0, 1, 0}})));
    auto run = cli({"add", a, b});
    CHECK(run.code == 0);
    auto parsed = standard_set_from_json(Json::parse(run.out));
    CHECK(parsed == make_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

    // neutral element
    auto empty = dir.file("e.json", json_of(StandardSet::empty(3)));
    auto run2 = cli({"add", a, empty});
    CHECK(run2.code == 0);
    CHECK(standard_set_from_json(Json::parse(run2.out)) == make_set(3, {{0, 0, 0}, {1, 0, 0}}));

    // dimension mismatch is an input error
    auto c = dir.file("c.json", json_of(make_set(2, {{0, 0}})));
    auto run3 = cli({"add", a, c});
    CHECK(run3.code == 2);
    CHECK(run3.err.find("error") != std::string::npos);
}

TEST_CASE("cli decompose counts and graphs") {
    TempDir dir;
    auto d = dir.file("d.json", json_of(make_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    auto run = cli({"decompose", d, "--count-only"});
    CHECK(run.code == 0);
    auto j = Json::parse(run.out);
    CHECK(j["decompositions"] == 2);
    CHECK(j["d"] == 2);

    // a planar staircase has exactly one decomposition
    auto flat = dir.file("flat.json", json_of(make_set(2, {{0, 0}, {1, 0}, {0, 1}})));
    auto run2 = cli({"decompose", flat, "--count-only"});
    CHECK(Json::parse(run2.out)["decompositions"] == 1);

    auto wide = dir.file("wide.json",
                         json_of(make_set(4, {{0, 0, 0, 0},
                                              {1, 0, 0, 0},
                                              {0, 1, 0, 0},
                                              {0, 0, 1, 0},
                                              {0, 0, 0, 1},
                                              {0, 0, 0, 2}})));
    auto run3 = cli({"decompose", wide, "--graph", "--truncate"});
    CHECK(run3.code == 0);
    auto g = Json::parse(run3.out);
    CHECK(g["root"]["children"].size() == 5);

    auto run4 = cli({"--output", "dot", "decompose", wide, "--graph", "--truncate"});
    CHECK(run4.code == 0);
    CHECK(run4.out.find("digraph") == 0);

    auto run5 = cli({"--max-size", "3", "decompose", wide, "--graph"});
    CHECK(run5.code == 3);
}

TEST_CASE("cli points") {
    TempDir dir;
    Json pts{{"dim", 3},
             {"field", "Q"},
             {"points", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
    auto file = dir.file("p.json", pts);
    auto run = cli({"points", file, "--slice", "--gb"});
    CHECK(run.code == 0);
    auto j = Json::parse(run.out);
    CHECK(standard_set_from_json(j["delta"]) ==
          make_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(j["slices"].size() == 2);
    CHECK(j["basis"]["entries"].size() == 6);

    Json dup{{"dim", 2}, {"field", "Q"}, {"points", {{1, 2}, {1, 2}}}};
    auto bad = dir.file("dup.json", dup);
    CHECK(cli({"points", bad}).code == 2);

    // single point
    Json one{{"dim", 2}, {"field", "Q"}, {"points", {{4, 5}}}};
    auto single = dir.file("one.json", one);
    auto run2 = cli({"points", single});
    CHECK(standard_set_from_json(Json::parse(run2.out)["delta"]) == make_set(2, {{0, 0}}));

    // seeded fixtures are byte-identical across runs
    auto f1 = cli({"--seed", "9", "--field", "Fp:101", "points", "--random", "6", "--dim", "3"});
    auto f2 = cli({"--seed", "9", "--field", "Fp:101", "points", "--random", "6", "--dim", "3"});
    CHECK(f1.code == 0);
    CHECK(f1.out == f2.out);
    auto f3 = cli({"--seed", "10", "--field", "Fp:101", "points", "--random", "6", "--dim", "3"});
    CHECK(f3.out != f1.out);
}

TEST_CASE("cli gb with verification") {
    TempDir dir;
    Rng rng(8);
    auto inst = random_instance(rng, field_q(), 3, 6);
    auto file = dir.file("inst.json", json_of(inst));
    auto run = cli({"gb", "--instance", file, "--verify", "both", "--trace"});
    CHECK(run.code == 0);
    auto j = Json::parse(run.out);
    CHECK(j["verification"]["oracle"] == "pass");
    CHECK(j["verification"]["membership"]["all_pass"] == true);
    CHECK(j.contains("trace"));

    // permuting summands in the file cannot change a byte of the output
    auto perm = json_of(inst);
    std::reverse(perm["summands"].begin(), perm["summands"].end());
    auto file2 = dir.file("inst2.json", perm);
    auto run2 = cli({"gb", "--instance", file2, "--verify", "both", "--trace"});
    CHECK(run2.out == run.out);

    // duplicated evaluation points are an input error
    auto broken = json_of(inst);
    if (broken["summands"].size() >= 2)
        broken["summands"][1]["lambda"] = broken["summands"][0]["lambda"];
    else
        broken["summands"].push_back(broken["summands"][0]);
    auto file3 = dir.file("inst3.json", broken);
    CHECK(cli({"gb", "--instance", file3}).code == 2);
}

TEST_CASE("cli stratum report and table") {
    TempDir dir;
    auto d1 = dir.file("d1.json", json_of(make_set(3, {{0, 0, 0},
                                                       {1, 0, 0},
                                                       {0, 1, 0},
                                                       {0, 0, 1},
                                                       {2, 0, 0},
                                                       {1, 1, 0}})));
    auto run = cli({"stratum", "report", "--delta", d1});
    CHECK(run.code == 0);
    auto j = Json::parse(run.out);
    CHECK(j["dimension"] == 11);
    CHECK(j["irreducible_components"] == 1);

    auto d2 = dir.file("d2.json", json_of(make_set(3, {{0, 0, 0},
                                                       {1, 0, 0},
                                                       {0, 1, 0},
                                                       {0, 0, 1},
                                                       {1, 1, 0},
                                                       {0, 2, 0}})));
    CHECK(Json::parse(cli({"stratum", "report", "--delta", d2}).out)["dimension"] == 12);

    auto table = cli({"stratum", "table", "--dim", "3", "--size", "4"});
    CHECK(table.code == 0);
    auto rows = Json::parse(table.out)["rows"];
    CHECK(rows.size() == 13);  // all plane partitions of 4
    bool found = false;
    for (const auto& row : rows)
        found = found || (standard_set_from_json(row["delta"]) ==
                              make_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) &&
                          row["irreducible_components"] == 2);
    CHECK(found);

    auto text = cli({"--output", "table", "stratum", "table", "--dim", "3", "--size", "4"});
    CHECK(text.out.find("delta\tdimension\td\tnr") == 0);
}

TEST_CASE("cli outputs are byte-deterministic") {
    TempDir dir;
    auto d = dir.file("d.json", json_of(make_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    auto a = cli({"decompose", d});
    auto b = cli({"decompose", d});
    CHECK(a.out == b.out);
    // outputs parse back through the library parsers
    auto parsed = Json::parse(a.out);
    for (const auto& dec : parsed["decompositions"]) CHECK_NOTHROW(decomposition_from_json(dec));
}
