#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sphframe/besov.hpp"
#include "sphframe/io.hpp"

using namespace sphframe;
namespace fs = std::filesystem;

namespace {

#ifndef SPHFRAME_CLI_PATH
#define SPHFRAME_CLI_PATH ""
#endif

const std::string kCli = SPHFRAME_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("sphframe_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& cmd) {
    const int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("doubles format with round-trip precision") {
    for (double v : {1.0, -0.1, 3.141592653589793, 1e-300, 123456789.123456789}) {
        const std::string s = format_double(v);
        CHECK(std::stod(s) == v);
    }
}

TEST_CASE("rule CSV") {
    TempDir dir;
    const auto rule = build_product_rule(3, 6);
    write_rule_csv(rule, dir.file("rule.csv"));
    const std::string text = slurp(dir.file("rule.csv"));
    CHECK(text.substr(0, 13) == "x,y,z,weight\n");
    // row count = node count + header
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(rule.size()) + 1);
}

TEST_CASE("function CSV round trip") {
    TempDir dir;
    const auto f = random_polynomial(8, 77);
    write_function_csv(f, dir.file("f.csv"), 77);
    const auto g = read_function_csv(dir.file("f.csv"));
    CHECK(g.degree() == 8);
    CHECK(g.carrier().degree == 16);
    CHECK(read_function_seed(dir.file("f.csv")) == 77);
    for (std::size_t i = 0; i < f.samples().size(); ++i)
        CHECK(g.samples()[i] == f.samples()[i]);  // bit-exact through the text format

    SUBCASE("mismatched content is rejected with the file named") {
        // swap two data rows so the nodes no longer match the declared rule
        std::istringstream iss(slurp(dir.file("f.csv")));
        std::vector<std::string> lines;
        for (std::string line; std::getline(iss, line);) lines.push_back(line);
        std::swap(lines[1], lines[2]);
        std::ofstream bad(dir.file("bad.csv"), std::ios::binary);
        for (const auto& line : lines) bad << line << '\n';
        bad.close();
        std::ofstream(dir.file("bad.csv.json"), std::ios::binary) << slurp(dir.file("f.csv.json"));
        try {
            read_function_csv(dir.file("bad.csv"));
            FAIL("expected IoError");
        } catch (const IoError& e) {
            CHECK(std::string(e.what()).find("bad.csv") != std::string::npos);
        }
    }
    SUBCASE("missing sidecar") {
        CHECK_THROWS_AS(read_function_csv(dir.file("nosuch.csv")), IoError);
    }
}

TEST_CASE("tree CSV round trip") {
    TempDir dir;
    const auto F = FrameSystem::build(3, 3);
    const auto f = random_polynomial(4, 9);
    const auto tree = analyze(F, f);
    write_tree_csv(F, tree, dir.file("t.csv"), 9, "unit-test");
    const auto tf = read_tree_csv(dir.file("t.csv"));
    CHECK(tf.jmax == 3);
    CHECK(tf.seed == 9);
    CHECK(tf.source == "unit-test");
    for (int j = 0; j <= 3; ++j)
        for (std::size_t k = 0; k < F.level_size(j); ++k)
            CHECK(tf.tree.coeff(j, k) == tree.coeff(j, k));
}

TEST_CASE("cli workflows" * doctest::skip(kCli.empty())) {
    SUBCASE("selftest exits 0 and reports green suites") {
        TempDir dir;
        CHECK(run(kCli + " selftest --jmax 3 --seed 5 --out " + dir.file("self.json")) == 0);
        const std::string rep = slurp(dir.file("self.json"));
        CHECK(rep.find("\"pass\": true") != std::string::npos);
    }
    SUBCASE("analyze-synthesize round trip reproduces the function file") {
        TempDir dir;
        CHECK(run(kCli + " analyze --jmax 4 --random-degree 8 --seed 3 --out-function " +
                  dir.file("f.csv") + " --out-tree " + dir.file("t.csv")) == 0);
        CHECK(run(kCli + " synthesize --tree " + dir.file("t.csv") + " --grid-degree 16 --out " +
                  dir.file("g.csv")) == 0);
        const auto f = read_function_csv(dir.file("f.csv"));
        // g.csv holds values at the same degree-16 grid
        std::ifstream in(dir.file("g.csv"));
        std::string line;
        std::getline(in, line);
        double worst = 0.0, scale = 0.0;
        std::size_t i = 0;
        while (std::getline(in, line)) {
            const auto last = line.rfind(',');
            const double v = std::stod(line.substr(last + 1));
            worst = std::max(worst, std::abs(v - f.samples()[i]));
            scale = std::max(scale, std::abs(f.samples()[i]));
            ++i;
        }
        CHECK(i == f.samples().size());
        CHECK(worst < 1e-8 * scale);
    }
    SUBCASE("deterministic reruns are byte-identical") {
        TempDir dir;
        const std::string cmd = kCli + " greedy --mode jackson --alpha 1 --p 2 --jmax 4 --seed 7";
        CHECK(run(cmd + " --out " + dir.file("a")) == 0);
        CHECK(run(cmd + " --out " + dir.file("b")) == 0);
        CHECK(slurp(dir.file("a.csv")) == slurp(dir.file("b.csv")));
        CHECK(slurp(dir.file("a.json")) == slurp(dir.file("b.json")));
        CHECK(!slurp(dir.file("a.csv")).empty());
    }
    SUBCASE("usage errors exit with status 2") {
        TempDir dir;
        CHECK(run(kCli + " analyze --input " + dir.file("missing.csv") + " --out-tree " +
                  dir.file("t.csv")) == 2);
        CHECK(run(kCli + " localization --jmax 99") == 2);
        CHECK(run(kCli + " no-such-command") == 2);
    }
    SUBCASE("frame-build writes a manifest and per-level rules") {
        TempDir dir;
        CHECK(run(kCli + " frame-build --jmax 2 --out " + dir.file("frame")) == 0);
        CHECK(fs::exists(dir.file("frame/frame.json")));
        CHECK(fs::exists(dir.file("frame/level_0.csv")));
        CHECK(fs::exists(dir.file("frame/level_2.csv")));
    }
}
