// End-to-end runs of the command-line binary (path injected by CMake).

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Sandbox {
    fs::path dir;
    Sandbox() {
        dir = fs::temp_directory_path() / "cutproject-cli-test";
        fs::create_directories(dir);
    }
    fs::path file(const std::string& name, const std::string& content) const {
        const fs::path p = dir / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }
    std::string slurp(const std::string& name) const {
        std::ifstream in(dir / name, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

int run(const std::string& args) {
    const std::string cmd = std::string(CUTPROJECT_CLI_PATH) + " " + args +
                            " > /dev/null 2> /dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

const char* kFib = R"({
  "name": "fibonacci",
  "d": 1, "m": 1, "N": 1,
  "M": [[1.0, 1.6180339887498949], [1.0, -0.6180339887498949]],
  "c": [0, 0]
})";
const char* kZ = R"({"name":"integers","d":1,"m":0,"N":1,"M":[[1.0]],"c":[0]})";
const char* kZ4 = R"({"name":"z-mod4","d":1,"m":0,"N":4,"M":[[1.0]],"c":[1]})";

} // namespace

TEST_CASE("cli exit codes") {
    Sandbox sb;
    const auto fib = sb.file("fib.json", kFib).string();
    const auto z = sb.file("z.json", kZ).string();

    CHECK(run("verify psf --scheme " + z) == 0);
    CHECK(run("points --scheme " + fib + " --window box:-0.5,0.5 --n 0") == 1);
    CHECK(run("points --scheme " + fib + " --n 10") == 1); // missing window
    CHECK(run("nonsense") == 1);
    CHECK(run("verify psf --scheme " + sb.file("broken.json", "{").string()) == 1);
    // an impossible tolerance makes verification fail with exit 2
    CHECK(run("verify density --scheme " + fib +
              " --window box:-0.5,0.5 --n-list 200 --tol 1e-12") == 2);
}

TEST_CASE("cli artifacts") {
    Sandbox sb;
    const auto fib = sb.file("fib.json", kFib).string();
    const auto z4 = sb.file("z4.json", kZ4).string();

    SUBCASE("diffraction CSV contains the central Bragg peak") {
        const auto out = (sb.dir / "peaks.csv").string();
        REQUIRE(run("diffract --scheme " + fib +
                    " --window box:-0.5,0.5 --dual-box -5,5 --eps 1e-4 --out " + out) == 0);
        const std::string csv = sb.slurp("peaks.csv");
        CHECK(csv.rfind("chi0,", 0) == 0);
        CHECK(csv.find("\n0,0.4472135954999579,0,0.19999999999999998\n") !=
              std::string::npos);
    }
    SUBCASE("deterministic output: identical argv gives identical bytes") {
        REQUIRE(run("points --scheme " + fib + " --window box:-0.5,0.5 --n 50 --out " +
                    (sb.dir / "a.csv").string()) == 0);
        REQUIRE(run("points --scheme " + fib + " --window box:-0.5,0.5 --n 50 --out " +
                    (sb.dir / "b.csv").string()) == 0);
        const std::string a = sb.slurp("a.csv");
        CHECK(!a.empty());
        CHECK(a == sb.slurp("b.csv"));
    }
    SUBCASE("cyclic scheme defaults to the all-residue window") {
        const auto out = (sb.dir / "z4pts.csv").string();
        REQUIRE(run("points --scheme " + z4 + " --n 3 --out " + out) == 0);
        const std::string csv = sb.slurp("z4pts.csv");
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 8); // header + 7 points
    }
    SUBCASE("verify wpsf on the cyclic scheme") {
        CHECK(run("verify wpsf --scheme " + z4 + " --window cyclic:{0,1} --tol 1e-10") == 0);
    }
    SUBCASE("svg plot") {
        const auto out = (sb.dir / "comb.svg").string();
        REQUIRE(run("plot --scheme " + fib +
                    " --window box:-0.5,0.5 --dual-box -3,3 --eps 1e-3 --out " + out) == 0);
        const std::string svg = sb.slurp("comb.svg");
        CHECK(svg.rfind("<svg", 0) == 0);
        CHECK(svg.find("steelblue") != std::string::npos);
    }
    SUBCASE("embedded window in the scheme file") {
        const auto path = sb.file("fib_win.json", R"({
          "name": "fibonacci", "d": 1, "m": 1, "N": 1,
          "M": [[1.0, 1.6180339887498949], [1.0, -0.6180339887498949]],
          "c": [0, 0],
          "window": {"kind": "box", "intervals": [[-0.5, 0.5]]}
        })").string();
        CHECK(run("density --scheme " + path + " --n-list 200 --tol 0.01") == 0);
    }
}
