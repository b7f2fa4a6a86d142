// End-to-end checks against the installed binary; the path arrives via the
// WONDERKIT_CLI environment variable (set by ctest).

#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "wonderkit/formats.hpp"
#include "wonderkit/mesh.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("WONDERKIT_CLI");
    REQUIRE_MESSAGE(env != nullptr, "WONDERKIT_CLI must point at the binary");
    return env;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("rope prints 2 pi for a one-metre gap, radius ignored bit for bit") {
    const RunResult a = run("rope --height 1");
    CHECK(a.exit_code == 0);
    CHECK(a.out == "6.28318530718\n");
    const RunResult b = run("rope --height 1 --radius 1");
    const RunResult c = run("rope --height 1 --radius 6.371e6");
    CHECK(b.out == a.out);
    CHECK(c.out == a.out);
}

TEST_CASE("rope inverse direction") {
    const double value = std::strtod(run("rope --extra 6.28318530718").out.c_str(), nullptr);
    CHECK(std::abs(value - 1.0) < 1e-11);
}

TEST_CASE("poly enumerate emits five rows ending in the face counts") {
    const RunResult r = run("poly enumerate");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "name,p,q,V,E,F\n"
          "tetrahedron,3,3,4,6,4\n"
          "cube,4,3,8,12,6\n"
          "octahedron,3,4,6,12,8\n"
          "dodecahedron,5,3,20,30,12\n"
          "icosahedron,3,5,12,30,20\n");
}

TEST_CASE("tiling generate at depth 0 draws exactly one tile path") {
    const RunResult r = run("tiling generate -n 7 -k 3 --depth 0");
    CHECK(r.exit_code == 0);
    std::size_t paths = 0;
    for (std::size_t pos = r.out.find("<path"); pos != std::string::npos;
         pos = r.out.find("<path", pos + 1))
        ++paths;
    CHECK(paths == 1);
}

TEST_CASE("usage errors exit 2, domain errors exit 1") {
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("rope").exit_code == 2);              // missing required choice
    CHECK(run("rope --height 1 --extra 2").exit_code == 2);
    CHECK(run("width reuleaux -n 4").exit_code == 1);  // even order: domain
    CHECK(run("tiling genus -p 1").exit_code == 1);
    CHECK(run("tiling generate -n 4 -k 4").exit_code == 1);  // euclidean pair
    CHECK(run("shell mesh --alpha-deg 95").exit_code == 1);
    CHECK(run("series harmonic -N 0").exit_code == 1);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("belt prints the lift sign") {
    CHECK(run("belt -n 0").out == "+1\n");
    CHECK(run("belt -n 1").out == "-1\n");
    CHECK(run("belt -n 2 --axis x").out == "+1\n");
}

TEST_CASE("precision control: flag and environment variable") {
    CHECK(run("--precision 5 rope --height 1").out == "6.2832\n");
    // env var overrides the digit count
    const std::string cmd = "WONDERKIT_PRECISION=4 " + cli_path() + " rope --height 1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 256> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    CHECK(out == "6.283\n");
}

TEST_CASE("cuboct OFF is a valid closed mesh either way") {
    for (const std::string from : {"cube", "octahedron"}) {
        const RunResult r = run("poly cuboct --from " + from);
        CHECK(r.exit_code == 0);
        const wonderkit::Mesh m = wonderkit::read_off(r.out);
        CHECK(m.vertex_count() == 12);
        CHECK(m.face_count() == 14);
        CHECK(wonderkit::euler_characteristic(m) == 2);
    }
}

TEST_CASE("output files respect --force") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "wonderkit_cli_test";
    fs::create_directories(dir);
    const std::string path = (dir / "tiles.svg").string();
    std::remove(path.c_str());

    CHECK(run("tiling generate -n 7 -k 3 --depth 1 -o " + path).exit_code == 0);
    CHECK(fs::exists(path));
    CHECK(run("tiling generate -n 7 -k 3 --depth 1 -o " + path).exit_code == 1);
    CHECK(run("--force tiling generate -n 7 -k 3 --depth 1 -o " + path).exit_code == 0);
    std::remove(path.c_str());
}

TEST_CASE("golden determinism: identical argv, identical bytes") {
    const std::string cmds[] = {
        "series rearrange -S 1.5 --max-terms 200",
        "width reuleaux -n 7 -w 1",
        "spiral --type logarithmic -a 1 -b 0.18",
        "web -m 12 --rings 6",
        "helix project -R 1 -c 1 -d 1",
        "shell solve --ratio const --value 0.5",
        "shell mesh --alpha-deg 80 --turns 2 --samples-per-turn 16 --circle-samples 8",
        "tiling generate -n 7 -k 3 --depth 2",
        "tiling genus -p 3",
        "poly build -p 5 -q 3",
        "poly cuboct --from octahedron --report",
        "belt -n 3",
        "link --demo borromean",
        "yinyang -R 2",
    };
    for (const std::string& cmd : cmds) {
        const RunResult first = run(cmd);
        const RunResult second = run(cmd);
        CHECK(first.exit_code == 0);
        REQUIRE_MESSAGE(!first.out.empty(), cmd);
        CHECK_MESSAGE(first.out == second.out, cmd);
    }
}

TEST_CASE("series harmonic matches the library through the pipe") {
    CHECK(run("series harmonic -N 4").out == "2.08333333333\n");
    CHECK(run("series alternating -N 2").out == "0.5\n");
}

TEST_CASE("link demos print both methods per pair") {
    const RunResult hopf = run("link --demo hopf");
    CHECK(hopf.out == "pair 0 1 crossing -1 gauss -1\n");
    const RunResult split = run("link --demo split");
    CHECK(split.out == "pair 0 1 crossing 0 gauss 0\n");
    const RunResult borr = run("link --demo borromean");
    CHECK(borr.out ==
          "pair 0 1 crossing 0 gauss 0\n"
          "pair 0 2 crossing 0 gauss 0\n"
          "pair 1 2 crossing 0 gauss 0\n");
}
