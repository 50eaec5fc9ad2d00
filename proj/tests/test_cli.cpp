#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

struct Scratch {
    fs::path dir = fs::temp_directory_path() / ("simflow_cli_" + std::to_string(::getpid()));
    Scratch() { fs::create_directories(dir); }
    ~Scratch()
    {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
};

fs::path scratch_dir()
{
    static const Scratch scratch;
    return scratch.dir;
}

fs::path write_file(const std::string& name, const std::string& text)
{
    const auto p = scratch_dir() / name;
    std::ofstream(p) << text;
    return p;
}

// Runs the CLI through the shell; stderr is discarded.
Run run(const std::string& args, const std::string& stdin_text = "")
{
    std::string cmd = std::string("\"") + SIMFLOW_CLI + "\" " + args;
    if (!stdin_text.empty()) cmd += " < \"" + write_file("stdin.json", stdin_text).string() + "\"";
    cmd += " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string kTriangle = R"({"facets": [[0, 1], [1, 2], [0, 2]]})";

} // namespace

TEST_CASE("counts")
{
    const auto k53 = run("generate --fixture complete --n 5 --k 3");
    REQUIRE(k53.code == 0);
    const auto file = write_file("k53.json", k53.out);
    CHECK(run("flows --q 5 " + file.string()).out == "24\n");
    CHECK(run("flows --q 5 --method kernel " + file.string()).out == "24\n");
    CHECK(run("flows --q 3", kTriangle).out == "2\n");
    CHECK(run("colorings --k 3", kTriangle).out == "6\n");
    CHECK(run("colorings --k 3 --method brute", kTriangle).out == "6\n");
    CHECK(run("tensions --k 3", kTriangle).out == "2\n");
    CHECK(run("min-q --max 6", kTriangle).out == "2\n");
}

TEST_CASE("polynomials")
{
    CHECK(run("poly --kind tkr", kTriangle).out == "x^2 + x + y\n");
    CHECK(run("poly --kind tutte", kTriangle).out == "x^2 + x + y\n");
    CHECK(run("poly --kind qtkr --q 3", kTriangle).out == "x^2 + x + y\n");
    CHECK(run("poly --kind bott", kTriangle).out == "lambda - 1\n");
    CHECK(run("quasi", kTriangle).out == "period 1\nconstituents q - 1\n");

    const auto rp2 = run("generate --fixture rp2");
    REQUIRE(rp2.code == 0);
    CHECK(run("quasi", rp2.out).out == "period 2\nconstituents 1; 0\n");
}

TEST_CASE("analyze")
{
    const auto r = run("--json analyze", kTriangle);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key :
         {"dimension", "vertices", "facets", "ridges", "betti", "torsion", "bridges", "connectivity", "coarboricity"})
        CHECK(j.contains(key));
    CHECK(j["dimension"] == 1);
    CHECK(j["coarboricity"] == 3);
    CHECK(j["connectivity"]["value"] == 2);

    const auto text = run("analyze", kTriangle);
    CHECK(text.code == 0);
    CHECK(text.out.find("coarboricity: 3") != std::string::npos);
}

TEST_CASE("constructions")
{
    const auto j = nlohmann::json::parse(run("--json construct --jaeger", kTriangle).out);
    CHECK(j["c"] == 3);
    CHECK(j["modulus"] == 8);
    CHECK(j["nowhere_zero"] == true);

    const auto s = nlohmann::json::parse(run("suspend", kTriangle).out);
    CHECK(s["facets"].size() == 6);
    const auto sub = nlohmann::json::parse(run("subdivide --facet 0", kTriangle).out);
    CHECK(sub["facets"].size() == 4);

    const auto out = scratch_dir() / "petersen.json";
    CHECK(run("generate --fixture petersen -o " + out.string()).code == 0);
    CHECK(fs::exists(out));
    CHECK(run("--json flows --q 5 " + out.string()).out == "{\"flows\":240,\"q\":5}\n");
}

TEST_CASE("sweep")
{
    const auto r = run("sweep --q-range 2..4 --csv", kTriangle);
    CHECK(r.code == 0);
    CHECK(r.out == "q,flows,colorings,tensions\n2,1,0,0\n3,2,6,2\n4,3,24,6\n");
}

TEST_CASE("exit codes")
{
    CHECK(run("flows", kTriangle).code == 1);
    CHECK(run("no-such-command").code == 1);
    CHECK(run("flows --q 3", R"({"facets": [[0, 1, 2], [0, 3]]})").code == 2);
    CHECK(run("flows --q 3", "{not json").code == 2);
    CHECK(run("subdivide --facet 9", kTriangle).code == 2);
    CHECK(run("flows --q 3 " + (scratch_dir() / "missing.json").string()).code == 2);

    const auto big = run("generate --fixture complete --n 8 --k 3");
    REQUIRE(big.code == 0);
    CHECK(run("flows --q 3 --method subsets", big.out).code == 3);
}
