#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kTool = DEPTHLAB_CLI_PATH;

fs::path work_dir() {
    auto dir = fs::temp_directory_path() / "depthlab_cli_test";
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    std::string cmd = kTool + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

int run_capture(const std::string& args, std::string& output) {
    auto out_file = work_dir() / "stdout.txt";
    std::string cmd = kTool + " " + args + " > " + out_file.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    output = buf.str();
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gen is deterministic and validates") {
    auto dir = work_dir();
    auto a = dir / "a.txt";
    auto b = dir / "b.txt";
    CHECK(run("gen --model gnp --n 30 --p 0.2 --seed 5 --out " + a.string()) == 0);
    CHECK(run("gen --model gnp --n 30 --p 0.2 --seed 5 --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(run("gen --model gnp --n 30 --p 0.2 --seed 6 --out " + b.string()) == 0);
    CHECK(slurp(a) != slurp(b));

    CHECK(run("gen --model regular --n 5 --d 3 --seed 1") == 2);  // n*d odd
    CHECK(run("gen --model nosuch --n 5") == 2);
    CHECK(run("gen") == 2);  // missing required --model
}

TEST_CASE("solve td and tw on generated graphs") {
    auto dir = work_dir();
    auto tree = dir / "tree.txt";
    REQUIRE(run("gen --model tree --k 9 --seed 3 --out " + tree.string()) == 0);

    std::string out;
    CHECK(run_capture("solve --param td " + tree.string() + " --witness " +
                          (dir / "forest.txt").string(),
                      out) == 0);
    CHECK(out.find("value=") != std::string::npos);
    CHECK(out.find("method=exact") != std::string::npos);
    CHECK(fs::exists(dir / "forest.txt"));

    CHECK(run_capture("solve --param tw " + tree.string(), out) == 0);
    CHECK(out.find("value=1") != std::string::npos);  // trees have width 1

    CHECK(run_capture("solve --param td --mode bounds " + tree.string(), out) == 0);
    CHECK(out.find("lower=") != std::string::npos);
    CHECK(out.find("upper=") != std::string::npos);

    CHECK(run("solve --param td " + (dir / "missing.txt").string()) == 2);
    CHECK(run("solve --param xx " + tree.string()) == 2);
}

TEST_CASE("census, expand, separate") {
    auto dir = work_dir();
    auto graph = dir / "k4.txt";
    {
        std::ofstream out(graph);
        out << "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    }
    std::string out;
    CHECK(run_capture("census " + graph.string(), out) == 0);
    CHECK(out.find("# schema=1") != std::string::npos);
    CHECK(out.find("4,2,1") != std::string::npos);  // one (4,2) component

    CHECK(run_capture("expand " + graph.string(), out) == 0);
    CHECK(out.find("phi=0.666667") != std::string::npos);
    CHECK(out.find("alpha=1") != std::string::npos);
    CHECK(out.find("lambda2=") != std::string::npos);

    CHECK(run_capture("separate --k 1 " + graph.string(), out) == 0);
    CHECK(out.find("found=false") != std::string::npos);
    CHECK(out.find("certified=absent") != std::string::npos);

    auto path = dir / "p7.txt";
    {
        std::ofstream o(path);
        o << "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n";
    }
    CHECK(run_capture("separate --k 1 " + path.string(), out) == 0);
    CHECK(out.find("found=true") != std::string::npos);

    // Disconnected input: the cheeger constant is rejected as degenerate.
    auto disc = dir / "disc.txt";
    {
        std::ofstream o(disc);
        o << "4 2\n0 1\n2 3\n";
    }
    CHECK(run("expand " + disc.string()) == 2);
}

TEST_CASE("experiment runs a config file deterministically") {
    auto dir = work_dir();
    auto cfg = dir / "exp.cfg";
    auto csv1 = dir / "r1.csv";
    auto csv2 = dir / "r2.csv";
    {
        std::ofstream out(cfg);
        out << "regime = sparse_crit\nn = 60, 120\nc = 1.0\ntrials = 3\nseed = 9\n"
            << "workers = 2\nout = " << csv1.string() << "\n"
            << "census_out = " << (dir / "census.csv").string() << "\n";
    }
    CHECK(run("experiment " + cfg.string()) == 0);
    {
        std::ofstream out(cfg);
        out << "regime = sparse_crit\nn = 60, 120\nc = 1.0\ntrials = 3\nseed = 9\n"
            << "workers = 1\nout = " << csv2.string() << "\n"
            << "census_out = " << (dir / "census2.csv").string() << "\n";
    }
    CHECK(run("experiment " + cfg.string()) == 0);
    CHECK(slurp(csv1) == slurp(csv2));
    CHECK(slurp(dir / "census.csv") == slurp(dir / "census2.csv"));
    CHECK(slurp(csv1).rfind("# schema=1\n", 0) == 0);

    {
        std::ofstream out(cfg);
        out << "regime = dense\nn = 12, 8\np = 0.5\ntrials = 1\nout = x.csv\n";
    }
    CHECK(run("experiment " + cfg.string()) == 2);  // unsorted n values
    CHECK(run("experiment " + (dir / "nope.cfg").string()) == 2);
}

TEST_CASE("verify battery") {
    CHECK(run("verify --seed 1 --count 40") == 0);
}

TEST_SUITE_END();
