// End-to-end checks of the command line tool: exit codes and outputs for
// every fixture case, run through the real binary.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_command(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

RunResult run(const std::string& args) {
    return run_command(std::string(GEOCYCLE_BIN) + " " + args);
}

std::string fixture(const std::string& name) {
    return std::string(GEOCYCLE_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("check: answers and exit codes per fixture") {
    auto res = run("check " + fixture("pentagram.json") + " --target c5 --oracle");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("target c5: yes") != std::string::npos);
    CHECK(res.output.find("oracle agreement: yes") != std::string::npos);

    CHECK(run("check " + fixture("crossed_c4.json") + " --target c4").exit_code == 0);
    CHECK(run("check " + fixture("crossed_c4.json") + " --target c3").exit_code == 1);
    CHECK(run("check " + fixture("plane_c5.json") + " --target c3").exit_code == 0);
    CHECK(run("check " + fixture("heptagram.json") + " --target c5").exit_code == 1);
    CHECK(run("check " + fixture("heptagram.json") + " --target k5").exit_code == 1);
    CHECK(run("check " + fixture("k5.json") + " --target k5").exit_code == 0);

    res = run("check " + fixture("crossed_c4.json") + " --target c5 --json");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("\"answer\": \"no\"") != std::string::npos);
}

TEST_CASE("check: input errors exit 2, budget exits 3") {
    CHECK(run("check /no/such/file.json --target c3").exit_code == 2);
    CHECK(run("check " + fixture("collinear.json") + " --target c3").exit_code == 2);
    CHECK(run("check " + fixture("float_coord.json") + " --target c3").exit_code == 2);
    auto res = run("check " + fixture("isolated.json") + " --target c5");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("isolated") != std::string::npos);
    // isolated vertices are fine for the k5 target
    CHECK(run("check " + fixture("isolated.json") + " --target k5").exit_code == 0);

    CHECK(run("check " + fixture("heptagram.json") + " --target c5 --budget 50").exit_code == 3);
    CHECK(run_command("GEOCYCLE_BUDGET=50 " + std::string(GEOCYCLE_BIN) + " check " +
                      fixture("heptagram.json") + " --target c5")
              .exit_code == 3);
}

TEST_CASE("ex: crossing structure dumps") {
    auto res = run("ex " + fixture("pentagram.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("5 vertices, 5 crossings") != std::string::npos);
    CHECK(res.output.find("internal crossing: yes") != std::string::npos);

    res = run("ex " + fixture("plane_c4.json"));
    CHECK(res.output.find("4 vertices, 0 crossings") != std::string::npos);

    res = run("ex " + fixture("crossed_c4.json") + " --json");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"crossing_subgraph\": {\"vertices\": 4, \"edges\": 2}") !=
          std::string::npos);
}

TEST_CASE("poset: class counts and chain verdicts") {
    auto res = run("poset c4 --trials 600 --seed 0");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("observed classes: 2") != std::string::npos);
    CHECK(res.output.find("chain") != std::string::npos);
}

TEST_CASE("verify and render round trip") {
    std::string cert = "/tmp/geocycle_test_cert.json";
    std::string svg = "/tmp/geocycle_test_out.svg";

    auto res = run("check " + fixture("pentagram.json") + " --target c5 --cert-out " + cert);
    REQUIRE(res.exit_code == 0);
    CHECK(run("verify " + fixture("pentagram.json") + " " + cert).exit_code == 0);
    // the plane C5 maps into the convex one, so the same labels still verify
    CHECK(run("verify " + fixture("plane_c5.json") + " " + cert).exit_code == 0);
    // a drawing with different vertex ids cannot resolve the certificate
    CHECK(run("verify " + fixture("triangle.json") + " " + cert).exit_code == 2);

    // a tampered certificate is rejected
    std::ifstream in(cert);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    auto pos = text.find("\"map\"");
    REQUIRE(pos != std::string::npos);
    std::string broken = text;
    // map every vertex to target vertex "0"
    for (const char* digit : {"\"1\"", "\"2\"", "\"3\"", "\"4\""}) {
        std::size_t at;
        while ((at = broken.find(std::string(": ") + digit, pos)) != std::string::npos)
            broken.replace(at, 5, ": \"0\"");
    }
    std::ofstream out("/tmp/geocycle_test_cert_broken.json");
    out << broken;
    out.close();
    CHECK(run("verify " + fixture("pentagram.json") + " /tmp/geocycle_test_cert_broken.json")
              .exit_code == 1);

    CHECK(run("render " + fixture("pentagram.json") + " " + svg + " --overlay " + cert)
              .exit_code == 0);
    std::ifstream svg_in(svg);
    std::string svg_text((std::istreambuf_iterator<char>(svg_in)),
                         std::istreambuf_iterator<char>());
    CHECK(svg_text.find("<svg") != std::string::npos);
    CHECK(svg_text.find("&#8594;") != std::string::npos);
}
