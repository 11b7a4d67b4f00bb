#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "trideg/cli.hpp"

using namespace trideg;
using namespace trideg::testing;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus_path(const std::string& name) {
    return std::string(TRIDEG_CORPUS_DIR) + "/" + name + ".json";
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

} // namespace

TEST_CASE("analyze emits a stable JSON report") {
    const CliResult r = cli({"analyze", corpus_path("type_IV_222")});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["tool"] == "trideg");
    CHECK(j["trk"] == 2);
    CHECK(j["det_zero"] == false);
    CHECK(j["concise"] == true);
    CHECK(j["canonical_type"] == "IV");
    // Stable key order: the same document serializes identically.
    const CliResult again = cli({"analyze", corpus_path("type_IV_222")});
    CHECK(again.out == r.out);
}

TEST_CASE("analyze honors file hints and exposes certificates") {
    const CliResult r = cli({"analyze", corpus_path("example_3_11")});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["degenerate"]["status"] == "degenerate-with-certificate");
    REQUIRE(j["degenerate"].contains("certificate"));
    CHECK(j["degenerate"]["certificate"]["z"] == Json::array({"0", "1", "1", "0"}));
}

TEST_CASE("analyze accepts command-line hints and a text mode") {
    // Strip the file hints to show the flag path does the work.
    const TensorDocument doc = load_corpus("example_3_11");
    TensorDocument bare{doc.tensor, "", "", {}};
    const std::string path = write_temp("cli_hints.json", serialize_tensor_document(bare).dump());
    const CliResult undecided = cli({"analyze", path});
    CHECK(Json::parse(undecided.out)["degenerate"]["status"] == "undetermined");
    const CliResult hinted = cli({"analyze", path, "--hint", "z:0,1,1,0"});
    CHECK(Json::parse(hinted.out)["degenerate"]["status"] == "degenerate-with-certificate");

    const CliResult text = cli({"analyze", path, "--hint", "z:0,1,1,0", "--text"});
    CHECK(text.code == 0);
    CHECK(text.out.find("degenerate: degenerate-with-certificate") != std::string::npos);
}

TEST_CASE("scheme diagnosis output") {
    const CliResult r =
        cli({"scheme", corpus_path("example_3_10"), "--axis", "z", "--point", "1,1,0,-1"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["bidegenerate"] == true);
    CHECK(j["rank_at"] == 1);

    const CliResult r2 =
        cli({"scheme", corpus_path("example_3_11"), "--axis", "z", "--point", "0,1,1,0"});
    const Json j2 = Json::parse(r2.out);
    CHECK(j2["degenerate"] == true);
    CHECK(j2["bidegenerate"] == false);
}

TEST_CASE("hyperdet values") {
    CHECK(cli({"hyperdet", corpus_path("type_IV_222")}).out == "1\n");
    CHECK(cli({"hyperdet", corpus_path("type_III_222")}).out == "0\n");
}

TEST_CASE("exit codes are a stable contract") {
    // 2: malformed document.
    const std::string bad = write_temp("cli_bad.json", R"({"shape": [2,2], "entries": []})");
    CHECK(cli({"analyze", bad}).code == 2);
    const std::string ragged =
        write_temp("cli_ragged.json", R"({"shape": [2,2,2], "entries": [[[1,0],[0,0]]]})");
    CHECK(cli({"analyze", ragged}).code == 2);

    // 2: zero point for the scheme command.
    CHECK(cli({"scheme", corpus_path("example_3_10"), "--axis", "z", "--point", "0,0,0,0"}).code == 2);

    // 3: the zero tensor.
    const std::string zero =
        write_temp("cli_zero.json", R"({"shape": [2,2,2], "entries": [[[0,0],[0,0]],[[0,0],[0,0]]]})");
    CHECK(cli({"analyze", zero}).code == 3);

    // 4: hyperdeterminant out of range.
    Tensor3 t335(3, 3, 5);
    t335.set(0, 0, 0, Rational(1));
    const std::string f335 = write_temp("cli_335.json", serialize_tensor_document({t335, "", "", {}}).dump());
    const CliResult r = cli({"hyperdet", f335});
    CHECK(r.code == 4);
    CHECK(r.err.find("r <= p+q-1") != std::string::npos);

    // 2: unknown file.
    CHECK(cli({"analyze", "/nonexistent/nope.json"}).code == 2);
}

TEST_CASE("document round trip is the identity on the corpus") {
    for (const char* name : {"type_I_222", "type_III_222", "type_Va_223", "concise_224",
                             "remark_2_3", "example_3_10", "example_3_11"}) {
        const TensorDocument doc = load_corpus(name);
        const Json once = serialize_tensor_document(doc);
        const TensorDocument reparsed = parse_tensor_document(once);
        CHECK(reparsed.tensor == doc.tensor);
        CHECK(reparsed.hints.size() == doc.hints.size());
        for (std::size_t i = 0; i < doc.hints.size(); ++i) {
            CHECK(reparsed.hints[i].first == doc.hints[i].first);
            CHECK(reparsed.hints[i].second == doc.hints[i].second);
        }
        CHECK(serialize_tensor_document(reparsed) == once);
    }
}

TEST_CASE("rational entries survive the document format") {
    const std::string path = write_temp(
        "cli_rat.json", R"({"shape": [2,2,2], "entries": [[["1/2",0],[0,0]],[[0,0],[0,"-3/4"]]]})");
    const CliResult r = cli({"analyze", path});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["trk"] == 2);
}
