#include "motzkin/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = motzkin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

const std::string fixtures_dir = MOTZKIN_FIXTURES_DIR;

// scratch file helper for fault-injection fixtures
class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        path_ = std::filesystem::temp_directory_path() /
                ("motzkin_test_" + std::to_string(counter_++) + ".txt");
        std::ofstream f(path_);
        f << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("triangle motzkin rows") {
    const CliResult r = run_cli({"triangle", "--kind", "motzkin", "--max-n", "3"});
    CHECK(r.code == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"1", "1 1", "1 2 2", "1 3 5 4"});
}

TEST_CASE("triangle extended rows") {
    const CliResult r = run_cli({"triangle", "--kind", "extended", "--max-n", "1"});
    CHECK(r.code == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"1 0 -1", "1 1 0 -1 -1"});
}

TEST_CASE("triangle row lengths") {
    const CliResult m = run_cli({"triangle", "--kind", "motzkin", "--max-n", "6"});
    const auto mrows = lines_of(m.out);
    REQUIRE(mrows.size() == 7);
    for (std::size_t n = 0; n < mrows.size(); ++n) {
        std::istringstream in(mrows[n]);
        std::string tok;
        std::size_t count = 0;
        while (in >> tok) ++count;
        CHECK(count == n + 1);
    }
    const CliResult e = run_cli({"triangle", "--kind", "extended", "--max-n", "6"});
    const auto erows = lines_of(e.out);
    REQUIRE(erows.size() == 7);
    for (std::size_t n = 0; n < erows.size(); ++n) {
        std::istringstream in(erows[n]);
        std::string tok;
        std::size_t count = 0;
        while (in >> tok) ++count;
        CHECK(count == 2 * n + 3);
    }
}

TEST_CASE("triangle other kinds") {
    CHECK(lines_of(run_cli({"triangle", "--kind", "pascal", "--max-n", "4"}).out).back() ==
          "1 4 6 4 1");
    CHECK(lines_of(run_cli({"triangle", "--kind", "trinomial", "--max-n", "2"}).out).back() ==
          "1 2 3 2 1");
    CHECK(lines_of(run_cli({"triangle", "--kind", "catalan-variant", "--max-n", "2"}).out).back() ==
          "1 1 -1 -1");
    const CliResult g =
        run_cli({"triangle", "--kind", "general", "--coeffs", "1,1,1", "--max-n", "2"});
    const CliResult e = run_cli({"triangle", "--kind", "extended", "--max-n", "2"});
    CHECK(g.out == e.out);
}

TEST_CASE("triangle rejects invalid specs") {
    const CliResult bad = run_cli({"triangle", "--kind", "general", "--coeffs", "1,2,3",
                                   "--max-n", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("palindromic") != std::string::npos);

    CHECK(run_cli({"triangle", "--kind", "general", "--coeffs", "1,1", "--max-n", "2"}).code == 2);
    CHECK(run_cli({"triangle", "--kind", "general", "--max-n", "2"}).code == 2);
    CHECK(run_cli({"triangle", "--kind", "general", "--coeffs", "1,x,1", "--max-n", "2"}).code ==
          2);
    CHECK(run_cli({"triangle", "--kind", "nonsense", "--max-n", "2"}).code == 2);
    CHECK(run_cli({"triangle", "--kind", "motzkin"}).code == 2);  // --max-n required
}

TEST_CASE("records format emits one JSON object per row") {
    const CliResult r =
        run_cli({"triangle", "--kind", "motzkin", "--max-n", "2", "--format", "records"});
    CHECK(r.code == 0);
    const auto rows = lines_of(r.out);
    REQUIRE(rows.size() == 3);
    const nlohmann::json row2 = nlohmann::json::parse(rows[2]);
    CHECK(row2["kind"] == "motzkin");
    CHECK(row2["n"] == 2);
    CHECK(row2["row"] == nlohmann::json::array({"1", "2", "2"}));
}

TEST_CASE("verify theorem1") {
    const CliResult r = run_cli({"verify", "theorem1", "--max-n", "50"});
    CHECK(r.code == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"51/51 pass"});
}

TEST_CASE("verify theorem2") {
    const CliResult r = run_cli({"verify", "theorem2", "--max-s", "30", "--max-d", "5"});
    CHECK(r.code == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"150/150 pass"});
}

TEST_CASE("verify general") {
    const CliResult r = run_cli({"verify", "general", "--coeffs", "1,1,1", "--max-n", "10"});
    CHECK(r.code == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"11/11 pass"});
    CHECK(run_cli({"verify", "general", "--max-n", "10"}).code == 2);  // --coeffs required
}

TEST_CASE("verify pascal-analogy and term-bridge") {
    CHECK(run_cli({"verify", "pascal-analogy", "--max-n", "60"}).code == 0);
    const CliResult r = run_cli({"verify", "term-bridge", "--max-k", "40", "--max-d", "6"});
    CHECK(r.code == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{"246/246 pass"});  // 41*6
}

TEST_CASE("verify rejects unknown identities") {
    const CliResult r = run_cli({"verify", "theorem3"});
    CHECK(r.code == 2);
}

TEST_CASE("verify records mode matches plain verdict") {
    const CliResult rec =
        run_cli({"verify", "theorem1", "--max-n", "12", "--format", "records"});
    CHECK(rec.code == 0);
    const auto records = lines_of(rec.out);
    REQUIRE(records.size() == 13);
    for (const auto& line : records) {
        const nlohmann::json j = nlohmann::json::parse(line);
        CHECK(j["identity"] == "theorem1");
        CHECK(j["equal"] == true);
        CHECK(j["values"].size() == 3);
        CHECK(j["params"].contains("n"));
    }
    CHECK(run_cli({"verify", "theorem1", "--max-n", "12"}).code == 0);
}

TEST_CASE("cores command") {
    const CliResult r31 = run_cli({"cores", "--s", "3", "--d", "1"});
    CHECK(r31.code == 0);
    CHECK(lines_of(r31.out) == std::vector<std::string>{"count=4 formula=4 triangle=4 consistent"});

    const CliResult r32 = run_cli({"cores", "--s", "3", "--d", "2"});
    CHECK(r32.code == 0);
    CHECK(lines_of(r32.out) == std::vector<std::string>{"count=6 formula=6 triangle=6 consistent"});

    const CliResult bad = run_cli({"cores", "--s", "4", "--d", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("coprime") != std::string::npos);
}

TEST_CASE("cores by-size and records") {
    const CliResult r = run_cli({"cores", "--s", "3", "--d", "2", "--by-size"});
    CHECK(r.code == 0);
    CHECK(lines_of(r.out) == std::vector<std::string>{
              "size 0: 1", "size 1: 1", "size 2: 2", "size 4: 2",
              "count=6 formula=6 triangle=6 consistent"});

    const CliResult rec = run_cli({"cores", "--s", "5", "--d", "2", "--format", "records"});
    CHECK(rec.code == 0);
    const nlohmann::json j = nlohmann::json::parse(lines_of(rec.out).at(0));
    CHECK(j["identity"] == "conjecture");
    CHECK(j["values"]["count"] == "38");
    CHECK(j["equal"] == true);
}

TEST_CASE("compare against committed fixtures") {
    for (const std::string seq : {"problem-lhs", "motzkin-row-concat", "trinomial-row-concat"}) {
        const CliResult r = run_cli({"compare", seq, "--fixtures", fixtures_dir});
        INFO(seq << ": " << r.err);
        CHECK(r.code == 0);
        CHECK(r.out.find("indices match") != std::string::npos);
    }
}

TEST_CASE("compare against an empty b-file is a vacuous pass") {
    const TempFile empty("# nothing here\n");
    const CliResult r = run_cli({"compare", "problem-lhs", "--bfile", empty.path()});
    CHECK(r.code == 0);
    CHECK(r.out.find("warning") != std::string::npos);
}

TEST_CASE("compare detects a corrupted value") {
    const TempFile corrupted("0 0\n1 1\n2 6\n3 39\n4 256\n");
    const CliResult r = run_cli({"compare", "problem-lhs", "--bfile", corrupted.path()});
    CHECK(r.code == 1);
    CHECK(r.out.find("mismatch at index 3") != std::string::npos);
    CHECK(r.out.find("fixture=39") != std::string::npos);
    CHECK(r.out.find("computed=38") != std::string::npos);
}

TEST_CASE("compare propagates parse errors as input errors") {
    const TempFile malformed("0 0\noops\n");
    const CliResult r = run_cli({"compare", "problem-lhs", "--bfile", malformed.path()});
    CHECK(r.code == 2);
    CHECK(r.err.find(":2") != std::string::npos);

    CHECK(run_cli({"compare", "problem-lhs", "--bfile", "/no/such/file"}).code == 2);
    CHECK(run_cli({"compare", "unknown-seq", "--fixtures", fixtures_dir}).code == 2);
}

TEST_CASE("compare records mode") {
    const TempFile small("0 0\n1 1\n2 6\n");
    const CliResult r =
        run_cli({"compare", "problem-lhs", "--bfile", small.path(), "--format", "records"});
    CHECK(r.code == 0);
    const auto records = lines_of(r.out);
    REQUIRE(records.size() == 3);
    const nlohmann::json j = nlohmann::json::parse(records[2]);
    CHECK(j["identity"] == "compare-problem-lhs");
    CHECK(j["values"]["fixture"] == "6");
    CHECK(j["values"]["computed"] == "6");
}

TEST_CASE("usage basics") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"triangle", "--help"}).code == 0);
}
