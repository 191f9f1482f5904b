#include "radokit/io.hpp"
#include "radokit/replay.hpp"
#include "radokit/report.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace radokit;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& exe = RADOKIT_CLI)
{
    std::string cmd = "'" + exe + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0)
        out.append(buf, got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<Record> records(const std::string& out)
{
    std::vector<Record> recs;
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            recs.push_back(Record::parse(line));
    return recs;
}

const Record* find(const std::vector<Record>& recs, const std::string& key)
{
    for (const auto& r : recs)
        if (r.fields().front().first == key)
            return &r;
    return nullptr;
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("radokit-cli-" + std::to_string(::getpid())))
    {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string write_parity(const TempDir& dir, i64 n)
{
    auto path = dir.file("parity" + std::to_string(n) + ".col");
    auto col = Coloring::from_function(Window{1, n}, 2, [](i64 x) { return Color(x % 2 ? 1 : 2); });
    write_file(path, [&](std::ostream& o) { write_coloring(o, col); });
    return path;
}

}  // namespace

TEST(Cli, RadoCheck)
{
    auto yes = run("rado check 1,1,-1");
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out, "REGULAR I={1,3}\n");
    auto no = run("rado check 1,1,-3");
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "NOT-REGULAR\n");
    EXPECT_EQ(run("rado check -3,1,1").code, 1);
    EXPECT_EQ(run("rado check '2x1 - 2x2 + x3 = 0'").code, 0);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("").code, 64);
    EXPECT_EQ(run("rado check 1,0,-1").code, 64);
    EXPECT_EQ(run("rado number 1,1,-1 --colors 0").code, 64);
    EXPECT_EQ(run("rado frobnicate").code, 64);
    EXPECT_EQ(run("--format yaml rado check 1,1,-1").code, 64);
}

TEST(Cli, NumberWithRecordsRoundTrip)
{
    auto r = run("--format records rado number 1,1,-1 --colors 2");
    ASSERT_EQ(r.code, 0);
    auto recs = records(r.out);
    const Record* res = find(recs, "status");
    ASSERT_NE(res, nullptr) << r.out;
    auto parsed = rado_number_from_record(*res);
    EXPECT_EQ(parsed.status, SearchStatus::found);
    EXPECT_EQ(parsed.n_star, 5);
    const Record* w = find(recs, "witness_n");
    ASSERT_NE(w, nullptr);
    EXPECT_EQ(w->at("colors"), "1,2,2,1");
}

TEST(Cli, NumberHumanAndBudget)
{
    auto r = run("rado number 1,1,-1 --colors 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("n*=14"), std::string::npos);
    EXPECT_EQ(run("rado number 1,1,-1 --colors 3 --max-nodes 3").code, 2);
    auto dist = run("rado number 1,1,-2 --distinct");
    EXPECT_NE(dist.out.find("n*=9"), std::string::npos);
}

TEST(Cli, WitnessWritesVerifiableColoring)
{
    TempDir dir;
    auto path = dir.file("w.col");
    auto r = run("rado witness 1,1,-3 --upto 400 --out '" + path + "'");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("5"), std::string::npos);
    std::ifstream in(path);
    auto col = read_coloring(in);
    EXPECT_EQ(col.window().hi, 400);
    EXPECT_FALSE(verify_no_mono_solution(LinearEquation{1, 1, -3}, col, false));

    EXPECT_EQ(run("rado witness 1,1,-3 --upto 100 --prime 3").code, 3);
    EXPECT_EQ(run("rado witness 1,1,-1 --upto 100").code, 1);
}

TEST(Cli, AvoidAndSolve)
{
    TempDir dir;
    auto path = dir.file("a.col");
    auto r = run("rado avoid 1,1,-1 --colors 2 --upto 4 --out '" + path + "'");
    ASSERT_EQ(r.code, 0);
    std::ifstream in(path);
    EXPECT_EQ(read_coloring(in).colors(), (std::vector<Color>{1, 2, 2, 1}));
    EXPECT_EQ(run("rado avoid 1,1,-1 --colors 2 --upto 5").code, 1);

    auto s = run("--format records rado solve 2,-2,1 --coloring '" + write_parity(dir, 100) + "'");
    ASSERT_EQ(s.code, 0);
    auto recs = records(s.out);
    const Record* sol = find(recs, "assignment");
    ASSERT_NE(sol, nullptr) << s.out;
    auto m = solution_from_record(*sol);
    EXPECT_EQ(m.assignment, (std::vector<i64>{2, 4, 4}));
    const Record* input = find(recs, "input");
    ASSERT_NE(input, nullptr);
    EXPECT_EQ(input->at("digest").size(), 16u);
}

TEST(Cli, MissingFileIsOperationalFailure)
{
    EXPECT_EQ(run("rado solve 1,1,-1 --coloring /nonexistent/x.col").code, 3);
}

TEST(Cli, SetsCommands)
{
    TempDir dir;
    auto path = dir.file("odd.set");
    auto odds = IntSet::from_predicate(Window{1, 30}, [](i64 n) { return n % 2 == 1; });
    write_file(path, [&](std::ostream& o) { write_intset(o, odds); });

    auto stats = run("--format records sets stats '" + path + "' --lengths 10,30");
    ASSERT_EQ(stats.code, 0);
    auto recs = records(stats.out);
    const Record* gap = find(recs, "max_gap");
    ASSERT_NE(gap, nullptr) << stats.out;
    EXPECT_EQ(gap_stat_from_record(*gap).max_gap, 2);
    int dens = 0;
    for (const auto& rec : recs)
        if (rec.fields().front().first == "n") {
            auto d = density_from_record(rec);
            EXPECT_EQ(d.ratio, Rational(1, 2));
            ++dens;
        }
    EXPECT_EQ(dens, 2);

    auto delta = run("sets delta '" + path + "'");
    EXPECT_EQ(delta.code, 0);
    EXPECT_NE(delta.out.find("Delta: 2 4 6"), std::string::npos);

    // y - x and z - y odd force z - x even
    EXPECT_EQ(run("sets clique '" + path + "' --size 3").code, 1);
    auto full = dir.file("full.set");
    write_file(full, [&](std::ostream& o) { write_intset(o, IntSet::full(Window{1, 20})); });
    auto clique = run("sets clique '" + full + "' --size 4");
    EXPECT_EQ(clique.code, 0);
    EXPECT_EQ(clique.out, "X = {1,2,3,4}\n");
}

TEST(Cli, ReplayThreeVarAndFinale)
{
    TempDir dir;
    auto col = write_parity(dir, 200);
    auto trace = dir.file("t.trace");
    auto r = run("replay finale 2,-2,1 --coloring '" + col + "' --trace '" + trace + "'");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("(2,4,4)"), std::string::npos);
    std::ifstream in(trace);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(assignment_from_trace(PipelineTrace::parse(ss.str())), (std::vector<i64>{2, 4, 4}));

    EXPECT_EQ(run("replay finale 1,1,-3 --coloring '" + col + "'").code, 1);
    EXPECT_EQ(run("replay three-var --c 1 --d 1 --coloring '" + write_parity(dir, 40) + "'").out.find("(4,2,2)") !=
                  std::string::npos,
              true);

    auto tiny = dir.file("tiny.col");
    write_file(tiny, [&](std::ostream& o) { write_coloring(o, Coloring(Window{1, 3}, 3, {1, 2, 3})); });
    EXPECT_EQ(run("replay three-var --c 1 --d 1 --coloring '" + tiny + "'").code, 3);
    EXPECT_EQ(run("replay three-var --c 1 --d 1 --coloring '" + tiny + "' --fallback direct").code, 1);
}

TEST(Cli, VerifyPropsIsDeterministic)
{
    auto a = run("verify props --seed 0 --trials 10");
    auto b = run("verify props --seed 0 --trials 10");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("summary=pass"), std::string::npos);
    auto bad = run("verify props --seed 0 --trials 3 --inject-failure");
    EXPECT_NE(bad.code, 0);
    EXPECT_NE(bad.out.find("status=fail"), std::string::npos);
}

TEST(Cli, SymlinkNamesSelectTheGroup)
{
    auto link = fs::path(RADOKIT_CLI).parent_path() / "rado";
    ASSERT_TRUE(fs::exists(link));
    auto r = run("check 1,1,-1", link.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "REGULAR I={1,3}\n");
}
