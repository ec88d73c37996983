#include <gtest/gtest.h>
#include <httplib.h>

#include <filesystem>
#include <sstream>
#include <thread>

#include "hopf4d/cli.hpp"
#include "hopf4d/scene.hpp"

using namespace hopf4d;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Outcome r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("hopf4d_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

std::size_t constellation_points(const SceneDocument& doc, Space space) {
  std::size_t n = 0;
  for (const auto& o : doc.objects) {
    const auto role = o.meta.find("role");
    if (o.space == space && role != o.meta.end() && std::get<std::string>(role->second) == "constellation") {
      n += o.vertices.size();
    }
  }
  return n;
}

}  // namespace

TEST_F(CliTest, FiberWritesScene) {
  const Outcome r = run({"fiber", "--phi", "0.3", "--psi", "1.2", "--out", path("scene.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  const SceneDocument doc = read_scene(read_file(path("scene.json")));
  EXPECT_EQ(doc.objects.size(), 7u);
}

TEST_F(CliTest, FiberToStandardOutput) {
  const Outcome r = run({"fiber", "--phi", "0.3", "--psi", "1.2", "--samples", "16"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, write_scene(build_scene(FiberRequest{0.3, 1.2, 16})));
}

TEST_F(CliTest, DegenerateTorusIsDomainError) {
  const Outcome r = run({"torus", "--mode", "kappa", "--psi", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("DegenerateTorus"), std::string::npos) << r.err;
}

TEST_F(CliTest, ModulationTetrakis) {
  const Outcome r = run({"modulation", "--poly", "tetrakis", "--m", "8", "--out", path("c.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const SceneDocument doc = read_scene(read_file(path("c.json")));
  EXPECT_EQ(constellation_points(doc, Space::xi), 112u);
  EXPECT_EQ(constellation_points(doc, Space::omega), 112u);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"teapot"}).code, 1);
  EXPECT_EQ(run({"fiber", "--phi", "0.3"}).code, 1);
  EXPECT_EQ(run({"fiber", "--phi", "x", "--psi", "1"}).code, 1);
  EXPECT_EQ(run({"torus", "--mode", "kappa", "--phi", "1"}).code, 1);
  EXPECT_EQ(run({"torus", "--mode", "donut", "--psi", "1"}).code, 1);
  EXPECT_EQ(run({"torus", "--mode", "kappa", "--psi", "1", "--grid", "96by96"}).code, 1);
  EXPECT_EQ(run({"nested", "--family", "z", "--beta-window"}).code, 1);
  EXPECT_EQ(run({"modulation", "--poly", "blob", "--m", "8"}).code, 1);
  EXPECT_EQ(run({"export", "--in", path("missing.json"), "--space", "xi"}).code, 1);
  EXPECT_EQ(run({"export", "--in", path("missing.json"), "--space", "xi", "--format", "stl"}).code, 1);
  EXPECT_EQ(run({"fiber", "--phi", "0", "--psi", "5"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, DomainErrors) {
  EXPECT_EQ(run({"fiber", "--phi", "0", "--psi", "1", "--samples", "2"}).code, 2);
  EXPECT_EQ(run({"modulation", "--poly", "cube", "--m", "0"}).code, 2);
  EXPECT_EQ(run({"packing", "--poly", "octahedron", "--radius", "1.0"}).code, 2);
  EXPECT_EQ(run({"nested", "--family", "xy", "--count", "1"}).code, 2);
}

TEST_F(CliTest, NestedIsByteIdentical) {
  ASSERT_EQ(run({"nested", "--family", "xy", "--count", "12", "--grid", "24x24", "--out", path("a.json")}).code, 0);
  ASSERT_EQ(run({"nested", "--family", "xy", "--count", "12", "--grid", "24x24", "--out", path("b.json")}).code, 0);
  EXPECT_EQ(read_file(path("a.json")), read_file(path("b.json")));
}

TEST_F(CliTest, ExportObj) {
  ASSERT_EQ(run({"torus", "--mode", "kappa", "--psi", "1.5707963267948966", "--out", path("t.json")}).code, 0);
  const Outcome r = run({"export", "--in", path("t.json"), "--space", "xi", "--format", "obj", "--out", path("t.obj")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(read_file(path("t.obj")));
  std::size_t v = 0;
  std::size_t f = 0;
  for (std::string line; std::getline(in, line);) {
    v += line.starts_with("v ");
    f += line.starts_with("f ");
  }
  EXPECT_EQ(v, 9216u);
  EXPECT_EQ(f, 9216u);
}

TEST_F(CliTest, LiftAndArcsFromFiles) {
  write_file_atomic(path("curve.csv"), "phi,psi\n0,0.5\n0.5,0.9\n1.0,1.3\n");
  const Outcome lift = run({"lift", "--curve", path("curve.csv"), "--n-beta", "16", "--out", path("l.json")});
  EXPECT_EQ(lift.code, 0) << lift.err;
  write_file_atomic(path("arcs.json"), R"({"arcs":[{"center":[0,0],"radius":1.5,"start":0,"sweep":6.283185307179586}]})");
  const Outcome arcs = run({"arcs", "--spec", path("arcs.json"), "--n-beta", "16", "--out", path("s.json")});
  EXPECT_EQ(arcs.code, 0) << arcs.err;
  write_file_atomic(path("gap.json"), R"([{"center":[0,0],"radius":1,"start":0,"sweep":1},
                                          {"center":[5,0],"radius":1,"start":0,"sweep":1}])");
  EXPECT_EQ(run({"arcs", "--spec", path("gap.json")}).code, 2);
  write_file_atomic(path("bad.csv"), "0,0.5\nnope\n");
  EXPECT_EQ(run({"lift", "--curve", path("bad.csv")}).code, 1);
}

TEST_F(CliTest, PackingScene) {
  const Outcome r = run({"packing", "--poly", "icosahedron", "--samples", "32"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NO_THROW(read_scene(r.out));
}

TEST_F(CliTest, VerifySuite) {
  const Outcome r = run({"verify", "--suite", "prop1"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS prop1"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 1);
}

TEST(SceneService, HandlerReplies) {
  const cli::HttpReply ok = cli::handle_scene_request(R"({"type":"fiber","phi":0.3,"psi":1.2,"samples":16})");
  EXPECT_EQ(ok.status, 200);
  EXPECT_EQ(ok.body, write_scene(build_scene(FiberRequest{0.3, 1.2, 16})));
  const cli::HttpReply degenerate = cli::handle_scene_request(R"({"type":"torus","mode":"kappa","psi":0})");
  EXPECT_EQ(degenerate.status, 422);
  EXPECT_NE(degenerate.body.find("\"error\":\"DegenerateTorus\""), std::string::npos) << degenerate.body;
  const cli::HttpReply malformed = cli::handle_scene_request("{");
  EXPECT_EQ(malformed.status, 422);
  EXPECT_NE(malformed.body.find("ParseError"), std::string::npos);
}

TEST(SceneService, ServesOverLoopback) {
  cli::SceneServer server;
  const int port = server.bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread worker([&] { server.listen(); });
  httplib::Client client("127.0.0.1", port);
  const auto ok = client.Post("/scene", R"({"type":"fiber","phi":0.3,"psi":1.2,"samples":16})", "application/json");
  const auto bad = client.Post("/scene", R"({"type":"torus","mode":"kappa","psi":0})", "application/json");
  server.stop();
  worker.join();
  ASSERT_TRUE(ok);
  EXPECT_EQ(ok->status, 200);
  EXPECT_EQ(read_scene(ok->body).objects.size(), 7u);
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 422);
}
