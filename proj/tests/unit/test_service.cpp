#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "sia/model/examples.hpp"
#include "sia/service/server.hpp"

using namespace sia;
using namespace sia::service;

namespace {

struct Running {
  explicit Running(ServiceConfig cfg) : server(cfg) {
    port = server.bind();
    thread = std::thread([this] { server.listen(); });
    client = std::make_unique<httplib::Client>("127.0.0.1", port);
    client->set_read_timeout(30);
    for (int i = 0; i < 100 && !client->Get("/healthz"); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  ~Running() {
    server.stop();
    thread.join();
  }

  json post(const json& body, int* status = nullptr) {
    auto r = client->Post("/analyses", body.dump(), "application/json");
    REQUIRE(r);
    if (status) *status = r->status;
    return json::parse(r->body);
  }
  json get(const std::string& path, int* status = nullptr) {
    auto r = client->Get(path);
    REQUIRE(r);
    if (status) *status = r->status;
    return json::parse(r->body);
  }
  // polls until the job leaves queued/running or the phase matches
  json wait(const std::string& id, const std::string& phase = "", double seconds = 120) {
    auto t0 = std::chrono::steady_clock::now();
    for (;;) {
      json s = get("/analyses/" + id);
      const std::string st = s["status"];
      if (st != "queued" && st != "running") return s;
      if (!phase.empty() && st == "running" && s["phase"] == phase) return s;
      if (std::chrono::steady_clock::now() - t0 > std::chrono::duration<double>(seconds)) return s;
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
  }

  Server server;
  int port = 0;
  std::thread thread;
  std::unique_ptr<httplib::Client> client;
};

ServiceConfig local(unsigned workers = 2, std::size_t depth = 64) {
  ServiceConfig c;
  c.port = 0;
  c.workers = workers;
  c.queue_depth = depth;
  return c;
}

json request(const std::string& name, json options = json::object()) {
  return {{"model_text", model::find_example(name)->text}, {"seed", 3}, {"options", options}};
}

json without_timings(json j) {
  j.erase("timings");
  return j;
}

}  // namespace

TEST_CASE("service round trip on the corpus") {
  Running s(local(3));
  std::map<std::string, std::string> ids;
  for (auto name : {"competition", "lotka-volterra", "tumor", "slow-fast", "crn", "sirs-forced"}) {
    int status = 0;
    json r = s.post(request(name), &status);
    CHECK(status == 202);
    CHECK(r["status"] == "queued");
    ids[name] = r["id"];
  }
  for (auto& [name, id] : ids) {
    CAPTURE(name);
    json st = s.wait(id);
    REQUIRE(st["status"] == "done");
    CHECK_FALSE(st["log_tail"].empty());
    int code = 0;
    json res = s.get("/analyses/" + id + "/result", &code);
    CHECK(code == 200);
    CHECK(res["probability"] == "0.99");
    CHECK(res.contains("timings"));
  }
  json sirs = s.get("/analyses/" + ids["sirs-forced"] + "/result");
  CHECK(sirs["ident"]["locally_not_globally"] == json::array({"M"}));
  CHECK(sirs["ident"]["num_solutions"]["M"] == 2);
  json crn = s.get("/analyses/" + ids["crn"] + "/result");
  CHECK(crn["field"]["bypassed"] == true);
  CHECK(s.get("/analyses/" + ids["tumor"] + "/result")["field"].is_null());
}

TEST_CASE("service reports combinations") {
  Running s(local());
  json r = s.post(request("tumor", {{"compute_combinations", true}}));
  REQUIRE(s.wait(r["id"])["status"] == "done");
  json res = s.get("/analyses/" + std::string(r["id"]) + "/result");
  CHECK(res["field"]["beta"] == 1);
  CHECK(res["field"]["single_experiment"] == res["field"]["multi_experiment"]);
  CHECK(res["field"]["multi_experiment"].size() == 6);

  json sf = s.post(request("slow-fast", {{"compute_combinations", true}, {"refine_bound", true}}));
  REQUIRE(s.wait(sf["id"])["status"] == "done");
  CHECK(s.get("/analyses/" + std::string(sf["id"]) + "/result")["field"]["beta"] == 2);
}

TEST_CASE("service request errors") {
  Running s(local());
  int code = 0;
  json e = s.post({{"model_text", "diff(x(t), t) = sin(x(t));\ny(t) = x(t)"}}, &code);
  CHECK(code == 400);
  CHECK(e["error"] == "NonRationalError");
  CHECK(e["location"]["line"] == 1);
  CHECK(e["location"]["column"] == 17);

  e = s.post({{"model_text", "diff(x(t), t) = a*x(t);\ny(t) = x(t) +"}}, &code);
  CHECK(code == 400);
  CHECK(e["location"]["line"] == 2);

  s.post({{"model", "x"}}, &code);
  CHECK(code == 400);
  s.post({{"model_text", "diff(x(t), t) = a*x(t); y(t) = x(t)"}, {"options", {{"probability", "1.5"}}}}, &code);
  CHECK(code == 400);
  s.post({{"model_text", "diff(x(t), t) = a*x(t); y(t) = x(t)"}, {"options", {{"copies", "two"}}}}, &code);
  CHECK(code == 400);
  auto raw = s.client->Post("/analyses", "{not json", "application/json");
  REQUIRE(raw);
  CHECK(raw->status == 400);

  s.get("/analyses/nope", &code);
  CHECK(code == 404);
  s.get("/analyses/nope/result", &code);
  CHECK(code == 404);
  auto del = s.client->Delete("/analyses/nope");
  REQUIRE(del);
  CHECK(del->status == 404);
}

TEST_CASE("duplicate submissions get distinct ids and equal results") {
  Running s(local());
  json a = s.post(request("lotka-volterra", {{"compute_combinations", true}}));
  json b = s.post(request("lotka-volterra", {{"compute_combinations", true}}));
  CHECK(a["id"] != b["id"]);
  REQUIRE(s.wait(a["id"])["status"] == "done");
  REQUIRE(s.wait(b["id"])["status"] == "done");
  const std::string pa = "/analyses/" + std::string(a["id"]) + "/result";
  auto r1 = s.client->Get(pa), r2 = s.client->Get(pa);
  CHECK(r1->body == r2->body);
  json ra = json::parse(r1->body), rb = s.get("/analyses/" + std::string(b["id"]) + "/result");
  CHECK(without_timings(ra) == without_timings(rb));

  // the command line front end runs the same pipeline
  auto req = request_from_json(request("lotka-volterra", {{"compute_combinations", true}}));
  CHECK(to_json(run_analysis(req), false) == without_timings(ra));
}

TEST_CASE("cancellation") {
  // one worker: the slow job runs, the next one waits in the queue
  Running s(local(1, 1));
  json slow = s.post(request("sirs-forced", {{"compute_combinations", true}}));
  while (s.get("/analyses/" + std::string(slow["id"]))["status"] == "queued")
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  json waiting = s.post(request("competition"));
  int code = 0;
  s.post(request("competition"), &code);
  CHECK(code == 429);

  CHECK(s.get("/analyses/" + std::string(waiting["id"]))["status"] == "queued");
  auto d = s.client->Delete("/analyses/" + std::string(waiting["id"]));
  REQUIRE(d);
  CHECK(d->status == 202);
  CHECK(s.get("/analyses/" + std::string(waiting["id"]))["status"] == "cancelled");
  s.get("/analyses/" + std::string(waiting["id"]) + "/result", &code);
  CHECK(code == 409);

  json st = s.wait(slow["id"], "combinations");
  REQUIRE(st["status"] == "running");
  s.get("/analyses/" + std::string(slow["id"]) + "/result", &code);
  CHECK(code == 409);
  auto t0 = std::chrono::steady_clock::now();
  d = s.client->Delete("/analyses/" + std::string(slow["id"]));
  REQUIRE(d);
  CHECK(d->status == 202);
  CHECK(s.wait(slow["id"], "", 30)["status"] == "cancelled");
  CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(10));
  d = s.client->Delete("/analyses/" + std::string(slow["id"]));
  CHECK(d->status == 409);
}

TEST_CASE("job timeout surfaces as a resource limit") {
  Running s(local(1));
  json r = request("sirs-forced", {{"compute_combinations", true}});
  r["timeout_seconds"] = 2;
  json id = s.post(r)["id"];
  json st = s.wait(id, "", 60);
  CHECK(st["status"] == "failed");
  CHECK(st["error"]["error"] == "ResourceLimit");
}

TEST_CASE("example catalog and health") {
  Running s(local());
  json ex = s.get("/examples");
  REQUIRE(ex.size() == 6);
  for (const auto& e : ex) CHECK_NOTHROW(model::parse_model(e["text"].get<std::string>()));
  CHECK(s.get("/healthz")["status"] == "ok");
  int code = 0;
  s.get("/ui/index.html", &code);
  CHECK(code == 404);
}

TEST_CASE("static files under /ui") {
  auto dir = std::filesystem::temp_directory_path() / "sia-ui-test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "index.html") << "<html>ok</html>";
  auto cfg = local();
  cfg.ui_dir = dir.string();
  Running s(cfg);
  auto r = s.client->Get("/ui/index.html");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(r->body == "<html>ok</html>");
}

TEST_CASE("request schema round trip") {
  AnalysisRequest r;
  r.model_text = "diff(x(t), t) = a*x(t); y(t) = x(t)";
  r.syntax = model::Syntax::MapleLike;
  r.options.copies = 3;
  r.options.probability = "0.9";
  r.options.print_num_solutions = false;
  r.compute_combinations = true;
  r.refine_bound = true;
  r.refine_attempts = 7;
  r.attempt_bypass = false;
  r.seed = 42;
  r.timeout_seconds = 12;
  CHECK(to_json(request_from_json(to_json(r))) == to_json(r));
  CHECK_THROWS_AS(request_from_json({{"model_text", "x"}, {"colour", 1}}), RequestError);
  CHECK_THROWS_AS(request_from_json({{"model_text", "x"}, {"options", {{"copies", 0}}}}), RequestError);
}
