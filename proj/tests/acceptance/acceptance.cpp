// Exit gate: one PASS/FAIL line per criterion item, then one per criterion.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <thread>

#include "httplib.h"
#include "sia/algebra/parse.hpp"
#include "sia/identfield/identfield.hpp"
#include "sia/model/examples.hpp"
#include "sia/service/server.hpp"
#include "suites.hpp"

using namespace sia;
using namespace sia::testing;
using algebra::RatFun;
using json = nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;
using Problems = std::vector<std::string>;
using Set = std::set<std::string>;

constexpr double kItemBudget = 120;  // seconds per corpus model
constexpr std::uint64_t kSeed = 1;

Set as_set(const std::vector<std::string>& v) { return Set(v.begin(), v.end()); }

std::string joined(const Set& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

void expect_set(Problems& out, const std::string& what, const std::vector<std::string>& got, const Set& want) {
  if (as_set(got) != want) out.push_back(what + " = " + joined(as_set(got)) + ", expected " + joined(want));
}

void expect(Problems& out, bool ok, const std::string& what) {
  if (!ok) out.push_back(what);
}

void expect_lists(Problems& out, const sian::IdentReport& r, const Set& g, const Set& l, const Set& n) {
  expect_set(out, "Globally", r.globally, g);
  expect_set(out, "Locally not Globally", r.locally_not_globally, l);
  expect_set(out, "Non-Identifiable", r.non_identifiable, n);
  expect_set(out, "Undetermined", r.undetermined, {});
}

RatFun fn(const algebra::RingPtr& R, const std::string& num, const std::string& den = "1") {
  return RatFun(algebra::parse_poly(R, num), algebra::parse_poly(R, den));
}

std::vector<RatFun> fns(const algebra::RingPtr& R, const std::vector<std::string>& texts) {
  std::vector<RatFun> out;
  for (const auto& t : texts) out.push_back(fn(R, t));
  return out;
}

// field equality as two-way membership of every generator
bool same_field(const std::vector<RatFun>& a, const std::vector<RatFun>& b) {
  for (const auto& f : a)
    if (!identfield::field_membership(f, b, kSeed)) return false;
  for (const auto& f : b)
    if (!identfield::field_membership(f, a, kSeed)) return false;
  return true;
}

void expect_field(Problems& out, const std::string& what, const model::ModelSystem& m, const std::vector<RatFun>& got,
                  const std::vector<RatFun>& want) {
  if (same_field(on_params(m, got), want)) return;
  std::string s;
  for (const auto& f : got) s += (s.empty() ? "" : ", ") + f.str();
  out.push_back(what + " [" + s + "] does not generate the expected field");
}

identfield::FieldOptions no_bypass() {
  identfield::FieldOptions fo;
  fo.attempt_bypass = false;
  return fo;
}

// --- golden corpus

Problems competition() {
  Problems out;
  auto r = sian::assess(example("competition"), {}, kSeed);
  expect_lists(out, r, {"x1(0)", "x2(0)", "r1", "r2", "k1", "k2"}, {}, {});
  return out;
}

Problems sirs() {
  Problems out;
  sian::AnalysisOptions opt;
  opt.probability = "0.99";
  auto r = sian::assess(example("sirs-forced"), opt, kSeed);
  expect_lists(out, r, {"b0", "g", "mu", "nu", "s(0)", "i(0)", "r(0)"}, {"M"}, {"b1", "x1(0)", "x2(0)"});
  auto it = r.num_solutions.find("M");
  expect(out, it != r.num_solutions.end() && it->second == 2, "M should have 2 solutions");
  return out;
}

Problems tumor() {
  Problems out;
  auto m = example("tumor");
  auto r = sian::assess(m, {}, kSeed);
  expect_lists(out, r, {"k3", "k4", "k5", "k6", "k7", "x1(0)", "x2(0)", "x5(0)"}, {}, {"a", "b", "d", "x3(0)", "x4(0)"});
  auto P = identfield::parameter_ring(m);
  std::vector<RatFun> want = fns(P, {"k3", "k4", "k6", "k7", "b*d + a"});
  want.push_back(fn(P, "k5", "k7"));
  auto f = identfield::identifiable_functions(m, {}, {}, kSeed, &r);
  expect_field(out, "Single-Experiment", m, f.single_experiment, want);
  expect_field(out, "Multi-Experiment", m, f.multi_experiment, want);
  expect(out, f.beta == 1, "beta = " + std::to_string(f.beta) + ", expected 1");
  return out;
}

Problems lotka_volterra() {
  Problems out;
  auto m = example("lotka-volterra");
  auto r = sian::assess(m, {}, kSeed);
  expect_lists(out, r, {"a", "c", "d", "x1(0)"}, {}, {"b", "x2(0)"});
  auto P = identfield::parameter_ring(m);
  auto f = identfield::identifiable_functions(m, {}, {}, kSeed, &r);
  expect_field(out, "Single-Experiment", m, f.single_experiment, fns(P, {"a", "c", "d"}));
  expect_field(out, "Multi-Experiment", m, f.multi_experiment, fns(P, {"a", "c", "d"}));
  expect(out, f.beta == 1, "beta = " + std::to_string(f.beta) + ", expected 1");
  auto ext = identfield::initial_value_generators(m, f.single_experiment);
  expect(out, identfield::field_membership(fn(m.ring, "b*x2"), ext, kSeed), "b*x2(0) is not identifiable");
  expect(out, !identfield::field_membership(fn(m.ring, "x2"), ext, kSeed), "x2(0) should not be identifiable");
  return out;
}

Problems slow_fast() {
  Problems out;
  auto m = example("slow-fast");
  auto r = sian::assess(m, {}, kSeed);
  expect_lists(out, r, {"xC(0)", "eA(0)", "eC(0)"}, {"eB", "k1", "k2", "xA(0)", "xB(0)"}, {});
  auto P = identfield::parameter_ring(m);
  auto f = identfield::identifiable_functions(m, {}, {}, kSeed, &r);
  expect_field(out, "Single-Experiment", m, f.single_experiment, fns(P, {"k1*k2", "k1 + k2"}));
  expect_field(out, "Multi-Experiment", m, f.multi_experiment, fns(P, {"eB", "k1", "k2"}));
  expect(out, f.beta == 3, "beta = " + std::to_string(f.beta) + ", expected 3");
  identfield::FieldOptions refine;
  refine.refine = true;
  refine.attempts = 4;
  auto g = identfield::identifiable_functions(m, {}, refine, kSeed, &r);
  expect(out, g.beta == 2, "refined beta = " + std::to_string(g.beta) + ", expected 2");
  sian::AnalysisOptions two;
  two.copies = 2;
  auto r2 = sian::assess(m, two, kSeed);
  auto g2 = as_set(r2.globally);
  for (const char* s : {"eB", "k1", "k2"}) expect(out, g2.count(s) > 0, std::string(s) + " not global with 2 copies");
  return out;
}

Problems crn() {
  Problems out;
  auto m = example("crn");
  auto r = sian::assess(m, {}, kSeed);
  expect_lists(out, r,
               {"k1", "k2", "k3", "k4", "k5", "k6", "x1(0)", "x2(0)", "x3(0)", "x4(0)", "x5(0)", "x6(0)"}, {}, {});
  auto P = identfield::parameter_ring(m);
  const auto params = fns(P, {"k1", "k2", "k3", "k4", "k5", "k6"});
  auto b = identfield::identifiable_functions(m, {}, {}, kSeed, &r);
  expect(out, b.bypassed, "bypass did not fire");
  expect_field(out, "bypass Multi-Experiment", m, b.multi_experiment, params);
  expect_field(out, "bypass Single-Experiment", m, b.single_experiment, params);
  expect(out, b.beta == 1, "bypass beta = " + std::to_string(b.beta));
  auto f = identfield::identifiable_functions(m, {}, no_bypass(), kSeed, &r);
  expect(out, !f.bypassed, "bypass fired although disabled");
  expect_field(out, "Multi-Experiment", m, f.multi_experiment, params);
  // the list printed for the long path generates the same field
  auto alt = fns(P, {"k1", "k3", "k5", "k6", "k2 - k3"});
  alt.push_back(fn(P, "-k2*k4 + k3*k5", "k2 + k3"));
  expect(out, same_field(alt, params), "printed alternate list does not generate Q(k1..k6)");
  return out;
}

// --- service contract

struct Running {
  explicit Running(service::ServiceConfig cfg) : server(cfg) {
    port = server.bind();
    thread = std::thread([this] { server.listen(); });
    client = std::make_unique<httplib::Client>("127.0.0.1", port);
    client->set_read_timeout(60);
    for (int i = 0; i < 200 && !client->Get("/healthz"); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  ~Running() {
    server.stop();
    thread.join();
  }

  std::pair<int, json> send(const std::string& method, const std::string& path, const std::string& body = "") {
    httplib::Result r = method == "POST"     ? client->Post(path, body, "application/json")
                        : method == "DELETE" ? client->Delete(path)
                                             : client->Get(path);
    if (!r) return {0, json()};
    return {r->status, json::parse(r->body, nullptr, false)};
  }
  std::string raw(const std::string& path) {
    auto r = client->Get(path);
    return r ? r->body : std::string();
  }
  json wait(const std::string& id, const std::string& phase = "", double seconds = 300) {
    auto t0 = Clock::now();
    for (;;) {
      json s = send("GET", "/analyses/" + id).second;
      const std::string st = s.value("status", "");
      if (st != "queued" && st != "running") return s;
      if (!phase.empty() && st == "running" && s.value("phase", "") == phase) return s;
      if (Clock::now() - t0 > std::chrono::duration<double>(seconds)) return s;
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
    }
  }

  service::Server server;
  int port = 0;
  std::thread thread;
  std::unique_ptr<httplib::Client> client;
};

service::ServiceConfig local(unsigned workers = 3, std::size_t depth = 64) {
  service::ServiceConfig c;
  c.port = 0;
  c.workers = workers;
  c.queue_depth = depth;
  return c;
}

json request_for(const std::string& name, json options = json::object()) {
  return {{"model_text", model::find_example(name)->text}, {"seed", kSeed}, {"options", options}};
}

json without_timings(json j) {
  j.erase("timings");
  return j;
}

Problems round_trip() {
  Problems out;
  Running s(local());
  std::map<std::string, std::string> ids;
  for (const auto& name : corpus()) {
    auto [code, body] = s.send("POST", "/analyses", request_for(name).dump());
    if (code != 202 || !body.contains("id")) {
      out.push_back(name + ": submit returned " + std::to_string(code));
      continue;
    }
    ids[name] = body["id"];
  }
  for (const auto& [name, id] : ids) {
    json st = s.wait(id);
    if (st.value("status", "") != "done") {
      out.push_back(name + ": status " + st.dump());
      continue;
    }
    expect(out, st.contains("phase") && st.contains("log_tail") && !st["log_tail"].empty(), name + ": status lacks log");
    auto [code, res] = s.send("GET", "/analyses/" + id + "/result");
    expect(out, code == 200, name + ": result returned " + std::to_string(code));
    auto direct = service::run_analysis(service::request_from_json(request_for(name)));
    expect(out, without_timings(res) == service::to_json(direct, false), name + ": service result differs from a direct run");
  }
  json sirs = s.send("GET", "/analyses/" + ids["sirs-forced"] + "/result").second;
  expect(out, sirs["ident"]["num_solutions"].value("M", 0) == 2, "SIRS result lacks M's 2 solutions");
  return out;
}

Problems parse_errors() {
  Problems out;
  Running s(local(1));
  struct Case {
    std::string text, code;
    int line, column;
  };
  const std::vector<Case> cases = {
      {"diff(x(t), t) = sin(x(t));\ny(t) = x(t)", "NonRationalError", 1, 17},
      {"diff(x(t), t) = a*x(t);\ny(t) = x(t) +", "", 2, 0},
      {"diff(x(t), t) = a*x(t)", "", 1, 0},
  };
  for (const auto& c : cases) {
    auto [code, body] = s.send("POST", "/analyses", json{{"model_text", c.text}}.dump());
    const std::string label = "'" + c.text.substr(0, 30) + "'";
    expect(out, code == 400, label + " returned " + std::to_string(code));
    if (!body.is_object() || !body.contains("location")) {
      out.push_back(label + " has no location");
      continue;
    }
    if (!c.code.empty()) expect(out, body.value("error", "") == c.code, label + " error " + body.value("error", ""));
    expect(out, body["location"].value("line", 0) == c.line, label + " line " + body["location"].dump());
    if (c.column) expect(out, body["location"].value("column", 0) == c.column, label + " column " + body["location"].dump());
    expect(out, body.contains("message"), label + " has no message");
  }
  auto [code, body] = s.send("POST", "/analyses", "{broken");
  expect(out, code == 400, "malformed JSON returned " + std::to_string(code));
  return out;
}

Problems cancellation() {
  Problems out;
  Running s(local(1, 4));
  // SIRS combinations is long enough to be caught inside a phase
  auto [c1, slow] = s.send("POST", "/analyses", request_for("sirs-forced", {{"compute_combinations", true}}).dump());
  auto [c2, queued] = s.send("POST", "/analyses", request_for("competition").dump());
  if (c1 != 202 || c2 != 202) return {"submit failed"};
  const std::string sid = slow["id"], qid = queued["id"];

  auto [d1, b1] = s.send("DELETE", "/analyses/" + qid);
  expect(out, d1 == 202, "cancel of a queued job returned " + std::to_string(d1));
  expect(out, s.send("GET", "/analyses/" + qid).second.value("status", "") == "cancelled", "queued job not cancelled");

  json st = s.wait(sid, "combinations");
  if (st.value("phase", "") != "combinations" || st.value("status", "") != "running")
    return {"job never reached the combinations phase: " + st.dump()};
  auto t0 = Clock::now();
  auto [d2, b2] = s.send("DELETE", "/analyses/" + sid);
  expect(out, d2 == 202, "cancel of a running job returned " + std::to_string(d2));
  json after = s.wait(sid, "", 60);
  const double took = std::chrono::duration<double>(Clock::now() - t0).count();
  expect(out, after.value("status", "") == "cancelled", "running job ended as " + after.value("status", ""));
  expect(out, after.value("phase", "") == "combinations", "job left the phase it was cancelled in");
  expect(out, took < 10, "cancellation took " + std::to_string(took) + " s");
  expect(out, s.send("GET", "/analyses/" + sid + "/result").first == 409, "cancelled job has a result");
  expect(out, s.send("DELETE", "/analyses/" + sid).first == 409, "second cancel not rejected");
  return out;
}

Problems reproducibility() {
  Problems out;
  const json req = request_for("slow-fast", {{"compute_combinations", true}, {"refine_bound", true}});
  std::vector<json> results;
  std::vector<std::string> raws;
  for (int server = 0; server < 2; ++server) {
    Running s(local(2));
    std::vector<std::string> ids;
    for (int k = 0; k < 2; ++k) ids.push_back(s.send("POST", "/analyses", req.dump()).second.value("id", ""));
    expect(out, ids[0] != ids[1], "duplicate submissions share an id");
    for (const auto& id : ids) {
      if (s.wait(id).value("status", "") != "done") {
        out.push_back("job " + id + " did not finish");
        continue;
      }
      const std::string body = s.raw("/analyses/" + id + "/result");
      expect(out, body == s.raw("/analyses/" + id + "/result"), "refetch is not byte-identical");
      raws.push_back(body);
      results.push_back(without_timings(json::parse(body)));
    }
  }
  for (const auto& r : results) expect(out, r == results.front(), "result JSON differs between runs with one seed");
  if (!results.empty()) expect(out, results.front()["field"].value("beta", 0) == 2, "refined beta is not 2");
  return out;
}

// --- property suites

Problems from(const SuiteResult& r, std::size_t min_cases) {
  Problems out = r.failures;
  if (out.size() > 5) out.resize(5);
  if (r.cases < min_cases) out.push_back("only " + std::to_string(r.cases) + " cases");
  return out;
}

struct Item {
  std::string id, title;
  std::function<Problems()> run;
  double budget = 0;  // seconds; 0 for none
};

struct Criterion {
  std::string title;
  std::vector<Item> items;
};

}  // namespace

int main() {
  std::string note;
  const std::vector<Criterion> criteria = {
      {"Golden corpus classification",
       {{"1.1", "competition model", competition, kItemBudget},
        {"1.2", "SIRS with forcing", sirs, kItemBudget},
        {"1.3", "tumor targeting", tumor, kItemBudget},
        {"1.4", "Lotka-Volterra", lotka_volterra, kItemBudget},
        {"1.5", "slow-fast ambiguity", slow_fast, kItemBudget},
        {"1.6", "chemical reaction network", crn, kItemBudget}}},
      {"Property suites",
       {{"2.1", "Groebner membership vs Macaulay oracle",
         [&] {
           auto r = groebner_membership_suite();
           note = r.summary();
           return from(r, 200);
         }},
        {"2.2", "solution counts vs GF(p) enumeration",
         [&] {
           auto r = solution_count_suite();
           note = r.summary();
           return from(r, 100);
         }},
        {"2.3", "relabeling and seed invariants on the corpus",
         [&] {
           auto a = relabeling_suite(), b = relabeled_combinations_suite(), c = seed_suite();
           note = a.summary() + "; " + b.summary() + "; " + c.summary();
           Problems out = from(a, 6), more = from(b, 1), last = from(c, 6);
           out.insert(out.end(), more.begin(), more.end());
           out.insert(out.end(), last.begin(), last.end());
           return out;
         }},
        {"2.4", "symmetry x' = (a + b)x",
         [&] {
           auto r = symmetry_suite();
           note = r.summary();
           return from(r, 1);
         }},
        {"2.5", "monotonicity in copies (1, 2, 3)",
         [&] {
           auto r = copies_monotonicity_suite(3);
           note = r.summary();
           return from(r, 6);
         }}}},
      {"Service contract",
       {{"3.1", "submit, status and result round trip on the corpus", round_trip},
        {"3.2", "parse errors return 400 with a location", parse_errors},
        {"3.3", "cancellation within one phase", cancellation},
        {"3.4", "fixed-seed reproducibility of result JSON", reproducibility}}},
  };

  std::vector<std::pair<std::string, bool>> verdicts;
  for (const auto& c : criteria) {
    bool all = true;
    for (const auto& item : c.items) {
      note.clear();
      Problems problems;
      auto t0 = Clock::now();
      try {
        problems = item.run();
      } catch (const std::exception& e) {
        problems.push_back(std::string("threw: ") + e.what());
      }
      const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
      if (item.budget > 0 && secs > item.budget)
        problems.push_back("took " + std::to_string(secs) + " s, budget " + std::to_string(item.budget) + " s");
      const bool pass = problems.empty();
      all = all && pass;
      std::cout << (pass ? "PASS " : "FAIL ") << item.id << "  " << item.title << "  (" << std::fixed
                << std::setprecision(1) << secs << " s" << (note.empty() ? "" : "; " + note) << ")\n";
      for (const auto& p : problems) std::cout << "       " << p << "\n";
      std::cout.flush();
    }
    verdicts.emplace_back(c.title, all);
  }
  std::cout << "\n";
  bool ok = true;
  for (const auto& [title, pass] : verdicts) {
    std::cout << (pass ? "PASS " : "FAIL ") << "[PRIMARY] " << title << "\n";
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}
