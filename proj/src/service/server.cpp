#include "sia/service/server.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <random>
#include <sstream>

#include "httplib.h"
#include "sia/model/examples.hpp"

namespace sia::service {

namespace {

std::string env_or(const char* key, const std::string& fallback) {
  const char* v = std::getenv(key);
  return v && *v ? std::string(v) : fallback;
}

template <class T>
T env_number(const char* key, T fallback) {
  const char* v = std::getenv(key);
  if (!v || !*v) return fallback;
  std::istringstream is(v);
  T out{};
  if (!(is >> out)) throw std::invalid_argument(std::string("bad value for ") + key + ": " + v);
  return out;
}

json error_body(const std::string& code, const std::string& message) { return {{"error", code}, {"message", message}}; }

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

}  // namespace

ServiceConfig config_from_env() {
  ServiceConfig c;
  c.host = env_or("SIA_HOST", c.host);
  c.port = env_number("SIA_PORT", c.port);
  c.workers = env_number("SIA_WORKERS", c.workers);
  c.queue_depth = env_number("SIA_QUEUE_DEPTH", c.queue_depth);
  c.job_timeout = env_number("SIA_JOB_TIMEOUT", c.job_timeout);
  c.job_ttl = env_number("SIA_JOB_TTL", c.job_ttl);
  c.default_probability = env_or("SIA_PROBABILITY", c.default_probability);
  c.ui_dir = env_or("SIA_UI_DIR", c.ui_dir);
  (void)sian::parse_probability(c.default_probability);
  if (c.workers == 0) throw std::invalid_argument("SIA_WORKERS must be positive");
  return c;
}

std::string to_string(JobStatus s) {
  switch (s) {
    case JobStatus::Queued:
      return "queued";
    case JobStatus::Running:
      return "running";
    case JobStatus::Done:
      return "done";
    case JobStatus::Failed:
      return "failed";
    case JobStatus::Cancelled:
      return "cancelled";
  }
  return "failed";
}

JobManager::JobManager(ServiceConfig cfg) : cfg_(std::move(cfg)) {
  for (unsigned i = 0; i < std::max(1u, cfg_.workers); ++i) workers_.emplace_back([this] { work(); });
}

JobManager::~JobManager() {
  {
    std::lock_guard lk(mu_);
    stop_ = true;
    for (auto& [id, job] : jobs_) job->interrupt.request_cancel();
  }
  cv_.notify_all();
  for (auto& t : workers_) t.join();
}

std::optional<std::string> JobManager::submit(AnalysisRequest req) {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lk(mu_);
  evict_locked();
  if (queue_.size() >= cfg_.queue_depth) return std::nullopt;
  auto job = std::make_shared<Job>();
  std::ostringstream id;
  id << std::hex << std::setw(12) << std::setfill('0') << (rng() & 0xffffffffffffULL) << "-" << ++counter_;
  job->id = id.str();
  job->request = std::move(req);
  jobs_[job->id] = job;
  queue_.push_back(job);
  cv_.notify_one();
  return job->id;
}

std::optional<JobSnapshot> JobManager::status(const std::string& id, std::size_t tail) {
  std::lock_guard lk(mu_);
  evict_locked();
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  const Job& j = *it->second;
  JobSnapshot s{j.id, j.status, j.phase, {}, j.error};
  auto from = j.logs.size() > tail ? j.logs.end() - static_cast<long>(tail) : j.logs.begin();
  s.log_tail.assign(from, j.logs.end());
  return s;
}

JobManager::Fetch JobManager::result(const std::string& id, std::string& body) {
  std::lock_guard lk(mu_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return Fetch::Unknown;
  if (it->second->status != JobStatus::Done) return Fetch::NotDone;
  body = it->second->result;
  return Fetch::Ok;
}

JobManager::Cancel JobManager::cancel(const std::string& id) {
  std::lock_guard lk(mu_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return Cancel::Unknown;
  Job& j = *it->second;
  if (terminal(j.status)) return Cancel::Terminal;
  j.interrupt.request_cancel();
  if (j.status == JobStatus::Queued) {
    std::erase_if(queue_, [&](const auto& q) { return q.get() == &j; });
    j.status = JobStatus::Cancelled;
    j.logs.push_back("cancelled before start");
    j.finished = std::chrono::steady_clock::now();
  }
  return Cancel::Ok;
}

std::size_t JobManager::queued() const {
  std::lock_guard lk(mu_);
  return queue_.size();
}

void JobManager::evict_locked() {
  const auto now = std::chrono::steady_clock::now();
  const auto ttl = std::chrono::duration<double>(cfg_.job_ttl);
  std::erase_if(jobs_, [&](const auto& kv) { return terminal(kv.second->status) && now - kv.second->finished > ttl; });
}

void JobManager::work() {
  for (;;) {
    std::shared_ptr<Job> job;
    {
      std::unique_lock lk(mu_);
      cv_.wait(lk, [&] { return stop_ || !queue_.empty(); });
      if (stop_) return;
      job = queue_.front();
      queue_.pop_front();
      job->status = JobStatus::Running;
    }
    run(job);
  }
}

void JobManager::run(const std::shared_ptr<Job>& job) {
  const double limit = std::min(cfg_.job_timeout, job->request.timeout_seconds);
  job->interrupt.set_deadline(std::chrono::steady_clock::now() +
                              std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(limit)));
  auto progress = [&](const std::string& phase, const std::string& line) {
    std::lock_guard lk(mu_);
    job->phase = phase;
    job->logs.push_back("[" + phase + "] " + line);
  };
  JobStatus status = JobStatus::Failed;
  std::string body;
  std::optional<json> error;
  try {
    auto res = run_analysis(job->request, progress, &job->interrupt);
    body = to_json(res).dump(2);
    status = JobStatus::Done;
  } catch (const algebra::Cancelled&) {
    status = JobStatus::Cancelled;
  } catch (const algebra::ResourceLimit& e) {
    error = error_body("ResourceLimit", e.what());
  } catch (const model::ModelError& e) {
    error = to_json(e);
  } catch (const std::exception& e) {
    error = error_body("InternalError", e.what());
  }
  std::lock_guard lk(mu_);
  job->status = status;
  job->result = std::move(body);
  job->error = std::move(error);
  if (job->error) job->logs.push_back("failed: " + (*job->error)["message"].get<std::string>());
  if (status == JobStatus::Cancelled) job->logs.push_back("cancelled");
  job->finished = std::chrono::steady_clock::now();
}

struct Server::Impl {
  httplib::Server http;
  ServiceConfig cfg;
  int port = -1;
};

Server::Server(ServiceConfig cfg) : impl_(std::make_unique<Impl>()), jobs_(std::make_unique<JobManager>(cfg)) {
  impl_->cfg = cfg;
  auto& http = impl_->http;
  JobManager& jobs = *jobs_;

  http.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  http.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  http.Post("/analyses", [&jobs](const httplib::Request& req, httplib::Response& res) {
    AnalysisRequest defaults;
    defaults.options.probability = jobs.config().default_probability;
    defaults.timeout_seconds = jobs.config().job_timeout;
    AnalysisRequest r;
    try {
      r = request_from_json(json::parse(req.body), defaults);
    } catch (const json::parse_error& e) {
      return reply(res, 400, error_body("BadRequest", std::string("invalid JSON: ") + e.what()));
    } catch (const RequestError& e) {
      return reply(res, 400, error_body("BadRequest", e.what()));
    }
    try {
      (void)model::parse_model(r.model_text, r.syntax);
    } catch (const model::ModelError& e) {
      return reply(res, 400, to_json(e));
    }
    auto id = jobs.submit(std::move(r));
    if (!id) return reply(res, 429, error_body("QueueFull", "too many queued analyses"));
    reply(res, 202, {{"id", *id}, {"status", "queued"}});
  });

  http.Get(R"(/analyses/([^/]+))", [&jobs](const httplib::Request& req, httplib::Response& res) {
    auto s = jobs.status(req.matches[1]);
    if (!s) return reply(res, 404, error_body("NotFound", "unknown analysis id"));
    json body = {{"id", s->id}, {"status", to_string(s->status)}, {"phase", s->phase}, {"log_tail", s->log_tail}};
    if (s->error) body["error"] = *s->error;
    reply(res, 200, body);
  });

  http.Get(R"(/analyses/([^/]+)/result)", [&jobs](const httplib::Request& req, httplib::Response& res) {
    std::string body;
    switch (jobs.result(req.matches[1], body)) {
      case JobManager::Fetch::Unknown:
        return reply(res, 404, error_body("NotFound", "unknown analysis id"));
      case JobManager::Fetch::NotDone: {
        auto s = jobs.status(req.matches[1]);
        return reply(res, 409, error_body("NotDone", "analysis is " + (s ? to_string(s->status) : "gone")));
      }
      case JobManager::Fetch::Ok:
        res.status = 200;
        res.set_content(body, "application/json");
    }
  });

  http.Delete(R"(/analyses/([^/]+))", [&jobs](const httplib::Request& req, httplib::Response& res) {
    switch (jobs.cancel(req.matches[1])) {
      case JobManager::Cancel::Unknown:
        return reply(res, 404, error_body("NotFound", "unknown analysis id"));
      case JobManager::Cancel::Terminal:
        return reply(res, 409, error_body("Terminal", "analysis already finished"));
      case JobManager::Cancel::Ok: {
        auto s = jobs.status(req.matches[1]);
        reply(res, 202, {{"id", req.matches[1]}, {"status", s ? to_string(s->status) : "cancelled"}});
      }
    }
  });

  http.Get("/examples", [](const httplib::Request&, httplib::Response& res) {
    json out = json::array();
    for (const auto& e : model::examples())
      out.push_back({{"name", e.name}, {"title", e.title}, {"syntax", "maple-like"}, {"text", e.text},
                     {"citation", e.citation}});
    reply(res, 200, out);
  });

  http.Get("/healthz", [&jobs](const httplib::Request&, httplib::Response& res) {
    reply(res, 200, {{"status", "ok"}, {"workers", jobs.config().workers}, {"queued", jobs.queued()}});
  });

  if (!cfg.ui_dir.empty() && std::filesystem::is_directory(cfg.ui_dir)) {
    http.set_mount_point("/ui", cfg.ui_dir);
  } else {
    http.Get(R"(/ui(/.*)?)", [](const httplib::Request&, httplib::Response& res) {
      reply(res, 404, error_body("NotFound", "no UI assets installed (set SIA_UI_DIR)"));
    });
  }
}

Server::~Server() { stop(); }

int Server::bind() {
  if (impl_->port >= 0) return impl_->port;
  auto& c = impl_->cfg;
  impl_->port = c.port == 0 ? impl_->http.bind_to_any_port(c.host) : (impl_->http.bind_to_port(c.host, c.port) ? c.port : -1);
  if (impl_->port < 0) throw std::runtime_error("cannot bind " + c.host + ":" + std::to_string(c.port));
  return impl_->port;
}

void Server::listen() {
  bind();
  impl_->http.listen_after_bind();
}

void Server::stop() {
  if (impl_->http.is_running()) impl_->http.stop();
}

}  // namespace sia::service
