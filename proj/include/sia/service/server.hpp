#pragma once

#include <chrono>
#include <condition_variable>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sia/algebra/budget.hpp"
#include "sia/service/analysis.hpp"

namespace sia::service {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  unsigned workers = 2;
  std::size_t queue_depth = 64;
  double job_timeout = 600;  // seconds, when the request does not ask for less
  double job_ttl = 3600;     // finished jobs are dropped after this long
  std::string default_probability = "0.99";
  std::string ui_dir;  // static files under /ui; empty for none
};

/// SIA_HOST, SIA_PORT, SIA_WORKERS, SIA_QUEUE_DEPTH, SIA_JOB_TIMEOUT,
/// SIA_JOB_TTL, SIA_PROBABILITY, SIA_UI_DIR over the defaults.
ServiceConfig config_from_env();

enum class JobStatus { Queued, Running, Done, Failed, Cancelled };
std::string to_string(JobStatus s);
inline bool terminal(JobStatus s) { return s == JobStatus::Done || s == JobStatus::Failed || s == JobStatus::Cancelled; }

struct JobSnapshot {
  std::string id;
  JobStatus status = JobStatus::Queued;
  std::string phase;
  std::vector<std::string> log_tail;
  std::optional<json> error;
};

/// In-memory jobs run by a fixed pool of workers.
class JobManager {
 public:
  explicit JobManager(ServiceConfig cfg);
  ~JobManager();
  JobManager(const JobManager&) = delete;
  JobManager& operator=(const JobManager&) = delete;

  /// Empty when the queue is full.
  std::optional<std::string> submit(AnalysisRequest req);
  std::optional<JobSnapshot> status(const std::string& id, std::size_t tail = 50);
  enum class Fetch { Ok, Unknown, NotDone };
  Fetch result(const std::string& id, std::string& body);
  enum class Cancel { Ok, Unknown, Terminal };
  Cancel cancel(const std::string& id);

  std::size_t queued() const;
  const ServiceConfig& config() const { return cfg_; }

 private:
  struct Job {
    std::string id;
    AnalysisRequest request;
    JobStatus status = JobStatus::Queued;
    std::string phase;
    std::vector<std::string> logs;
    std::string result;  // serialized once, so fetches are byte-identical
    std::optional<json> error;
    algebra::Interrupt interrupt;
    std::chrono::steady_clock::time_point finished;
  };

  void work();
  void run(const std::shared_ptr<Job>& job);
  void evict_locked();

  ServiceConfig cfg_;
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::map<std::string, std::shared_ptr<Job>> jobs_;
  std::deque<std::shared_ptr<Job>> queue_;
  std::vector<std::thread> workers_;
  std::uint64_t counter_ = 0;
  bool stop_ = false;
};

/// HTTP front end: POST /analyses, GET /analyses/{id}, GET
/// /analyses/{id}/result, DELETE /analyses/{id}, GET /examples, GET
/// /healthz, and static files under /ui.
class Server {
 public:
  explicit Server(ServiceConfig cfg);
  ~Server();

  /// Binds and returns the port (useful with port 0).
  int bind();
  /// Blocks until stop().
  void listen();
  void stop();
  JobManager& jobs() { return *jobs_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::unique_ptr<JobManager> jobs_;
};

}  // namespace sia::service
