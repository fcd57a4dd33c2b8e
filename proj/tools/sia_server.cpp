#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "sia/service/server.hpp"

namespace {
sia::service::Server* running = nullptr;
void on_signal(int) {
  if (running) running->stop();
}
}  // namespace

int main(int argc, char** argv) {
  sia::service::ServiceConfig cfg;
  try {
    cfg = sia::service::config_from_env();
  } catch (const std::exception& e) {
    std::cerr << "config: " << e.what() << "\n";
    return 1;
  }
  CLI::App app{"Identifiability analysis service"};
  app.add_option("--host", cfg.host)->capture_default_str();
  app.add_option("--port", cfg.port)->capture_default_str();
  app.add_option("--workers", cfg.workers)->capture_default_str();
  app.add_option("--queue-depth", cfg.queue_depth)->capture_default_str();
  app.add_option("--job-timeout", cfg.job_timeout, "seconds")->capture_default_str();
  app.add_option("--ui-dir", cfg.ui_dir, "static files served under /ui");
  CLI11_PARSE(app, argc, argv);

  sia::service::Server server(cfg);
  int port = 0;
  try {
    port = server.bind();
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  running = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "listening on " << cfg.host << ":" << port << std::endl;
  server.listen();
  return 0;
}
