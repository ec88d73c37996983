#include <httplib.h>

#include "hopf4d/cli.hpp"

namespace hopf4d::cli {

SceneServer::SceneServer() : server_(std::make_unique<httplib::Server>()) {
  server_->Post("/scene", [](const httplib::Request& req, httplib::Response& res) {
    const HttpReply reply = handle_scene_request(req.body);
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  });
}

SceneServer::~SceneServer() = default;

int SceneServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

void SceneServer::listen() { server_->listen_after_bind(); }

void SceneServer::stop() { server_->stop(); }

int serve(const std::string& host, int port, std::ostream& err) {
  SceneServer server;
  const int bound = server.bind(host, port);
  if (bound < 0) {
    err << "error: cannot listen on " << host << ":" << port << "\n";
    return kExitUsage;
  }
  err << "serving POST /scene on " << host << ":" << bound << "\n";
  server.listen();
  return kExitOk;
}

}  // namespace hopf4d::cli
