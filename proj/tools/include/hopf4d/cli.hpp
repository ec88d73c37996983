#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace httplib {
class Server;
}

namespace hopf4d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs the hopf4d command line. `args` excludes the program name.
/// Returns 0 on success, 1 for usage, input and IO errors, 2 for
/// math-domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Handler behind POST /scene: request JSON in, canonical scene JSON out.
/// Failures give 422 with {"error": <error name>, "message": ...}.
HttpReply handle_scene_request(const std::string& body);

/// HTTP front end for handle_scene_request on POST /scene.
class SceneServer {
 public:
  SceneServer();
  ~SceneServer();
  SceneServer(const SceneServer&) = delete;
  SceneServer& operator=(const SceneServer&) = delete;

  /// Binds the socket; port 0 picks a free port. Returns the bound port, or
  /// -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called from another thread.
  void listen();
  void stop();

 private:
  std::unique_ptr<httplib::Server> server_;
};

/// Blocks serving POST /scene until the process is stopped.
int serve(const std::string& host, int port, std::ostream& err);

}  // namespace hopf4d::cli
