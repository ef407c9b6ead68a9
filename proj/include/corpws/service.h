#ifndef CORPWS_SERVICE_H_
#define CORPWS_SERVICE_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "corpws/corpus.h"
#include "corpws/query.h"
#include "corpws/tiwtiadur.h"

namespace httplib {
class Server;
}

namespace corpws {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data_dir;     // tagset, lexicon, rules and sem/ lexicons
  std::string manifest;     // corpus manifest.tsv
  std::string static_dir;   // optional UI assets

  // CORPWS_HOST and CORPWS_PORT replace the bind address when set.
  ServiceConfig with_env() const;
  // Throws IoError when a required path is unreadable.
  void validate() const;
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Transport-free request handling; `query` holds URL parameters.
  HttpResponse handle(std::string_view method, std::string_view path,
                      const std::map<std::string, std::string>& query,
                      std::string_view body) const;

  // Rebuilds the corpus snapshot from the manifest and swaps it in.
  void reload();

  // Binds and blocks until stop(). Returns false when binding fails.
  bool listen();
  // Binds to an ephemeral port on the configured host; returns the port or -1.
  int bind_any_port();
  bool listen_after_bind();
  void stop();

  const ServiceConfig& config() const { return config_; }

 private:
  struct State {
    std::shared_ptr<const CorpusSnapshot> all;
    std::shared_ptr<const CorpusSnapshot> open;  // without sensitive documents
    BandTable bands;
  };
  struct StoredTask {
    std::string kind;
    std::vector<std::string> answers;
  };

  std::shared_ptr<const State> state() const;
  void remember(const std::string& task_id, StoredTask task) const;
  std::optional<StoredTask> recall(const std::string& task_id) const;
  void install_routes();

  HttpResponse route(std::string_view method, std::string_view path,
                     const std::map<std::string, std::string>& query,
                     std::string_view body) const;

  ServiceConfig config_;
  Pipeline pipeline_;
  mutable std::mutex state_mutex_;
  std::shared_ptr<const State> state_;
  mutable std::mutex task_mutex_;
  mutable std::unordered_map<std::string, StoredTask> tasks_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace corpws

#endif  // CORPWS_SERVICE_H_
