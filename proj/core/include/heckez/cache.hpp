#pragma once

#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace heckez {

/// Read-dominant memo cache with at-most-once computation under
/// concurrency. The computing thread holds no lock while it works;
/// concurrent readers of the same key wait on a shared future.
template <class K, class V>
class OnceCache {
public:
  using Ptr = std::shared_ptr<const V>;

  Ptr get_or_compute(const K& key, const std::function<V()>& compute) {
    std::shared_future<Ptr> fut;
    std::shared_ptr<std::promise<Ptr>> mine;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = futures_.find(key);
      if (it != futures_.end()) {
        fut = it->second;
      } else {
        mine = std::make_shared<std::promise<Ptr>>();
        fut = mine->get_future().share();
        futures_.emplace(key, fut);
      }
    }
    if (mine) {
      try {
        mine->set_value(std::make_shared<const V>(compute()));
      } catch (...) {
        mine->set_exception(std::current_exception());
        std::lock_guard<std::mutex> lock(mu_);
        futures_.erase(key);
        throw;
      }
    }
    return fut.get();
  }

private:
  std::mutex mu_;
  std::map<K, std::shared_future<Ptr>> futures_;
};

namespace cache {

/// Schema version stamped into every cache entry; entries with a different
/// version are recomputed silently.
inline constexpr int kSchemaVersion = 1;

/// Cache directory from HECKEZ_CACHE_DIR; empty when unset (no persistence).
std::string directory();

/// Load the JSON text of a cache entry; nullopt on miss, unreadable file,
/// or schema version mismatch. `name` is a file stem such as
/// `classpoly_n4`.
std::optional<std::string> load(const std::string& name);

/// Store JSON text atomically (write-temp-then-rename). No-op when no
/// cache directory is configured. The text must already carry a
/// `schema_version` field; store() asserts that.
void store(const std::string& name, const std::string& json_text);

}  // namespace cache

}  // namespace heckez
