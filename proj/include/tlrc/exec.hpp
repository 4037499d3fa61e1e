#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace tlrc {

/// Selects between the OpenMP kernels and their serial reference versions.
enum class Exec { serial, parallel };

/// Thread-safe memo table: concurrent readers, idempotent insertion. The value
/// is computed outside the lock; when two threads race, the first insert wins
/// and both observe the same stored value.
template <class Key, class Value>
class ConcurrentMemo {
 public:
  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

  [[nodiscard]] std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace tlrc
