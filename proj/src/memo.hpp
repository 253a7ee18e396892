#ifndef CMHOPF_SRC_MEMO_HPP
#define CMHOPF_SRC_MEMO_HPP

#include <map>
#include <mutex>

namespace cmhopf::detail {

// Fill-once cache shared between threads. Two threads racing on the same key
// both compute the same value and the first insert wins, so a lookup always
// returns what a fresh computation would.
template <typename Key, typename Value>
class Memo {
 public:
  template <typename F>
  Value get(Key const& key, F&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) {
        return it->second;
      }
    }
    Value value = compute();
    std::lock_guard lock(mutex_);
    return values_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex            mutex_;
  std::map<Key, Value>  values_;
};

}  // namespace cmhopf::detail

#endif  // CMHOPF_SRC_MEMO_HPP
