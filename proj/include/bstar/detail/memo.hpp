#ifndef BSTAR_DETAIL_MEMO_HPP
#define BSTAR_DETAIL_MEMO_HPP

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace bstar::detail {

// Concurrent readers, exclusive insert. Values are immutable once published;
// racing computations of the same key are harmless because results are
// deterministic, and the first insert wins.
template <typename Key, typename Value>
class MemoTable {
 public:
  std::shared_ptr<const Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    const auto it = table_.find(key);
    return it == table_.end() ? nullptr : it->second;
  }

  // Stores `value` unless `keep_existing(existing)` says the current entry is at
  // least as good; returns whichever entry ends up in the table.
  template <typename KeepExisting>
  std::shared_ptr<const Value> publish(const Key& key, std::shared_ptr<const Value> value,
                                       KeepExisting keep_existing) {
    std::unique_lock lock(mutex_);
    auto& slot = table_[key];
    if (!slot || !keep_existing(*slot)) slot = std::move(value);
    return slot;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> table_;
};

}  // namespace bstar::detail

#endif  // BSTAR_DETAIL_MEMO_HPP
