#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace iplogic {

// Single-consumer lazy sequence: next() yields items until it returns
// nullopt, after which it keeps returning nullopt.  Streams are move-only;
// enumeration order is fixed by the producer, so two streams built from the
// same inputs yield identical sequences.
template <typename T>
class Stream {
public:
  using Producer = std::function<std::optional<T>()>;

  explicit Stream(Producer producer) : producer_(std::move(producer)) {}

  Stream(Stream&&) noexcept = default;
  Stream& operator=(Stream&&) noexcept = default;
  Stream(const Stream&) = delete;
  Stream& operator=(const Stream&) = delete;

  static Stream of(std::vector<T> items) {
    return Stream([items = std::move(items), i = std::size_t{0}]() mutable -> std::optional<T> {
      if (i == items.size()) return std::nullopt;
      return items[i++];
    });
  }

  static Stream empty() { return Stream([] { return std::optional<T>{}; }); }

  std::optional<T> next() { return producer_(); }

  // Up to limit leading items.
  std::vector<T> take(std::size_t limit) {
    std::vector<T> out;
    while (out.size() < limit) {
      auto item = next();
      if (!item) break;
      out.push_back(std::move(*item));
    }
    return out;
  }

  // All remaining items; the stream must be finite.
  std::vector<T> drain() {
    std::vector<T> out;
    while (auto item = next()) out.push_back(std::move(*item));
    return out;
  }

private:
  Producer producer_;
};

}  // namespace iplogic
