#pragma once

// Finitely described configurations of Z: explicit values on a finite base
// window, a left tail, and a right tail that may be a finite-lookback
// recurrence. Evaluation is deterministic and memoized under a mutex, so
// concurrent readers observe a pure function of the index.

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "symdyn/core.hpp"
#include "symdyn/error.hpp"

namespace symdyn {

template <class T>
class GeneratedConfig {
 public:
  struct Constant {
    T value;
  };
  // value(n) = cycle[(n - phase) mod |cycle|]
  struct Periodic {
    std::vector<T> cycle;
    std::int64_t phase = 0;
  };
  // value(n) = source(n + offset)
  struct Delegate {
    std::shared_ptr<const GeneratedConfig> source;
    std::int64_t offset = 0;
  };
  // value(n) = step(n, values at n-lookback .. n-1)
  struct Recurrence {
    std::size_t lookback = 1;
    std::function<T(std::int64_t, std::span<const T>)> step;
  };
  // No values: queries are range errors.
  struct Undefined {};

  using LeftTail = std::variant<Constant, Periodic, Delegate, Undefined>;
  using RightTail = std::variant<Constant, Periodic, Delegate, Recurrence, Undefined>;

  // `start` is the first index of the base block; the left tail covers
  // indices < start and the right tail covers indices >= start + |base|.
  GeneratedConfig(std::int64_t start, std::vector<T> base, LeftTail left, RightTail right)
      : start_(start), base_(std::move(base)), left_(std::move(left)), right_(std::move(right)) {
    if (auto* rec = std::get_if<Recurrence>(&right_)) {
      if (rec->lookback == 0 || !rec->step) throw DomainError("recurrence: lookback must be positive");
    }
    if (auto* p = std::get_if<Periodic>(&left_); p && p->cycle.empty())
      throw DomainError("periodic tail: empty cycle");
    if (auto* p = std::get_if<Periodic>(&right_); p && p->cycle.empty())
      throw DomainError("periodic tail: empty cycle");
  }

  GeneratedConfig(const GeneratedConfig&) = delete;
  GeneratedConfig& operator=(const GeneratedConfig&) = delete;

  static std::shared_ptr<const GeneratedConfig> constant(T value) {
    return std::make_shared<const GeneratedConfig>(0, std::vector<T>{}, Constant{value}, Constant{value});
  }

  // Same description, empty memo table.
  std::shared_ptr<const GeneratedConfig> fresh_copy() const {
    return std::make_shared<const GeneratedConfig>(start_, base_, left_, right_);
  }

  std::int64_t base_start() const noexcept { return start_; }
  std::int64_t right_start() const noexcept { return start_ + static_cast<std::int64_t>(base_.size()); }
  const std::vector<T>& base() const noexcept { return base_; }
  const LeftTail& left_tail() const noexcept { return left_; }
  const RightTail& right_tail() const noexcept { return right_; }

  T operator()(std::int64_t n) const { return at(n); }

  T at(std::int64_t n) const {
    if (n >= start_ && n < right_start()) return base_[static_cast<std::size_t>(n - start_)];
    if (n < start_) return left_value(n);
    return right_value(n);
  }

  std::vector<T> values(const Window& w) const {
    std::vector<T> out;
    out.reserve(w.size());
    for (std::int64_t n = w.lo(); n <= w.hi(); ++n) out.push_back(at(n));
    return out;
  }

 private:
  T left_value(std::int64_t n) const {
    return std::visit(
        [&](const auto& tail) -> T {
          using K = std::decay_t<decltype(tail)>;
          if constexpr (std::is_same_v<K, Constant>) {
            return tail.value;
          } else if constexpr (std::is_same_v<K, Periodic>) {
            const auto p = static_cast<std::int64_t>(tail.cycle.size());
            return tail.cycle[static_cast<std::size_t>(floor_mod(n - tail.phase, p))];
          } else if constexpr (std::is_same_v<K, Delegate>) {
            return tail.source->at(n + tail.offset);
          } else {
            throw RangeError("configuration undefined at index " + std::to_string(n));
          }
        },
        left_);
  }

  T right_value(std::int64_t n) const {
    return std::visit(
        [&](const auto& tail) -> T {
          using K = std::decay_t<decltype(tail)>;
          if constexpr (std::is_same_v<K, Constant>) {
            return tail.value;
          } else if constexpr (std::is_same_v<K, Periodic>) {
            const auto p = static_cast<std::int64_t>(tail.cycle.size());
            return tail.cycle[static_cast<std::size_t>(floor_mod(n - tail.phase, p))];
          } else if constexpr (std::is_same_v<K, Delegate>) {
            return tail.source->at(n + tail.offset);
          } else if constexpr (std::is_same_v<K, Recurrence>) {
            return recurrence_value(tail, n);
          } else {
            throw RangeError("configuration undefined at index " + std::to_string(n));
          }
        },
        right_);
  }

  T recurrence_value(const Recurrence& rec, std::int64_t n) const {
    const std::int64_t first = right_start();
    const auto idx = static_cast<std::size_t>(n - first);
    std::lock_guard lock(mutex_);
    const auto k = static_cast<std::int64_t>(rec.lookback);
    while (cache_.size() <= idx) {
      const std::int64_t m = first + static_cast<std::int64_t>(cache_.size());
      std::vector<T> prev;
      prev.reserve(rec.lookback);
      for (std::int64_t j = m - k; j < m; ++j) {
        if (j >= first)
          prev.push_back(cache_[static_cast<std::size_t>(j - first)]);
        else
          prev.push_back(at(j));
      }
      cache_.push_back(rec.step(m, std::span<const T>(prev)));
    }
    return cache_[idx];
  }

  std::int64_t start_;
  std::vector<T> base_;
  LeftTail left_;
  RightTail right_;
  mutable std::mutex mutex_;
  mutable std::vector<T> cache_;
};

}  // namespace symdyn
