#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace hyper {

/// Reduces two messages bound for the same destination into one. The engine
/// assumes the function is associative and commutative; it applies combiners
/// in whatever grouping the partitioning induces and never checks the
/// algebraic contract at runtime.
template <typename Msg>
using MessageCombiner = std::function<Msg(const Msg&, const Msg&)>;

template <typename T>
MessageCombiner<T> sum_combiner() {
  return [](const T& a, const T& b) { return a + b; };
}

template <typename T>
MessageCombiner<T> min_combiner() {
  return [](const T& a, const T& b) { return std::min(a, b); };
}

template <typename T>
MessageCombiner<T> max_combiner() {
  return [](const T& a, const T& b) { return std::max(a, b); };
}

template <typename A, typename B>
MessageCombiner<std::pair<A, B>> pair_sum_combiner() {
  return [](const std::pair<A, B>& a, const std::pair<A, B>& b) {
    return std::pair<A, B>{a.first + b.first, a.second + b.second};
  };
}

/// Concatenation keeps every message. It is associative but not commutative,
/// so consumers must reduce the collected list order-insensitively (sort
/// first, or fold with a commutative operation).
template <typename T>
MessageCombiner<std::vector<T>> concat_combiner() {
  return [](const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
}

/// Set union over sorted unique vectors, truncated to the `cap` smallest
/// elements. Keeping the minimal `cap` keeps the operation associative and
/// commutative despite the size bound.
template <typename T>
MessageCombiner<std::vector<T>> capped_set_union_combiner(size_t cap) {
  return [cap](const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    out.reserve(std::min(a.size() + b.size(), cap));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    if (out.size() > cap) out.resize(cap);
    return out;
  };
}

/// Default combiner registry. A specialization of DefaultCombiner<T> makes T
/// usable without an explicit combiner choice. Only types with one natural
/// reduction are registered; integer types are deliberately absent (sum, min
/// and max are all plausible), so they require an explicit choice.
template <typename T>
struct DefaultCombiner;  // unregistered types have no definition

template <>
struct DefaultCombiner<double> {
  static MessageCombiner<double> make() { return sum_combiner<double>(); }
};

template <>
struct DefaultCombiner<float> {
  static MessageCombiner<float> make() { return sum_combiner<float>(); }
};

template <>
struct DefaultCombiner<std::pair<double, double>> {
  static MessageCombiner<std::pair<double, double>> make() {
    return pair_sum_combiner<double, double>();
  }
};

template <typename T>
concept HasDefaultCombiner = requires {
  { DefaultCombiner<T>::make() } -> std::convertible_to<MessageCombiner<T>>;
};

template <typename T>
  requires HasDefaultCombiner<T>
MessageCombiner<T> default_combiner() {
  return DefaultCombiner<T>::make();
}

}  // namespace hyper
