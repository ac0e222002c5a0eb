#pragma once

#include <atomic>
#include <condition_variable>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace hyper::detail {

/// Persistent fork-join pool for per-partition tasks. parallel_for splits
/// [0, count) across the workers and the calling thread, blocks until every
/// index is done, and rethrows the first exception a task raised. With zero
/// extra workers it degenerates to a plain sequential loop.
///
/// Completion is tracked per item, not per worker: the call returns as soon
/// as the last index finishes, even when some workers have not woken up yet.
/// Each dispatch gets its own batch state, so a worker waking late simply
/// finds the stale batch drained and goes back to sleep.
class ThreadPool {
 public:
  explicit ThreadPool(unsigned extra_workers) {
    workers_.reserve(extra_workers);
    for (unsigned i = 0; i < extra_workers; ++i) {
      workers_.emplace_back([this] { worker_loop(); });
    }
  }

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  ~ThreadPool() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      stop_ = true;
      ++generation_;
    }
    cv_.notify_all();
    for (auto& w : workers_) w.join();
  }

  void parallel_for(size_t count, const std::function<void(size_t)>& body) {
    if (count == 0) return;
    if (workers_.empty()) {
      for (size_t i = 0; i < count; ++i) body(i);
      return;
    }
    auto batch = std::make_shared<Batch>();
    batch->body = &body;
    batch->count = count;
    batch->remaining.store(count, std::memory_order_relaxed);
    {
      std::lock_guard<std::mutex> lock(mu_);
      batch_ = batch;
      ++generation_;
    }
    cv_.notify_all();
    run_tasks(*batch);
    {
      std::unique_lock<std::mutex> lock(mu_);
      done_cv_.wait(lock, [&] { return batch->remaining.load(std::memory_order_acquire) == 0; });
    }
    if (batch->error) std::rethrow_exception(batch->error);
  }

  size_t width() const { return workers_.size() + 1; }

 private:
  struct Batch {
    const std::function<void(size_t)>* body = nullptr;
    size_t count = 0;
    std::atomic<size_t> next{0};
    std::atomic<size_t> remaining{0};
    std::exception_ptr error;  // first failure; guarded by the pool mutex
  };

  void worker_loop() {
    uint64_t seen = 0;
    while (true) {
      std::shared_ptr<Batch> batch;
      {
        std::unique_lock<std::mutex> lock(mu_);
        cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
        seen = generation_;
        if (stop_) return;
        batch = batch_;
      }
      if (batch) run_tasks(*batch);
    }
  }

  void run_tasks(Batch& batch) {
    while (true) {
      size_t i = batch.next.fetch_add(1, std::memory_order_relaxed);
      if (i >= batch.count) return;
      try {
        (*batch.body)(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu_);
        if (!batch.error) batch.error = std::current_exception();
      }
      if (batch.remaining.fetch_sub(1, std::memory_order_acq_rel) == 1) {
        // Last item: wake the dispatcher if it is already waiting.
        std::lock_guard<std::mutex> lock(mu_);
        done_cv_.notify_all();
      }
    }
  }

  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_;
  std::condition_variable done_cv_;
  std::shared_ptr<Batch> batch_;  // guarded by mu_
  uint64_t generation_ = 0;
  bool stop_ = false;
};

}  // namespace hyper::detail
