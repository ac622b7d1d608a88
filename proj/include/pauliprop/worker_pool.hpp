// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULIPROP_WORKER_POOL_HPP
#define PAULIPROP_WORKER_POOL_HPP

#include <atomic>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace pauliprop {

/// Persistent pool running indexed jobs. parallel_for(count, fn) executes
/// fn(0..count-1) across the pool threads plus the calling thread and
/// returns once every thread has left the round, so job state can be reused
/// immediately after it returns. With thread_count 1 no threads are spawned
/// and the caller runs all indices in order, a pure single-threaded mode.
class WorkerPool {
 public:
  explicit WorkerPool(int thread_count) {
    for (int i = 0; i + 1 < thread_count; ++i) {
      threads_.emplace_back([this] { worker_loop(); });
    }
  }

  ~WorkerPool() {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      stop_ = true;
    }
    start_cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  int thread_count() const { return static_cast<int>(threads_.size()) + 1; }

  void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    if (count == 0) return;
    if (threads_.empty()) {
      for (size_t i = 0; i < count; ++i) fn(i);
      return;
    }
    {
      std::lock_guard<std::mutex> lock(mutex_);
      job_ = &fn;
      count_ = count;
      next_.store(0, std::memory_order_relaxed);
      arrived_ = 0;
      ++generation_;
    }
    start_cv_.notify_all();
    run_share();
    std::unique_lock<std::mutex> lock(mutex_);
    done_cv_.wait(lock, [this] { return arrived_ == threads_.size(); });
    job_ = nullptr;
  }

 private:
  void run_share() {
    while (true) {
      size_t i = next_.fetch_add(1, std::memory_order_relaxed);
      if (i >= count_) return;
      (*job_)(i);
    }
  }

  void worker_loop() {
    uint64_t seen = 0;
    while (true) {
      {
        std::unique_lock<std::mutex> lock(mutex_);
        start_cv_.wait(lock, [&] { return stop_ || generation_ != seen; });
        if (stop_) return;
        seen = generation_;
      }
      run_share();
      {
        std::lock_guard<std::mutex> lock(mutex_);
        ++arrived_;
        if (arrived_ == threads_.size()) done_cv_.notify_one();
      }
    }
  }

  std::vector<std::thread> threads_;
  std::mutex mutex_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  const std::function<void(size_t)>* job_ = nullptr;
  std::atomic<size_t> next_{0};
  size_t count_ = 0;
  size_t arrived_ = 0;
  uint64_t generation_ = 0;
  bool stop_ = false;
};

}  // namespace pauliprop

#endif  // PAULIPROP_WORKER_POOL_HPP
