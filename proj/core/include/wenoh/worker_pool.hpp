// Persistent thread team with deterministic static partitioning. Results never
// depend on the worker count: every parallel region writes disjoint slots and
// any reductions are combined serially in worker order afterwards.
#pragma once

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace wenoh {

class WorkerPool {
 public:
  explicit WorkerPool(int workers) : workers_(workers < 1 ? 1 : workers) {
    threads_.reserve(static_cast<std::size_t>(workers_ - 1));
    for (int k = 1; k < workers_; ++k)
      threads_.emplace_back([this, k] { worker_loop(k); });
  }

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  ~WorkerPool() {
    {
      std::lock_guard<std::mutex> lock(m_);
      stop_ = true;
      ++generation_;
    }
    cv_work_.notify_all();
    for (auto& t : threads_) t.join();
  }

  int workers() const { return workers_; }

  // Runs fn(k) for k = 0 .. workers-1, worker 0 being the caller. Exceptions are
  // collected per worker and the lowest-index one is rethrown.
  void run(const std::function<void(int)>& fn) {
    if (workers_ == 1) {
      fn(0);
      return;
    }
    {
      std::lock_guard<std::mutex> lock(m_);
      task_ = &fn;
      done_count_ = 0;
      errors_.assign(static_cast<std::size_t>(workers_), nullptr);
      ++generation_;
    }
    cv_work_.notify_all();
    try {
      fn(0);
    } catch (...) {
      errors_[0] = std::current_exception();
    }
    {
      std::unique_lock<std::mutex> lock(m_);
      cv_main_.wait(lock, [this] { return done_count_ == workers_ - 1; });
      task_ = nullptr;
    }
    for (const auto& e : errors_)
      if (e) std::rethrow_exception(e);
  }

  // Static block decomposition of [0, n): worker k gets one contiguous range.
  static void chunk(int n, int workers, int k, int& begin, int& end) {
    const int base = n / workers, rem = n % workers;
    begin = k * base + (k < rem ? k : rem);
    end = begin + base + (k < rem ? 1 : 0);
  }

 private:
  void worker_loop(int k) {
    std::uint64_t seen = 0;
    for (;;) {
      const std::function<void(int)>* task = nullptr;
      {
        std::unique_lock<std::mutex> lock(m_);
        cv_work_.wait(lock, [&] { return generation_ != seen; });
        seen = generation_;
        if (stop_) return;
        task = task_;
      }
      if (task) {
        try {
          (*task)(k);
        } catch (...) {
          errors_[static_cast<std::size_t>(k)] = std::current_exception();
        }
      }
      {
        std::lock_guard<std::mutex> lock(m_);
        ++done_count_;
      }
      cv_main_.notify_one();
    }
  }

  int workers_;
  std::vector<std::thread> threads_;
  std::mutex m_;
  std::condition_variable cv_work_, cv_main_;
  const std::function<void(int)>* task_ = nullptr;
  std::vector<std::exception_ptr> errors_;
  std::uint64_t generation_ = 0;
  int done_count_ = 0;
  bool stop_ = false;
};

}  // namespace wenoh
