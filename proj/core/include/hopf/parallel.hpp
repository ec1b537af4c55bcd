#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hopf {

/// Fixed-partition worker pool. parallel_for splits [0, n) into one contiguous
/// chunk per thread, so which indices a thread computes never depends on
/// timing; with disjoint writes per index and reductions done sequentially
/// afterwards, results are bit-identical for every thread count.
class TaskPool {
  public:
    explicit TaskPool(int threads);
    ~TaskPool();

    TaskPool(const TaskPool&) = delete;
    TaskPool& operator=(const TaskPool&) = delete;

    int threads() const { return nthreads_; }

    /// fn(chunk, begin, end); blocks until every chunk has run.
    void parallel_for(std::size_t n,
                      const std::function<void(int, std::size_t, std::size_t)>& fn);

    static int default_threads();

  private:
    void worker(int id);

    int nthreads_;
    std::vector<std::thread> workers_;
    std::mutex mu_;
    std::condition_variable cv_start_, cv_done_;
    const std::function<void(int, std::size_t, std::size_t)>* job_ = nullptr;
    std::size_t job_n_ = 0;
    std::size_t generation_ = 0;
    int pending_ = 0;
    bool stop_ = false;
};

}  // namespace hopf
