#include "hopf/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopf {

int TaskPool::default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

TaskPool::TaskPool(int threads) : nthreads_(std::max(1, threads)) {
    workers_.reserve(nthreads_ - 1);
    for (int id = 1; id < nthreads_; ++id)
        workers_.emplace_back([this, id] { worker(id); });
}

TaskPool::~TaskPool() {
    {
        std::lock_guard<std::mutex> lock(mu_);
        stop_ = true;
    }
    cv_start_.notify_all();
    for (auto& w : workers_) w.join();
}

void TaskPool::parallel_for(
    std::size_t n, const std::function<void(int, std::size_t, std::size_t)>& fn) {
    const auto chunk_range = [&](int chunk) {
        const std::size_t lo = n * chunk / nthreads_;
        const std::size_t hi = n * (chunk + 1) / nthreads_;
        return std::pair<std::size_t, std::size_t>{lo, hi};
    };
    if (nthreads_ == 1 || n < 2) {
        fn(0, 0, n);
        return;
    }
    {
        std::lock_guard<std::mutex> lock(mu_);
        job_ = &fn;
        job_n_ = n;
        pending_ = nthreads_ - 1;
        ++generation_;
    }
    cv_start_.notify_all();
    const auto [lo, hi] = chunk_range(0);
    fn(0, lo, hi);
    std::unique_lock<std::mutex> lock(mu_);
    cv_done_.wait(lock, [this] { return pending_ == 0; });
    job_ = nullptr;
}

void TaskPool::worker(int id) {
    std::size_t seen = 0;
    for (;;) {
        const std::function<void(int, std::size_t, std::size_t)>* job;
        std::size_t n;
        {
            std::unique_lock<std::mutex> lock(mu_);
            cv_start_.wait(lock, [&] { return stop_ || generation_ != seen; });
            if (stop_) return;
            seen = generation_;
            job = job_;
            n = job_n_;
        }
        const std::size_t lo = n * id / nthreads_;
        const std::size_t hi = n * (id + 1) / nthreads_;
        (*job)(id, lo, hi);
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (--pending_ == 0) cv_done_.notify_one();
        }
    }
}

}  // namespace hopf
