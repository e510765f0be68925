#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace photonbox {

template<class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn&& fn)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

    std::vector<std::optional<T>> slots(count);
    if (threads <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            slots[i].emplace(fn(i));
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t i = next++; i < count; i = next++)
            {
                try
                {
                    slots[i].emplace(fn(i));
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        };
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(worker);
        pool.clear();
        if (failure)
            std::rethrow_exception(failure);
    }

    std::vector<T> out;
    out.reserve(count);
    for (auto& slot : slots)
        out.push_back(std::move(*slot));
    return out;
}

}  // namespace photonbox
