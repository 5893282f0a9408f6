/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_SRC_PARALLEL_HH
#define RECONF_SRC_PARALLEL_HH 1

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace reconf::detail
{
    /// Calls work(i) for i in [0, count), striding indices across workers.
    /// The first exception thrown by any worker is rethrown here.
    template <typename Work_>
    auto parallel_for(std::size_t count, int workers, const Work_ & work) -> void
    {
        if (workers <= 1 || count < 2) {
            for (std::size_t i = 0 ; i < count ; ++i)
                work(i);
            return;
        }

        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> threads;
        for (int t = 0 ; t < workers ; ++t)
            threads.emplace_back([&, t] {
                try {
                    for (std::size_t i = t ; i < count ; i += workers)
                        work(i);
                }
                catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                }
            });
        for (auto & thread : threads)
            thread.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}

#endif
