#include "howe/worker_pool.hpp"

namespace howe {

unsigned default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n ? n : 1;
}

} // namespace howe
