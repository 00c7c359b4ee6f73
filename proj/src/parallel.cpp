#include "kasami/parallel.hpp"

namespace kasami {

unsigned default_workers() noexcept { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace kasami
