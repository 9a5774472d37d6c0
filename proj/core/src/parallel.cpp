#include "parthom/parallel.hpp"

#include <cstdlib>
#include <string>

namespace parthom {

unsigned thread_budget() {
    if (const char* env = std::getenv("PARTHOM_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (...) {
        }
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace parthom
