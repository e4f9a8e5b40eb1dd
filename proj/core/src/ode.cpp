#include "monoconv/ode.hpp"

#include <cstdlib>
#include <string>

namespace monoconv {

long default_max_steps() {
    if (const char* env = std::getenv("MONOCONV_MAX_STEPS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return 1000000;
}

}  // namespace monoconv
