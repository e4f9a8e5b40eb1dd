#include "monoconv/errors.hpp"

#include <sstream>

namespace monoconv {

Error::Error(std::string kind, const std::string& what, bool numeric)
    : std::runtime_error(kind + ": " + what), kind_(std::move(kind)), numeric_(numeric) {}

static std::string pole_message(double x) {
    std::ostringstream os;
    os.precision(17);
    os << "evaluation point coincides with an atom at " << x;
    return os.str();
}

PoleAt::PoleAt(double x) : Error("PoleAt", pole_message(x), true), x_(x) {}

}  // namespace monoconv
