#include "sodd/report.hpp"

#include <sstream>

namespace sodd {

std::string Report::summary() const {
    std::ostringstream os;
    if (pass()) {
        os << "pass (" << checked.size() << " properties)";
        return os.str();
    }
    os << violations.size() << " violation(s)";
    for (const auto& v : violations) {
        os << "\n  " << v.property << " [";
        for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
        os << "]";
        if (!v.detail.empty()) os << " " << v.detail;
    }
    return os.str();
}

}  // namespace sodd
