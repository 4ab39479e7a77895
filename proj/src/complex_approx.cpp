#include "cyclohodge/complex_approx.hpp"

#include <cmath>
#include <sstream>

namespace cyclohodge {

double ComplexApprox::abs() const {
    return std::sqrt(abs2().to_double());
}

std::string ComplexApprox::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << re.to_double();
    double i = im.to_double();
    os << (i < 0 ? " - " : " + ") << std::abs(i) << "i";
    return os.str();
}

}  // namespace cyclohodge
