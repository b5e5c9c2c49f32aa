#include <boost/math/special_functions/airy.hpp>

#include "dodson/special_functions.hpp"

namespace dodson {

double airy_ai(double z) { return boost::math::airy_ai(z); }

}  // namespace dodson
