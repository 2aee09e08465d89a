#include "logimap/map_param.hpp"

#include <stdexcept>
#include <string>

namespace logimap {

MapParam::MapParam(double r) : r_(r) {
  if (!(r > 0.0 && r <= 4.0))
    throw std::invalid_argument("logistic map parameter r=" +
                                std::to_string(r) + " outside (0, 4]");
}

}  // namespace logimap
