#include "kconn/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kconn {

void Instance::validate() const {
    if (dim != 2 && dim != 3) throw std::invalid_argument("instance: dim must be 2 or 3");
    if (!std::isfinite(h) || h <= 0.0)
        throw std::invalid_argument("instance: h must be positive and finite");
    if (positions.empty()) throw std::invalid_argument("instance: needs at least one robot");
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const Vec3& p = positions[i];
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
            throw std::invalid_argument("instance: non-finite coordinate at robot " +
                                        std::to_string(i));
        if (dim == 2 && p.z != 0.0)
            throw std::invalid_argument("instance: 2D instance has nonzero z at robot " +
                                        std::to_string(i));
    }
}

}  // namespace kconn
