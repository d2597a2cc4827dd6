#pragma once

namespace nnfif {

struct Point2 {
    double x;
    double y;
};

} // namespace nnfif
