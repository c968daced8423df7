#ifndef SOLBRACE_Q8_HPP
#define SOLBRACE_Q8_HPP

#include "solbrace/group.hpp"

namespace solbrace {

// The order-8 quaternion group on coordinates (x, y, z) over F_2, written
// a^x b^y c^z with c the common square of a and b. Index is 4x + 2y + z.
// The cocycle in the last coordinate encodes ba = (ab)c and a^2 = b^2 = c.
inline FiniteGroup q8_group() {
    auto name = [](int x, int y, int z) {
        std::string s;
        if (x) s += "a";
        if (y) s += "b";
        if (z) s += "c";
        return s.empty() ? std::string("1") : s;
    };
    std::vector<std::string> labels(8);
    std::vector<std::vector<int>> rows(8, std::vector<int>(8));
    for (int x1 = 0; x1 < 2; ++x1)
        for (int y1 = 0; y1 < 2; ++y1)
            for (int z1 = 0; z1 < 2; ++z1) {
                labels[4 * x1 + 2 * y1 + z1] = name(x1, y1, z1);
                for (int x2 = 0; x2 < 2; ++x2)
                    for (int y2 = 0; y2 < 2; ++y2)
                        for (int z2 = 0; z2 < 2; ++z2) {
                            int z3 = (z1 + z2 + x2 * y1 + y1 * y2 + x1 * x2) % 2;
                            rows[4 * x1 + 2 * y1 + z1][4 * x2 + 2 * y2 + z2] =
                                4 * ((x1 + x2) % 2) + 2 * ((y1 + y2) % 2) + z3;
                        }
            }
    return make_group(std::move(labels), rows);
}

}  // namespace solbrace

#endif
