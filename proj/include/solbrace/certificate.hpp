#ifndef SOLBRACE_CERTIFICATE_HPP
#define SOLBRACE_CERTIFICATE_HPP

#include <string>
#include <vector>

namespace solbrace {

// One named check with its outcome. Constructions collect these instead of
// silently trusting the theory they implement; reports surface them.
struct Certificate {
    std::string name;
    bool pass = false;
    std::string witness;  // what failed, empty when pass
};

inline bool all_pass(const std::vector<Certificate>& certs) {
    for (const auto& c : certs)
        if (!c.pass) return false;
    return true;
}

}  // namespace solbrace

#endif
