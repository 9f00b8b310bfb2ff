#pragma once

#include <atomic>
#include <cstdlib>

namespace semiweyl {

namespace detail {

inline std::atomic<int>& degree_cap_storage() {
    static std::atomic<int> cap = [] {
        if (const char* env = std::getenv("SEMIWEYL_DEGREE_CAP")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 64;
    }();
    return cap;
}

}  // namespace detail

// Total-degree guard on products; keeps audit loops from blowing up.
inline int degree_cap() { return detail::degree_cap_storage().load(); }
inline void set_degree_cap(int cap) { detail::degree_cap_storage().store(cap); }

}  // namespace semiweyl
