#pragma once

#include <string>
#include <vector>

namespace semicyclic {

/// Strand orientation in a sliced diagram: down = V, up = V*.
enum class Orientation { down, up };

using Signature = std::vector<Orientation>;

inline char orientation_char(Orientation o) { return o == Orientation::down ? 'd' : 'u'; }

inline std::string signature_string(const Signature& sig) {
    std::string s;
    for (size_t i = 0; i < sig.size(); ++i) {
        if (i) s += ',';
        s += orientation_char(sig[i]);
    }
    return s;
}

inline Signature all_down(int m) { return Signature(static_cast<size_t>(m), Orientation::down); }

} // namespace semicyclic
