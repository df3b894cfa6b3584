#include "pevo/rng.hpp"

namespace pevo {

std::string stream_label(std::string_view purpose, int generation, int index) {
    std::string label(purpose);
    label += '/';
    label += std::to_string(generation);
    label += '/';
    label += std::to_string(index);
    return label;
}

}  // namespace pevo
