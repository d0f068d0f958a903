#include "fusionring/lattice.hpp"

#include "fusionring/errors.hpp"

#include <sstream>

namespace fusionring {

Weight parse_weight(const std::string& text, int rank) {
    std::vector<int> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("malformed weight literal '" + text + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw InvalidInput("malformed weight literal '" + text + "'");
        coords.push_back(v);
    }
    if (static_cast<int>(coords.size()) != rank)
        throw InvalidInput("weight '" + text + "' has " + std::to_string(coords.size()) +
                           " coordinates, expected " + std::to_string(rank));
    return Weight(std::move(coords));
}

}  // namespace fusionring
