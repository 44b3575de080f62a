#include "cjac/poset.hpp"

namespace cjac {

Poset::Poset(std::size_t n) : up_(n, boost::dynamic_bitset<>(n)) {
    for (std::size_t i = 0; i < n; ++i) up_[i].set(i);
}

void Poset::add_relation(std::size_t lower, std::size_t upper) { up_[lower].set(upper); }

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
        boost::dynamic_bitset<> strict = up_[a];
        strict.reset(a);
        // remove everything reachable through an intermediate element
        boost::dynamic_bitset<> above_intermediate(n);
        for (auto k = strict.find_first(); k != boost::dynamic_bitset<>::npos; k = strict.find_next(k)) {
            boost::dynamic_bitset<> beyond = up_[k];
            beyond.reset(k);
            above_intermediate |= beyond;
        }
        boost::dynamic_bitset<> cov = strict - above_intermediate;
        for (auto b = cov.find_first(); b != boost::dynamic_bitset<>::npos; b = cov.find_next(b))
            out.emplace_back(a, b);
    }
    return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a) {
        boost::dynamic_bitset<> strict = up_[a];
        strict.reset(a);
        if (strict.none()) out.push_back(a);
    }
    return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
    std::vector<bool> has_lower(size(), false);
    for (std::size_t a = 0; a < size(); ++a)
        for (auto b = up_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = up_[a].find_next(b))
            if (b != a) has_lower[b] = true;
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < size(); ++a)
        if (!has_lower[a]) out.push_back(a);
    return out;
}

Poset Poset::dual() const {
    Poset out;
    out.up_.assign(size(), boost::dynamic_bitset<>(size()));
    for (std::size_t a = 0; a < size(); ++a)
        for (auto b = up_[a].find_first(); b != boost::dynamic_bitset<>::npos; b = up_[a].find_next(b))
            out.up_[b].set(a);
    return out;
}

}  // namespace cjac
