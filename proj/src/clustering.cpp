#include "clustval/clustering.hpp"

#include <unordered_map>

namespace clustval {

Clustering Clustering::from_labels(const std::vector<int>& raw_labels) {
    if (raw_labels.empty()) throw MalformedInput("label sequence is empty");
    std::unordered_map<int, int> remap;
    std::vector<int> canonical(raw_labels.size());
    for (std::size_t i = 0; i < raw_labels.size(); ++i) {
        auto [it, inserted] = remap.try_emplace(raw_labels[i], static_cast<int>(remap.size()));
        canonical[i] = it->second;
    }
    return Clustering(std::move(canonical));
}

Clustering::Clustering(std::vector<int> canonical) : labels_(std::move(canonical)) {
    int k = 0;
    for (int l : labels_) k = std::max(k, l + 1);
    sizes_.assign(k, 0);
    members_.assign(k, {});
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        sizes_[labels_[i]]++;
        members_[labels_[i]].push_back(i);
    }
}

std::vector<int> Clustering::one_based_labels() const {
    std::vector<int> out(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) out[i] = labels_[i] + 1;
    return out;
}

} // namespace clustval
