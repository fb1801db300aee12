#include "chow/variable_space.hpp"

#include <algorithm>
#include <set>

namespace chow {

VariableSpace::VariableSpace(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    std::set<std::string> seen;
    offsets_.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        if (b.name.empty()) fail(Errc::invalid_argument, "empty block name");
        if (b.size < 1) fail(Errc::invalid_argument, "block '" + b.name + "' has size < 1");
        if (!seen.insert(b.name).second)
            fail(Errc::invalid_argument, "duplicate block name '" + b.name + "'");
        offsets_.push_back(total_);
        total_ += b.size;
    }
}

SpacePtr VariableSpace::make(std::vector<Block> blocks) {
    return SpacePtr(new VariableSpace(std::move(blocks)));
}

int VariableSpace::var_index(int b, int slot) const {
    const Block& blk = blocks_.at(b);
    if (slot < 0 || slot >= blk.size)
        fail(Errc::invalid_argument, "slot out of range in block '" + blk.name + "'");
    return offsets_[b] + slot;
}

int VariableSpace::block_of_var(int v) const {
    if (v < 0 || v >= total_) fail(Errc::invalid_argument, "variable index out of range");
    int b = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), v) - offsets_.begin()) - 1;
    return b;
}

std::pair<int, int> VariableSpace::block_slot(int v) const {
    int b = block_of_var(v);
    return {b, v - offsets_[b]};
}

std::string VariableSpace::var_name(int v) const {
    auto [b, slot] = block_slot(v);
    return blocks_[b].name + std::to_string(slot);
}

std::optional<int> VariableSpace::find_block(const std::string& name) const {
    for (int b = 0; b < block_count(); ++b)
        if (blocks_[b].name == name) return b;
    return std::nullopt;
}

std::optional<int> VariableSpace::parse_var(const std::string& name) const {
    // longest block-name prefix whose numeric remainder is a valid slot
    int best = -1;
    size_t best_len = 0;
    for (int b = 0; b < block_count(); ++b) {
        const std::string& bn = blocks_[b].name;
        if (bn.size() >= name.size() || name.compare(0, bn.size(), bn) != 0) continue;
        std::string rest = name.substr(bn.size());
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
            continue;
        if (rest.size() > 9) continue;
        int slot = std::stoi(rest);
        if (slot >= blocks_[b].size) continue;
        if (bn.size() > best_len || best < 0) {
            best = var_index(b, slot);
            best_len = bn.size();
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

SpacePtr VariableSpace::without_blocks(const std::vector<std::string>& drop) const {
    std::vector<Block> kept;
    for (const auto& b : blocks_) {
        bool dropped = std::find(drop.begin(), drop.end(), b.name) != drop.end();
        if (!dropped) kept.push_back(b);
    }
    if (kept.empty()) fail(Errc::invalid_argument, "cannot drop every block");
    return make(std::move(kept));
}

SpacePtr VariableSpace::with_block(const Block& extra) const {
    std::vector<Block> blocks = blocks_;
    blocks.push_back(extra);
    return make(std::move(blocks));
}

} // namespace chow
