#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chow/error.hpp"

namespace chow {

struct Block {
    std::string name;
    int size = 0;

    bool operator==(const Block&) const = default;
};

class VariableSpace;
using SpacePtr = std::shared_ptr<const VariableSpace>;

// Ordered list of named variable blocks. A variable is addressed by
// (block, slot) or by its flat index; its text name is blockname + slot
// (block "u0", slot 1 -> "u01"). Parsing resolves the longest declared
// block name that leaves a valid numeric slot.
class VariableSpace {
public:
    static SpacePtr make(std::vector<Block> blocks);

    int block_count() const { return static_cast<int>(blocks_.size()); }
    const Block& block(int b) const { return blocks_.at(b); }
    const std::vector<Block>& blocks() const { return blocks_; }
    int total_vars() const { return total_; }

    int block_offset(int b) const { return offsets_.at(b); }
    int var_index(int b, int slot) const;
    int block_of_var(int v) const;
    std::pair<int, int> block_slot(int v) const;

    std::string var_name(int v) const;
    std::optional<int> find_block(const std::string& name) const;
    // Longest-prefix variable lookup; nullopt when the name resolves to
    // no declared (block, slot).
    std::optional<int> parse_var(const std::string& name) const;

    // Derived space with the named blocks removed (declared order kept).
    SpacePtr without_blocks(const std::vector<std::string>& drop) const;
    // Derived space with an extra block appended.
    SpacePtr with_block(const Block& extra) const;

    bool operator==(const VariableSpace& o) const { return blocks_ == o.blocks_; }

private:
    explicit VariableSpace(std::vector<Block> blocks);

    std::vector<Block> blocks_;
    std::vector<int> offsets_;
    int total_ = 0;
};

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (!same_space(a, b)) fail(Errc::space_mismatch, "operands live in different variable spaces");
}

} // namespace chow
