#pragma once

#include <iosfwd>
#include <string>

#include "chow/cycle.hpp"
#include "chow/graph.hpp"

namespace chow {

// Structured text input: header lines (`ambient`, `blocks`, `dim`, optional
// `degree`), then `component <multiplicity>:` sections with one generator
// polynomial per line. '#' starts a comment.
struct InputFile {
    std::vector<int> ambient; // empty, one entry (P^r) or two (P^N x P^M)
    SpacePtr space;
    std::optional<int> dim;
    std::optional<Integer> degree;

    struct Component {
        int multiplicity = 1;
        std::vector<Poly> gens;
    };
    std::vector<Component> components;
};

InputFile parse_input_text(std::istream& in);
InputFile parse_input_path(const std::string& path);

// Interpretations of a parsed file. Each validates the needed headers.
Cycle to_cycle(const InputFile& f);
GraphCycle to_graph(const InputFile& f);
IdealGens to_ideal(const InputFile& f); // single component of multiplicity 1

// Deterministic key-value output document.
class OutputDoc {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const Integer& value);
    void add_poly(const std::string& key, const Poly& p);
    void add_blocks(const std::string& key, const VariableSpace& space);
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> lines_;
};

} // namespace chow
