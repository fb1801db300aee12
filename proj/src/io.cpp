#include "chow/io.hpp"

#include <fstream>
#include <sstream>

namespace chow {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::parse_error: return "parse_error";
    case Errc::space_mismatch: return "space_mismatch";
    case Errc::not_multihomogeneous: return "not_multihomogeneous";
    case Errc::zero_input: return "zero_input";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::missing_input: return "missing_input";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::instance_too_large: return "instance_too_large";
    case Errc::deadline_exceeded: return "deadline_exceeded";
    case Errc::not_principal: return "not_principal";
    case Errc::unstable_count: return "unstable_count";
    case Errc::io_error: return "io_error";
    }
    return "unknown";
}

namespace {

std::string strip(const std::string& raw) {
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(Errc::parse_error, "bad " + what + ": '" + s + "'");
    }
}

} // namespace

InputFile parse_input_text(std::istream& in) {
    InputFile f;
    std::string raw;
    int lineno = 0;
    bool in_component = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty()) continue;
        auto at = [&](const std::string& msg) {
            return msg + " (line " + std::to_string(lineno) + ")";
        };

        if (line.rfind("ambient", 0) == 0) {
            auto toks = split_ws(line);
            if (toks.size() < 2 || toks.size() > 3) fail(Errc::parse_error, at("ambient needs 1 or 2 values"));
            for (size_t i = 1; i < toks.size(); ++i)
                f.ambient.push_back(parse_int(toks[i], "ambient dimension"));
            continue;
        }
        if (line.rfind("blocks", 0) == 0) {
            auto toks = split_ws(line);
            if (toks.size() < 3 || toks.size() % 2 == 0)
                fail(Errc::parse_error, at("blocks needs name/size pairs"));
            std::vector<Block> blocks;
            for (size_t i = 1; i + 1 < toks.size(); i += 2)
                blocks.push_back({toks[i], parse_int(toks[i + 1], "block size")});
            f.space = VariableSpace::make(std::move(blocks));
            continue;
        }
        if (line.rfind("dim", 0) == 0) {
            auto toks = split_ws(line);
            if (toks.size() != 2) fail(Errc::parse_error, at("dim needs one value"));
            f.dim = parse_int(toks[1], "dimension");
            continue;
        }
        if (line.rfind("degree", 0) == 0) {
            auto toks = split_ws(line);
            if (toks.size() != 2) fail(Errc::parse_error, at("degree needs one value"));
            f.degree = Integer(toks[1]);
            continue;
        }
        if (line.rfind("component", 0) == 0) {
            std::string rest = strip(line.substr(9));
            if (rest.empty() || rest.back() != ':')
                fail(Errc::parse_error, at("component header must end with ':'"));
            rest.pop_back();
            InputFile::Component c;
            c.multiplicity = parse_int(strip(rest), "multiplicity");
            if (c.multiplicity < 1) fail(Errc::parse_error, at("multiplicity must be positive"));
            f.components.push_back(std::move(c));
            in_component = true;
            continue;
        }
        // generator polynomial line
        if (!in_component) {
            // bare generators are accepted as an implicit first component
            f.components.push_back({1, {}});
            in_component = true;
        }
        if (!f.space) fail(Errc::parse_error, at("blocks must be declared before generators"));
        f.components.back().gens.push_back(parse_poly(line, f.space));
    }
    if (!f.space) fail(Errc::parse_error, "input file declares no blocks");
    return f;
}

InputFile parse_input_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::io_error, "cannot open input file: " + path);
    return parse_input_text(in);
}

Cycle to_cycle(const InputFile& f) {
    if (f.ambient.size() != 1) fail(Errc::parse_error, "cycle file needs `ambient <r>`");
    if (!f.dim) fail(Errc::parse_error, "cycle file needs `dim <n>`");
    int r = f.ambient[0];
    if (f.space->block_count() != 1 || f.space->block(0).size != r + 1)
        fail(Errc::parse_error, "cycle file needs one block of r+1 variables");
    if (f.components.empty()) fail(Errc::parse_error, "cycle file has no components");
    std::vector<CycleComponent> comps;
    for (const auto& c : f.components)
        comps.emplace_back(r, *f.dim, IdealGens(f.space, c.gens), c.multiplicity);
    return Cycle(std::move(comps));
}

GraphCycle to_graph(const InputFile& f) {
    if (f.ambient.size() != 2) fail(Errc::parse_error, "graph file needs `ambient <N> <M>`");
    if (!f.dim) fail(Errc::parse_error, "graph file needs `dim <n>`");
    int N = f.ambient[0], M = f.ambient[1];
    if (f.space->block_count() != 2 || f.space->block(0).size != N + 1 ||
        f.space->block(1).size != M + 1)
        fail(Errc::parse_error, "graph file needs blocks of sizes N+1 and M+1");
    if (f.components.size() != 1 || f.components[0].multiplicity != 1)
        fail(Errc::parse_error, "graph file needs exactly one component of multiplicity 1");
    return GraphCycle(N, M, *f.dim, IdealGens(f.space, f.components[0].gens), f.degree);
}

IdealGens to_ideal(const InputFile& f) {
    if (f.components.size() != 1 || f.components[0].multiplicity != 1)
        fail(Errc::parse_error, "ideal file needs exactly one component of multiplicity 1");
    return IdealGens(f.space, f.components[0].gens);
}

void OutputDoc::add(const std::string& key, const std::string& value) {
    lines_.emplace_back(key, value);
}

void OutputDoc::add(const std::string& key, const Integer& value) {
    lines_.emplace_back(key, value.get_str());
}

void OutputDoc::add_poly(const std::string& key, const Poly& p) {
    lines_.emplace_back(key, p.to_string());
}

void OutputDoc::add_blocks(const std::string& key, const VariableSpace& space) {
    std::ostringstream os;
    for (int b = 0; b < space.block_count(); ++b) {
        if (b) os << " ";
        os << space.block(b).name << " " << space.block(b).size;
    }
    lines_.emplace_back(key, os.str());
}

std::string OutputDoc::str() const {
    std::ostringstream os;
    for (const auto& [k, v] : lines_) os << k << " = " << v << "\n";
    return os.str();
}

} // namespace chow
