#include "torsionlab/scene.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "torsionlab/errors.hpp"
#include "torsionlab/parse.hpp"

namespace torsionlab {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> significant_lines(std::string_view src) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= src.size()) {
        std::size_t end = src.find('\n', start);
        if (end == std::string_view::npos) {
            end = src.size();
        }
        ++number;
        std::string text(src.substr(start, end - start));
        if (auto hash = text.find('#'); hash != std::string::npos) {
            text.erase(hash);
        }
        const auto first = text.find_first_not_of(" \t\r");
        if (first != std::string::npos) {
            const auto last = text.find_last_not_of(" \t\r");
            lines.push_back({number, text.substr(first, last - first + 1)});
        }
        if (end == src.size()) {
            break;
        }
        start = end + 1;
    }
    return lines;
}

std::vector<std::string> split_words(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> words;
    std::string w;
    while (in >> w) {
        words.push_back(w);
    }
    return words;
}

int parse_index(const std::string& word, int line) {
    for (char c : word) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw SceneError(ErrorCode::parse_syntax, "expected an index, got '" + word + "'",
                             line);
        }
    }
    if (word.empty() || word.size() > 6) {
        throw SceneError(ErrorCode::parse_syntax, "bad index '" + word + "'", line);
    }
    return std::stoi(word);
}

enum class BlockKind { op, vec, covec, scalar };

} // namespace

SceneFile parse_scene(std::string_view src) {
    const std::vector<Line> lines = significant_lines(src);
    std::size_t at = 0;

    if (at >= lines.size()) {
        throw SceneError(ErrorCode::scene_missing_chart, "empty scene: missing 'dim' header", 1);
    }
    {
        auto words = split_words(lines[at].text);
        if (words.size() != 2 || words[0] != "dim") {
            throw SceneError(ErrorCode::scene_missing_chart, "scene must start with 'dim <n>'",
                             lines[at].number);
        }
    }
    const int header_line = lines[at].number;
    const int dim = parse_index(split_words(lines[at].text)[1], header_line);
    if (dim < 1) {
        throw SceneError(ErrorCode::scene_missing_chart, "chart dimension must be >= 1",
                         header_line);
    }
    ++at;

    if (at >= lines.size()) {
        throw SceneError(ErrorCode::scene_missing_chart, "missing 'vars' header",
                         header_line);
    }
    auto var_words = split_words(lines[at].text);
    if (var_words.empty() || var_words[0] != "vars") {
        throw SceneError(ErrorCode::scene_missing_chart, "expected 'vars <name...>'",
                         lines[at].number);
    }
    if (static_cast<int>(var_words.size()) - 1 != dim) {
        throw SceneError(ErrorCode::scene_missing_chart,
                         "'vars' must list exactly dim names", lines[at].number);
    }
    ++at;

    SceneFile scene;
    scene.chart = Chart::make({var_words.begin() + 1, var_words.end()});
    const ChartPtr& chart = scene.chart;

    auto name_taken = [&](const std::string& name) {
        return scene.operators.count(name) || scene.vectors.count(name) ||
               scene.covectors.count(name) || scene.scalars.count(name);
    };

    while (at < lines.size()) {
        auto words = split_words(lines[at].text);
        const int block_line = lines[at].number;
        if (words.size() != 2) {
            throw SceneError(ErrorCode::parse_syntax,
                             "expected 'operator|vector|covector|scalar <NAME>'", block_line);
        }
        BlockKind kind;
        if (words[0] == "operator") {
            kind = BlockKind::op;
        } else if (words[0] == "vector") {
            kind = BlockKind::vec;
        } else if (words[0] == "covector") {
            kind = BlockKind::covec;
        } else if (words[0] == "scalar") {
            kind = BlockKind::scalar;
        } else {
            throw SceneError(ErrorCode::parse_syntax, "unknown block '" + words[0] + "'",
                             block_line);
        }
        const std::string name = words[1];
        if (name_taken(name)) {
            throw SceneError(ErrorCode::scene_duplicate_name, "duplicate name '" + name + "'",
                             block_line);
        }
        ++at;

        std::vector<MultiPoly> slots;
        const int slot_count = kind == BlockKind::op ? dim * dim
                               : kind == BlockKind::scalar ? 1
                                                           : dim;
        slots.assign(slot_count, chart->zero());
        std::vector<bool> assigned(slot_count, false);

        bool closed = false;
        while (at < lines.size()) {
            if (lines[at].text == "end") {
                closed = true;
                ++at;
                break;
            }
            const std::string& entry = lines[at].text;
            const int entry_line = lines[at].number;
            const auto colon = entry.find(':');
            if (colon == std::string::npos) {
                throw SceneError(ErrorCode::parse_syntax, "entry line needs ':'", entry_line);
            }
            auto indices = split_words(entry.substr(0, colon));
            const std::string poly_src = entry.substr(colon + 1);

            const std::size_t needed = kind == BlockKind::op ? 2 : 1;
            if (indices.size() != needed) {
                throw SceneError(ErrorCode::parse_syntax,
                                 kind == BlockKind::op
                                     ? "operator entries are '<i> <j> : <poly>'"
                                     : "entries are '<i> : <poly>'",
                                 entry_line);
            }
            int slot;
            if (kind == BlockKind::op) {
                const int i = parse_index(indices[0], entry_line);
                const int j = parse_index(indices[1], entry_line);
                if (i < 1 || i > dim || j < 1 || j > dim) {
                    throw SceneError(ErrorCode::scene_index_range,
                                     "operator index out of range [1.." + std::to_string(dim) + "]",
                                     entry_line);
                }
                slot = (i - 1) * dim + (j - 1);
            } else {
                const int i = parse_index(indices[0], entry_line);
                const int bound = kind == BlockKind::scalar ? 1 : dim;
                if (i < 1 || i > bound) {
                    throw SceneError(ErrorCode::scene_index_range,
                                     "index out of range [1.." + std::to_string(bound) + "]",
                                     entry_line);
                }
                slot = i - 1;
            }
            if (assigned[slot]) {
                throw SceneError(ErrorCode::parse_syntax, "entry assigned twice", entry_line);
            }
            assigned[slot] = true;
            try {
                slots[slot] = parse_poly(poly_src, chart);
            } catch (const ParseError& e) {
                throw SceneError(e.code(),
                                 std::string(e.what()) + " (column " +
                                     std::to_string(e.column()) + " of the polynomial)",
                                 entry_line);
            }
            ++at;
        }
        if (!closed) {
            throw SceneError(ErrorCode::parse_syntax, "block '" + name + "' missing 'end'",
                             block_line);
        }

        switch (kind) {
        case BlockKind::op:
            scene.operators.emplace(name, OperatorField(chart, std::move(slots)));
            break;
        case BlockKind::vec:
            scene.vectors.emplace(name, VectorField(chart, std::move(slots)));
            break;
        case BlockKind::covec:
            scene.covectors.emplace(name, CovectorField(chart, std::move(slots)));
            break;
        case BlockKind::scalar:
            scene.scalars.emplace(name, std::move(slots[0]));
            break;
        }
    }
    return scene;
}

SceneFile load_scene(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open scene file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scene(buffer.str());
}

} // namespace torsionlab
