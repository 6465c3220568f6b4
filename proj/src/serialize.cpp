#include "hooktab/serialize.hpp"

#include <sstream>

#include "hooktab/errors.hpp"

namespace hooktab {

namespace {

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

std::string letters_line(int first, const std::vector<int>& rest) {
    bool wide = first > 9;
    for (int v : rest) wide = wide || v > 9;
    std::ostringstream os;
    os << first;
    for (int v : rest) os << (wide ? " " : "") << v;
    return os.str();
}

}  // namespace

json to_json(const HookValuedTableau& t) {
    json cells = json::array();
    for (const auto& [cell, entry] : t.cells()) {
        cells.push_back(json{{"row", cell.row},
                             {"col", cell.col},
                             {"hook", entry.hook()},
                             {"arm", entry.arm()},
                             {"leg", entry.leg()}});
    }
    return json{{"shape", t.shape().parts()}, {"cells", std::move(cells)}};
}

HookValuedTableau hvt_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("cells")) {
        throw TableauError("tableau JSON must contain shape and cells");
    }
    Partition shape = partition_from_json(j.at("shape"));
    CellMap cells;
    for (const auto& c : j.at("cells")) {
        Cell cell{c.at("row").get<int>(), c.at("col").get<int>()};
        if (cells.count(cell)) throw ShapeMismatchError("duplicate cell in tableau JSON");
        cells[cell] = HookEntry(c.at("hook").get<int>(),
                                c.value("arm", std::vector<int>{}),
                                c.value("leg", std::vector<int>{}));
    }
    return HookValuedTableau::validate(shape, std::move(cells));
}

json to_json(const ReversePlanePartition& r) {
    json cells = json::array();
    for (const auto& [cell, v] : r.entries()) {
        cells.push_back(json{{"row", cell.row}, {"col", cell.col}, {"value", v}});
    }
    return json{{"shape", r.shape().parts()}, {"entries", std::move(cells)}};
}

ReversePlanePartition rpp_from_json(const json& j) {
    Partition shape = partition_from_json(j.at("shape"));
    std::map<Cell, int> entries;
    for (const auto& c : j.at("entries")) {
        entries[Cell{c.at("row").get<int>(), c.at("col").get<int>()}] = c.at("value").get<int>();
    }
    return ReversePlanePartition::validate(shape, std::move(entries));
}

json to_json(const FlaggedTableau& f) {
    json entries = json::array();
    for (const auto& [cell, v] : f.entries()) {
        entries.push_back(json{{"row", cell.row}, {"col", cell.col}, {"value", v}});
    }
    return json{{"inner", f.inner().parts()},
                {"outer", f.outer().parts()},
                {"orientation", f.orientation() == Orientation::RowFlagged ? "row" : "column"},
                {"entries", std::move(entries)}};
}

FlaggedTableau flagged_from_json(const json& j) {
    Partition inner = partition_from_json(j.at("inner"));
    Partition outer = partition_from_json(j.at("outer"));
    std::string o = j.at("orientation").get<std::string>();
    if (o != "row" && o != "column") throw TableauError("orientation must be 'row' or 'column'");
    std::map<Cell, int> entries;
    for (const auto& c : j.at("entries")) {
        entries[Cell{c.at("row").get<int>(), c.at("col").get<int>()}] = c.at("value").get<int>();
    }
    return FlaggedTableau::validate(inner, outer,
                                    o == "row" ? Orientation::RowFlagged : Orientation::ColumnFlagged,
                                    std::move(entries));
}

json to_json(const UncrowdResult& u) {
    json paths = json::array();
    for (const auto& path : u.paths) {
        json p = json::array();
        for (const auto& cell : path) p.push_back(json::array({cell.row, cell.col}));
        paths.push_back(std::move(p));
    }
    return json{{"P", to_json(u.P)}, {"Q", to_json(u.Q)}, {"paths", std::move(paths)}};
}

json to_json(const SvtUncrowdResult& u) {
    return json{{"P", to_json(u.P)}, {"Q", to_json(u.Q)}};
}

json to_json(const CrowdResult& c) {
    json order = json::array();
    for (const auto& cell : c.plan.order) order.push_back(json::array({cell.row, cell.col}));
    json paths = json::array();
    for (const auto& path : c.paths) {
        json p = json::array();
        for (const auto& cell : path) p.push_back(json::array({cell.row, cell.col}));
        paths.push_back(std::move(p));
    }
    return json{{"T", to_json(c.T)},
                {"order", std::move(order)},
                {"alphas", c.plan.alphas},
                {"destinations", c.plan.destinations},
                {"paths", std::move(paths)}};
}

json to_json(const CrystalGraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices) vertices.push_back(to_json(v));
    json edges = json::array();
    for (const auto& e : g.edges) {
        edges.push_back(json{{"source", e.source}, {"target", e.target}, {"color", e.color}});
    }
    return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string canonical_string(const HookValuedTableau& t) { return to_json(t).dump(); }

std::string render_ascii(const HookValuedTableau& t) {
    if (t.empty()) return "(empty)\n";
    int nrows = t.shape().length();
    int ncols = t.shape().row_length(1);
    // Per-cell text blocks: leg letters top-down, hook+arm as bottom line.
    std::vector<std::vector<std::vector<std::string>>> blocks(nrows);
    std::vector<int> col_width(ncols, 1);
    std::vector<int> row_height(nrows, 1);
    for (int r = 1; r <= nrows; ++r) {
        blocks[r - 1].resize(t.shape().row_length(r));
        for (int c = 1; c <= t.shape().row_length(r); ++c) {
            const HookEntry& e = t.entry(r, c);
            std::vector<std::string> lines;
            for (int k = static_cast<int>(e.leg().size()) - 1; k >= 0; --k) {
                lines.push_back(std::to_string(e.leg()[k]));
            }
            lines.push_back(letters_line(e.hook(), e.arm()));
            for (const auto& line : lines) {
                col_width[c - 1] = std::max(col_width[c - 1], static_cast<int>(line.size()));
            }
            row_height[r - 1] = std::max(row_height[r - 1], static_cast<int>(lines.size()));
            blocks[r - 1][c - 1] = std::move(lines);
        }
    }
    std::ostringstream os;
    auto rule = [&](int cols) {
        os << '+';
        for (int c = 0; c < cols; ++c) os << std::string(col_width[c] + 2, '-') << '+';
        os << '\n';
    };
    for (int r = nrows; r >= 1; --r) {
        rule(t.shape().row_length(r));
        for (int line = 0; line < row_height[r - 1]; ++line) {
            os << '|';
            for (int c = 1; c <= t.shape().row_length(r); ++c) {
                const auto& lines = blocks[r - 1][c - 1];
                // Bottom-align so the hook line sits on the rule.
                int offset = line - (row_height[r - 1] - static_cast<int>(lines.size()));
                std::string text = (offset >= 0) ? lines[offset] : "";
                os << ' ' << text << std::string(col_width[c - 1] - text.size() + 1, ' ') << '|';
            }
            os << '\n';
        }
    }
    rule(t.shape().row_length(1));
    return os.str();
}

std::string render_ascii(const FlaggedTableau& f) {
    if (f.outer().empty()) return "(empty)\n";
    int nrows = f.outer().length();
    int width = 1;
    for (const auto& [cell, v] : f.entries()) {
        width = std::max(width, static_cast<int>(std::to_string(v).size()));
    }
    std::ostringstream os;
    for (int r = nrows; r >= 1; --r) {
        for (int c = 1; c <= f.outer().row_length(r); ++c) {
            std::string text;
            if (f.inner().has_cell(r, c)) {
                text = std::string(width, '.');
            } else {
                text = std::to_string(f.entry(r, c));
            }
            os << '[' << std::string(width - text.size(), ' ') << text << ']';
        }
        os << '\n';
    }
    return os.str();
}

std::string dot_export(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        std::string label = canonical_string(g.vertices[k]);
        std::string escaped;
        for (char ch : label) {
            if (ch == '"' || ch == '\\') escaped.push_back('\\');
            escaped.push_back(ch);
        }
        os << "  v" << k << " [label=\"" << escaped << "\"];\n";
    }
    for (const auto& e : g.edges) {
        os << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.color << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace hooktab
