#include "cobordia/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cobordia/errors.hpp"

namespace cobordia {

using nlohmann::ordered_json;

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

FilteredComplex load_complex_json(std::istream& in) {
    ordered_json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
        throw Error("complex JSON must be an object with a \"cells\" array");

    std::vector<Cell> cells;
    cells.reserve(doc["cells"].size());
    for (const auto& entry : doc["cells"]) {
        Cell cell;
        try {
            cell.id = entry.at("id").get<CellId>();
            cell.dim = entry.at("dim").get<int>();
            cell.filtration = entry.at("f").get<double>();
            for (const auto& b : entry.at("boundary")) cell.boundary.push_back(b.get<CellId>());
            const std::string label = entry.at("label").get<std::string>();
            if (label == "A") cell.in_a = true;
            else if (label == "B") cell.in_b = true;
            else if (label != "I") throw Error("unknown label \"" + label + "\"");
        } catch (const ordered_json::exception& e) {
            throw Error(std::string("malformed cell entry: ") + e.what());
        }
        cells.push_back(std::move(cell));
    }

    // Cells may arrive in any order; place them by id when ids are dense.
    std::vector<Cell> by_id(cells.size());
    std::vector<bool> seen(cells.size(), false);
    bool dense = true;
    for (auto& cell : cells) {
        if (cell.id >= cells.size() || seen[cell.id]) {
            dense = false;
            break;
        }
        seen[cell.id] = true;
        by_id[cell.id] = std::move(cell);
    }

    FilteredComplex complex(dense ? std::move(by_id) : std::move(cells));
    const auto report = validate(complex);
    if (!report.valid()) throw ValidationError(report);
    return complex;
}

FilteredComplex load_complex_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return load_complex_json(in);
}

std::string complex_to_json(const FilteredComplex& complex) {
    ordered_json cells = ordered_json::array();
    for (const auto& cell : complex.cells()) {
        ordered_json entry;
        entry["id"] = cell.id;
        entry["dim"] = cell.dim;
        entry["boundary"] = cell.boundary;
        entry["f"] = cell.filtration;
        entry["label"] = to_string(cell.label());
        cells.push_back(std::move(entry));
    }
    ordered_json doc;
    doc["cells"] = std::move(cells);
    return doc.dump(2) + "\n";
}

void save_complex_json_file(const FilteredComplex& complex, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << complex_to_json(complex);
}

namespace {

bool parse_double(const std::string& token, double& out) {
    try {
        std::size_t used = 0;
        out = std::stod(token, &used);
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
            ++used;
        return used == token.size();
    } catch (...) {
        return false;
    }
}

}  // namespace

PointCloud load_point_cloud_csv(std::istream& in) {
    PointCloud cloud;
    cloud.dim = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> values;
        std::stringstream row(line);
        std::string token;
        bool numeric = true;
        while (std::getline(row, token, ',')) {
            double v = 0;
            if (!parse_double(token, v)) {
                numeric = false;
                break;
            }
            values.push_back(v);
        }
        if (!numeric) {
            if (cloud.points.empty()) continue;  // header line
            throw Error("non-numeric point row at line " + std::to_string(line_no));
        }
        if (values.size() != 2 && values.size() != 3)
            throw Error("point rows need 2 or 3 coordinates (line " + std::to_string(line_no) +
                        ")");
        if (cloud.dim == 0) cloud.dim = static_cast<int>(values.size());
        if (cloud.dim != static_cast<int>(values.size()))
            throw Error("inconsistent point dimensions at line " + std::to_string(line_no));
        cloud.points.push_back({values[0], values[1], values.size() == 3 ? values[2] : 0.0});
    }
    if (cloud.points.empty()) throw Error("point cloud is empty");
    return cloud;
}

PointCloud load_point_cloud_xyz(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error("empty xyz file");
    std::size_t count = 0;
    try {
        count = std::stoul(line);
    } catch (...) {
        throw Error("xyz files start with the point count");
    }
    std::getline(in, line);  // comment line

    PointCloud cloud;
    cloud.dim = 3;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string element;
        double x = 0, y = 0, z = 0;
        if (!(row >> element >> x >> y >> z))
            throw Error("malformed xyz row: " + line);
        cloud.points.push_back({x, y, z});
    }
    if (cloud.points.size() != count)
        throw Error("xyz point count mismatch: header says " + std::to_string(count) +
                    ", found " + std::to_string(cloud.points.size()));
    return cloud;
}

PointCloud load_point_cloud_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".xyz")
        return load_point_cloud_xyz(in);
    return load_point_cloud_csv(in);
}

std::string point_cloud_to_csv(const PointCloud& cloud) {
    std::ostringstream out;
    for (const auto& p : cloud.points) {
        out << format_value(p[0]) << ',' << format_value(p[1]);
        if (cloud.dim == 3) out << ',' << format_value(p[2]);
        out << '\n';
    }
    return out.str();
}

std::string bars_to_csv(const std::vector<CobordismPair>& pairs) {
    std::vector<const CobordismPair*> sorted;
    sorted.reserve(pairs.size());
    for (const auto& p : pairs) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(), [](const CobordismPair* x, const CobordismPair* y) {
        if (x->degree != y->degree) return x->degree < y->degree;
        if (x->birth_time != y->birth_time) return x->birth_time < y->birth_time;
        const double dx = x->death_time.value_or(std::numeric_limits<double>::infinity());
        const double dy = y->death_time.value_or(std::numeric_limits<double>::infinity());
        if (dx != dy) return dx < dy;
        return x->birth_cell < y->birth_cell;
    });

    std::ostringstream out;
    out << "degree,birth,death,birth_cell,death_cell,case_birth,case_death\n";
    for (const auto* p : sorted) {
        out << p->degree << ',' << format_value(p->birth_time) << ',';
        out << (p->death_time ? format_value(*p->death_time) : std::string("inf")) << ',';
        out << p->birth_cell << ',';
        if (p->death_cell) out << *p->death_cell;
        out << ',' << to_string(p->case_at_birth) << ',';
        if (p->finite()) out << to_string(p->case_at_death);
        out << '\n';
    }
    return out.str();
}

std::string kernel_bars_to_csv(const std::vector<const KernelPairs*>& blocks) {
    std::ostringstream out;
    out << "degree,birth,death,birth_cell,death_cell,block\n";
    for (const KernelPairs* kp : blocks) {
        std::vector<const KernelPair*> sorted;
        for (const auto& pair : kp->pairs) sorted.push_back(&pair);
        std::sort(sorted.begin(), sorted.end(), [](const KernelPair* x, const KernelPair* y) {
            if (x->birth.degree != y->birth.degree) return x->birth.degree < y->birth.degree;
            return x->birth.position < y->birth.position;
        });
        for (const auto* pair : sorted) {
            out << pair->birth.degree << ',' << format_value(pair->birth.time) << ',';
            if (pair->death) out << format_value(pair->death->time);
            out << ',' << pair->birth.cell << ',';
            if (pair->death) out << pair->death->cell;
            out << ',' << to_string(kp->block) << '\n';
        }
    }
    return out.str();
}

std::string representatives_to_json(const std::vector<CobordismPair>& pairs,
                                    const FilteredComplex& complex) {
    ordered_json bars = ordered_json::array();
    for (const auto& pair : pairs) {
        ordered_json entry;
        entry["degree"] = pair.degree;
        entry["birth"] = pair.birth_time;
        if (pair.death_time) entry["death"] = *pair.death_time;
        else entry["death"] = "inf";
        entry["birth_cell"] = pair.birth_cell;
        if (pair.death_cell) entry["death_cell"] = *pair.death_cell;
        entry["representative_at_birth"] = pair.representative_at_birth;
        if (pair.finite()) {
            entry["representative_before_death"] = pair.representative_before_death;
            // Boundary of the pre-death representative, for interpretation.
            std::vector<RowIndex> boundary;
            for (CellId c : pair.representative_before_death) {
                std::vector<RowIndex> faces(complex.cell(c).boundary.begin(),
                                            complex.cell(c).boundary.end());
                boundary = symmetric_difference(boundary, faces);
            }
            entry["boundary_before_death"] = boundary;
        }
        bars.push_back(std::move(entry));
    }
    return bars.dump(2) + "\n";
}

std::string persistence_diagram_svg(const std::vector<CobordismPair>& pairs) {
    double max_finite = 0.0;
    double min_value = 0.0;
    bool any_finite = false;
    for (const auto& p : pairs) {
        min_value = std::min(min_value, p.birth_time);
        max_finite = std::max(max_finite, p.birth_time);
        if (p.death_time) {
            max_finite = std::max(max_finite, *p.death_time);
            any_finite = true;
        }
    }
    if (max_finite <= min_value) max_finite = min_value + 1.0;
    const double horizon = min_value + (max_finite - min_value) * 1.05;

    const double size = 480.0, margin = 48.0;
    const double span = horizon - min_value;
    auto sx = [&](double v) { return margin + (v - min_value) / span * (size - 2 * margin); };
    auto sy = [&](double v) { return size - margin - (v - min_value) / span * (size - 2 * margin); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size - 2 * margin
        << "\" height=\"" << size - 2 * margin << "\" fill=\"white\" stroke=\"black\"/>\n";
    // diagonal
    out << "  <line x1=\"" << sx(min_value) << "\" y1=\"" << sy(min_value) << "\" x2=\""
        << sx(horizon) << "\" y2=\"" << sy(horizon) << "\" stroke=\"gray\"/>\n";
    // dashed horizon for infinite bars
    out << "  <line x1=\"" << sx(min_value) << "\" y1=\"" << sy(horizon) << "\" x2=\""
        << sx(horizon) << "\" y2=\"" << sy(horizon)
        << "\" stroke=\"black\" stroke-dasharray=\"6 4\"/>\n";
    out << "  <text x=\"" << sx(min_value) << "\" y=\"" << size - margin / 3
        << "\" font-size=\"12\">birth</text>\n";
    out << "  <text x=\"" << margin / 3 << "\" y=\"" << sy(horizon) - 6
        << "\" font-size=\"12\">death</text>\n";
    out << "  <text x=\"" << sx(min_value) << "\" y=\"" << size - margin / 3 + 14
        << "\" font-size=\"10\">" << format_value(min_value) << " .. " << format_value(horizon)
        << (any_finite ? "" : " (no finite bars)") << "</text>\n";

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    for (const auto& p : pairs) {
        const char* color = colors[p.degree % 4];
        const double x = sx(p.birth_time);
        const double y = p.death_time ? sy(*p.death_time) : sy(horizon);
        out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"" << color
            << "\" fill-opacity=\"0.8\"><title>degree " << p.degree << " ["
            << format_value(p.birth_time) << ", "
            << (p.death_time ? format_value(*p.death_time) : std::string("inf"))
            << ")</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace cobordia
