#include "sphframe/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include <json.hpp>

namespace sphframe {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string sidecar_path(const std::string& path) { return path + ".json"; }

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    return in;
}

double parse_double(std::string_view s, const std::string& path) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) throw IoError("bad number '" + std::string(s) + "' in " + path);
    return v;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

struct CsvReader {
    std::ifstream in;
    std::string path;
    std::string line;

    bool next(std::vector<std::string_view>& fields) {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            fields = split_csv(line);
            return true;
        }
        return false;
    }
};

ordered_json read_json(const std::string& path) {
    auto in = open_in(path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

void check_node(const Vec3& got, const Vec3& want, std::size_t row, const std::string& path) {
    for (int c = 0; c < 3; ++c) {
        if (std::abs(got[static_cast<std::size_t>(c)] - want[static_cast<std::size_t>(c)]) > 1e-9)
            throw IoError("node mismatch at row " + std::to_string(row) + " of " + path +
                          " (file does not match the declared rule)");
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (ec != std::errc()) return "0";
    return std::string(buf, p);
}

void write_rule_csv(const CubatureRule& rule, const std::string& path) {
    auto out = open_out(path);
    out << "x,y,z,weight\n";
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const Vec3& n = rule.nodes[i];
        out << format_double(n[0]) << ',' << format_double(n[1]) << ',' << format_double(n[2])
            << ',' << format_double(rule.weights[i]) << '\n';
    }
}

void write_function_csv(const BandlimitedFunction& f, const std::string& path,
                        std::uint64_t seed) {
    auto out = open_out(path);
    out << "x,y,z,value\n";
    const auto& rule = f.carrier();
    const auto samples = f.samples();
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const Vec3& n = rule.nodes[i];
        out << format_double(n[0]) << ',' << format_double(n[1]) << ',' << format_double(n[2])
            << ',' << format_double(samples[i]) << '\n';
    }
    ordered_json meta;
    meta["dim"] = f.dim();
    meta["degree"] = f.degree();
    meta["rule_degree"] = rule.degree;
    meta["seed"] = seed;
    auto side = open_out(sidecar_path(path));
    side << meta.dump(2) << '\n';
}

BandlimitedFunction read_function_csv(const std::string& path) {
    const ordered_json meta = read_json(sidecar_path(path));
    for (const char* key : {"dim", "degree", "rule_degree"})
        if (!meta.contains(key)) throw IoError(sidecar_path(path) + ": missing key '" + key + "'");
    const int dim = meta["dim"].get<int>();
    const int degree = meta["degree"].get<int>();
    const int rule_degree = meta["rule_degree"].get<int>();
    if (dim != 3) throw IoError(path + ": only dim = 3 functions are supported");
    if (rule_degree < 2 * degree)
        throw IoError(path + ": declared rule_degree below twice the declared degree");

    auto carrier = product_rule_cached(rule_degree);
    std::vector<double> samples;
    samples.reserve(carrier->size());

    CsvReader reader{open_in(path), path, {}};
    std::vector<std::string_view> fields;
    if (!reader.next(fields) || fields.size() != 4 || fields[0] != "x")
        throw IoError(path + ": expected header x,y,z,value");
    std::size_t row = 0;
    while (reader.next(fields)) {
        if (fields.size() != 4) throw IoError(path + ": malformed row " + std::to_string(row));
        if (row >= carrier->size()) throw IoError(path + ": more rows than carrier nodes");
        const Vec3 got{parse_double(fields[0], path), parse_double(fields[1], path),
                       parse_double(fields[2], path)};
        check_node(got, carrier->nodes[row], row, path);
        samples.push_back(parse_double(fields[3], path));
        ++row;
    }
    if (row != carrier->size())
        throw IoError(path + ": " + std::to_string(row) + " rows but the declared rule has " +
                      std::to_string(carrier->size()) + " nodes");
    return BandlimitedFunction(dim, degree, std::move(carrier), std::move(samples));
}

std::uint64_t read_function_seed(const std::string& path) {
    const ordered_json meta = read_json(sidecar_path(path));
    return meta.value("seed", std::uint64_t{0});
}

void write_tree_csv(const FrameSystem& F, const CoefficientTree& tree, const std::string& path,
                    std::uint64_t seed, const std::string& source) {
    auto out = open_out(path);
    out << "j,k,cx,cy,cz,lambda,coef\n";
    for (int j = 0; j <= F.jmax(); ++j) {
        const auto& coeffs = tree.levels[static_cast<std::size_t>(j)];
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const Vec3& n = F.node(j, k);
            out << j << ',' << k << ',' << format_double(n[0]) << ',' << format_double(n[1])
                << ',' << format_double(n[2]) << ',' << format_double(F.lambda(j, k)) << ','
                << format_double(coeffs[k]) << '\n';
        }
    }
    ordered_json meta;
    meta["dim"] = F.dim();
    meta["jmax"] = F.jmax();
    meta["seed"] = seed;
    meta["source"] = source;
    meta["truncated"] = tree.truncated;
    auto side = open_out(sidecar_path(path));
    side << meta.dump(2) << '\n';
}

TreeFile read_tree_csv(const std::string& path) {
    const ordered_json meta = read_json(sidecar_path(path));
    for (const char* key : {"dim", "jmax"})
        if (!meta.contains(key)) throw IoError(sidecar_path(path) + ": missing key '" + key + "'");
    if (meta["dim"].get<int>() != 3) throw IoError(path + ": only dim = 3 trees are supported");

    TreeFile tf;
    tf.jmax = meta["jmax"].get<int>();
    tf.seed = meta.value("seed", std::uint64_t{0});
    tf.source = meta.value("source", std::string{});
    const FrameSystem F = FrameSystem::build(3, tf.jmax);
    tf.tree.levels.resize(static_cast<std::size_t>(tf.jmax) + 1);
    for (int j = 0; j <= tf.jmax; ++j)
        tf.tree.levels[static_cast<std::size_t>(j)].assign(F.level_size(j), 0.0);
    tf.tree.truncated = meta.value("truncated", false);

    CsvReader reader{open_in(path), path, {}};
    std::vector<std::string_view> fields;
    if (!reader.next(fields) || fields.size() != 7 || fields[0] != "j")
        throw IoError(path + ": expected header j,k,cx,cy,cz,lambda,coef");
    std::size_t row = 0;
    while (reader.next(fields)) {
        if (fields.size() != 7) throw IoError(path + ": malformed row " + std::to_string(row));
        const int j = static_cast<int>(parse_double(fields[0], path));
        const std::size_t k = static_cast<std::size_t>(parse_double(fields[1], path));
        if (j < 0 || j > tf.jmax || k >= F.level_size(j))
            throw IoError(path + ": atom index (" + std::to_string(j) + "," + std::to_string(k) +
                          ") outside the declared frame");
        const Vec3 got{parse_double(fields[2], path), parse_double(fields[3], path),
                       parse_double(fields[4], path)};
        check_node(got, F.node(j, k), row, path);
        if (std::abs(parse_double(fields[5], path) - F.lambda(j, k)) > 1e-12)
            throw IoError(path + ": weight mismatch at row " + std::to_string(row));
        tf.tree.levels[static_cast<std::size_t>(j)][k] = parse_double(fields[6], path);
        ++row;
    }
    if (row != F.total_atoms())
        throw IoError(path + ": " + std::to_string(row) + " rows but the declared frame has " +
                      std::to_string(F.total_atoms()) + " atoms");
    return tf;
}

std::vector<Vec3> read_points_csv(const std::string& path) {
    CsvReader reader{open_in(path), path, {}};
    std::vector<std::string_view> fields;
    std::vector<Vec3> pts;
    while (reader.next(fields)) {
        if (fields.size() < 3) throw IoError(path + ": expected x,y,z rows");
        if (fields[0] == "x") continue;  // header
        const Vec3 p{parse_double(fields[0], path), parse_double(fields[1], path),
                     parse_double(fields[2], path)};
        if (std::abs(dot(p, p) - 1.0) > 1e-9)
            throw IoError(path + ": point at row " + std::to_string(pts.size()) +
                          " is not on the unit sphere");
        pts.push_back(p);
    }
    if (pts.empty()) throw IoError(path + ": no points");
    return pts;
}

}  // namespace sphframe
