#include "qikm/datasets.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qikm {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::vector<std::string> split_whitespace(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (ss >> field) fields.push_back(field);
    return fields;
}

double parse_double(const std::string& s, const std::string& file, int line_no) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(file + ":" + std::to_string(line_no) + ": cannot parse value '" + s + "'");
    }
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

/// Remaps arbitrary class names to contiguous ids 0..k-1, ordered by name.
std::vector<int> remap_labels(const std::vector<std::string>& classes) {
    std::map<std::string, int> ids;
    for (const auto& c : classes) ids.emplace(c, 0);
    int next = 0;
    for (auto& [name, id] : ids) id = next++;
    std::vector<int> labels(classes.size());
    for (size_t i = 0; i < classes.size(); ++i) labels[i] = ids.at(classes[i]);
    return labels;
}

struct ParsedRows {
    std::vector<std::vector<double>> features;
    std::vector<std::string> classes;
};

RawDataset finish(const DatasetSpec& spec, ParsedRows rows, std::vector<std::string> feature_names) {
    RawDataset out;
    out.name = dataset_name(spec.id);
    out.feature_names = std::move(feature_names);

    const int n = static_cast<int>(rows.features.size());
    const int m = n > 0 ? static_cast<int>(rows.features[0].size()) : 0;
    out.rows = Matrix(n, m);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows.features[i].size()) != m)
            throw std::runtime_error(out.name + ": ragged feature row " + std::to_string(i));
        for (int j = 0; j < m; ++j) out.rows.at(i, j) = rows.features[i][j];
    }
    out.labels = remap_labels(rows.classes);

    const int k = out.labels.empty() ? 0 : 1 + *std::max_element(out.labels.begin(), out.labels.end());
    if (n != spec.expected_n || m != spec.expected_m || k != spec.expected_k) {
        std::ostringstream msg;
        msg << out.name << ": unexpected shape n=" << n << " m=" << m << " k=" << k << " (expected n="
            << spec.expected_n << " m=" << spec.expected_m << " k=" << spec.expected_k << ")";
        throw std::runtime_error(msg.str());
    }
    return out;
}

// --- per-dataset parsers -------------------------------------------------

ParsedRows parse_label_last_csv(const std::vector<std::string>& lines, const std::string& file, int n_features) {
    ParsedRows out;
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (static_cast<int>(fields.size()) != n_features + 1)
            throw std::runtime_error(file + ":" + std::to_string(i + 1) + ": expected " +
                                     std::to_string(n_features + 1) + " fields, got " + std::to_string(fields.size()));
        std::vector<double> row(n_features);
        for (int j = 0; j < n_features; ++j) row[j] = parse_double(fields[j], file, static_cast<int>(i + 1));
        out.features.push_back(std::move(row));
        out.classes.push_back(fields.back());
    }
    return out;
}

ParsedRows parse_wine(const std::vector<std::string>& lines, const std::string& file) {
    ParsedRows out;
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 14)
            throw std::runtime_error(file + ":" + std::to_string(i + 1) + ": expected 14 fields");
        out.classes.push_back(fields[0]);  // cultivar id leads the row
        std::vector<double> row(13);
        for (int j = 0; j < 13; ++j) row[j] = parse_double(fields[j + 1], file, static_cast<int>(i + 1));
        out.features.push_back(std::move(row));
    }
    return out;
}

ParsedRows parse_seeds(const std::vector<std::string>& lines, const std::string& file) {
    // Tab-separated with occasional doubled tabs; split on any whitespace.
    ParsedRows out;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split_whitespace(lines[i]);
        if (fields.size() != 8)
            throw std::runtime_error(file + ":" + std::to_string(i + 1) + ": expected 8 fields");
        std::vector<double> row(7);
        for (int j = 0; j < 7; ++j) row[j] = parse_double(fields[j], file, static_cast<int>(i + 1));
        out.features.push_back(std::move(row));
        out.classes.push_back(fields[7]);
    }
    return out;
}

ParsedRows parse_glass(const std::vector<std::string>& lines, const std::string& file) {
    ParsedRows out;
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 11)
            throw std::runtime_error(file + ":" + std::to_string(i + 1) + ": expected 11 fields");
        // Field 0 is a running Id; the chemistry features are RI + 8 oxides.
        std::vector<double> row(9);
        for (int j = 0; j < 9; ++j) row[j] = parse_double(fields[j + 1], file, static_cast<int>(i + 1));
        out.features.push_back(std::move(row));
        out.classes.push_back(fields[10]);
    }
    return out;
}

ParsedRows parse_penguins(const std::vector<std::string>& lines, const std::string& file) {
    if (lines.empty()) throw std::runtime_error(file + ": empty file");
    const auto header = split_csv(lines[0]);
    auto col = [&](const std::string& name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw std::runtime_error(file + ": missing column '" + name + "'");
        return static_cast<int>(it - header.begin());
    };
    const int c_island = col("island");
    const int c_cols[4] = {col("bill_length_mm"), col("bill_depth_mm"), col("flipper_length_mm"),
                           col("body_mass_g")};
    const int c_sex = col("sex");

    ParsedRows out;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split_csv(lines[i]);
        if (fields.size() != header.size())
            throw std::runtime_error(file + ":" + std::to_string(i + 1) + ": ragged row");

        bool missing = false;
        for (int c : {c_island, c_cols[0], c_cols[1], c_cols[2], c_cols[3], c_sex}) {
            const std::string& v = fields[c];
            if (v.empty() || v == "NA" || v == ".") missing = true;
        }
        if (missing) continue;

        std::vector<double> row(5);
        for (int j = 0; j < 4; ++j) row[j] = parse_double(fields[c_cols[j]], file, static_cast<int>(i + 1));
        const std::string sex = fields[c_sex];
        if (sex != "male" && sex != "female")
            throw std::runtime_error(file + ":" + std::to_string(i + 1) + ": unexpected sex '" + sex + "'");
        row[4] = sex == "male" ? 1.0 : 0.0;
        out.features.push_back(std::move(row));
        out.classes.push_back(fields[c_island]);
    }
    return out;
}

ParsedRows parse_algerian(const std::vector<std::string>& lines, const std::string& file) {
    // Two region blocks, each introduced by a "<Region> Dataset" banner and a
    // column header. Only the first (Bejaia) block is kept; day/month/year are
    // dropped and the Classes column is the target.
    ParsedRows out;
    bool in_bejaia = false;
    bool saw_header = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        if (line.find("Bejaia") != std::string::npos) {
            in_bejaia = true;
            continue;
        }
        if (line.find("Sidi") != std::string::npos) break;
        if (!in_bejaia) continue;
        if (!saw_header) {
            if (line.find("day") == std::string::npos)
                throw std::runtime_error(file + ":" + std::to_string(i + 1) + ": expected column header");
            saw_header = true;
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != 14)
            throw std::runtime_error(file + ":" + std::to_string(i + 1) + ": expected 14 fields");
        std::vector<double> row(10);
        for (int j = 0; j < 10; ++j) row[j] = parse_double(fields[j + 3], file, static_cast<int>(i + 1));
        out.features.push_back(std::move(row));
        // Normalize stray whitespace inside the class name ("not fire   ").
        std::string cls;
        for (const char ch : fields[13])
            if (!std::isspace(static_cast<unsigned char>(ch)))
                cls += ch;
            else if (!cls.empty() && cls.back() != ' ')
                cls += ' ';
        out.classes.push_back(trim(cls));
    }
    if (!saw_header) throw std::runtime_error(file + ": Bejaia block not found");
    return out;
}

ParsedRows parse_wholesale(const std::vector<std::string>& lines, const std::string& file) {
    if (lines.empty()) throw std::runtime_error(file + ": empty file");
    ParsedRows out;
    for (size_t i = 1; i < lines.size(); ++i) {  // skip header
        const std::string line = trim(lines[i]);
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != 8)
            throw std::runtime_error(file + ":" + std::to_string(i + 1) + ": expected 8 fields");
        out.classes.push_back(fields[0]);  // Channel; Region is dropped
        std::vector<double> row(6);
        for (int j = 0; j < 6; ++j) row[j] = parse_double(fields[j + 2], file, static_cast<int>(i + 1));
        out.features.push_back(std::move(row));
    }
    return out;
}

ParsedRows parse_ecoli(const std::vector<std::string>& lines, const std::string& file) {
    ParsedRows out;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split_whitespace(lines[i]);
        if (fields.size() != 9)
            throw std::runtime_error(file + ":" + std::to_string(i + 1) + ": expected 9 fields");
        const std::string& site = fields[8];
        if (site == "imS" || site == "imL") continue;  // two-member classes removed
        std::vector<double> row(7);
        for (int j = 0; j < 7; ++j) row[j] = parse_double(fields[j + 1], file, static_cast<int>(i + 1));
        out.features.push_back(std::move(row));
        out.classes.push_back(site);
    }
    return out;
}

}  // namespace

std::vector<DatasetId> all_dataset_ids() {
    return {DatasetId::Iris,     DatasetId::Wine,          DatasetId::Seeds,     DatasetId::Glass,
            DatasetId::Penguins, DatasetId::AlgerianFires, DatasetId::Wholesale, DatasetId::EColi};
}

std::string dataset_name(DatasetId id) {
    switch (id) {
        case DatasetId::Iris: return "iris";
        case DatasetId::Wine: return "wine";
        case DatasetId::Seeds: return "seeds";
        case DatasetId::Glass: return "glass";
        case DatasetId::Penguins: return "penguins";
        case DatasetId::AlgerianFires: return "algerian_fires";
        case DatasetId::Wholesale: return "wholesale";
        case DatasetId::EColi: return "ecoli";
    }
    throw std::invalid_argument("unknown dataset id");
}

DatasetId dataset_id_from_name(const std::string& name) {
    for (DatasetId id : all_dataset_ids())
        if (dataset_name(id) == name) return id;
    throw std::invalid_argument("unknown dataset '" + name + "'");
}

DatasetSpec dataset_spec(DatasetId id, const std::filesystem::path& data_dir) {
    switch (id) {
        case DatasetId::Iris: return {id, data_dir / "iris.data", 150, 4, 3};
        case DatasetId::Wine: return {id, data_dir / "wine.data", 178, 13, 3};
        case DatasetId::Seeds: return {id, data_dir / "seeds_dataset.txt", 210, 7, 3};
        case DatasetId::Glass: return {id, data_dir / "glass.data", 214, 9, 6};
        case DatasetId::Penguins: return {id, data_dir / "penguins.csv", 333, 5, 3};
        case DatasetId::AlgerianFires: return {id, data_dir / "algerian_forest_fires.csv", 122, 10, 2};
        case DatasetId::Wholesale: return {id, data_dir / "wholesale_customers.csv", 440, 6, 2};
        case DatasetId::EColi: return {id, data_dir / "ecoli.data", 332, 7, 6};
    }
    throw std::invalid_argument("unknown dataset id");
}

RawDataset load(const DatasetSpec& spec) {
    const std::string file = spec.source_path.string();
    const auto lines = read_lines(spec.source_path);

    switch (spec.id) {
        case DatasetId::Iris:
            return finish(spec, parse_label_last_csv(lines, file, 4),
                          {"sepal_length", "sepal_width", "petal_length", "petal_width"});
        case DatasetId::Wine:
            return finish(spec, parse_wine(lines, file),
                          {"alcohol", "malic_acid", "ash", "alcalinity_of_ash", "magnesium", "total_phenols",
                           "flavanoids", "nonflavanoid_phenols", "proanthocyanins", "color_intensity", "hue",
                           "od280_od315", "proline"});
        case DatasetId::Seeds:
            return finish(spec, parse_seeds(lines, file),
                          {"area", "perimeter", "compactness", "kernel_length", "kernel_width",
                           "asymmetry", "groove_length"});
        case DatasetId::Glass:
            return finish(spec, parse_glass(lines, file), {"ri", "na", "mg", "al", "si", "k", "ca", "ba", "fe"});
        case DatasetId::Penguins:
            return finish(spec, parse_penguins(lines, file),
                          {"bill_length_mm", "bill_depth_mm", "flipper_length_mm", "body_mass_g", "sex"});
        case DatasetId::AlgerianFires:
            return finish(spec, parse_algerian(lines, file),
                          {"temperature", "rh", "ws", "rain", "ffmc", "dmc", "dc", "isi", "bui", "fwi"});
        case DatasetId::Wholesale:
            return finish(spec, parse_wholesale(lines, file),
                          {"fresh", "milk", "grocery", "frozen", "detergents_paper", "delicassen"});
        case DatasetId::EColi:
            return finish(spec, parse_ecoli(lines, file), {"mcg", "gvh", "lip", "chg", "aac", "alm1", "alm2"});
    }
    throw std::invalid_argument("unknown dataset id");
}

std::string checksum(const DatasetSpec& spec) {
    std::ifstream in(spec.source_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open dataset file: " + spec.source_path.string());

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("sha256 init failed");
    }
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0)
        EVP_DigestUpdate(ctx, buf, static_cast<size_t>(in.gcount()));

    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

}  // namespace qikm
