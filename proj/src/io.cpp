#include "ybe/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

namespace ybe {

std::string kind_name(ObjectKind k) {
    switch (k) {
        case ObjectKind::brace: return "brace";
        case ObjectKind::ring: return "ring";
        case ObjectKind::solution: return "solution";
        case ObjectKind::weights: return "weights";
        case ObjectKind::matrix: return "matrix";
        case ObjectKind::partition: return "partition";
    }
    return "?";
}

ObjectKind object_kind(const json& j) {
    if (!j.is_object()) throw IoError("top-level JSON value must be an object");
    if (!j.contains("kind")) {
        if (j.contains("classes")) return ObjectKind::partition;
        throw IoError("missing \"kind\"");
    }
    const auto& k = j.at("kind");
    if (!k.is_string()) throw IoError("\"kind\" must be a string");
    const std::string s = k.get<std::string>();
    if (s == "brace") return ObjectKind::brace;
    if (s == "ring") return ObjectKind::ring;
    if (s == "solution") return ObjectKind::solution;
    if (s == "weights") return ObjectKind::weights;
    if (s == "matrix") return ObjectKind::matrix;
    if (s == "partition") return ObjectKind::partition;
    throw IoError("unknown kind \"" + s + "\"");
}

namespace {

void expect_kind(const json& j, ObjectKind k) {
    if (object_kind(j) != k) throw IoError("expected a " + kind_name(k) + " object");
}

int get_int(const json& j, const char* key) {
    if (!j.contains(key)) throw IoError(std::string("missing \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw IoError(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

Table table_from_json(const json& j, const char* key, int order) {
    if (!j.contains(key)) throw IoError(std::string("missing \"") + key + "\"");
    const auto& rows = j.at(key);
    if (!rows.is_array() || static_cast<int>(rows.size()) != order)
        throw IoError(std::string("\"") + key + "\" must have " + std::to_string(order) + " rows");
    std::vector<Elem> data;
    data.reserve(static_cast<size_t>(order) * order);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != order)
            throw IoError(std::string("\"") + key + "\" rows must have " + std::to_string(order) + " entries");
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw IoError(std::string("\"") + key + "\" entries must be integers");
            const int e = v.get<int>();
            if (e < 0 || e >= order) throw IoError(std::string("\"") + key + "\" entry out of range");
            data.push_back(e);
        }
    }
    return Table(order, std::move(data));
}

json table_json(const Table& t) { return t.rows(); }

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

bool parse_fraction(const std::string& s, double& out) {
    const auto slash = s.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            out = std::stod(s, &used);
            return used == s.size();
        }
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        const double p = std::stod(num, &used);
        if (used != num.size()) return false;
        const double q = std::stod(den, &used);
        if (used != den.size() || q == 0.0) return false;
        out = p / q;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

cplx parse_complex_text(const std::string& s) {
    const auto at = s.find('@');
    double mag = 0.0;
    if (!parse_fraction(s.substr(0, at), mag)) throw IoError("bad number \"" + s + "\"");
    if (at == std::string::npos) return {mag, 0.0};
    const std::string root = s.substr(at + 1);
    const auto slash = root.find('/');
    if (slash == std::string::npos) throw IoError("root of unity must be written k/m in \"" + s + "\"");
    try {
        const int k = std::stoi(root.substr(0, slash));
        const int m = std::stoi(root.substr(slash + 1));
        if (m <= 0) throw IoError("bad root of unity in \"" + s + "\"");
        const int e = ((k % m) + m) % m;
        if (e == 0) return {mag, 0.0};
        return std::polar(mag, 2.0 * std::numbers::pi * e / m);
    } catch (const std::logic_error&) {
        throw IoError("bad root of unity in \"" + s + "\"");
    }
}

cplx parse_complex(const json& v) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_string()) return parse_complex_text(v.get<std::string>());
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw IoError("complex value must be [re, im], a number or a \"p/q\" string");
}

std::optional<std::string> rational_text(double x, int max_den) {
    for (int q = 1; q <= max_den; ++q) {
        const double p = std::round(x * q);
        if (std::abs(p / q - x) <= 1e-15 * std::max(1.0, std::abs(x))) {
            const long long pi = static_cast<long long>(p);
            if (std::gcd(std::llabs(pi), static_cast<long long>(q)) != 1 && pi != 0) continue;
            return q == 1 ? std::to_string(pi) : std::to_string(pi) + "/" + std::to_string(q);
        }
    }
    return std::nullopt;
}

// ---- writers ------------------------------------------------------------------

json to_json(const FiniteBrace& b) {
    return json{{"kind", "brace"},
                {"order", b.order()},
                {"add", table_json(b.add_table())},
                {"circ", table_json(b.circ_table())}};
}

json to_json(const FiniteRing& r) {
    return json{{"kind", "ring"}, {"order", r.order()}, {"add", table_json(r.add)}, {"mul", table_json(r.mul)}};
}

json to_json(const SetSolution& s) {
    json r = json::array();
    for (const auto& [k, l] : s.table()) r.push_back(json::array({k, l}));
    return json{{"kind", "solution"}, {"n", s.size()}, {"r", std::move(r)}};
}

json to_json(const PartitionedSet& p) {
    return json{{"kind", "partition"}, {"n", p.n}, {"classes", p.classes}};
}

json to_json(const WeightSystem& d) {
    json v = json::array();
    for (const auto& z : d.values()) v.push_back(complex_json(z));
    return json{{"kind", "weights"}, {"n", d.size()}, {"d", std::move(v)}};
}

json to_json(const CMatrix& m) {
    json v = json::array();
    for (const auto& z : m.data()) v.push_back(complex_json(z));
    return json{{"kind", "matrix"}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(v)}};
}

json to_json(const CMatrix& m, const std::vector<std::string>& rational) {
    if (rational.size() != m.data().size()) throw IoError("rational annotation length mismatch");
    json j = to_json(m);
    j["rational"] = rational;
    return j;
}

// ---- readers ------------------------------------------------------------------

FiniteBrace brace_from_json(const json& j) {
    expect_kind(j, ObjectKind::brace);
    const int n = get_int(j, "order");
    if (n < 1) throw IoError("\"order\" must be positive");
    return FiniteBrace(table_from_json(j, "add", n), table_from_json(j, "circ", n));
}

FiniteRing ring_from_json(const json& j) {
    expect_kind(j, ObjectKind::ring);
    const int n = get_int(j, "order");
    if (n < 1) throw IoError("\"order\" must be positive");
    return FiniteRing{table_from_json(j, "add", n), table_from_json(j, "mul", n)};
}

SetSolution solution_from_json(const json& j) {
    expect_kind(j, ObjectKind::solution);
    const int n = get_int(j, "n");
    if (n < 0) throw IoError("\"n\" must be non-negative");
    if (!j.contains("r") || !j.at("r").is_array() || static_cast<int>(j.at("r").size()) != n * n)
        throw IoError("\"r\" must list n² pairs");
    std::vector<Pair> t;
    t.reserve(static_cast<size_t>(n) * n);
    for (const auto& p : j.at("r")) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw IoError("\"r\" entries must be [k, l] integer pairs");
        const int k = p[0].get<int>(), l = p[1].get<int>();
        if (k < 0 || k >= n || l < 0 || l >= n) throw IoError("\"r\" entry out of range");
        t.emplace_back(k, l);
    }
    return SetSolution(n, std::move(t));
}

PartitionedSet partition_from_json(const json& j) {
    expect_kind(j, ObjectKind::partition);
    if (!j.contains("classes") || !j.at("classes").is_array()) throw IoError("missing \"classes\"");
    PartitionedSet p;
    int max_elem = -1;
    std::vector<int> seen;
    for (const auto& c : j.at("classes")) {
        if (!c.is_array()) throw IoError("each class must be an array");
        std::vector<int> cls;
        for (const auto& v : c) {
            if (!v.is_number_integer() || v.get<int>() < 0) throw IoError("class members must be non-negative integers");
            cls.push_back(v.get<int>());
            max_elem = std::max(max_elem, cls.back());
            seen.push_back(cls.back());
        }
        p.classes.push_back(std::move(cls));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw IoError("classes overlap");
    p.n = j.contains("n") ? get_int(j, "n") : max_elem + 1;
    if (max_elem >= p.n) throw IoError("class member exceeds \"n\"");
    return p;
}

WeightSystem weights_from_json(const json& j) {
    expect_kind(j, ObjectKind::weights);
    const int n = get_int(j, "n");
    if (n < 0) throw IoError("\"n\" must be non-negative");
    if (!j.contains("d") || !j.at("d").is_array() || static_cast<int>(j.at("d").size()) != n * n)
        throw IoError("\"d\" must list n² weights");
    std::vector<cplx> d;
    for (const auto& v : j.at("d")) d.push_back(parse_complex(v));
    try {
        return WeightSystem(n, std::move(d));
    } catch (const WeightError& e) {
        throw IoError(e.what());
    }
}

CMatrix matrix_from_json(const json& j) {
    expect_kind(j, ObjectKind::matrix);
    const int r = get_int(j, "rows"), c = get_int(j, "cols");
    if (r < 0 || c < 0) throw IoError("matrix dimensions must be non-negative");
    if (!j.contains("entries") || !j.at("entries").is_array() ||
        j.at("entries").size() != static_cast<size_t>(r) * c)
        throw IoError("\"entries\" must list rows·cols values");
    std::vector<cplx> e;
    for (const auto& v : j.at("entries")) e.push_back(parse_complex(v));
    if (j.contains("rational")) {
        const auto& rat = j.at("rational");
        if (!rat.is_array() || rat.size() != e.size()) throw IoError("\"rational\" must parallel \"entries\"");
        for (size_t k = 0; k < e.size(); ++k) {
            if (!rat[k].is_string()) throw IoError("\"rational\" entries must be strings");
            const cplx exact = parse_complex_text(rat[k].get<std::string>());
            if (std::abs(exact - e[k]) > 1e-15 * std::max(1.0, std::abs(exact)))
                throw IoError("entry " + std::to_string(k) + " disagrees with its rational annotation");
        }
    }
    return CMatrix(r, c, std::move(e));
}

// ---- files --------------------------------------------------------------------

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

std::string canonical_dump(const json& j) { return j.dump() + "\n"; }

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << canonical_dump(j);
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace ybe
