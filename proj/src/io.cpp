#include "cfftk/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace cfftk {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_uint(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw FormatError("invalid value for " + what + ": '" + text + "'");
    return value;
}

int parse_int_param(const std::string& text, const std::string& what) {
    const auto v = parse_uint(text, what);
    if (v > 1'000'000) throw FormatError(what + " out of range: " + text);
    return static_cast<int>(v);
}

bool next_nonblank(std::istream& is, std::string& line) {
    while (std::getline(is, line))
        if (!trim(line).empty()) return true;
    return false;
}

void expect_only_blank(std::istream& is, const std::string& what) {
    std::string line;
    if (next_nonblank(is, line)) throw FormatError(what + ": unexpected trailing line '" + trim(line) + "'");
}

}  // namespace

void write_cff(std::ostream& os, const CffDocument& doc) {
    const auto& f = doc.instance;
    os << "cff r=" << doc.r << " w=" << doc.w << " t=" << f.block_count() << " n=" << f.point_count();
    if (doc.d) os << " d=" << *doc.d;
    if (doc.t_prime) os << " tprime=" << *doc.t_prime;
    os << '\n';
    std::string row(f.point_count(), '0');
    for (const auto& block : f.blocks()) {
        std::fill(row.begin(), row.end(), '0');
        for (auto p : block.elements()) row[p] = '1';
        os << row << '\n';
    }
}

CffDocument read_cff(std::istream& is) {
    std::string line;
    if (!next_nonblank(is, line)) throw FormatError("cff: empty input");

    std::istringstream header(trim(line));
    std::string tag;
    header >> tag;
    if (tag != "cff") throw FormatError("cff: header must start with 'cff', got '" + tag + "'");
    std::map<std::string, std::string> fields;
    std::string token;
    while (header >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw FormatError("cff: malformed header field '" + token + "'");
        const auto key = token.substr(0, eq);
        if (key != "r" && key != "w" && key != "t" && key != "n" && key != "d" && key != "tprime")
            throw FormatError("cff: unknown header field '" + key + "'");
        if (!fields.emplace(key, token.substr(eq + 1)).second)
            throw FormatError("cff: duplicate header field '" + key + "'");
    }
    for (const char* key : {"r", "w", "t", "n"})
        if (!fields.count(key)) throw FormatError(std::string("cff: missing header field '") + key + "'");

    const int r = parse_int_param(fields["r"], "r");
    const int w = parse_int_param(fields["w"], "w");
    const auto t = parse_uint(fields["t"], "t");
    const auto n = parse_uint(fields["n"], "n");
    if (t == 0) throw FormatError("cff: t must be positive");

    std::vector<IndexSubset> blocks;
    blocks.reserve(t);
    for (std::uint64_t i = 0; i < t; ++i) {
        if (!std::getline(is, line))
            throw FormatError("cff: expected " + std::to_string(t) + " rows, got " + std::to_string(i));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != n)
            throw FormatError("cff: row " + std::to_string(i) + " has " + std::to_string(line.size()) +
                              " columns, expected " + std::to_string(n));
        IndexSubset block(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (line[j] == '1')
                block.insert(j);
            else if (line[j] != '0')
                throw FormatError("cff: row " + std::to_string(i) + " has invalid character '" +
                                  std::string(1, line[j]) + "'");
        }
        blocks.push_back(std::move(block));
    }
    expect_only_blank(is, "cff");

    CffDocument doc{CffInstance(n, std::move(blocks)), r, w, std::nullopt, std::nullopt};
    if (fields.count("d")) doc.d = parse_uint(fields["d"], "d");
    if (fields.count("tprime")) doc.t_prime = parse_int_param(fields["tprime"], "tprime");
    return doc;
}

void write_cover(std::ostream& os, const BicliqueCoverCert& cert) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& a : cert.generators) gens.push_back(a.elements());
    nlohmann::json doc = {
        {"format", "biclique-cover"},
        {"t", cert.t},
        {"r", cert.r},
        {"w", cert.w},
        {"d", cert.d},
        {"generators", std::move(gens)},
        {"rejected_points", cert.rejected_points},
    };
    os << doc.dump(2) << '\n';
}

BicliqueCoverCert read_cover(std::istream& is) {
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("certificate: ") + e.what());
    }
    BicliqueCoverCert cert;
    try {
        if (doc.value("format", std::string{}) != "biclique-cover")
            throw FormatError("certificate: missing or wrong \"format\" (expected \"biclique-cover\")");
        cert.t = doc.at("t").get<int>();
        cert.r = doc.at("r").get<int>();
        cert.w = doc.at("w").get<int>();
        cert.d = doc.at("d").get<std::uint64_t>();
        cert.rejected_points = doc.value("rejected_points", std::uint64_t{0});
        if (cert.t < 0 || cert.t > kMaxMaskGround)
            throw FormatError("certificate: t out of range");
        for (const auto& g : doc.at("generators")) {
            IndexSubset a(static_cast<std::size_t>(cert.t));
            for (const auto& e : g) {
                const auto i = e.get<std::int64_t>();
                if (i < 0 || i >= cert.t)
                    throw FormatError("certificate: generator element " + std::to_string(i) +
                                      " outside [0, " + std::to_string(cert.t) + ")");
                if (a.contains(static_cast<std::size_t>(i)))
                    throw FormatError("certificate: repeated element " + std::to_string(i) + " in generator");
                a.insert(static_cast<std::size_t>(i));
            }
            cert.generators.push_back(std::move(a));
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("certificate: ") + e.what());
    }
    cert.validate();
    return cert;
}

void write_sign_matrix(std::ostream& os, const SignMatrix& m) {
    os << "order " << m.order() << '\n';
    std::string row(m.order(), '+');
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) row[j] = m(i, j) > 0 ? '+' : '-';
        os << row << '\n';
    }
}

SignMatrix read_sign_matrix(std::istream& is) {
    std::vector<std::string> lines;
    std::optional<std::uint64_t> declared;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        auto text = trim(line);
        if (text.empty()) continue;
        if (first && text.rfind("order", 0) == 0) {
            declared = parse_uint(trim(text.substr(5)), "order");
            first = false;
            continue;
        }
        first = false;
        lines.push_back(std::move(text));
    }
    if (lines.empty()) throw FormatError("matrix: no rows");
    if (declared && *declared != lines.size())
        throw FormatError("matrix: header declares order " + std::to_string(*declared) + " but " +
                          std::to_string(lines.size()) + " rows follow");

    const auto n = lines.size();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (lines[i].size() != n)
            throw FormatError("matrix: row " + std::to_string(i) + " has " +
                              std::to_string(lines[i].size()) + " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) {
            const char c = lines[i][j];
            if (c != '+' && c != '-')
                throw FormatError("matrix: row " + std::to_string(i) + " has invalid character '" +
                                  std::string(1, c) + "'");
            rows[i][j] = c == '+' ? 1 : -1;
        }
    }
    return SignMatrix::from_rows(rows);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace cfftk
