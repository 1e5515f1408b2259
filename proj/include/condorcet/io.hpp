// io.hpp -- text formats shared by the tools: conditions files, histograms,
// domain files and run manifests.

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <zlib.h>

#include "core.hpp"
#include "domain.hpp"
#include "lexcode.hpp"

namespace condorcet::io {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kCodeTable = "1N2:1,1N3:2,2N1:3,2N3:4,3N1:5,3N2:6";

/// "# n=8 rules=1N3,2N1 order=colex codes=1N2:1,..."
inline std::string conditions_header(int n, const RuleSet& rules)
{
    return "# n=" + std::to_string(n) + " rules=" + rules.tokens() + " order=colex codes=" + kCodeTable;
}

struct ConditionsFile {
    int n = 0;
    std::optional<RuleSet> rules;
    std::vector<ConditionAssignment> assignments;
};

namespace detail {

inline std::map<std::string, std::string> header_fields(const std::string& line)
{
    std::map<std::string, std::string> fields;
    std::istringstream in(line.substr(1));
    std::string word;
    while (in >> word) {
        auto eq = word.find('=');
        if (eq != std::string::npos) fields[word.substr(0, eq)] = word.substr(eq + 1);
    }
    return fields;
}

inline std::string trimmed(std::string s)
{
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t k = 0;
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
    return s.substr(k);
}

} // namespace detail

/// Reads a conditions file. `n` is needed only when the file has no header.
inline ConditionsFile read_conditions(std::istream& in, int n = 0)
{
    ConditionsFile file;
    file.n = n;
    std::string line;
    while (std::getline(in, line)) {
        line = detail::trimmed(line);
        if (line.empty()) continue;
        if (line.front() == '#') {
            auto fields = detail::header_fields(line);
            if (auto it = fields.find("n"); it != fields.end()) file.n = std::stoi(it->second);
            if (auto it = fields.find("rules"); it != fields.end()) file.rules = RuleSet::parse(it->second);
            if (auto it = fields.find("order"); it != fields.end() && it->second != "colex")
                throw FormatError("unsupported triple order '" + it->second + "'");
            if (auto it = fields.find("codes"); it != fields.end() && it->second != kCodeTable)
                throw FormatError("unsupported condition code table '" + it->second + "'");
            continue;
        }
        if (file.n == 0) {
            // infer n from the slot count
            for (int k = 3; k <= kMaxAlternatives; ++k)
                if (choose3(k) == line.size()) file.n = k;
            if (file.n == 0) throw FormatError("cannot infer n from a code string of length " + std::to_string(line.size()));
        }
        try {
            file.assignments.push_back(ConditionAssignment::parse(line, file.n));
        } catch (const PreconditionError& e) {
            throw FormatError(std::string("bad code string '") + line + "': " + e.what());
        }
    }
    return file;
}

inline void write_histogram(std::ostream& out, const SizeHistogram& histogram)
{
    for (const auto& [size, count] : histogram.entries()) out << size << ": " << count << '\n';
}

inline SizeHistogram read_histogram(std::istream& in)
{
    SizeHistogram h;
    std::string line;
    while (std::getline(in, line)) {
        line = detail::trimmed(line);
        if (line.empty() || line.front() == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw FormatError("histogram line without ':': " + line);
        h.add(std::stoull(line.substr(0, colon)), std::stoull(line.substr(colon + 1)));
    }
    return h;
}

/// Header line, then one order per line (digits for n <= 9, else commas).
inline void write_domain(std::ostream& out, const Domain& domain, const ConditionAssignment& source)
{
    out << "# n=" << domain.alternatives() << " source=" << to_code_string(source) << " size=" << domain.size()
        << '\n';
    for (const auto& order : domain.orders()) out << order.to_string() << '\n';
}

/// Reads every domain block of a domain file.
inline std::vector<Domain> read_domains(std::istream& in)
{
    std::vector<Domain> out;
    std::vector<LinearOrder> orders;
    int n = 0;
    bool open = false;
    auto flush = [&] {
        if (open) out.emplace_back(n, std::move(orders));
        orders.clear();
    };
    std::string line;
    while (std::getline(in, line)) {
        line = detail::trimmed(line);
        if (line.empty()) continue;
        if (line.front() == '#') {
            flush();
            n = std::stoi(detail::header_fields(line).at("n"));
            open = true;
            continue;
        }
        orders.push_back(LinearOrder::parse(line));
    }
    flush();
    return out;
}

// ---------------------------------------------------------------------------
// Manifests
// ---------------------------------------------------------------------------

inline std::uint32_t file_crc32(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    uLong crc = crc32(0L, Z_NULL, 0);
    std::vector<char> buffer(1 << 16);
    while (in) {
        in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        auto got = in.gcount();
        if (got > 0) crc = crc32(crc, reinterpret_cast<const Bytef*>(buffer.data()), static_cast<uInt>(got));
    }
    return static_cast<std::uint32_t>(crc);
}

inline std::string hex32(std::uint32_t v)
{
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", v);
    return buf;
}

/// key=value lines, written in insertion order.
class Manifest {
public:
    void set(const std::string& key, const std::string& value)
    {
        for (auto& [k, v] : entries_)
            if (k == key) {
                v = value;
                return;
            }
        entries_.emplace_back(key, value);
    }

    std::optional<std::string> get(const std::string& key) const
    {
        for (const auto& [k, v] : entries_)
            if (k == key) return v;
        return std::nullopt;
    }

    void write(std::ostream& out) const
    {
        for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
    }

    static Manifest read(std::istream& in)
    {
        Manifest m;
        std::string line;
        while (std::getline(in, line)) {
            line = detail::trimmed(line);
            if (line.empty() || line.front() == '#') continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) throw FormatError("manifest line without '=': " + line);
            m.set(line.substr(0, eq), line.substr(eq + 1));
        }
        return m;
    }

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

inline std::string manifest_path(const std::string& output_path) { return output_path + ".manifest"; }

/// Whether the manifest beside `output_path` records the file's checksum.
inline bool verify_manifest(const std::string& output_path)
{
    std::ifstream in(manifest_path(output_path));
    if (!in) return false;
    auto manifest = Manifest::read(in);
    auto recorded = manifest.get("output_crc32");
    return recorded && *recorded == hex32(file_crc32(output_path));
}

} // namespace condorcet::io
