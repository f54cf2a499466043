#include "prefatt/batch.hpp"

#include <cstdio>

namespace prefatt {

std::uint64_t fnv1a_hash(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string format_hash(std::uint64_t hash) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::uint64_t RunMetadata::config_hash() const {
    return fnv1a_hash(tool + " " + config);
}

void write_csv_header(std::ostream& out, const RunMetadata& meta,
                      const std::vector<std::string>& columns) {
    out << "# version=" << kVersion << "\n";
    out << "# tool=" << meta.tool << "\n";
    out << "# config_hash=" << format_hash(meta.config_hash()) << "\n";
    out << "# master_seed=" << meta.master_seed << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << columns[i];
    }
    out << "\n";
}

}  // namespace prefatt
