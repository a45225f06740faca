#include "bactlink/csv.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <stdexcept>
#include <utility>

namespace bactlink {

std::string format_double(double v) {
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, p);
}

std::string format_int(std::int64_t v) { return std::to_string(v); }

CsvWriter::CsvWriter(std::ostream& out, std::string schema,
                     const std::vector<std::string>& columns, bool timestamp)
    : out_(out), schema_(std::move(schema)), columns_(columns.size()) {
    if (columns.empty()) throw std::invalid_argument("no columns");
    if (timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(
            std::chrono::system_clock::now());
        char stamp[32];
        std::tm tm_utc{};
        gmtime_r(&now, &tm_utc);
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
        out_ << "# generated " << stamp << "\n";
    }
    out_ << schema_;
    for (const std::string& c : columns) out_ << ',' << c;
    out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_)
        throw std::invalid_argument("row width does not match header");
    out_ << schema_;
    for (const std::string& f : fields) out_ << ',' << f;
    out_ << "\n";
}

}  // namespace bactlink
