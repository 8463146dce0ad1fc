#include "nsest/csv.hpp"

#include <chrono>
#include <ctime>

namespace nsest {

CsvWriter::CsvWriter(std::ostream& out, bool with_timestamp) : out_(out) {
    if (with_timestamp) {
        const auto now = std::chrono::system_clock::now();
        const std::time_t t = std::chrono::system_clock::to_time_t(now);
        char buf[64];
        std::tm tm_utc{};
        gmtime_r(&t, &tm_utc);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
        out_ << "# generated " << buf << "\n";
    }
}

void CsvWriter::header(const std::string& line) { out_ << line << "\n"; }

std::string CsvWriter::format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void CsvWriter::field(const std::string& s) {
    if (row_open_) out_ << ",";
    out_ << s;
    row_open_ = true;
}

void CsvWriter::field(double v) { field(format_double(v)); }

void CsvWriter::field(std::uint64_t v) { field(std::to_string(v)); }

void CsvWriter::field(int v) { field(std::to_string(v)); }

void CsvWriter::end_row() {
    out_ << "\n";
    row_open_ = false;
}

} // namespace nsest
