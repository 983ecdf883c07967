#include "econokit/quarter.hpp"

#include <array>
#include <charconv>

#include "econokit/error.hpp"

namespace econokit {

namespace {

// Encode as a flat quarter count so arithmetic is plain integer math.
int encode(const QuarterIndex& q) { return q.year * 4 + (q.quarter - 1); }

QuarterIndex decode(int e) {
    int year = e >= 0 ? e / 4 : -((-e + 3) / 4);
    int rem = e - year * 4;
    return QuarterIndex{year, rem + 1};
}

}  // namespace

QuarterIndex QuarterIndex::advanced(int steps) const {
    return decode(encode(*this) + steps);
}

int QuarterIndex::minus(const QuarterIndex& other) const {
    return encode(*this) - encode(other);
}

std::string QuarterIndex::to_csv() const {
    return std::to_string(year) + "Q" + std::to_string(quarter);
}

std::string QuarterIndex::to_report() const {
    static constexpr std::array<const char*, 4> roman{"I", "II", "III", "IV"};
    return std::to_string(year) + ":" + roman[static_cast<std::size_t>(quarter - 1)];
}

std::optional<QuarterIndex> QuarterIndex::try_parse(std::string_view token) {
    auto qpos = token.find('Q');
    if (qpos == std::string_view::npos || qpos == 0 || qpos + 1 >= token.size()) {
        return std::nullopt;
    }
    int year = 0;
    auto [yp, yec] = std::from_chars(token.data(), token.data() + qpos, year);
    if (yec != std::errc{} || yp != token.data() + qpos) return std::nullopt;
    int quarter = 0;
    auto* qbegin = token.data() + qpos + 1;
    auto* qend = token.data() + token.size();
    auto [qp, qec] = std::from_chars(qbegin, qend, quarter);
    if (qec != std::errc{} || qp != qend) return std::nullopt;
    QuarterIndex out{year, quarter};
    if (!out.valid()) return std::nullopt;
    return out;
}

QuarterIndex QuarterIndex::parse(std::string_view token) {
    auto parsed = try_parse(token);
    if (!parsed) {
        throw Error("invalid quarter token '" + std::string(token) +
                    "' (expected YYYYQn, e.g. 1991Q1)");
    }
    return *parsed;
}

}  // namespace econokit
