#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace econokit {

/// Calendar position of a quarterly observation. Ordering is (year, quarter)
/// and the successor of (y, 4) is (y+1, 1).
struct QuarterIndex {
    int year = 0;
    int quarter = 1;  // 1..4

    friend auto operator<=>(const QuarterIndex&, const QuarterIndex&) = default;

    [[nodiscard]] bool valid() const { return quarter >= 1 && quarter <= 4; }

    [[nodiscard]] QuarterIndex next() const { return advanced(1); }
    [[nodiscard]] QuarterIndex advanced(int steps) const;

    /// Number of quarters from `other` to `*this` (positive when later).
    [[nodiscard]] int minus(const QuarterIndex& other) const;

    [[nodiscard]] std::string to_csv() const;     // "1991Q1"
    [[nodiscard]] std::string to_report() const;  // "1991:I"

    /// Parses the machine token "YYYYQn"; throws econokit::Error on failure.
    static QuarterIndex parse(std::string_view token);
    static std::optional<QuarterIndex> try_parse(std::string_view token);
};

}  // namespace econokit
