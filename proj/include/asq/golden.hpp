#pragma once

// Golden reference data: the embedded expected outputs for the headline
// runs, loaded from checksummed JSON files under data/golden. Payloads are
// immutable; a checksum mismatch is an error, never a silent regeneration.

#include "asq/enumerate.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace asq {

struct GoldenTable1 {
    std::uint64_t x = 0;
    struct Row {
        std::string alpha_str;  // canonical "p/q"
        Rational alpha;
        std::vector<IndexTriple> triples;
    };
    std::vector<Row> rows;
};

struct GoldenV {
    std::uint64_t x = 0;
    std::vector<IndexTriple> triples;
};

std::uint64_t fnv1a64(std::string_view s);

GoldenTable1 load_golden_table1(const std::filesystem::path& file);
GoldenV load_golden_v(const std::filesystem::path& file);

}  // namespace asq
