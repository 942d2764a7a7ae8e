#pragma once

// Output helpers shared by the CLI and the reproduction run: CSV text,
// binary PGM, and atomic file replacement.

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fermatmod::emit {

// Writes `contents` to a sibling temporary file, then renames it over
// `path`, so readers never see a partial file.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view contents);

// Row-major matrix of small residues.
struct Grid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> cells;

  Grid() = default;
  Grid(std::size_t r, std::size_t c) : rows(r), cols(c), cells(r * c, 0) {}

  std::uint64_t& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
};

// CSV grid: header "<row_label>,0,1,...,cols-1", then one line per row
// starting with the row index.
std::string GridCsv(const Grid& grid, std::string_view row_label);

// Binary P5, maxval 255, row 0 at the top. Cell values are scaled
// linearly from [0, max_value] to [0, 255].
std::string GridPgm(const Grid& grid, std::uint64_t max_value);

std::string PairsCsv(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs,
                     std::string_view header = "x,y");

}  // namespace fermatmod::emit
