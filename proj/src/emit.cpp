#include "fermatmod/emit.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "fermatmod/error.hpp"

namespace fermatmod::emit {

void WriteFileAtomic(const std::filesystem::path& path, std::string_view contents) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorKind::kInvalidArgument, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorKind::kInvalidArgument, "cannot rename onto " + path.string());
  }
}

std::string GridCsv(const Grid& grid, std::string_view row_label) {
  std::ostringstream os;
  os << row_label;
  for (std::size_t c = 0; c < grid.cols; ++c) os << ',' << c;
  os << '\n';
  for (std::size_t r = 0; r < grid.rows; ++r) {
    os << r;
    for (std::size_t c = 0; c < grid.cols; ++c) os << ',' << grid.at(r, c);
    os << '\n';
  }
  return os.str();
}

std::string GridPgm(const Grid& grid, std::uint64_t max_value) {
  std::string out = "P5\n" + std::to_string(grid.cols) + " " + std::to_string(grid.rows) +
                    "\n255\n";
  out.reserve(out.size() + grid.cells.size());
  for (std::uint64_t v : grid.cells) {
    const std::uint64_t scaled = max_value == 0 ? 0 : (v * 255 + max_value / 2) / max_value;
    out.push_back(static_cast<char>(scaled > 255 ? 255 : scaled));
  }
  return out;
}

std::string PairsCsv(std::span<const std::pair<std::uint64_t, std::uint64_t>> pairs,
                     std::string_view header) {
  std::ostringstream os;
  os << header << '\n';
  for (const auto& [x, y] : pairs) os << x << ',' << y << '\n';
  return os.str();
}

}  // namespace fermatmod::emit
