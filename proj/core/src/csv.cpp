#include "tempcal/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "tempcal/errors.hpp"

namespace tempcal {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string where(const std::string& source, std::size_t line, std::size_t col) {
  return source + ":" + std::to_string(line) + ": column " + std::to_string(col);
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      return cells;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

std::string format_double(double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace

LogitDataset parse_logits_csv(std::istream& in, const CsvOptions& opts,
                              const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  if (opts.header) {
    std::getline(in, line);
    ++line_no;
  }

  std::size_t width = 0;
  std::vector<double> values;
  std::vector<ClassId> labels;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_cells(line);
    if (width == 0) {
      width = cells.size();
      const std::size_t min_width = opts.has_labels ? 3 : 2;
      if (width < min_width) {
        throw DataError(source + ":" + std::to_string(line_no) + ": expected at least " +
                        std::to_string(min_width) + " columns, got " +
                        std::to_string(width));
      }
    } else if (cells.size() != width) {
      throw DataError(source + ":" + std::to_string(line_no) + ": row has " +
                      std::to_string(cells.size()) + " columns, expected " +
                      std::to_string(width));
    }

    const std::size_t n_logits = opts.has_labels ? width - 1 : width;
    for (std::size_t c = 0; c < n_logits; ++c) {
      const std::string_view cell = cells[c];
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw DataError(where(source, line_no, c + 1) + ": '" + std::string(cell) +
                        "' is not a number");
      }
      if (!std::isfinite(v)) {
        throw DataError(where(source, line_no, c + 1) + ": logit is not finite");
      }
      values.push_back(v);
    }
    if (opts.has_labels) {
      const std::string_view cell = cells.back();
      long long y = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), y);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw DataError(where(source, line_no, width) + ": '" + std::string(cell) +
                        "' is not an integer label");
      }
      if (y < 0 || static_cast<unsigned long long>(y) >= n_logits) {
        throw DataError(where(source, line_no, width) + ": label " + std::to_string(y) +
                        " is outside [0, " + std::to_string(n_logits) + ")");
      }
      labels.push_back(static_cast<ClassId>(y));
    }
    ++rows;
  }
  if (rows == 0) {
    throw DataError(source + ": no data rows");
  }

  const std::size_t k = opts.has_labels ? width - 1 : width;
  std::optional<std::vector<ClassId>> maybe_labels;
  if (opts.has_labels) maybe_labels = std::move(labels);
  return LogitDataset(Matrix(rows, k, std::move(values)), std::move(maybe_labels));
}

LogitDataset read_logits_csv(const std::filesystem::path& path,
                             const CsvOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open '" + path.string() + "'");
  }
  return parse_logits_csv(in, opts, path.string());
}

void write_logits_csv(std::ostream& out, const LogitDataset& data) {
  const Matrix& logits = data.logits();
  for (std::size_t i = 0; i < logits.rows(); ++i) {
    for (std::size_t j = 0; j < logits.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(logits(i, j));
    }
    if (data.has_labels()) out << ',' << (*data.labels())[i];
    out << '\n';
  }
}

void write_logits_csv(const std::filesystem::path& path, const LogitDataset& data) {
  std::ostringstream out;
  write_logits_csv(out, data);
  write_file_atomic(path, out.str());
}

void write_probabilities_csv(const std::filesystem::path& path,
                             const ConfidenceMatrix& probs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < probs.n_samples(); ++i) {
    auto row = probs.probs.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ',';
      out << format_double(row[j]);
    }
    out << '\n';
  }
  write_file_atomic(path, out.str());
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw DataError("cannot write '" + tmp.string() + "'");
    }
    out << contents;
    out.flush();
    if (!out) {
      throw DataError("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw DataError("cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace tempcal
