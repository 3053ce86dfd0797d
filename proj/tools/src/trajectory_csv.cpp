#include "hyplan/cli/trajectory_csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace hyplan::cli {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string trajectory_header(int state_dim, int input_dim) {
  std::string h = "edge_id,t,j";
  for (int i = 0; i < state_dim; ++i) h += ",x" + std::to_string(i);
  for (int i = 0; i < input_dim; ++i) h += ",u" + std::to_string(i);
  return h;
}

void write_trajectory_csv(std::ostream& out, const SolutionPair& sp) {
  const int n = sp.empty() ? 0 : static_cast<int>(sp.front().state.size());
  const int m = sp.empty() ? 0 : static_cast<int>(sp.front().input.size());
  out << trajectory_header(n, m) << '\n';
  for (std::size_t k = 0; k < sp.size(); ++k) {
    const Sample& s = sp[k];
    out << sp.edge_of(k) << ',' << format_double(s.time.t) << ',' << s.time.j;
    for (Eigen::Index i = 0; i < s.state.size(); ++i) out << ',' << format_double(s.state[i]);
    for (Eigen::Index i = 0; i < s.input.size(); ++i) out << ',' << format_double(s.input[i]);
    out << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
bool parse_number(const std::string& text, T& value) {
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, value);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace

SolutionPair read_trajectory_csv(std::istream& in, const std::string& source) {
  auto fail = [&source](std::size_t line, const std::string& message) -> CsvError {
    return CsvError(source + ":" + std::to_string(line) + ": " + message);
  };

  std::string line;
  if (!std::getline(in, line)) throw fail(1, "empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line);
  int n = 0;
  int m = 0;
  while (3 + n < static_cast<int>(header.size()) && header[3 + n] == "x" + std::to_string(n)) ++n;
  while (3 + n + m < static_cast<int>(header.size()) && header[3 + n + m] == "u" + std::to_string(m)) ++m;
  if (header.size() < 3 || line != trajectory_header(n, m)) {
    throw fail(1, "header must be edge_id,t,j,x0..x{n-1},u0..u{m-1}");
  }

  std::vector<Sample> samples;
  std::vector<std::size_t> starts;
  long long last_edge = -1;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      throw fail(line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                              std::to_string(cells.size()));
    }
    long long edge = 0;
    if (!parse_number(cells[0], edge)) throw fail(line_no, "edge_id is not an integer");
    if (edge != last_edge && edge != last_edge + 1) throw fail(line_no, "edge_id must start at 0 and grow by one");
    if (edge != last_edge) starts.push_back(samples.size());
    last_edge = edge;

    Sample s;
    if (!parse_number(cells[1], s.time.t)) throw fail(line_no, "t is not a number");
    if (!parse_number(cells[2], s.time.j)) throw fail(line_no, "j is not an integer");
    s.state.resize(n);
    s.input.resize(m);
    for (int i = 0; i < n; ++i) {
      if (!parse_number(cells[3 + i], s.state[i])) throw fail(line_no, "x" + std::to_string(i) + " is not a number");
    }
    for (int i = 0; i < m; ++i) {
      if (!parse_number(cells[3 + n + i], s.input[i])) throw fail(line_no, "u" + std::to_string(i) + " is not a number");
    }
    samples.push_back(std::move(s));
  }
  if (samples.empty()) throw fail(line_no, "no samples");
  return SolutionPair(std::move(samples), std::move(starts));
}

SolutionPair load_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError(path + ": cannot open trajectory file");
  return read_trajectory_csv(in, path);
}

void save_trajectory_csv(const std::string& path, const SolutionPair& sp) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CsvError(path + ": cannot write trajectory file");
  write_trajectory_csv(out, sp);
  if (!out) throw CsvError(path + ": write failed");
}

}  // namespace hyplan::cli
