#include "monohaz/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "monohaz/errors.hpp"

namespace monohaz {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_field(const std::string& field, long line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  while (ptr != last && (*ptr == ' ' || *ptr == '\t')) ++ptr;
  if (ec != std::errc{} || ptr != last)
    throw parse_error("malformed numeric field '" + field + "'", line_no);
  return value;
}

}  // namespace

Dataset load_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("missing header row", 1);
  const auto header = split_fields(line);
  if (header.size() < 3 || header[0] != "time" || header[1] != "status")
    throw parse_error("header must be time,status,z1,...,zp", 1);
  const Index p = static_cast<Index>(header.size()) - 2;

  std::vector<double> times;
  std::vector<int> status;
  std::vector<double> covs;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_fields(line);
    if (static_cast<Index>(fields.size()) != p + 2)
      throw parse_error("expected " + std::to_string(p + 2) + " fields, got " +
                            std::to_string(fields.size()),
                        line_no);
    const double t = parse_field(fields[0], line_no);
    const double s = parse_field(fields[1], line_no);
    if (s != 0.0 && s != 1.0)
      throw validation_error("status must be 0 or 1 at line " + std::to_string(line_no));
    times.push_back(t);
    status.push_back(static_cast<int>(s));
    for (Index j = 0; j < p; ++j) covs.push_back(parse_field(fields[2 + static_cast<std::size_t>(j)], line_no));
  }
  if (times.empty()) throw validation_error("CSV contains no data rows");

  const Index n = static_cast<Index>(times.size());
  Eigen::VectorXd time(n);
  Eigen::VectorXi st(n);
  Eigen::MatrixXd z(n, p);
  for (Index i = 0; i < n; ++i) {
    time(i) = times[static_cast<std::size_t>(i)];
    st(i) = status[static_cast<std::size_t>(i)];
    for (Index j = 0; j < p; ++j) z(i, j) = covs[static_cast<std::size_t>(i * p + j)];
  }
  return make_dataset(std::move(time), std::move(st), std::move(z));
}

Dataset load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open file: " + path);
  return load_csv(in);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void save_csv(const Dataset& dataset, std::ostream& out) {
  out << "time,status";
  for (Index j = 0; j < dataset.p(); ++j) out << ",z" << (j + 1);
  out << "\n";
  for (Index i = 0; i < dataset.n(); ++i) {
    out << format_double(dataset.time(i)) << ',' << dataset.status(i);
    for (Index j = 0; j < dataset.p(); ++j) out << ',' << format_double(dataset.covariates(i, j));
    out << "\n";
  }
}

void save_csv(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open file for writing: " + path);
  save_csv(dataset, out);
}

}  // namespace monohaz
