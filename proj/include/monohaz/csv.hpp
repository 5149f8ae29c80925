#pragma once

#include <iosfwd>
#include <string>

#include "monohaz/types.hpp"

namespace monohaz {

//! Reads a dataset from a CSV file with header `time,status,z1,...,zp`
//! (status: 1 = event, 0 = censored). Rows may be in any order; the result
//! is sorted ascending by time. Throws parse_error (with line number) on
//! malformed rows and validation_error on domain violations.
Dataset load_csv(const std::string& path);
Dataset load_csv(std::istream& in);

//! Writes the same schema back with full round-trip precision (17
//! significant digits), so load_csv(save_csv(ds)) reproduces every numeric
//! field bit-exactly.
void save_csv(const Dataset& dataset, const std::string& path);
void save_csv(const Dataset& dataset, std::ostream& out);

//! Shortest decimal form that parses back to the identical double.
std::string format_double(double x);

}  // namespace monohaz
