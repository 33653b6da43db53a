#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wormlab::cli {

enum class Command { Length, Capacity, Escape, Viterbo, Mahler, Invariance, Wetzel, Bound, Fit, Falsify };
enum class Format { Json, Csv, Svg };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitOther = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitConvergence = 4;
inline constexpr int kExitIo = 5;

struct RunConfig {
  Command command = Command::Length;
  // Body specs: a named body or a JSON file.
  std::string k_body;
  std::string t_body = "disc";
  std::string curve;  // JSON file
  int grid = 512;           // capacity boundary samples, 64 ... 8192
  int resolution = 1024;    // polygonization of discs and hulls, 16 ... 65536
  double tolerance = 1e-7;  // inner minimization gap
  std::uint64_t seed = 1;
  int samples = 10000;
  int outer_grid = 24;  // 8 ... 512 for wetzel, 2 ... 512 for bound
  int refine = 40;
  double alpha = 1.0;
  bool symmetric = false;
  std::array<double, 4> phi{1.0, 0.0, 0.0, 1.0};
  std::vector<std::string> families{"circle"};
  std::string out;  // empty: standard output
  Format format = Format::Json;
};

// Throws InvalidParam for values outside the documented ranges.
void validate(const RunConfig& config);

// Runs one command. Errors are reported on `err` as "<ErrorName>: message"
// and mapped to the exit codes above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses the command line and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wormlab::cli
