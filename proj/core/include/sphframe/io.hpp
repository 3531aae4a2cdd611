#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sphframe/bandlimited.hpp"
#include "sphframe/frame.hpp"
#include "sphframe/quadrature.hpp"

namespace sphframe {

/// Bad or mismatched input files; the CLI maps this to a usage error.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Round-trip-exact decimal formatting (17 significant digits).
std::string format_double(double v);

/// Cubature rule: CSV `x,y,z,weight`, one node per row.
void write_rule_csv(const CubatureRule& rule, const std::string& path);

/// Band-limited function: CSV `x,y,z,value` on the carrier nodes, plus a
/// JSON sidecar {dim, degree, rule_degree, seed} at `path + ".json"`.
void write_function_csv(const BandlimitedFunction& f, const std::string& path,
                        std::uint64_t seed);

/// Reads a function written by write_function_csv. Rebuilds the carrier
/// from the sidecar and validates the CSV rows against it; any mismatch
/// raises IoError naming the file.
BandlimitedFunction read_function_csv(const std::string& path);

/// Seed recorded in a function sidecar.
std::uint64_t read_function_seed(const std::string& path);

/// Coefficient tree: CSV `j,k,cx,cy,cz,lambda,coef` (node coordinates and
/// weight included so files are self-contained), plus a JSON header
/// {dim, jmax, seed, source} at `path + ".json"`.
void write_tree_csv(const FrameSystem& F, const CoefficientTree& tree, const std::string& path,
                    std::uint64_t seed, const std::string& source);

struct TreeFile {
    CoefficientTree tree;
    int jmax = 0;
    std::uint64_t seed = 0;
    std::string source;
};

/// Reads a tree written by write_tree_csv and validates it against the
/// frame implied by its header (row counts, node coordinates, weights).
TreeFile read_tree_csv(const std::string& path);

/// Plain x,y,z point list (one point per row, optional header).
std::vector<Vec3> read_points_csv(const std::string& path);

}  // namespace sphframe
