#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "logcurves/trees.hpp"
#include "logcurves/util.hpp"

namespace logcurves {

// One stratum of a normal-crossings stratification: a tag, its codimension,
// and the tags of the codimension-one strata whose closure contains it (a
// codimension-one stratum lists itself). The open stratum has codim 0 and an
// empty divisor list.
struct Stratum {
    std::string tag;
    int codim = 0;
    std::vector<std::string> divisors;
};

// Descriptor of a space with normal-crossings log structure: smooth base of
// dimension base_dim, stratified by `strata`, with an ordered list of line
// bundle labels. Bundle labels are opaque tags; the geometric dimension is
// base_dim, the log dimension base_dim + #bundles, the fiber dimension
// #bundles.
struct NCLogDescriptor {
    std::string base;
    int base_dim = 0;
    std::vector<Stratum> strata;
    std::vector<std::string> bundles;

    int geometric_dim() const { return base_dim; }
    int fiber_dim() const { return static_cast<int>(bundles.size()); }
    int log_dim() const { return base_dim + fiber_dim(); }

    const Stratum& stratum(const std::string& tag) const;
    bool has_stratum(const std::string& tag) const;
    std::vector<std::string> divisor_tags() const; // codim-one tags, sorted
};

// The log point: a point with trivial divisor and one bundle label.
NCLogDescriptor pt_log();
// d-fold power of the log point: dims (0, d, d).
NCLogDescriptor pt_log_power(int d);
// Projective line with d marked rational points as the divisor, no bundles.
NCLogDescriptor p1_with_points(int d);
// Moduli descriptor of arity n (n >= 2): base of dimension n-2 stratified by
// the stable trees of arity n, bundles L0..Ln. For n == 1 use pt_log().
NCLogDescriptor moduli_descriptor(int n);

// Classification of maps between descriptors over a fixed base: empty when
// the target divisor is not contained in the source divisor, otherwise the
// family of homogeneous bundle maps described by a d x d' exponent matrix
// (rows: source bundles, columns: target bundles), with entries required to
// be >= 1 when both descriptors are powers of the log point.
struct EmptyFamily {
    std::string reason;
};
struct MapFamily {
    int source_bundles = 0;
    int target_bundles = 0;
    bool positivity_required = false;
};
using ClassifyResult = std::variant<EmptyFamily, MapFamily>;

ClassifyResult classify_maps(const NCLogDescriptor& src, const NCLogDescriptor& dst);

// Dense integer matrix, row-major. Rows index source coordinates, columns
// target coordinates; composition of exponent data is matrix product.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<i64> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}
    i64& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
    static IntMatrix identity(int n);
    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && data == o.data; }
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
bool matrix_in_family(const MapFamily& fam, const IntMatrix& m);

// Restriction of the log structure to the closure of stratum Y of
// codimension c: base dimension drops by c, the strata poset restricts to the
// strata inside Y (codimensions measured inside Y), and one normal bundle
// label N(tag) per codimension-one stratum containing Y joins the bundle
// list. The log dimension is preserved.
NCLogDescriptor pullback_along_stratum(const NCLogDescriptor& desc, const std::string& stratum_tag);

std::string normal_label(const std::string& divisor_tag);

// A map of log spaces in explicit coordinates: source and target pullback
// descriptors, the designated stratum assignment (source tag -> target tag,
// the pair at which the map is presented first), the exponent matrix over the
// listed bundles, and a human-readable monomial per target bundle.
struct LogStructureMap {
    NCLogDescriptor source;
    NCLogDescriptor target;
    std::vector<std::pair<std::string, std::string>> stratum_map;
    IntMatrix exponents;
    std::vector<std::pair<std::string, std::string>> bundle_matching;
};

} // namespace logcurves
