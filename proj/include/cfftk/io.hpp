#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cfftk/biclique.hpp"
#include "cfftk/cff.hpp"
#include "cfftk/hadamard.hpp"

namespace cfftk {

/// Malformed input text.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incidence-matrix file:
///
///     cff r=<r> w=<w> t=<t> n=<n> [d=<d>] [tprime=<t'>]
///     <t lines of n characters in {0,1}>
///
/// Row i, column j is 1 iff point j lies in block i.
struct CffDocument {
    CffInstance instance;
    int r = 0;
    int w = 0;
    std::optional<std::uint64_t> d;
    std::optional<int> t_prime;

    friend bool operator==(const CffDocument&, const CffDocument&) = default;
};

void write_cff(std::ostream& os, const CffDocument& doc);
CffDocument read_cff(std::istream& is);

/// Certificate file: a JSON object
///
///     {"format": "biclique-cover", "t": 4, "r": 1, "w": 1, "d": 2,
///      "generators": [[0, 1], [0, 2], ...], "rejected_points": 0}
///
/// `rejected_points` is optional on input.
void write_cover(std::ostream& os, const BicliqueCoverCert& cert);
BicliqueCoverCert read_cover(std::istream& is);

/// Matrix file: optional `order <n>` line, then one row per line of `+`/`-`.
void write_sign_matrix(std::ostream& os, const SignMatrix& m);
SignMatrix read_sign_matrix(std::istream& is);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace cfftk
