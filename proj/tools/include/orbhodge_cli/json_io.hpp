#pragma once

// JSON ingestion for the command-line tool. Every reader collects all
// problems it can find, each tagged with a JSON path, and throws one
// InputError at the end.

#include "orbhodge/mhs.hpp"
#include "orbhodge/orbifold.hpp"
#include "orbhodge/toric.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbhodge::cli {

using nlohmann::json;

class InputError : public std::runtime_error {
public:
    explicit InputError(std::vector<std::string> items);
    const std::vector<std::string> &items() const { return items_; }

private:
    std::vector<std::string> items_;
};

/// Reads and parses a file; syntax errors become an InputError.
json load_json_file(const std::string &path);

/// "polytope", "hodge_structure", "pmhs" or "orbifold", from the "kind"
/// field or inferred from the keys present.
std::string input_kind(const json &doc);

LatticePolytope parse_polytope(const json &doc);

struct HodgeInput {
    HodgeStructureData hodge;
    std::optional<BilinearFormData> form;
};
HodgeInput parse_hodge_structure(const json &doc);

struct PmhsInput {
    std::size_t ambient_dim = 0;
    int weight = 0;
    /// Present when the input gives a bigrading instead of (W, F).
    std::optional<Bigrading> bigrading;
    IncreasingFiltration w;
    DecreasingFiltration f;
    BilinearFormData form;
    std::vector<NilpotentOperator> nilpotents;
    std::vector<std::vector<GaussRational>> samples;
};
PmhsInput parse_pmhs(const json &doc);

OrbifoldData parse_orbifold(const json &doc);

/// Comma-separated coordinates, e.g. "i,1+2i".
std::vector<GaussRational> parse_sample(const std::string &text);

json to_json(const Rational &q);
json to_json(const GaussRational &z);
json to_json(const RationalVector &v);
json to_json(const LatticePoint &v);

} // namespace orbhodge::cli
